#pragma once

#include <map>
#include <vector>

#include "core/graph.hpp"
#include "core/oracle.hpp"
#include "core/rational.hpp"

namespace bccst {

using TreeKey = std::vector<EdgeId>;  // sorted edge ids
using Distribution = std::map<TreeKey, Rat>;

Distribution to_distribution(const TreeDistribution& td);

// Observed tree frequencies as exact fractions count/total.
class EmpiricalDistribution {
  public:
    void add(const TreeKey& tree) {
        ++counts_[tree];
        ++total_;
    }
    void merge(const EmpiricalDistribution& other);
    uint64_t total() const { return total_; }
    const std::map<TreeKey, uint64_t>& counts() const { return counts_; }
    Distribution distribution() const;

  private:
    std::map<TreeKey, uint64_t> counts_;
    uint64_t total_ = 0;
};

// (1/2) * sum |p - q| over the union of supports; requires both inputs to sum
// to 1 within 1e-9 (exact empirical fractions sum to exactly 1).
Rat tv_distance(const Distribution& p, const Distribution& q);

struct MarginalErrorRow {
    EdgeId edge;
    VertexId u, v;
    Rat empirical;
    Rat exact;
    Rat abs_error;
};

// Per-edge empirical inclusion frequency vs the exact marginal.
std::vector<MarginalErrorRow> marginal_error_report(const WeightedGraph& g,
                                                    const std::vector<uint64_t>& edge_counts,
                                                    uint64_t samples);

}  // namespace bccst
