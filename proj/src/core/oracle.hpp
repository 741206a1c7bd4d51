#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include "core/graph.hpp"
#include "core/linalg.hpp"
#include "core/rational.hpp"

namespace bccst {

// L = sum_e w_e (1_u - 1_v)(1_u - 1_v)^T, dense exact rationals.
RatMatrix build_laplacian(const WeightedGraph& g);

// All-pairs effective resistances from a single grounded solve: drop the last
// row/column of L, invert exactly, and read quadratic forms off the inverse.
class ResistanceOracle {
  public:
    explicit ResistanceOracle(const WeightedGraph& g);

    Rat resistance(VertexId u, VertexId v) const;
    Rat edge_resistance(EdgeId e) const { return resistance(edges_[e].u, edges_[e].v); }
    // P{e in T} = w_e * Reff(e)
    Rat edge_marginal(EdgeId e) const { return Rat(static_cast<long>(edges_[e].w)) * edge_resistance(e); }

    uint32_t n() const { return n_; }

  private:
    uint32_t n_;
    std::vector<Edge> edges_;
    RatMatrix minv_;  // inverse of L with the ground vertex removed
};

Rat effective_resistance(const WeightedGraph& g, EdgeId e);
Rat edge_marginal_exact(const WeightedGraph& g, EdgeId e);

// Resistances of a rational-weighted Laplacian given as an explicit edge list
// (used for reconstructed sparsifiers, whose weights are not integers).
class RationalResistance {
  public:
    RationalResistance(uint32_t n, const std::vector<std::tuple<VertexId, VertexId, Rat>>& edges);
    Rat resistance(VertexId u, VertexId v) const;
    // x^T L x for x = 1_u - 1_v
    Rat pair_quadratic_form(VertexId u, VertexId v) const;

  private:
    uint32_t n_;
    RatMatrix laplacian_;
    RatMatrix minv_;
};

// Kirchhoff count: determinant of a principal (n-1)-minor of L. Integer for
// integer weights; zero when disconnected.
Int tree_count(const WeightedGraph& g);

// Same determinant with all weights forced to 1 (number of spanning trees).
uint64_t spanning_tree_cardinality(const WeightedGraph& g, uint64_t cap);

struct TreeDistribution {
    std::vector<std::vector<EdgeId>> trees;  // each sorted; list sorted lexicographically
    std::vector<Rat> prob;                   // aligned with trees; sums to 1 exactly
    Rat total_weight;                        // sum over trees of prod w_e
};

// Exhaustive enumeration with exact probabilities; guarded by the unit-weight
// determinant so the exponential work is bounded before it starts.
// `weights` overrides the graph's own weights when nonempty (entries may be
// rational; zero entries remove the edge from the support).
TreeDistribution enumerate_tree_distribution(const WeightedGraph& g,
                                             const std::vector<Rat>& weights = {},
                                             uint64_t cap = 1000000);

}  // namespace bccst
