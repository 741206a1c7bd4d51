#include "core/stats.hpp"

#include "core/error.hpp"

namespace bccst {

Distribution to_distribution(const TreeDistribution& td) {
    Distribution d;
    for (size_t i = 0; i < td.trees.size(); ++i) d[td.trees[i]] = td.prob[i];
    return d;
}

void EmpiricalDistribution::merge(const EmpiricalDistribution& other) {
    for (const auto& [k, c] : other.counts_) counts_[k] += c;
    total_ += other.total_;
}

Distribution EmpiricalDistribution::distribution() const {
    if (total_ == 0) fail(Errc::invalid_arg, "empty sample");
    Distribution d;
    for (const auto& [k, c] : counts_) {
        Rat p(Int(static_cast<unsigned long>(c)), Int(static_cast<unsigned long>(total_)));
        p.canonicalize();
        d[k] = p;
    }
    return d;
}

Rat tv_distance(const Distribution& p, const Distribution& q) {
    static const Rat kTol(1, 1000000000);
    Rat sp(0), sq(0);
    for (const auto& [_, v] : p) sp += v;
    for (const auto& [_, v] : q) sq += v;
    if (abs(sp - 1) > kTol || abs(sq - 1) > kTol)
        fail(Errc::not_normalized, "distributions must sum to 1");
    Rat acc(0);
    auto ip = p.begin();
    auto iq = q.begin();
    while (ip != p.end() || iq != q.end()) {
        if (iq == q.end() || (ip != p.end() && ip->first < iq->first)) {
            acc += abs(ip->second);
            ++ip;
        } else if (ip == p.end() || iq->first < ip->first) {
            acc += abs(iq->second);
            ++iq;
        } else {
            acc += abs(ip->second - iq->second);
            ++ip;
            ++iq;
        }
    }
    return acc / 2;
}

std::vector<MarginalErrorRow> marginal_error_report(const WeightedGraph& g,
                                                    const std::vector<uint64_t>& edge_counts,
                                                    uint64_t samples) {
    if (samples == 0) fail(Errc::invalid_arg, "marginal report needs samples");
    if (edge_counts.size() != g.m()) fail(Errc::invalid_arg, "edge count size mismatch");
    ResistanceOracle oracle(g);
    std::vector<MarginalErrorRow> rows;
    rows.reserve(g.m());
    for (EdgeId e = 0; e < g.m(); ++e) {
        MarginalErrorRow row;
        row.edge = e;
        row.u = g.edges()[e].u;
        row.v = g.edges()[e].v;
        row.empirical = Rat(Int(static_cast<unsigned long>(edge_counts[e])),
                            Int(static_cast<unsigned long>(samples)));
        row.empirical.canonicalize();
        row.exact = oracle.edge_marginal(e);
        row.abs_error = abs(row.empirical - row.exact);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace bccst
