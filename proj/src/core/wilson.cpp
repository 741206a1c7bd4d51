#include "core/wilson.hpp"

#include <algorithm>
#include <numeric>

namespace bccst {

namespace {

// Per-vertex transition table over the weight support, with prefix sums on a
// common integer scale so each step is one exact uniform draw.
struct WalkTable {
    std::vector<std::vector<EdgeId>> edge;      // incident support edges
    std::vector<std::vector<Int>> prefix;       // cumulative scaled weights
    std::vector<Int> total;

    EdgeId step(CounterRng& rng, VertexId v) const {
        const auto& pref = prefix[v];
        Int x = uniform_below(rng, total[v]);
        size_t idx = std::upper_bound(pref.begin(), pref.end(), x) - pref.begin();
        return edge[v][idx];
    }
};

WalkTable build_table(const WeightedGraph& g, const std::vector<Rat>& weights) {
    WalkTable t;
    uint32_t n = g.n();
    t.edge.resize(n);
    t.prefix.resize(n);
    t.total.assign(n, Int(0));
    for (VertexId v = 0; v < n; ++v) {
        Int den(1);
        for (EdgeId e : g.incident(v))
            if (weights[e] > 0) {
                t.edge[v].push_back(e);
                den = den / gcd(den, Int(weights[e].get_den())) * Int(weights[e].get_den());
            }
        Int run(0);
        for (EdgeId e : t.edge[v]) {
            Int scaled = weights[e].get_num() * (den / weights[e].get_den());
            run += scaled;
            t.prefix[v].push_back(run);
        }
        t.total[v] = run;
    }
    return t;
}

}  // namespace

std::vector<EdgeId> wilson_sample(const WeightedGraph& g, const std::vector<Rat>& weights,
                                  CounterRng& rng) {
    if (weights.size() != g.m()) fail(Errc::invalid_arg, "weights size mismatch");
    uint32_t n = g.n();
    if (n == 1) return {};

    // support connectivity check
    {
        std::vector<uint32_t> par(n);
        std::iota(par.begin(), par.end(), 0u);
        auto find = [&](uint32_t x) {
            while (par[x] != x) {
                par[x] = par[par[x]];
                x = par[x];
            }
            return x;
        };
        uint32_t comps = n;
        for (EdgeId e = 0; e < g.m(); ++e)
            if (weights[e] > 0) {
                uint32_t a = find(g.edges()[e].u), b = find(g.edges()[e].v);
                if (a != b) {
                    par[a] = b;
                    --comps;
                }
            }
        if (comps != 1) fail(Errc::disconnected, "weight support does not span the graph");
    }

    WalkTable table = build_table(g, weights);
    std::vector<bool> in_tree(n, false);
    std::vector<EdgeId> next_edge(n, 0);
    std::vector<bool> has_next(n, false);
    in_tree[0] = true;
    std::vector<EdgeId> tree;
    tree.reserve(n - 1);

    for (VertexId start = 1; start < n; ++start) {
        if (in_tree[start]) continue;
        VertexId v = start;
        while (!in_tree[v]) {
            EdgeId e = table.step(rng, v);
            next_edge[v] = e;
            has_next[v] = true;
            v = g.other_endpoint(e, v);
        }
        v = start;
        while (!in_tree[v]) {
            in_tree[v] = true;
            tree.push_back(next_edge[v]);
            v = g.other_endpoint(next_edge[v], v);
        }
    }
    std::sort(tree.begin(), tree.end());
    return tree;
}

std::vector<EdgeId> wilson_sample(const WeightedGraph& g, CounterRng& rng) {
    std::vector<Rat> w;
    w.reserve(g.m());
    for (const auto& e : g.edges()) w.emplace_back(static_cast<long>(e.w));
    return wilson_sample(g, w, rng);
}

}  // namespace bccst
