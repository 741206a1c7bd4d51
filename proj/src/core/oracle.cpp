#include "core/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace bccst {

RatMatrix build_laplacian(const WeightedGraph& g) {
    size_t n = g.n();
    RatMatrix l(n, std::vector<Rat>(n, Rat(0)));
    for (const auto& e : g.edges()) {
        Rat w(static_cast<long>(e.w));
        l[e.u][e.u] += w;
        l[e.v][e.v] += w;
        l[e.u][e.v] -= w;
        l[e.v][e.u] -= w;
    }
    return l;
}

ResistanceOracle::ResistanceOracle(const WeightedGraph& g) : n_(g.n()), edges_(g.edges()) {
    g.require_connected();
    if (n_ < 2) fail(Errc::invalid_arg, "resistance needs n >= 2");
    RatMatrix l = build_laplacian(g);
    size_t k = n_ - 1;  // ground the last vertex
    RatMatrix m(k, std::vector<Rat>(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) m[i][j] = l[i][j];
    minv_ = rat_invert(std::move(m));
}

Rat ResistanceOracle::resistance(VertexId u, VertexId v) const {
    if (u == v) return Rat(0);
    uint32_t ground = n_ - 1;
    if (v == ground) std::swap(u, v);
    if (u == ground) return minv_[v][v];
    return minv_[u][u] + minv_[v][v] - Rat(2) * minv_[u][v];
}

Rat effective_resistance(const WeightedGraph& g, EdgeId e) {
    ResistanceOracle oracle(g);
    return oracle.edge_resistance(e);
}

Rat edge_marginal_exact(const WeightedGraph& g, EdgeId e) {
    ResistanceOracle oracle(g);
    return oracle.edge_marginal(e);
}

RationalResistance::RationalResistance(
    uint32_t n, const std::vector<std::tuple<VertexId, VertexId, Rat>>& edges)
    : n_(n) {
    if (n < 2) fail(Errc::invalid_arg, "resistance needs n >= 2");
    // connectivity of the positive-weight support
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
    laplacian_.assign(n, std::vector<Rat>(n, Rat(0)));
    for (const auto& [u, v, w] : edges) {
        if (u >= n || v >= n || u == v) fail(Errc::invalid_arg, "bad edge");
        if (w <= 0) continue;
        laplacian_[u][u] += w;
        laplacian_[v][v] += w;
        laplacian_[u][v] -= w;
        laplacian_[v][u] -= w;
        uint32_t a = find(u), b = find(v);
        if (a != b) {
            par[a] = b;
            --comps;
        }
    }
    if (comps != 1) fail(Errc::disconnected, "edge list does not span all vertices");
    size_t k = n - 1;
    RatMatrix m(k, std::vector<Rat>(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) m[i][j] = laplacian_[i][j];
    minv_ = rat_invert(std::move(m));
}

Rat RationalResistance::resistance(VertexId u, VertexId v) const {
    if (u == v) return Rat(0);
    uint32_t ground = n_ - 1;
    if (v == ground) std::swap(u, v);
    if (u == ground) return minv_[v][v];
    return minv_[u][u] + minv_[v][v] - Rat(2) * minv_[u][v];
}

Rat RationalResistance::pair_quadratic_form(VertexId u, VertexId v) const {
    return laplacian_[u][u] + laplacian_[v][v] - Rat(2) * laplacian_[u][v];
}

namespace {

Rat minor_determinant(const WeightedGraph& g, bool unit_weights) {
    if (g.n() == 1) return Rat(1);
    RatMatrix l;
    if (unit_weights) {
        size_t n = g.n();
        l.assign(n, std::vector<Rat>(n, Rat(0)));
        for (const auto& e : g.edges()) {
            l[e.u][e.u] += 1;
            l[e.v][e.v] += 1;
            l[e.u][e.v] -= 1;
            l[e.v][e.u] -= 1;
        }
    } else {
        l = build_laplacian(g);
    }
    size_t k = g.n() - 1;
    RatMatrix m(k, std::vector<Rat>(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) m[i][j] = l[i][j];
    return rat_determinant(std::move(m));
}

}  // namespace

Int tree_count(const WeightedGraph& g) {
    Rat d = minor_determinant(g, false);
    return d.get_num();  // determinant of an integer matrix
}

uint64_t spanning_tree_cardinality(const WeightedGraph& g, uint64_t cap) {
    Rat d = minor_determinant(g, true);
    Int count = d.get_num();
    if (!fits_u64(count) || to_u64(count) > cap)
        fail(Errc::too_many_trees,
             "spanning tree count " + count.get_str() + " exceeds cap " + std::to_string(cap));
    return to_u64(count);
}

namespace {

struct EnumState {
    const WeightedGraph* g;
    const std::vector<Rat>* weights;
    std::vector<EdgeId> support;  // edges with positive weight, ascending
    TreeDistribution out;
    std::vector<EdgeId> chosen;
    std::vector<uint32_t> parent;

    uint32_t find(std::vector<uint32_t>& par, uint32_t x) const {
        while (par[x] != x) {
            par[x] = par[par[x]];
            x = par[x];
        }
        return x;
    }

    bool completable(const std::vector<uint32_t>& par, size_t next_idx) const {
        // can the chosen forest plus remaining support edges still span?
        std::vector<uint32_t> tmp = par;
        uint32_t comps = 0;
        for (uint32_t v = 0; v < g->n(); ++v)
            if (find(tmp, v) == v) ++comps;
        for (size_t i = next_idx; i < support.size() && comps > 1; ++i) {
            const Edge& e = g->edges()[support[i]];
            uint32_t a = find(tmp, e.u), b = find(tmp, e.v);
            if (a != b) {
                tmp[a] = b;
                --comps;
            }
        }
        return comps == 1;
    }

    void rec(size_t idx, std::vector<uint32_t> par) {
        if (chosen.size() == g->n() - 1) {
            out.trees.push_back(chosen);
            Rat w(1);
            for (EdgeId e : chosen) w *= (*weights)[e];
            out.prob.push_back(w);
            return;
        }
        if (idx == support.size()) return;
        const Edge& e = g->edges()[support[idx]];
        std::vector<uint32_t> with = par;
        uint32_t a = find(with, e.u), b = find(with, e.v);
        if (a != b) {
            with[a] = b;
            chosen.push_back(support[idx]);
            rec(idx + 1, std::move(with));
            chosen.pop_back();
        }
        if (completable(par, idx + 1)) rec(idx + 1, std::move(par));
    }
};

}  // namespace

TreeDistribution enumerate_tree_distribution(const WeightedGraph& g,
                                             const std::vector<Rat>& weights, uint64_t cap) {
    std::vector<Rat> w;
    if (weights.empty()) {
        w.reserve(g.m());
        for (const auto& e : g.edges()) w.emplace_back(static_cast<long>(e.w));
    } else {
        if (weights.size() != g.m()) fail(Errc::invalid_arg, "weights size mismatch");
        w = weights;
        for (const auto& r : w)
            if (r < 0) fail(Errc::invalid_arg, "negative weight");
    }
    spanning_tree_cardinality(g, cap);  // guard before exponential work

    EnumState st;
    st.g = &g;
    st.weights = &w;
    for (EdgeId i = 0; i < g.m(); ++i)
        if (w[i] > 0) st.support.push_back(i);
    std::vector<uint32_t> par(g.n());
    std::iota(par.begin(), par.end(), 0u);
    if (g.n() == 1) {
        st.out.trees.push_back({});
        st.out.prob.push_back(Rat(1));
    } else {
        st.rec(0, std::move(par));
    }
    if (st.out.trees.empty())
        fail(Errc::disconnected, "graph has no spanning tree on the weight support");
    st.out.total_weight = std::accumulate(st.out.prob.begin(), st.out.prob.end(), Rat(0));
    for (auto& p : st.out.prob) p /= st.out.total_weight;
    return st.out;
}

}  // namespace bccst
