#include "core/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "core/rng.hpp"

namespace bccst {

namespace {

struct Dsu {
    std::vector<uint32_t> parent;
    explicit Dsu(uint32_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
    uint32_t find(uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(uint32_t a, uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

WeightedGraph WeightedGraph::from_edges(uint32_t n, std::vector<Edge> edges) {
    if (n == 0) fail(Errc::invalid_arg, "graph needs at least one vertex");
    std::map<std::pair<VertexId, VertexId>, uint64_t> merged;
    for (auto& e : edges) {
        if (e.u == e.v) fail(Errc::invalid_arg, "self-loops are not allowed");
        if (e.u >= n || e.v >= n) fail(Errc::invalid_arg, "vertex id out of range");
        if (e.w == 0) fail(Errc::invalid_arg, "edge weights must be positive");
        VertexId a = std::min(e.u, e.v), b = std::max(e.u, e.v);
        merged[{a, b}] += e.w;
    }
    WeightedGraph g;
    g.n_ = n;
    g.edges_.reserve(merged.size());
    for (auto& [uv, w] : merged) {
        g.edges_.push_back({uv.first, uv.second, w});
        g.max_weight_ = std::max(g.max_weight_, w);
    }
    g.incident_.assign(n, {});
    Dsu dsu(n);
    uint32_t components = n;
    for (EdgeId i = 0; i < g.edges_.size(); ++i) {
        g.incident_[g.edges_[i].u].push_back(i);
        g.incident_[g.edges_[i].v].push_back(i);
        if (dsu.unite(g.edges_[i].u, g.edges_[i].v)) --components;
    }
    g.connected_ = (components == 1);
    return g;
}

WeightedGraph WeightedGraph::parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<Edge> edges;
    uint32_t max_id = 0;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        long long u, v, w;
        if (!(ls >> u >> v >> w) || u < 0 || v < 0 || w <= 0)
            fail(Errc::parse, "bad edge at line " + std::to_string(lineno) + ": '" + line + "'");
        std::string rest;
        if (ls >> rest) fail(Errc::parse, "trailing tokens at line " + std::to_string(lineno));
        edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v),
                         static_cast<uint64_t>(w)});
        max_id = std::max({max_id, static_cast<uint32_t>(u), static_cast<uint32_t>(v)});
    }
    if (edges.empty()) fail(Errc::parse, "no edges in input");
    return from_edges(max_id + 1, std::move(edges));
}

WeightedGraph WeightedGraph::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::io, "cannot open graph file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_edge_list(ss.str());
}

std::optional<EdgeId> WeightedGraph::edge_index(VertexId u, VertexId v) const {
    if (u > v) std::swap(u, v);
    Edge probe{u, v, 1};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), probe,
                               [](const Edge& a, const Edge& b) {
                                   return std::tie(a.u, a.v) < std::tie(b.u, b.v);
                               });
    if (it == edges_.end() || it->u != u || it->v != v) return std::nullopt;
    return static_cast<EdgeId>(it - edges_.begin());
}

std::string WeightedGraph::to_edge_list() const {
    std::ostringstream out;
    for (const auto& e : edges_) out << e.u << " " << e.v << " " << e.w << "\n";
    return out.str();
}

bool is_spanning_tree(const WeightedGraph& g, const std::vector<EdgeId>& tree_edges) {
    if (g.n() == 0 || tree_edges.size() != g.n() - 1) return false;
    Dsu dsu(g.n());
    for (EdgeId e : tree_edges) {
        if (e >= g.m()) return false;
        if (!dsu.unite(g.edges()[e].u, g.edges()[e].v)) return false;
    }
    return true;
}

namespace {

std::vector<std::string> split_spec(const std::string& spec) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char c : spec) {
        if (c == ':' || c == ' ' || c == '\t' || c == ',') {
            if (!cur.empty()) tokens.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) tokens.push_back(cur);
    return tokens;
}

uint64_t parse_count(const std::string& tok, const char* what) {
    try {
        size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size() || v <= 0) throw std::invalid_argument(tok);
        return static_cast<uint64_t>(v);
    } catch (const std::exception&) {
        fail(Errc::invalid_arg, std::string("bad ") + what + " in generator spec: '" + tok + "'");
    }
}

}  // namespace

WeightedGraph generate_graph(const std::string& spec, const std::string& weights, uint64_t seed) {
    auto tokens = split_spec(spec);
    if (tokens.empty()) fail(Errc::invalid_arg, "empty generator spec");
    const std::string& kind = tokens[0];
    auto need = [&](size_t argc) {
        if (tokens.size() != argc + 1)
            fail(Errc::invalid_arg, "generator '" + kind + "' expects " + std::to_string(argc) +
                                        " parameter(s)");
    };

    std::vector<Edge> edges;
    uint32_t n = 0;
    if (kind == "complete") {
        need(1);
        n = static_cast<uint32_t>(parse_count(tokens[1], "size"));
        if (n < 2) fail(Errc::invalid_arg, "complete graph needs n >= 2");
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v, 1});
    } else if (kind == "path") {
        need(1);
        n = static_cast<uint32_t>(parse_count(tokens[1], "size"));
        if (n < 2) fail(Errc::invalid_arg, "path needs n >= 2");
        for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 1});
    } else if (kind == "cycle") {
        need(1);
        n = static_cast<uint32_t>(parse_count(tokens[1], "size"));
        if (n < 3) fail(Errc::invalid_arg, "cycle needs n >= 3");
        for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 1});
        edges.push_back({0, n - 1, 1});
    } else if (kind == "path-plus-clique") {
        need(1);
        uint64_t len = parse_count(tokens[1], "path length");
        uint64_t s = 1;
        while ((s + 1) * (s + 1) <= len) ++s;
        if (s * s != len)
            fail(Errc::invalid_arg, "path-plus-clique needs a perfect square parameter");
        // vertices 0..len form the path; the clique reuses vertex len and adds s-1 more
        n = static_cast<uint32_t>(len + s);
        for (VertexId v = 0; v < len; ++v) edges.push_back({v, v + 1, 1});
        std::vector<VertexId> clique;
        clique.push_back(static_cast<VertexId>(len));
        for (uint64_t i = 1; i < s; ++i) clique.push_back(static_cast<VertexId>(len + i));
        for (size_t i = 0; i < clique.size(); ++i)
            for (size_t j = i + 1; j < clique.size(); ++j)
                edges.push_back({clique[i], clique[j], 1});
    } else if (kind == "house") {
        need(0);
        n = 5;
        edges = {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}, {2, 4, 1}, {3, 4, 1}};
    } else if (kind == "random") {
        need(3);
        n = static_cast<uint32_t>(parse_count(tokens[1], "size"));
        uint64_t m = parse_count(tokens[2], "edge count");
        uint64_t gseed = parse_count(tokens[3], "seed");
        if (n < 2) fail(Errc::invalid_arg, "random graph needs n >= 2");
        uint64_t max_m = static_cast<uint64_t>(n) * (n - 1) / 2;
        if (m < n - 1 || m > max_m)
            fail(Errc::invalid_arg, "random graph needs n-1 <= m <= n(n-1)/2");
        // retry with a nonce until the sampled edge set is connected
        for (uint64_t nonce = 0;; ++nonce) {
            CounterRng rng(derive_stream(gseed, 0, fnv1a64("random-graph"), nonce));
            std::map<std::pair<VertexId, VertexId>, bool> chosen;
            while (chosen.size() < m) {
                VertexId u = static_cast<VertexId>(rng.uniform_u64(n));
                VertexId v = static_cast<VertexId>(rng.uniform_u64(n));
                if (u == v) continue;
                if (u > v) std::swap(u, v);
                chosen[{u, v}] = true;
            }
            edges.clear();
            for (auto& [uv, _] : chosen) edges.push_back({uv.first, uv.second, 1});
            Dsu dsu(n);
            uint32_t comps = n;
            for (auto& e : edges)
                if (dsu.unite(e.u, e.v)) --comps;
            if (comps == 1) break;
        }
    } else {
        fail(Errc::invalid_arg, "unknown generator: '" + kind + "'");
    }

    auto wtokens = split_spec(weights.empty() ? "unit" : weights);
    if (wtokens[0] == "unit") {
        // all weights stay 1
    } else if (wtokens[0] == "uniform") {
        if (wtokens.size() != 2) fail(Errc::invalid_arg, "weights spec 'uniform' needs a bound");
        uint64_t bound = parse_count(wtokens[1], "weight bound");
        CounterRng rng(derive_stream(seed, 0, fnv1a64("edge-weights"), 0));
        for (auto& e : edges) e.w = 1 + rng.uniform_u64(bound);
    } else {
        fail(Errc::invalid_arg, "unknown weights spec: '" + weights + "'");
    }
    return WeightedGraph::from_edges(n, std::move(edges));
}

}  // namespace bccst
