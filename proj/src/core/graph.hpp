#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/error.hpp"

namespace bccst {

using VertexId = uint32_t;
using EdgeId = uint32_t;

struct Edge {
    VertexId u;  // u < v
    VertexId v;
    uint64_t w;  // positive integer weight
};

// Undirected integer-weighted graph in canonical form: edges sorted by (u,v),
// no self-loops, parallel inputs merged by weight summation.
class WeightedGraph {
  public:
    WeightedGraph() = default;

    // Merges parallel edges, sorts, validates ids and weights.
    static WeightedGraph from_edges(uint32_t n, std::vector<Edge> edges);

    // One edge per line: "u v w"; '#' starts a comment line.
    static WeightedGraph parse_edge_list(const std::string& text);
    static WeightedGraph load_file(const std::string& path);

    uint32_t n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    size_t m() const { return edges_.size(); }
    uint64_t max_weight() const { return max_weight_; }
    bool connected() const { return connected_; }
    void require_connected() const {
        if (!connected_) fail(Errc::disconnected, "graph is not connected");
    }

    const std::vector<EdgeId>& incident(VertexId v) const { return incident_[v]; }
    VertexId other_endpoint(EdgeId e, VertexId v) const {
        return edges_[e].u == v ? edges_[e].v : edges_[e].u;
    }
    std::optional<EdgeId> edge_index(VertexId u, VertexId v) const;

    std::string to_edge_list() const;

  private:
    uint32_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incident_;
    uint64_t max_weight_ = 1;
    bool connected_ = false;
};

// Deterministic generators; `spec` is e.g. "complete:6", "path:5", "cycle:8",
// "path-plus-clique:16", "random:12:20:7", "house". Tokens may be separated by
// ':' or whitespace. `weights` is "unit" or "uniform:W" (iid in 1..W from seed).
WeightedGraph generate_graph(const std::string& spec, const std::string& weights, uint64_t seed);

bool is_spanning_tree(const WeightedGraph& g, const std::vector<EdgeId>& tree_edges);

}  // namespace bccst
