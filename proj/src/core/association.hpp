#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/rational.hpp"
#include "core/sim.hpp"

namespace bccst {

inline constexpr VertexId kUnassigned = UINT32_MAX;

// Items to be associated: endpoints plus a nonnegative weight each. For the
// main pipeline the items are the graph's edges; the sparsifier orientation
// reuses the same routine on its sampled edge subset.
struct AssocInput {
    uint32_t n = 0;
    std::vector<std::pair<VertexId, VertexId>> endpoints;
    std::vector<Rat> q;
};

AssocInput assoc_input_from_graph(const WeightedGraph& g, const std::vector<Rat>& q);

struct LightAssociation {
    std::vector<VertexId> owner;               // per item; kUnassigned never survives
    std::vector<uint32_t> iteration_assigned;  // 1-based
    std::vector<Rat> vertex_weight;            // sum of q over owned items
    uint32_t iterations = 0;
    Rat alpha_final;
    uint32_t escalations = 0;
};

// One residual-degree announcement round per iteration; claims are evaluated
// symmetrically by both endpoints from the announced degrees, ties to the
// lower vertex id. Doubles alpha (up to 2^6x) on a stalled iteration when
// `escalate` is set, otherwise raises no_progress.
LightAssociation light_associate(BccSim& sim, const AssocInput& in, const Rat& alpha,
                                 bool escalate, const std::string& phase_label);

struct AssocCheck {
    bool partition_ok = false;
    bool weight_ok = false;
    bool iterations_ok = false;
    Rat max_vertex_weight;
    Rat weight_bound;
    uint32_t iterations = 0;
    uint32_t iteration_bound = 0;
    std::optional<std::string> witness;
    bool pass() const { return partition_ok && weight_ok && iterations_ok; }
};

AssocCheck verify_association(const AssocInput& in, const LightAssociation& assoc,
                              const Rat& alpha);

}  // namespace bccst
