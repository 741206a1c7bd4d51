#pragma once

#include <cstdint>
#include <vector>

#include "core/association.hpp"
#include "core/oracle.hpp"
#include "core/rational.hpp"
#include "core/sim.hpp"

namespace bccst {

enum class Backend { exact, sparsifier };

const char* backend_name(Backend b);

struct MarginalOverestimates {
    Backend backend = Backend::exact;
    std::vector<Rat> q;  // per edge, q_e >= P{e in T}
    Rat slack;           // 1 for exact, 1/(1-eps) for the sparsifier
    Rat mass;            // K = sum q_e

    // sparsifier artifacts (empty for the exact backend)
    std::vector<EdgeId> sample_edges;
    std::vector<Rat> sample_weights;  // reweighted w_e/p_e, rounded up to the 2^-32 grid
    std::vector<VertexId> sample_owner;
    std::vector<uint32_t> out_degree;  // sampled edges owned, per vertex
    uint32_t attempts = 1;
};

// Exact oracle backend: q_e = w_e * Reff(e). Communication is replaced by a
// declared flat charge (default ceil(log2 n)^5 rounds) so scaling reports stay
// honest about the stand-in.
MarginalOverestimates compute_overestimates_exact(BccSim& sim, const ResistanceOracle& oracle,
                                                  uint64_t declared_rounds = 0);

// Leverage-score sampling backend with the sparsifier contract: orient all
// edges by leverage weight (Algorithm 2), owners sample their edges with
// p_e = min(1, m' * lev_e / (n-1)) and broadcast the reweighted survivors,
// everyone reconstructs the sparsifier Laplacian and takes
// q_e = w_e * Reff~(e) / (1 - eps). Resamples on a disconnected draw.
MarginalOverestimates compute_overestimates_sparsifier(BccSim& sim,
                                                       const ResistanceOracle& oracle,
                                                       const Rat& eps,
                                                       const Rat& oversample = Rat(8),
                                                       uint32_t max_attempts = 16);

// Per-machine incident view (edge id, q_e); the communication cost was already
// charged by the producing backend.
std::vector<std::vector<std::pair<EdgeId, Rat>>> distribute_overestimates(
    const BccSim& sim, const MarginalOverestimates& est);

uint64_t default_oracle_rounds(uint32_t n);  // ceil(log2 n)^5

}  // namespace bccst
