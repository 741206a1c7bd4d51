#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/association.hpp"
#include "core/isotropic.hpp"
#include "core/overestimates.hpp"
#include "core/sim.hpp"

namespace bccst {

// How S_i's copies merge with the sampled copy multiset Z. The faithful count
// form of the copy-set union is `bernoulli`: S_i's copy of edge e is one of
// the t_e exchangeable copies, so it already lies inside Z's z_e copies with
// probability z_e/t_e (union count z_e), and otherwise adds one (z_e + 1).
// `max1` (count = max(z_e, 1)) is kept for A/B comparison; it is measurably
// biased on weighted graphs.
enum class UnionRule { bernoulli, max1 };

enum class InitRule { max_probability, arbitrary };

// Reference chain conventions: alg1_superset draws T_i as a uniform t-superset
// of S_i (|T_i| = t exactly); alg3_union mirrors the distributed chain
// (independent uniform t-subset, then the union rule).
enum class RefConvention { alg1_superset, alg3_union };

struct WalkParams {
    uint64_t steps = 0;          // T
    uint64_t subset_size = 0;    // t; 0 resolves to 2n
    UnionRule union_rule = UnionRule::bernoulli;
    uint64_t resample_limit = 64;
    bool trace = false;
    bool collect_iteration_stats = false;
};

// T = ceil(log2 n)^3 * ceil(log2(1/eps)) * ceil(log2(nU)); arbitrary-init runs
// get the burn-in factor (1 + ceil(log2(nU))/ceil(log2 n)).
uint64_t default_walk_steps(uint32_t n, uint64_t max_weight, const Rat& target_eps,
                            InitRule init);

// Stage 1-2 outputs the walk consumes.
struct StageArtifacts {
    MarginalOverestimates est;
    LightAssociation assoc;
    IsotropicGroundSet iso;
};

struct IterationStat {
    uint64_t gathered_total = 0;  // |R| of the accepted attempt
    uint32_t resamples = 0;
    uint64_t max_zv = 0;  // max over machines of copies thinned in, this attempt
    uint64_t rounds = 0;
};

struct WalkResult {
    std::vector<EdgeId> tree;
    std::vector<EdgeId> initial_tree;
    uint64_t iterations = 0;
    uint64_t max_zv = 0;
    uint64_t resampled_iterations = 0;
    uint64_t total_resamples = 0;
    std::vector<IterationStat> per_iteration;  // when collect_iteration_stats
    std::vector<std::string> trace_lines;      // when trace
};

// Boruvka phases over announced component-best edges; max_probability prefers
// heavier edges (ties to the smaller edge id), arbitrary ignores weights.
std::vector<EdgeId> initial_tree(BccSim& sim, const IsotropicGroundSet& iso, InitRule rule);

// Full distributed walk: initial tree, then `steps` iterations of
// thin / gather / down / up at M1 / tree broadcast.
WalkResult run_walk(BccSim& sim, const StageArtifacts& art, const WalkParams& params,
                    InitRule init = InitRule::max_probability);

// Same loop from an injected starting tree (test hook for stationarity checks;
// the injected edges count as known to M1 as if announced).
WalkResult run_walk_from(BccSim& sim, const StageArtifacts& art, const WalkParams& params,
                         std::vector<EdgeId> s0);

// Single-machine reference implementation over the same isotropic ground set.
std::vector<EdgeId> reference_walk_centralized(const WeightedGraph& g, const StageArtifacts& art,
                                               const WalkParams& params, std::vector<EdgeId> s0,
                                               CounterRng& rng,
                                               RefConvention convention = RefConvention::alg1_superset);

}  // namespace bccst
