#pragma once

#include <vector>

#include "core/graph.hpp"
#include "core/rational.hpp"
#include "core/rng.hpp"

namespace bccst {

// Loop-erased-walk sampler: returns a spanning tree with probability
// proportional to the product of its edge weights. `weights` may be rational;
// zero entries drop the edge from the support, which must stay connected.
std::vector<EdgeId> wilson_sample(const WeightedGraph& g, const std::vector<Rat>& weights,
                                  CounterRng& rng);

// Convenience overload using the graph's own integer weights.
std::vector<EdgeId> wilson_sample(const WeightedGraph& g, CounterRng& rng);

}  // namespace bccst
