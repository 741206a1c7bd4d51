#pragma once

#include <cstdint>
#include <vector>

#include "core/rational.hpp"

namespace bccst {

// Virtual copy counts t_e = ceil(gamma * (m/K) * q_e); copies exist only as
// counts, the ground set is never materialized.
struct IsotropicGroundSet {
    std::vector<uint64_t> copies;  // t_e per edge
    Int total_copies;              // |U| = sum t_e
    Rat gamma;
    Rat mass;         // K = sum q_e
    uint64_t t_bound;  // 2*gamma*m, the globally known cap used for field widths
};

IsotropicGroundSet isotropic_transform(const std::vector<Rat>& q, const Rat& gamma);

}  // namespace bccst
