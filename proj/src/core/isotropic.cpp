#include "core/isotropic.hpp"

#include "core/error.hpp"

namespace bccst {

IsotropicGroundSet isotropic_transform(const std::vector<Rat>& q, const Rat& gamma) {
    if (q.empty()) fail(Errc::invalid_arg, "no edges to transform");
    if (gamma < 1) fail(Errc::invalid_arg, "gamma must be at least 1");
    IsotropicGroundSet iso;
    iso.gamma = gamma;
    iso.mass = Rat(0);
    for (const Rat& qe : q) {
        if (qe <= 0) fail(Errc::invalid_arg, "overestimates must be positive");
        iso.mass += qe;
    }
    const Rat m_over_k = Rat(static_cast<unsigned long>(q.size())) / iso.mass;
    iso.copies.reserve(q.size());
    iso.total_copies = 0;
    for (const Rat& qe : q) {
        Int t = ceil_rat(gamma * m_over_k * qe);
        if (!fits_u64(t) || to_u64(t) > (uint64_t(1) << 62))
            fail(Errc::invalid_arg, "copy count overflow; lower gamma");
        iso.copies.push_back(to_u64(t));
        iso.total_copies += t;
    }
    Int bound = ceil_rat(Rat(2) * gamma * Rat(static_cast<unsigned long>(q.size())));
    if (!fits_u64(bound)) fail(Errc::invalid_arg, "ground set bound overflow; lower gamma");
    iso.t_bound = to_u64(bound);
    return iso;
}

}  // namespace bccst
