#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace bccst {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Smallest integer >= r.
inline Int ceil_rat(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

inline Int floor_rat(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Parses "a", "a/b", or a decimal like "0.25"; returns nullopt on junk.
std::optional<Rat> parse_rat(const std::string& s);

inline uint64_t to_u64(const Int& z) { return mpz_get_ui(z.get_mpz_t()); }

inline bool fits_u64(const Int& z) {
    return sgn(z) >= 0 && mpz_sizeinbase(z.get_mpz_t(), 2) <= 64;
}

// Round r UP to the grid of multiples of 1/2^32 (bounded-size broadcast form).
inline Rat round_up_q32(const Rat& r) {
    static const Int kDen = Int(1) << 32;
    Rat out(ceil_rat(r * Rat(kDen)), kDen);
    out.canonicalize();
    return out;
}

}  // namespace bccst
