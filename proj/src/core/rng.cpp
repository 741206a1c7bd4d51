#include "core/rng.hpp"

#include <cassert>
#include <cmath>

namespace bccst {

uint64_t CounterRng::uniform_u64(uint64_t bound) {
    assert(bound > 0);
    uint64_t x = next_u64();
    __uint128_t m = static_cast<__uint128_t>(x) * bound;
    uint64_t lo = static_cast<uint64_t>(m);
    if (lo < bound) {
        uint64_t floor = (0 - bound) % bound;
        while (lo < floor) {
            x = next_u64();
            m = static_cast<__uint128_t>(x) * bound;
            lo = static_cast<uint64_t>(m);
        }
    }
    return static_cast<uint64_t>(m >> 64);
}

BernoulliRat::BernoulliRat(const Rat& p) {
    if (p <= 0) {
        never_ = true;
        return;
    }
    if (p >= 1) {
        always_ = true;
        return;
    }
    static const Int kTwo64 = Int(1) << 64;
    Int x = p.get_num() * kTwo64;
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), p.get_den().get_mpz_t());
    threshold_ = to_u64(q);
    tail_num_ = r;
    tail_den_ = p.get_den();
}

bool BernoulliRat::sample(CounterRng& rng) const {
    if (always_) return true;
    if (never_) return false;
    uint64_t u = rng.next_u64();
    if (u < threshold_) return true;
    if (u > threshold_) return false;
    // boundary: accept with probability tail_num/tail_den, refined 64 bits at a time
    static const Int kTwo64 = Int(1) << 64;
    Int num = tail_num_, den = tail_den_;
    while (true) {
        if (num == 0) return false;
        Int x = num * kTwo64;
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), den.get_mpz_t());
        uint64_t t = to_u64(q);
        uint64_t v = rng.next_u64();
        if (v < t) return true;
        if (v > t) return false;
        num = r;
    }
}

namespace {

constexpr uint64_t kPerTrialLimit = 1024;

uint64_t binomial_geometric(CounterRng& rng, uint64_t n, double p) {
    // successes located by geometric gaps between them
    double log1mp = std::log1p(-p);
    uint64_t count = 0;
    uint64_t pos = 0;
    while (pos < n) {
        double u = rng.uniform01();
        double gap = std::floor(std::log(u) / log1mp);
        if (!(gap < static_cast<double>(n - pos))) break;
        pos += static_cast<uint64_t>(gap);
        if (pos >= n) break;
        ++count;
        ++pos;
    }
    return count;
}

}  // namespace

uint64_t binomial_count(CounterRng& rng, uint64_t n, const Rat& p) {
    if (n == 0 || p <= 0) return 0;
    if (p >= 1) return n;
    if (n <= kPerTrialLimit) {
        BernoulliRat b(p);
        uint64_t c = 0;
        for (uint64_t i = 0; i < n; ++i)
            if (b.sample(rng)) ++c;
        return c;
    }
    return binomial_geometric(rng, n, p.get_d());
}

Int uniform_below(CounterRng& rng, const Int& bound) {
    assert(bound > 0);
    if (fits_u64(bound)) return Int(static_cast<unsigned long>(rng.uniform_u64(to_u64(bound))));
    size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    size_t words = (bits + 63) / 64;
    size_t top_shift = words * 64 - bits;
    while (true) {
        Int x = 0;
        for (size_t i = 0; i < words; ++i) {
            uint64_t w = rng.next_u64();
            if (i == 0) w >>= top_shift;  // keep exactly `bits` random bits total
            x <<= 64;
            x += static_cast<unsigned long>(w);
        }
        if (x < bound) return x;
    }
}

}  // namespace bccst
