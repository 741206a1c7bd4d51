#pragma once

#include <cstdint>
#include <string_view>

#include "core/rational.hpp"

namespace bccst {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

inline uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 0xCBF29CE484222325ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ull;
    }
    return h;
}

// Counter-based stream: output i is a pure function of (key, i), so machines
// can be evaluated in any order without perturbing each other's draws.
class CounterRng {
  public:
    CounterRng() : key_(0), ctr_(0) {}
    explicit CounterRng(uint64_t key) : key_(key), ctr_(0) {}

    uint64_t next_u64() { return splitmix64(key_ + (++ctr_) * 0x9E3779B97F4A7C15ull); }

    // Unbiased uniform in [0, bound), bound > 0 (Lemire rejection).
    uint64_t uniform_u64(uint64_t bound);

    // 53-bit uniform in (0, 1].
    double uniform01() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

    uint64_t counter() const { return ctr_; }

  private:
    uint64_t key_;
    uint64_t ctr_;
};

// Derives an independent stream key; `instance` separates repeated uses of the
// same phase label within one run.
inline uint64_t derive_stream(uint64_t seed, uint64_t machine, uint64_t label_hash,
                              uint64_t instance) {
    uint64_t k = splitmix64(seed ^ 0x243F6A8885A308D3ull);
    k = splitmix64(k ^ (machine * 0xD1B54A32D192ED03ull));
    k = splitmix64(k ^ label_hash);
    k = splitmix64(k ^ (instance * 0x8CB92BA72F3D8DD7ull));
    return k;
}

inline uint64_t derive_seed(uint64_t seed, uint64_t replica) {
    return splitmix64(splitmix64(seed ^ 0x5851F42D4C957F2Dull) ^ replica);
}

// Exact Bernoulli(p) for rational p: one 64-bit draw on the fast path, exact
// arbitrary-precision refinement on the (probability 2^-64) boundary.
class BernoulliRat {
  public:
    explicit BernoulliRat(const Rat& p);
    bool sample(CounterRng& rng) const;
    bool always_true() const { return always_; }

  private:
    bool always_ = false;
    bool never_ = false;
    uint64_t threshold_ = 0;  // floor(p * 2^64)
    Int tail_num_, tail_den_;  // residual fraction at the boundary
};

// Exact count of successes among n Bernoulli(p) trials. Uses per-trial draws
// for small n and geometric skips for large n (double-precision gaps; the
// deviation from the exact law is ~2^-50, far below any statistical test here).
uint64_t binomial_count(CounterRng& rng, uint64_t n, const Rat& p);

// Uniform integer in [0, bound), bound > 0, exact for arbitrary precision.
Int uniform_below(CounterRng& rng, const Int& bound);

}  // namespace bccst
