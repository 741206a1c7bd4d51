#include <doctest.h>

#include <cmath>

#include "core/rng.hpp"

using namespace bccst;

TEST_SUITE("rng") {

TEST_CASE("streams are reproducible and key-separated") {
    CounterRng a(derive_stream(7, 0, fnv1a64("x"), 0));
    CounterRng b(derive_stream(7, 0, fnv1a64("x"), 0));
    CounterRng c(derive_stream(7, 1, fnv1a64("x"), 0));
    bool all_equal = true, any_equal = false;
    for (int i = 0; i < 64; ++i) {
        uint64_t va = a.next_u64();
        all_equal = all_equal && (va == b.next_u64());
        any_equal = any_equal || (va == c.next_u64());
    }
    CHECK(all_equal);
    CHECK(!any_equal);
}

TEST_CASE("uniform_u64 stays in range and covers small supports") {
    CounterRng rng(123);
    std::vector<int> hits(5, 0);
    for (int i = 0; i < 5000; ++i) ++hits[rng.uniform_u64(5)];
    for (int h : hits) CHECK(h > 800);  // fair to ~3.5 sigma
}

TEST_CASE("exact bernoulli matches its rational rate") {
    CounterRng rng(99);
    BernoulliRat b(Rat(3, 7));
    int c = 0;
    const int n = 200000;
    for (int i = 0; i < n; ++i)
        if (b.sample(rng)) ++c;
    double freq = double(c) / n;
    CHECK(std::abs(freq - 3.0 / 7.0) < 0.005);
    CHECK(BernoulliRat(Rat(1)).sample(rng));
    CHECK(!BernoulliRat(Rat(0)).sample(rng));
}

TEST_CASE("binomial mean is right on both code paths") {
    CounterRng rng(5);
    // per-trial path
    uint64_t small_sum = 0;
    for (int i = 0; i < 2000; ++i) small_sum += binomial_count(rng, 100, Rat(1, 4));
    CHECK(std::abs(double(small_sum) / 2000 - 25.0) < 1.0);
    // geometric-skip path
    uint64_t big_sum = 0;
    for (int i = 0; i < 2000; ++i) big_sum += binomial_count(rng, 1000000, Rat(1, 100000));
    CHECK(std::abs(double(big_sum) / 2000 - 10.0) < 0.5);
    CHECK(binomial_count(rng, 17, Rat(1)) == 17);
    CHECK(binomial_count(rng, 17, Rat(0)) == 0);
}

TEST_CASE("uniform_below handles wide integers") {
    CounterRng rng(11);
    Int bound = Int(1) << 130;
    for (int i = 0; i < 50; ++i) {
        Int x = uniform_below(rng, bound);
        CHECK(x >= 0);
        CHECK(x < bound);
    }
    Int seen_high = 0;
    for (int i = 0; i < 50; ++i) seen_high = std::max(seen_high, uniform_below(rng, bound));
    CHECK(seen_high > (bound >> 2));  // not stuck in the low words
}

}  // TEST_SUITE
