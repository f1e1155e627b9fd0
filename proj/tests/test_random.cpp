#include <cmath>

#include "doctest.h"
#include "tsecon/random.hpp"

using tsecon::Rng;

TEST_CASE("generator stream is pinned") {
    // Reference values from an independent implementation of SplitMix64 + xoshiro256**.
    Rng rng(12345);
    CHECK(rng.next_u64() == 0xbe6a36374160d49bULL);
    CHECK(rng.next_u64() == 0x214aaa0637a688c6ULL);
    CHECK(rng.next_u64() == 0xf69d16de9954d388ULL);
    CHECK(rng.next_u64() == 0x0c60048c4e96e033ULL);
    CHECK(rng.next_u64() == 0x8e2076aeed51c648ULL);
    Rng again(12345);
    CHECK(again.uniform() == 0.7438081631565894);
}

TEST_CASE("uniform and normal moments") {
    Rng rng(1);
    const int n = 200000;
    double su = 0, sn = 0, sn2 = 0, sn4 = 0;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform();
        CHECK_UNARY(u >= 0.0);
        CHECK_UNARY(u < 1.0);
        su += u;
        const double z = rng.normal();
        sn += z;
        sn2 += z * z;
        sn4 += z * z * z * z;
    }
    CHECK(su / n == doctest::Approx(0.5).epsilon(0.01));
    CHECK(std::abs(sn / n) < 0.01);
    CHECK(sn2 / n == doctest::Approx(1.0).epsilon(0.02));
    CHECK(sn4 / n == doctest::Approx(3.0).epsilon(0.05));
}
