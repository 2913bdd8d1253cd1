#include "ecc/rng.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using ecc::Rng;

namespace {

// Plain re-statement of the documented stream.
std::uint64_t step(std::uint64_t& s) {
    s ^= s >> 12;
    s ^= s << 25;
    s ^= s >> 27;
    return s * 0x2545F4914F6CDD1DULL;
}

TEST(Rng, DocumentedStream) {
    Rng r(1);
    std::uint64_t s = 1 ^ 0x9E3779B97F4A7C15ULL;
    for (int i = 0; i < 100; ++i) EXPECT_EQ(r.next(), step(s));
}

TEST(Rng, ZeroScrambledStateIsReplaced) {
    Rng r(0x9E3779B97F4A7C15ULL);
    std::uint64_t s = 1;
    EXPECT_EQ(r.next(), step(s));
}

TEST(Rng, BitsTakesWordsMostSignificantFirst) {
    Rng a(7), b(7);
    mpz_class v = a.bits(100);
    std::uint64_t hi = b.next() & ((1ULL << 36) - 1);
    std::uint64_t lo = b.next();
    mpz_class expect = (mpz_class(static_cast<unsigned long>(hi)) << 64) +
                       mpz_class(static_cast<unsigned long>(lo));
    EXPECT_EQ(v, expect);
    EXPECT_EQ(a.bits(0), 0);
}

TEST(Rng, BelowStaysInRange) {
    Rng r(3);
    mpz_class bound = 1000003;
    for (int i = 0; i < 2000; ++i) {
        mpz_class v = r.below(bound);
        ASSERT_GE(v, 0);
        ASSERT_LT(v, bound);
        ASSERT_LT(r.below_u64(10), 10u);
    }
    EXPECT_EQ(r.below(1), 0);
}

TEST(Rng, BelowCoversSmallRange) {
    Rng r(4);
    int hits[6] = {};
    for (int i = 0; i < 6000; ++i) ++hits[r.below_u64(6)];
    for (int h : hits) {
        EXPECT_GT(h, 800);
        EXPECT_LT(h, 1200);
    }
}

TEST(Rng, SeedFromEnvironment) {
    unsetenv("ECC_SEED");
    EXPECT_EQ(ecc::seed_from_env(9), 9u);
    setenv("ECC_SEED", "1234", 1);
    EXPECT_EQ(ecc::seed_from_env(9), 1234u);
    setenv("ECC_SEED", "not-a-number", 1);
    EXPECT_EQ(ecc::seed_from_env(9), 9u);
    unsetenv("ECC_SEED");
}

}  // namespace
