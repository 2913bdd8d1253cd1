#include "ecc/field.hpp"
#include "ecc/hex.hpp"
#include "ecc/rng.hpp"
#include "small_group.hpp"

#include <gtest/gtest.h>

using namespace ecc;

namespace {

const mpz_class kP521 = (mpz_class(1) << 521) - 1;

TEST(Field, SmallModulusExamples) {
    auto F = PrimeModulus::make(17);
    OpCounter c;
    EXPECT_EQ(fp::add(F->element(9), F->element(9), c).value(), 1);
    EXPECT_EQ(fp::sub(F->element(3), F->element(5), c).value(), 15);
    EXPECT_EQ(fp::mul(F->element(5), F->element(7), c).value(), 1);
    EXPECT_EQ(fp::inv(F->element(2), c).value(), 9);
    EXPECT_EQ(fp::neg(F->element(5), c).value(), 12);
    EXPECT_EQ(fp::sqr(F->element(6), c).value(), 2);
}

TEST(Field, ElementReducesIntoRange) {
    auto F = PrimeModulus::make(17);
    EXPECT_EQ(F->element(-1).value(), 16);
    EXPECT_EQ(F->element(35).value(), 1);
    EXPECT_TRUE(F->zero().is_zero());
    EXPECT_TRUE(F->one().is_one());
}

TEST(Field, RejectsNonPrimeModuli) {
    EXPECT_THROW(PrimeModulus::make(15), std::invalid_argument);
    EXPECT_THROW(PrimeModulus::make(2), std::invalid_argument);
    EXPECT_THROW(PrimeModulus::make(3), std::invalid_argument);
    EXPECT_NO_THROW(PrimeModulus::make(5));
}

TEST(Field, FromHexRejectsOutOfRange) {
    auto F = PrimeModulus::make(17);
    EXPECT_EQ(F->from_hex("10").value(), 16);
    EXPECT_THROW(F->from_hex("11"), std::out_of_range);
    EXPECT_THROW(F->from_hex("0x1"), HexParseError);
}

TEST(Field, CountersTrackEachOperation) {
    auto F = PrimeModulus::make(101);
    OpCounter c;
    auto a = F->element(7), b = F->element(9);
    fp::add(a, b, c);
    fp::sub(a, b, c);
    fp::twice(a, c);
    fp::mul(a, b, c);
    fp::mul_small(a, 3, c);
    fp::sqr(a, c);
    fp::inv(a, c);
    fp::neg(a, c);
    EXPECT_EQ(c.add_sub, 3u);
    EXPECT_EQ(c.mul, 2u);
    EXPECT_EQ(c.sqr, 1u);
    EXPECT_EQ(c.inv, 1u);
    EXPECT_EQ(c.neg, 1u);
    EXPECT_EQ(c.total(), 8u);
}

TEST(Field, CounterArithmetic) {
    OpCounter a, b;
    a.mul = 5, a.inv = 2;
    b.mul = 3, b.inv = 1;
    OpCounter d = a - b;
    EXPECT_EQ(d.mul, 2u);
    EXPECT_EQ(d.inv, 1u);
    b.absorb(d);
    EXPECT_EQ(a, b);
}

TEST(Field, ZeroInversionThrows) {
    auto F = PrimeModulus::make(17);
    OpCounter c;
    EXPECT_THROW(fp::inv(F->zero(), c), ZeroInversion);
    EXPECT_EQ(c.inv, 0u);
}

TEST(Field, ModulusMismatchThrows) {
    auto F = PrimeModulus::make(17);
    auto G = PrimeModulus::make(19);
    OpCounter c;
    EXPECT_THROW(fp::add(F->one(), G->one(), c), ModulusMismatch);
    EXPECT_THROW(fp::mul(F->one(), G->one(), c), ModulusMismatch);
    // Same value, distinct moduli objects of the same prime still differ.
    auto F2 = PrimeModulus::make(17);
    EXPECT_THROW(fp::sub(F->one(), F2->one(), c), ModulusMismatch);
}

TEST(Field, PowMatchesRepeatedMultiplication) {
    auto F = PrimeModulus::make(1009);
    OpCounter c;
    auto g = F->element(11);
    auto acc = F->one();
    for (int e = 0; e < 40; ++e) {
        EXPECT_EQ(fp::pow(g, e, c), acc) << e;
        acc = fp::mul(acc, g, c);
    }
}

// Exhaustive against the extended-Euclid oracle.
TEST(Field, InverseAgreesWithEuclidOracle) {
    const long p = 1019;
    auto F = PrimeModulus::make(p);
    OpCounter c;
    for (long a = 1; a < p; ++a)
        ASSERT_EQ(fp::inv(F->element(a), c).value(), oracle::inv(a, p)) << a;
}

TEST(Field, SqrtOnSmallPrimes) {
    for (long p : {13L, 17L, 97L, 1009L, 65521L}) {
        auto F = PrimeModulus::make(p);
        OpCounter c;
        for (long a = 0; a < std::min(p, 2000L); ++a) {
            auto x = F->element(a);
            FieldElement r = F->zero();
            bool sq = fp::sqrt(x, r, c);
            EXPECT_EQ(sq, fp::is_square(x, c)) << p << " " << a;
            if (sq) {
                EXPECT_EQ(fp::sqr(r, c), x) << p << " " << a;
            }
        }
    }
}

void field_properties(const mpz_class& p, int trials) {
    auto F = PrimeModulus::make(p);
    Rng rng(42);
    OpCounter c;
    for (int i = 0; i < trials; ++i) {
        auto a = F->element(rng.below(p));
        auto b = F->element(rng.below(p));
        auto d = F->element(rng.below(p));
        EXPECT_EQ(fp::add(a, b, c), fp::add(b, a, c));
        EXPECT_EQ(fp::mul(a, b, c), fp::mul(b, a, c));
        EXPECT_EQ(fp::mul(a, fp::add(b, d, c), c),
                  fp::add(fp::mul(a, b, c), fp::mul(a, d, c), c));
        EXPECT_EQ(fp::sub(fp::add(a, b, c), b, c), a);
        EXPECT_EQ(fp::add(a, fp::neg(a, c), c), F->zero());
        EXPECT_EQ(fp::sqr(a, c), fp::mul(a, a, c));
        EXPECT_EQ(fp::twice(a, c), fp::add(a, a, c));
        EXPECT_EQ(fp::mul_small(a, 5, c), fp::mul(a, F->element(5), c));
        if (!a.is_zero()) {
            EXPECT_TRUE(fp::mul(a, fp::inv(a, c), c).is_one());
        }
    }
}

TEST(Field, PropertiesSixteenBitPrime) { field_properties(65521, 2000); }

TEST(Field, PropertiesP521) { field_properties(kP521, 500); }

TEST(Field, P521Sqrt) {
    auto F = PrimeModulus::make(kP521);
    Rng rng(7);
    OpCounter c;
    for (int i = 0; i < 20; ++i) {
        auto a = F->element(rng.below(F->p()));
        auto s = fp::sqr(a, c);
        FieldElement r = F->zero();
        ASSERT_TRUE(fp::sqrt(s, r, c));
        EXPECT_EQ(fp::sqr(r, c), s);
    }
}

TEST(Field, ToHexIsLowercase) {
    auto F = PrimeModulus::make(kP521);
    EXPECT_EQ(F->element(0xABCDEF).to_hex(), "abcdef");
    EXPECT_EQ(F->zero().to_hex(), "0");
    EXPECT_EQ(F->bit_length(), 521u);
}

}  // namespace
