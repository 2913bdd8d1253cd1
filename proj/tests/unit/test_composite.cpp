#include "composite_cases.hpp"
#include "ecc/composite.hpp"
#include "ecc/rng.hpp"
#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace ecc;

namespace {

OpCounter& scratch() { return OpCounter::discard(); }

// Every op over every point, with Q = P, Q = -P and Q = the next point.
void exhaustive(const char* file) {
    CurveParams E = fixtures::load(file);
    auto pts = fixtures::all_points(E);
    std::size_t checks = 0, degenerate = 0;
    for (const auto& op : cases::all_cases()) {
        cases::Tally t;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const AffinePoint& P = pts[i];
            cases::check(op, P, P, E, t);
            if (!op.uses_q) continue;
            cases::check(op, P, point_negate(P, E, scratch()), E, t);
            cases::check(op, P, pts[(i + 1) % pts.size()], E, t);
        }
        EXPECT_TRUE(t.ok()) << file << " " << t.first_failure;
        EXPECT_LT(t.degenerate, t.checks) << file << " " << op.name;
        checks += t.checks;
        degenerate += t.degenerate;
    }
    // Degeneracy is the exception, not the rule.
    EXPECT_LT(degenerate * 4, checks) << file;
}

TEST(Composite, OracleEquivalenceToy211) { exhaustive("toy211.curve"); }
TEST(Composite, OracleEquivalenceToy1009) { exhaustive("toy1009.curve"); }
TEST(Composite, OracleEquivalenceToy1019) { exhaustive("toy1019.curve"); }

TEST(Composite, OracleEquivalenceP521) {
    CurveParams E = fixtures::p521();
    Rng rng(1234);
    for (const auto& op : cases::all_cases()) {
        cases::Tally t;
        for (int i = 0; i < 10; ++i) {
            AffinePoint P = random_point(E, rng);
            AffinePoint Q = op.uses_q ? random_point(E, rng) : P;
            cases::check(op, P, Q, E, t);
        }
        EXPECT_TRUE(t.ok()) << t.first_failure;
        EXPECT_EQ(t.degenerate, 0u) << op.name;
        EXPECT_EQ(t.fallbacks, 0u) << op.name;
    }
}

TEST(Composite, NamedDoublesUseOneInversion) {
    CurveParams E = fixtures::p521();
    AffinePoint G = fixtures::generator("p521.curve");
    for (auto f : {double2, double3, double4, triple, six_q_alt, ten_q_alt}) {
        OpCounter c;
        CompositeResult r = f(G, E, c);
        EXPECT_EQ(c.inv, 1u);
        EXPECT_EQ(r.inversions_used, 1u);
        EXPECT_EQ(r.ops, c);
        EXPECT_TRUE(is_on_curve(r.point, E));
    }
}

TEST(Composite, AlternatesAgree) {
    CurveParams E = fixtures::p521();
    Rng rng(8);
    for (int i = 0; i < 10; ++i) {
        AffinePoint P = random_point(E, rng);
        AffinePoint a = six_q_alt(P, E, scratch()).point;
        EXPECT_EQ(a, doublek_plus_2q(2, P, P, E, scratch()).point);
        EXPECT_EQ(a, mul_small(6, P, E, scratch()).point);
        AffinePoint b = ten_q_alt(P, E, scratch()).point;
        EXPECT_EQ(b, doublek_plus_2q(3, P, P, E, scratch()).point);
        EXPECT_EQ(b, mul_small(10, P, E, scratch()).point);
    }
}

TEST(Composite, MqSecondOutputShareTheInversion) {
    CurveParams E = fixtures::p521();
    Rng rng(13);
    AffinePoint P = random_point(E, rng), Q = random_point(E, rng);
    for (unsigned m = 2; m <= 31; ++m) {
        OpCounter c;
        AffinePoint mq = AffinePoint::infinity();
        CompositeResult r = doublek_plus_mq(3, m, P, Q, E, c, &mq);
        EXPECT_EQ(c.inv, 1u) << m;
        EXPECT_EQ(mq, scalar_mul_reference(m, Q, E, scratch())) << m;
        EXPECT_EQ(r.point, point_add(scalar_mul_reference(8, P, E, scratch()), mq, E, scratch()));
    }
}

TEST(Composite, PlusPointWithInfinityReducesToDoubling) {
    CurveParams E = fixtures::load("toy1019.curve");
    AffinePoint G = fixtures::generator("toy1019.curve");
    for (unsigned n = 1; n <= 4; ++n) {
        OpCounter c;
        auto r = doublek_plus_point(n, G, AffinePoint::infinity(), E, c);
        EXPECT_EQ(r.point, cases::prim_double_n(n, G, E));
        EXPECT_EQ(c.inv, 1u);
    }
}

TEST(Composite, RangeChecks) {
    CurveParams E = fixtures::load("toy211.curve");
    AffinePoint G = fixtures::generator("toy211.curve");
    OpCounter c;
    EXPECT_THROW(double_n(0, G, E, c), std::out_of_range);
    EXPECT_THROW(double_n(5, G, E, c), std::out_of_range);
    EXPECT_THROW(doublek_plus_2q(1, G, G, E, c), std::out_of_range);
    EXPECT_THROW(doublek_plus_mq(2, 1, G, G, E, c), std::out_of_range);
    EXPECT_THROW(doublek_plus_mq(2, 32, G, G, E, c), std::out_of_range);
    EXPECT_THROW(mul_small(0, G, E, c), std::out_of_range);
    EXPECT_THROW(mul_small(32, G, E, c), std::out_of_range);
}

TEST(Composite, RecipeTableCostsOneInversion) {
    const auto& table = small_multiple_table();
    EXPECT_EQ(small_multiple_cost(0), 0u);
    EXPECT_EQ(small_multiple_cost(1), 0u);
    for (unsigned c = 2; c <= 31; ++c) {
        EXPECT_EQ(small_multiple_cost(c), 1u) << c;
        const SmallRecipe& r = table[c];
        long v = 0;
        switch (r.kind) {
            case RecipeKind::Identity: v = 1; break;
            case RecipeKind::Double: v = 1L << r.n; break;
            case RecipeKind::Triple: v = 3; break;
            case RecipeKind::PlusPoint: v = (1L << r.n) + r.sign; break;
            case RecipeKind::PlusTwice: v = (1L << r.n) + 2 * r.sign; break;
            case RecipeKind::PlusMultiple: v = (1L << r.n) + r.m; break;
        }
        EXPECT_EQ(v, static_cast<long>(c)) << c;
        EXPECT_LE(r.n, 4u);
    }
}

TEST(Composite, SmallMultipleChainMatches) {
    CurveParams E = fixtures::p521();
    AffinePoint G = fixtures::generator("p521.curve");
    for (unsigned c = 1; c <= 31; ++c) {
        OpCounter k;
        auto ch = small_multiple_chain(c, G, E, k);
        EXPECT_EQ(k.inv, 0u);
        EXPECT_EQ(chain::to_affine_uncounted(ch), scalar_mul_reference(c, G, E, scratch())) << c;
    }
}

TEST(Composite, TwoTorsionRaises) {
    CurveParams E = fixtures::load("toy1009.curve");
    AffinePoint T = E.point(E.field().element(-1), E.field().zero());
    OpCounter c;
    EXPECT_THROW(double2(T, E, c), DegenerateChain);
    EXPECT_THROW(triple(T, E, c), DegenerateChain);
    EXPECT_EQ(c.inv, 0u);
    // mul_small recovers through the reference.
    for (unsigned k = 2; k <= 31; ++k) {
        OpCounter d;
        auto r = mul_small(k, T, E, d);
        EXPECT_TRUE(r.fell_back) << k;
        EXPECT_EQ(r.point, k % 2 ? T : AffinePoint::infinity()) << k;
    }
}

// P of order 3: [2]P = -P makes the tripling add degenerate.
TEST(Composite, OrderThreePointRaises) {
    CurveParams E = fixtures::load("toy1009.curve");
    AffinePoint G = fixtures::generator("toy1009.curve");  // order 474 = 2 * 3 * 79
    AffinePoint P = scalar_mul_reference(158, G, E, scratch());
    ASSERT_TRUE(scalar_mul_reference(3, P, E, scratch()).is_infinity());
    OpCounter c;
    EXPECT_THROW(triple(P, E, c), DegenerateChain);
    EXPECT_EQ(c.inv, 0u);
    EXPECT_GT(c.total(), 0u);  // the doubling stage stays counted
    auto r = mul_small(3, P, E, scratch());
    EXPECT_TRUE(r.fell_back);
    EXPECT_TRUE(r.point.is_infinity());
    EXPECT_EQ(mul_small(4, P, E, scratch()).point, P);
}

TEST(Composite, InfinityInputs) {
    CurveParams E = fixtures::load("toy211.curve");
    AffinePoint O = AffinePoint::infinity();
    OpCounter c;
    EXPECT_THROW(double2(O, E, c), DegenerateChain);
    EXPECT_THROW(doublek_plus_mq(2, 5, O, fixtures::generator("toy211.curve"), E, c),
                 DegenerateChain);
    EXPECT_EQ(c.inv, 0u);
    auto r = mul_small(7, O, E, c);
    EXPECT_TRUE(r.point.is_infinity());
    EXPECT_EQ(c.inv, 0u);
    auto one = mul_small(1, fixtures::generator("toy211.curve"), E, c);
    EXPECT_EQ(one.point, fixtures::generator("toy211.curve"));
    EXPECT_EQ(c.total(), 0u);
}

TEST(Composite, FaultInjectionCorruptsOnlyTheNamedOp) {
    CurveParams E = fixtures::p521();
    AffinePoint G = fixtures::generator("p521.curve");
    AffinePoint good4 = double4(G, E, scratch()).point;
    AffinePoint good3 = double3(G, E, scratch()).point;
    {
        FaultInjection f("double4");
        EXPECT_TRUE(FaultInjection::active("double4"));
        EXPECT_NE(double4(G, E, scratch()).point, good4);
        EXPECT_EQ(double3(G, E, scratch()).point, good3);
    }
    EXPECT_FALSE(FaultInjection::active("double4"));
    EXPECT_EQ(double4(G, E, scratch()).point, good4);
}

// Composite results are points on the curve for random P-521 inputs.
TEST(Composite, OutputsOnCurve) {
    CurveParams E = fixtures::p521();
    Rng rng(77);
    for (unsigned c = 2; c <= 31; ++c) {
        AffinePoint P = random_point(E, rng);
        EXPECT_TRUE(is_on_curve(mul_small(c, P, E, scratch()).point, E)) << c;
    }
}

}  // namespace
