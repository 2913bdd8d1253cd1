// Wall-clock comparison of composites against their primitive compositions
// and of the ladders on P-521. Field-operation counts are attached as
// per-iteration counters.

#include "ecc/composite.hpp"
#include "ecc/curve_file.hpp"
#include "ecc/ladders.hpp"
#include "ecc/montgomery.hpp"
#include "ecc/rng.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace ecc;

struct Fixture {
    CurveParams E = CurveFile::load(std::string(ECC_CURVES_DIR) + "/p521.curve").weierstrass();
    AffinePoint P = AffinePoint::infinity();
    mpz_class k;

    Fixture() {
        Rng rng(1);
        P = random_point(E, rng);
        k = rng.below(*E.order());
    }
};

const Fixture& fx() {
    static const Fixture f;
    return f;
}

void report(benchmark::State& st, const OpCounter& c) {
    const double n = static_cast<double>(st.iterations());
    st.counters["inv"] = static_cast<double>(c.inv) / n;
    st.counters["mul"] = static_cast<double>(c.mul) / n;
    st.counters["sqr"] = static_cast<double>(c.sqr) / n;
}

AffinePoint prim_double(AffinePoint P, unsigned n, OpCounter& c) {
    for (unsigned i = 0; i < n; ++i) P = point_double(P, fx().E, c);
    return P;
}

void BM_DoubleComposite(benchmark::State& st) {
    const auto n = static_cast<unsigned>(st.range(0));
    OpCounter c;
    for (auto _ : st) benchmark::DoNotOptimize(double_n(n, fx().P, fx().E, c));
    report(st, c);
}
BENCHMARK(BM_DoubleComposite)->DenseRange(2, 4);

void BM_DoublePrimitive(benchmark::State& st) {
    const auto n = static_cast<unsigned>(st.range(0));
    OpCounter c;
    for (auto _ : st) benchmark::DoNotOptimize(prim_double(fx().P, n, c));
    report(st, c);
}
BENCHMARK(BM_DoublePrimitive)->DenseRange(2, 4);

void BM_TripleComposite(benchmark::State& st) {
    OpCounter c;
    for (auto _ : st) benchmark::DoNotOptimize(triple(fx().P, fx().E, c));
    report(st, c);
}
BENCHMARK(BM_TripleComposite);

void BM_TriplePrimitive(benchmark::State& st) {
    OpCounter c;
    for (auto _ : st)
        benchmark::DoNotOptimize(point_add(prim_double(fx().P, 1, c), fx().P, fx().E, c));
    report(st, c);
}
BENCHMARK(BM_TriplePrimitive);

void BM_MulSmall(benchmark::State& st) {
    const auto m = static_cast<unsigned>(st.range(0));
    OpCounter c;
    for (auto _ : st) benchmark::DoNotOptimize(mul_small(m, fx().P, fx().E, c));
    report(st, c);
}
BENCHMARK(BM_MulSmall)->Arg(7)->Arg(11)->Arg(23)->Arg(31);

void BM_Ladder(benchmark::State& st) {
    const Algorithm a = all_algorithms().at(static_cast<std::size_t>(st.range(0)));
    st.SetLabel(std::string(algorithm_name(a)));
    OpCounter c;
    for (auto _ : st) benchmark::DoNotOptimize(multiply(a, fx().k, fx().P, fx().E, c));
    report(st, c);
}
BENCHMARK(BM_Ladder)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);

void BM_MontgomeryLadder(benchmark::State& st) {
    const MontgomeryCurve M = MontgomeryCurve::create("m", fx().E.field().p(), 6, 1);
    const FieldElement x = M.field().element(5);
    OpCounter c;
    for (auto _ : st) benchmark::DoNotOptimize(mont_ladder(fx().k, x, M, c));
    report(st, c);
}
BENCHMARK(BM_MontgomeryLadder)->Unit(benchmark::kMillisecond);

void BM_FieldInverse(benchmark::State& st) {
    OpCounter c;
    const FieldElement a = fx().P.x();
    for (auto _ : st) benchmark::DoNotOptimize(fp::inv(a, c));
}
BENCHMARK(BM_FieldInverse);

void BM_FieldMul(benchmark::State& st) {
    OpCounter c;
    const FieldElement a = fx().P.x(), b = fx().P.y();
    for (auto _ : st) benchmark::DoNotOptimize(fp::mul(a, b, c));
}
BENCHMARK(BM_FieldMul);

}  // namespace

BENCHMARK_MAIN();
