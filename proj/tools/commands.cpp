#include "commands.hpp"

#include "ecc/composite.hpp"
#include "ecc/curve.hpp"
#include "ecc/curve_file.hpp"
#include "ecc/hex.hpp"
#include "ecc/ladders.hpp"
#include "ecc/montgomery.hpp"
#include "ecc/recode.hpp"
#include "ecc/rng.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>
#include <vector>

namespace ecc::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void print_counts(std::ostream& out, const OpCounter& c) {
    out << "mul = " << c.mul << "\n"
        << "sqr = " << c.sqr << "\n"
        << "add_sub = " << c.add_sub << "\n"
        << "inv = " << c.inv << "\n"
        << "neg = " << c.neg << "\n";
}

void print_point(std::ostream& out, const AffinePoint& R) {
    if (R.is_infinity()) {
        out << "infinity\n";
        return;
    }
    out << "x = " << R.x().to_hex() << "\n"
        << "y = " << R.y().to_hex() << "\n";
}

AffinePoint point_arg(const CurveParams& E, const CurveFile& f,
                      const std::optional<std::string>& x, const std::optional<std::string>& y,
                      const char* what) {
    if (x.has_value() != y.has_value())
        throw UsageError(std::string("both coordinates of ") + what + " are required");
    if (x) return E.point_hex(*x, *y);
    if (!f.gx) throw UsageError(std::string("no ") + what + " given and the curve has no base point");
    return E.point(E.field().element(*f.gx), E.field().element(*f.gy));
}

template <class F>
int guarded_main(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const NotOnCurve& e) {
        err << "error: " << e.what() << "\n";
        return kOffCurve;
    } catch (const HexParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const CurveFileError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

int mul_montgomery(const CurveFile& f, const mpz_class& k, const MulArgs& a, std::ostream& out) {
    if (a.qx || a.qy) throw UsageError("montgomery-xz has no kernel mode");
    if (a.trace) throw UsageError("montgomery-xz produces no ladder trace");
    MontgomeryCurve C = f.montgomery();
    FieldElement x = C.field().zero();
    if (a.px) {
        if (a.py) {
            // Only x is used; y is accepted for symmetry but must match the curve.
            CurveFile g = f;
            g.gx = parse_hex(*a.px);
            g.gy = parse_hex(*a.py);
            if (*g.gx >= f.p || *g.gy >= f.p) throw UsageError("coordinate not below p");
            g.montgomery();
        }
        x = C.field().from_hex(*a.px);
    } else if (f.gx) {
        x = C.field().element(*f.gx);
    } else {
        throw UsageError("no P given and the curve has no base point");
    }
    OpCounter ctr;
    auto r = mont_ladder(k, x, C, ctr);
    if (r) out << "x = " << r->to_hex() << "\n";
    else out << "infinity\n";
    print_counts(out, ctr);
    return kOk;
}

}  // namespace

int cmd_mul(const MulArgs& a, std::ostream& out, std::ostream& err) {
    return guarded_main(err, [&] {
        CurveFile f = CurveFile::load(a.curve);
        mpz_class k = parse_hex(a.k);
        if (a.algo == "montgomery-xz") {
            if (f.model != CurveModel::Montgomery)
                throw UsageError("montgomery-xz needs a curve file with model = montgomery");
            return mul_montgomery(f, k, a, out);
        }
        auto alg = parse_algorithm(a.algo);
        if (!alg) throw UsageError("unknown algorithm: " + a.algo);
        if (f.model != CurveModel::Weierstrass)
            throw UsageError(a.algo + " needs a weierstrass curve file");
        CurveParams E = f.weierstrass();
        AffinePoint P = point_arg(E, f, a.px, a.py, "P");
        OpCounter ctr;
        LadderTrace trace;
        LadderOptions opt;
        if (a.trace) opt.trace = &trace;
        std::optional<AffinePoint> R;
        if (a.qx || a.qy) {
            if (a.qx.has_value() != a.qy.has_value())
                throw UsageError("both coordinates of Q are required");
            AffinePoint Q = E.point_hex(*a.qx, *a.qy);
            R = kernel_compute(k, P, Q, E, ctr, *alg, opt);
        } else {
            R = multiply(*alg, k, P, E, ctr, opt);
        }
        print_point(out, *R);
        print_counts(out, ctr);
        if (a.trace) out << trace.to_text();
        return kOk;
    });
}

int cmd_recode(const RecodeArgs& a, std::ostream& out, std::ostream& err) {
    return guarded_main(err, [&] {
        mpz_class k = parse_hex(a.k);
        MixedBaseRepr r;
        std::string digits;
        if (a.mode == "naf") {
            r = to_naf(k);
            digits = r.digits_msb_first();
        } else if (a.mode == "base16") {
            std::vector<unsigned> d = to_base16_digits(k);
            for (std::size_t i = 0; i < d.size(); ++i) digits += (i ? " " : "") + std::to_string(d[i]);
            r = to_base16(k);
        } else if (a.mode == "mixed") {
            r = mixed_naf_knapsack(k);
            digits = r.digits_msb_first();
        } else {
            throw UsageError("unknown recode mode: " + a.mode);
        }
        std::string bases = r.bases_msb_first();
        out << digits << "\n"
            << "bases:" << (bases.empty() ? "" : " " + bases) << "\n"
            << "inversions: " << estimate_inversions(r, CostModel::affine()) << "\n";
        return kOk;
    });
}

namespace {

const std::vector<std::string>& fault_targets() {
    static const std::vector<std::string> ops = {
        "double2",         "double3",         "double4",   "triple",    "doublek_plus_point",
        "doublek_plus_2q", "doublek_plus_mq", "six_q_alt", "ten_q_alt"};
    return ops;
}

std::string point_repr(const AffinePoint& P) {
    if (P.is_infinity()) return "infinity";
    return P.x().to_hex() + ":" + P.y().to_hex();
}

class Checker {
public:
    Checker(std::ostream& out, std::string curve) : out_(out), curve_(std::move(curve)) {}

    void expect(bool ok, const std::string& op, const mpz_class& k, const AffinePoint& P) {
        ++checks_;
        if (ok) return;
        ++failures_;
        if (failures_ <= kMaxReported)
            out_ << "FAIL curve=" << curve_ << " op=" << op << " k=" << to_hex(k)
                 << " point=" << point_repr(P) << "\n";
    }

    std::uint64_t checks() const { return checks_; }
    std::uint64_t failures() const { return failures_; }

private:
    static constexpr std::uint64_t kMaxReported = 20;
    std::ostream& out_;
    std::string curve_;
    std::uint64_t checks_ = 0;
    std::uint64_t failures_ = 0;
};

AffinePoint oracle_mul(unsigned long k, const AffinePoint& P, const CurveParams& E) {
    return scalar_mul_reference(mpz_class(k), P, E, OpCounter::discard());
}

AffinePoint oracle_sum(unsigned long a, const AffinePoint& P, unsigned long b,
                       const AffinePoint& Q, const CurveParams& E) {
    OpCounter& c = OpCounter::discard();
    return point_add(oracle_mul(a, P, E), oracle_mul(b, Q, E), E, c);
}

// Composite result must match the oracle with one inversion, or degenerate.
template <class F>
void check_composite(Checker& ck, const std::string& op, unsigned long mult, const AffinePoint& P,
                     const AffinePoint& expected, const CurveParams& E, F&& f) {
    OpCounter ctr;
    try {
        CompositeResult r = f(ctr);
        bool ok = r.point == expected && is_on_curve(r.point, E) && r.inversions_used == 1 &&
                  ctr.inv == 1;
        ck.expect(ok, op, mpz_class(mult), P);
    } catch (const DegenerateChain&) {
        ck.expect(ctr.inv == 0, op + "[degenerate]", mpz_class(mult), P);
    }
}

void verify_composites(Checker& ck, const AffinePoint& P, const AffinePoint& Q,
                       const CurveParams& E) {
    OpCounter& dc = OpCounter::discard();
    const AffinePoint negP = point_negate(P, E, dc);
    for (unsigned n = 2; n <= 4; ++n)
        check_composite(ck, "double" + std::to_string(n), 1ul << n, P, oracle_mul(1ul << n, P, E),
                        E, [&](OpCounter& c) { return double_n(n, P, E, c); });
    check_composite(ck, "triple", 3, P, oracle_mul(3, P, E), E,
                    [&](OpCounter& c) { return triple(P, E, c); });
    check_composite(ck, "six_q_alt", 6, P, oracle_mul(6, P, E), E,
                    [&](OpCounter& c) { return six_q_alt(P, E, c); });
    check_composite(ck, "ten_q_alt", 10, P, oracle_mul(10, P, E), E,
                    [&](OpCounter& c) { return ten_q_alt(P, E, c); });
    for (unsigned n = 1; n <= 4; ++n) {
        const unsigned long s = 1ul << n;
        const std::string op = "doublek_plus_point(" + std::to_string(n) + ")";
        check_composite(ck, op, s + 1, P, oracle_mul(s + 1, P, E), E,
                        [&](OpCounter& c) { return doublek_plus_point(n, P, P, E, c); });
        check_composite(ck, op + "-", s - 1, P, oracle_mul(s - 1, P, E), E,
                        [&](OpCounter& c) { return doublek_plus_point(n, P, negP, E, c); });
        check_composite(ck, op + "PQ", s, P, oracle_sum(s, Q, 1, P, E), E,
                        [&](OpCounter& c) { return doublek_plus_point(n, Q, P, E, c); });
    }
    for (unsigned n = 2; n <= 4; ++n) {
        const unsigned long s = 1ul << n;
        const std::string op = "doublek_plus_2q(" + std::to_string(n) + ")";
        check_composite(ck, op, s + 2, P, oracle_mul(s + 2, P, E), E,
                        [&](OpCounter& c) { return doublek_plus_2q(n, P, P, E, c); });
        check_composite(ck, op + "-", s - 2, P, oracle_mul(s - 2, P, E), E,
                        [&](OpCounter& c) { return doublek_plus_2q(n, P, negP, E, c); });
        check_composite(ck, op + "PQ", s, P, oracle_sum(s, P, 2, Q, E), E,
                        [&](OpCounter& c) { return doublek_plus_2q(n, P, Q, E, c); });
    }
    for (unsigned n = 1; n <= 4; ++n) {
        for (unsigned m = 2; m <= 31; ++m) {
            const unsigned long s = 1ul << n;
            const std::string op =
                "doublek_plus_mq(" + std::to_string(n) + "," + std::to_string(m) + ")";
            check_composite(ck, op, s + m, P, oracle_mul(s + m, P, E), E,
                            [&](OpCounter& c) { return doublek_plus_mq(n, m, P, P, E, c); });
            check_composite(ck, op + "PQ", s, P, oracle_sum(s, P, m, Q, E), E,
                            [&](OpCounter& c) { return doublek_plus_mq(n, m, P, Q, E, c); });
        }
    }
    for (unsigned c = 1; c <= 31; ++c) {
        OpCounter ctr;
        CompositeResult r = mul_small(c, P, E, ctr);
        bool ok = r.point == oracle_mul(c, P, E) &&
                  (r.fell_back || r.inversions_used == small_multiple_cost(c));
        ck.expect(ok, "mul_small(" + std::to_string(c) + ")", mpz_class(c), P);
    }
}

void verify_ladders(Checker& ck, const mpz_class& k, const AffinePoint& G, const AffinePoint& P2,
                    const CurveParams& E, const DoublesTable& table) {
    OpCounter& dc = OpCounter::discard();
    const AffinePoint expect = scalar_mul_reference(k, G, E, dc);
    const AffinePoint expect_kernel = point_add(P2, expect, E, dc);
    for (Algorithm a : all_algorithms()) {
        OpCounter ctr;
        ck.expect(multiply(a, k, G, E, ctr) == expect, std::string(algorithm_name(a)), k, G);
        OpCounter kc;
        ck.expect(kernel_compute(k, P2, G, E, kc, a) == expect_kernel,
                  "kernel_" + std::string(algorithm_name(a)), k, G);
    }
    LadderOptions opt;
    opt.table = &table;
    OpCounter tc;
    ck.expect(kernel_compute(k, P2, G, E, tc, Algorithm::R2L, opt) == expect_kernel,
              "kernel_table", k, G);
    const MixedBaseRepr r = mixed_naf_knapsack(k);
    ck.expect(repr_eval(r) == k, "mixed_naf_knapsack", k, G);
}

std::vector<AffinePoint> enumerate_points(const CurveParams& E) {
    std::vector<AffinePoint> pts;
    const PrimeModulus& f = E.field();
    OpCounter& c = OpCounter::discard();
    for (unsigned long x = 0; mpz_class(x) < f.p(); ++x) {
        FieldElement fx = f.element(static_cast<long>(x));
        auto P = lift_x(E, fx);
        if (!P) continue;
        pts.push_back(*P);
        if (!P->y().is_zero()) pts.push_back(point_negate(*P, E, c));
    }
    return pts;
}

}  // namespace

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    return guarded_main(err, [&] {
        std::optional<FaultInjection> fault;
        if (a.inject_fault) {
            bool known = false;
            for (const auto& op : fault_targets()) known = known || op == *a.inject_fault;
            if (!known) throw UsageError("unknown fault target: " + *a.inject_fault);
            fault.emplace(*a.inject_fault);
        }
        CurveFile f = CurveFile::load(a.curve);
        CurveParams E = f.weierstrass();
        const std::string name = E.name().empty() ? a.curve : E.name();
        Checker ck(out, name);
        if (a.exhaustive_bits == 0 && a.random_trials == 0) {
            out << "ok: 0 checks\n";
            return kOk;
        }
        if (a.exhaustive_bits > 24) throw UsageError("--exhaustive-bits above 24");
        Rng rng(a.seed);
        std::vector<AffinePoint> points;
        if (f.gx) points.push_back(E.point(E.field().element(*f.gx), E.field().element(*f.gy)));
        for (unsigned i = 0; i < a.random_trials; ++i) points.push_back(random_point(E, rng));
        if (points.empty()) points.push_back(random_point(E, rng));
        if (a.exhaustive_bits > 0 && E.field().bit_length() <= 12) {
            std::vector<AffinePoint> all = enumerate_points(E);
            points.insert(points.end(), all.begin(), all.end());
        }
        for (std::size_t i = 0; i < points.size(); ++i)
            verify_composites(ck, points[i], points[(i + 1) % points.size()], E);

        const AffinePoint G = points.front();
        const AffinePoint P2 = random_point(E, rng);
        const std::size_t kbits = E.field().bit_length();
        const std::size_t tbits = std::max<std::size_t>(kbits, a.exhaustive_bits);
        DoublesTable table = DoublesTable::build(G, tbits, E);
        for (unsigned long k = 0; k < (1ul << a.exhaustive_bits); ++k)
            verify_ladders(ck, mpz_class(k), G, P2, E, table);
        for (unsigned i = 0; i < a.random_trials; ++i)
            verify_ladders(ck, rng.bits(static_cast<unsigned>(kbits)), G, P2, E, table);

        if (ck.failures() > 0) {
            out << "FAIL: " << ck.failures() << " of " << ck.checks() << " checks\n";
            return kMismatch;
        }
        out << "ok: " << ck.checks() << " checks\n";
        return kOk;
    });
}

namespace {

struct BenchRow {
    std::string name;
    OpCounter total;
    double wall_ns = 0;
};

std::string mean_str(std::uint64_t total, unsigned trials) {
    if (total % trials == 0) return std::to_string(total / trials);
    std::ostringstream s;
    s << std::fixed << std::setprecision(2) << static_cast<double>(total) / trials;
    return s.str();
}

template <class F>
void timed(BenchRow& row, F&& f) {
    OpCounter ctr;
    auto t0 = std::chrono::steady_clock::now();
    f(ctr);
    auto t1 = std::chrono::steady_clock::now();
    row.total.absorb(ctr);
    row.wall_ns += static_cast<double>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
}

using PointFn = std::function<void(const AffinePoint&, OpCounter&)>;

struct CompositeSpec {
    std::string name;
    PointFn composite;
    PointFn primitive;
};

std::vector<CompositeSpec> composite_specs(const CurveParams& E) {
    auto dbl = [&E](AffinePoint P, unsigned n, OpCounter& c) {
        for (unsigned i = 0; i < n; ++i) P = point_double(P, E, c);
        return P;
    };
    auto add = [&E](const AffinePoint& A, const AffinePoint& B, OpCounter& c) {
        return point_add(A, B, E, c);
    };
    std::vector<CompositeSpec> v;
    v.push_back({"4P", [&E](auto& P, auto& c) { double2(P, E, c); },
                 [=](auto& P, auto& c) { dbl(P, 2, c); }});
    v.push_back({"8P", [&E](auto& P, auto& c) { double3(P, E, c); },
                 [=](auto& P, auto& c) { dbl(P, 3, c); }});
    v.push_back({"16P", [&E](auto& P, auto& c) { double4(P, E, c); },
                 [=](auto& P, auto& c) { dbl(P, 4, c); }});
    v.push_back({"3P", [&E](auto& P, auto& c) { triple(P, E, c); },
                 [=](auto& P, auto& c) { add(dbl(P, 1, c), P, c); }});
    v.push_back({"5P", [&E](auto& P, auto& c) { doublek_plus_point(2, P, P, E, c); },
                 [=](auto& P, auto& c) { add(dbl(P, 2, c), P, c); }});
    v.push_back({"6P", [&E](auto& P, auto& c) { doublek_plus_2q(2, P, P, E, c); },
                 [=](auto& P, auto& c) {
                     AffinePoint P2 = dbl(P, 1, c);
                     add(dbl(P2, 1, c), P2, c);
                 }});
    v.push_back({"6P_alt", [&E](auto& P, auto& c) { six_q_alt(P, E, c); },
                 [=](auto& P, auto& c) { dbl(add(dbl(P, 1, c), P, c), 1, c); }});
    v.push_back({"10P", [&E](auto& P, auto& c) { doublek_plus_2q(3, P, P, E, c); },
                 [=](auto& P, auto& c) {
                     AffinePoint P2 = dbl(P, 1, c);
                     add(dbl(P2, 2, c), P2, c);
                 }});
    v.push_back({"10P_alt", [&E](auto& P, auto& c) { ten_q_alt(P, E, c); },
                 [=](auto& P, auto& c) { dbl(add(dbl(P, 2, c), P, c), 1, c); }});
    v.push_back({"11P", [&E](auto& P, auto& c) { doublek_plus_mq(3, 3, P, P, E, c); },
                 [=](auto& P, auto& c) {
                     AffinePoint P2 = dbl(P, 1, c);
                     AffinePoint P3 = add(P2, P, c);
                     add(dbl(P2, 2, c), P3, c);
                 }});
    v.push_back({"14P",
                 [&E](auto& P, auto& c) {
                     doublek_plus_2q(4, P, point_negate(P, E, c), E, c);
                 },
                 [=, &E](auto& P, auto& c) {
                     AffinePoint P2 = dbl(P, 1, c);
                     add(dbl(P2, 3, c), point_negate(P2, E, c), c);
                 }});
    v.push_back({"18P", [&E](auto& P, auto& c) { doublek_plus_2q(4, P, P, E, c); },
                 [=](auto& P, auto& c) {
                     AffinePoint P2 = dbl(P, 1, c);
                     add(dbl(P2, 3, c), P2, c);
                 }});
    return v;
}

FieldElement random_montgomery_x(const MontgomeryCurve& C, Rng& rng) {
    OpCounter& c = OpCounter::discard();
    const PrimeModulus& f = C.field();
    for (;;) {
        FieldElement x = f.element(rng.below(f.p()));
        if (x.is_zero()) continue;
        FieldElement x2 = fp::sqr(x, c);
        FieldElement rhs = fp::add(fp::add(fp::mul(x2, x, c), fp::mul(C.A(), x2, c), c), x, c);
        // B = 1, so the point exists iff the right-hand side is a square.
        if (!rhs.is_zero() && fp::is_square(rhs, c)) return x;
    }
}

}  // namespace

std::string strip_wall_column(const std::string& csv) {
    std::istringstream in(csv);
    std::string line, out;
    while (std::getline(in, line)) {
        auto comma = line.rfind(',');
        out += (comma == std::string::npos ? line : line.substr(0, comma)) + "\n";
    }
    return out;
}

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
    return guarded_main(err, [&] {
        if (a.trials == 0) throw UsageError("--trials must be positive");
        if (a.out.empty()) throw UsageError("--out is required");
        CurveFile f = CurveFile::load(a.curve);
        CurveParams E = f.weierstrass();
        Rng rng(a.seed);
        const mpz_class k =
            E.order() ? rng.below(*E.order()) : rng.bits(static_cast<unsigned>(E.field().bit_length()));
        MontgomeryCurve M = MontgomeryCurve::create("bench-montgomery", E.field().p(), 6, 1);

        std::vector<CompositeSpec> specs = composite_specs(E);
        std::vector<BenchRow> rows;
        for (const auto& s : specs) {
            rows.push_back({s.name + "_composite", {}, 0});
            rows.push_back({s.name + "_primitive", {}, 0});
        }
        const std::vector<Algorithm> mul_algos = {Algorithm::Ref,          Algorithm::R2L,
                                                  Algorithm::R2LKnap,      Algorithm::L2RDoubleAdd,
                                                  Algorithm::L2RNafMix,    Algorithm::Base16};
        const std::size_t ladder_base = rows.size();
        for (Algorithm alg : mul_algos) rows.push_back({"mul_" + std::string(algorithm_name(alg)), {}, 0});
        rows.push_back({"kernel_three-point", {}, 0});
        rows.push_back({"kernel_r2l", {}, 0});
        rows.push_back({"kernel_table", {}, 0});
        rows.push_back({"mul_montgomery-xz", {}, 0});

        for (unsigned t = 0; t < a.trials; ++t) {
            const AffinePoint P = random_point(E, rng);
            const AffinePoint Q = random_point(E, rng);
            const FieldElement mx = random_montgomery_x(M, rng);
            for (std::size_t i = 0; i < specs.size(); ++i) {
                timed(rows[2 * i], [&](OpCounter& c) {
                    try {
                        specs[i].composite(P, c);
                    } catch (const DegenerateChain&) {
                    }
                });
                timed(rows[2 * i + 1], [&](OpCounter& c) { specs[i].primitive(P, c); });
            }
            std::size_t r = ladder_base;
            for (Algorithm alg : mul_algos)
                timed(rows[r++], [&](OpCounter& c) { multiply(alg, k, P, E, c); });
            timed(rows[r++], [&](OpCounter& c) {
                kernel_compute(k, P, Q, E, c, Algorithm::ThreePoint);
            });
            timed(rows[r++], [&](OpCounter& c) { kernel_compute(k, P, Q, E, c, Algorithm::R2L); });
            DoublesTable table = DoublesTable::build(Q, E.field().bit_length() + 1, E);
            LadderOptions opt;
            opt.table = &table;
            timed(rows[r++], [&](OpCounter& c) {
                kernel_compute(k, P, Q, E, c, Algorithm::R2L, opt);
            });
            timed(rows[r++], [&](OpCounter& c) { mont_ladder(k, mx, M, c); });
        }

        std::ofstream csv(a.out);
        if (!csv) throw UsageError("cannot write " + a.out);
        csv << "routine,mul,sqr,add_sub,inv,wall_ns_mean\n";
        for (const BenchRow& row : rows) {
            csv << row.name << "," << mean_str(row.total.mul, a.trials) << ","
                << mean_str(row.total.sqr, a.trials) << "," << mean_str(row.total.add_sub, a.trials)
                << "," << mean_str(row.total.inv, a.trials) << ","
                << static_cast<std::uint64_t>(row.wall_ns / a.trials + 0.5) << "\n";
        }
        csv.close();
        out << "wrote " << rows.size() << " rows to " << a.out << " (curve " << E.name()
            << ", trials " << a.trials << ", k = " << to_hex(k) << ")\n"
            << "note: counts are per-trial means; wall_ns_mean is informational only\n"
            << "note: mul_montgomery-xz runs on B y^2 = x^3 + 6 x^2 + x over the same p; the "
               "(A+2)/4 setup inversion is excluded\n"
            << "note: kernel_table excludes building the table of doubles of Q\n"
            << "note: neg counts are not in the CSV; ALU and parallel-level columns are not "
               "reported\n";
        return kOk;
    });
}

}  // namespace ecc::cli
