#include "ecc/ladders.hpp"

#include "ecc/composite.hpp"

#include <cstdlib>
#include <stdexcept>

namespace ecc {

std::string_view step_kind_name(StepKind k) {
    switch (k) {
        case StepKind::Lead: return "lead";
        case StepKind::Shift: return "shift";
        case StepKind::Promote: return "promote";
        case StepKind::Double: return "double";
        case StepKind::Accumulate: return "accumulate";
        case StepKind::KernelAdd: return "kernel_add";
    }
    return "unknown";
}

std::string LadderTrace::to_text() const {
    std::string s;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const TraceStep& t = steps[i];
        s += "step " + std::to_string(i) + ": kind=" + std::string(step_kind_name(t.kind)) +
             " block=" + std::to_string(t.block) + " base=" + std::to_string(t.base) +
             " inv=" + std::to_string(t.inv) + "\n";
    }
    return s;
}

std::uint64_t LadderTrace::step_inversions() const {
    std::uint64_t s = 0;
    for (const TraceStep& t : steps) s += t.inv;
    return s;
}

mpz_class replay_trace(const LadderTrace& t) {
    mpz_class acc = 0, weight = 1;
    for (const TraceStep& s : t.steps) {
        mpz_class block(static_cast<long>(s.block));
        mpz_class base(static_cast<unsigned long>(s.base));
        switch (s.kind) {
            case StepKind::Lead: acc = block; break;
            case StepKind::Shift: acc *= base; break;
            case StepKind::Promote: acc = acc * base + block; break;
            case StepKind::Double: weight *= base; break;
            case StepKind::Accumulate: acc += block * weight; break;
            case StepKind::KernelAdd: break;
        }
    }
    return acc;
}

std::string_view algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::Ref: return "ref";
        case Algorithm::R2L: return "r2l";
        case Algorithm::R2LKnap: return "r2l-knap";
        case Algorithm::L2RDoubleAdd: return "l2r-da";
        case Algorithm::L2RNafMix: return "l2r-naf";
        case Algorithm::Base16: return "base16";
        case Algorithm::ThreePoint: return "three-point";
    }
    return "unknown";
}

const std::vector<Algorithm>& all_algorithms() {
    static const std::vector<Algorithm> all = {
        Algorithm::Ref,       Algorithm::R2L,    Algorithm::R2LKnap,   Algorithm::L2RDoubleAdd,
        Algorithm::L2RNafMix, Algorithm::Base16, Algorithm::ThreePoint};
    return all;
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
    for (Algorithm a : all_algorithms())
        if (algorithm_name(a) == name) return a;
    return std::nullopt;
}

DoublesTable DoublesTable::build(const AffinePoint& Q, std::size_t bits, const CurveParams& E) {
    DoublesTable t;
    t.doubles.reserve(bits);
    AffinePoint H = Q;
    for (std::size_t i = 0; i < bits; ++i) {
        t.doubles.push_back(H);
        H = point_double(H, E, OpCounter::discard());
    }
    return t;
}

namespace {

std::size_t bitlen(const mpz_class& k) {
    return sgn(k) == 0 ? 0 : mpz_sizeinbase(k.get_mpz_t(), 2);
}

bool bit(const mpz_class& k, std::size_t i) { return mpz_tstbit(k.get_mpz_t(), i) != 0; }

void require_scalar(const mpz_class& k) {
    if (sgn(k) < 0) throw std::invalid_argument("negative scalar");
}

AffinePoint to_point(AffinePoint p, bool&) { return p; }
AffinePoint to_point(CompositeResult r, bool& fell_back) {
    fell_back = fell_back || r.fell_back;
    return std::move(r.point);
}

AffinePoint double_times(AffinePoint H, unsigned l, const CurveParams& E, OpCounter& ctr) {
    for (unsigned i = 0; i < l; ++i) H = point_double(H, E, ctr);
    return H;
}

// One ladder invocation: owns step recording and degenerate fallback.
class Run {
public:
    Run(std::string_view algo, const CurveParams& E, OpCounter& ctr, const LadderOptions& opt)
        : E(E), ctr(ctr), opt(opt), start_(ctr) {
        if (opt.trace) {
            opt.trace->algorithm = std::string(algo);
            opt.trace->steps.clear();
            opt.trace->total = OpCounter{};
        }
    }

    void close() {
        if (opt.trace) opt.trace->total = ctr - start_;
    }

    // A composite step; DegenerateChain (real or forced) reruns it with slow.
    template <class Fast, class Slow>
    AffinePoint guarded(StepKind kind, std::int64_t block, std::uint64_t base, Fast&& fast,
                        Slow&& slow) {
        const std::uint64_t inv0 = ctr.inv;
        const std::size_t idx = guarded_index_++;
        bool fell_back = false;
        std::optional<AffinePoint> out;
        try {
            if (opt.force_degenerate_step && *opt.force_degenerate_step == idx)
                throw DegenerateChain("forced");
            out = to_point(fast(ctr), fell_back);
        } catch (const DegenerateChain&) {
            fell_back = true;
            out = slow(ctr);
        }
        record(kind, block, base, ctr.inv - inv0, false, fell_back);
        return std::move(*out);
    }

    template <class F>
    AffinePoint plain(StepKind kind, std::int64_t block, std::uint64_t base, F&& f,
                      bool overlap = false) {
        const std::uint64_t inv0 = ctr.inv;
        AffinePoint out = f(ctr);
        record(kind, block, base, ctr.inv - inv0, overlap, false);
        return out;
    }

    void record(StepKind kind, std::int64_t block, std::uint64_t base, std::uint64_t inv,
                bool overlap, bool fell_back) {
        if (opt.trace) opt.trace->steps.push_back({kind, block, base, inv, overlap, fell_back});
    }

    const CurveParams& E;
    OpCounter& ctr;
    const LadderOptions& opt;

private:
    OpCounter start_;
    std::size_t guarded_index_ = 0;
};

AffinePoint knapsack_impl(Run& run, AffinePoint H, unsigned l, StepKind kind) {
    const CurveParams& E = run.E;
    while (l > 0) {
        const unsigned c = l < 4 ? l : 4;
        H = run.guarded(
            kind, c, 1u << c,
            [&](OpCounter& ctr) -> AffinePoint {
                if (c == 1) return point_double(H, E, ctr);
                return double_n(c, H, E, ctr).point;
            },
            [&](OpCounter& ctr) { return double_times(H, c, E, ctr); });
        l -= c;
    }
    return H;
}

AffinePoint ref_impl(Run& run, const mpz_class& k, const AffinePoint& P) {
    AffinePoint R = AffinePoint::infinity();
    for (std::size_t i = bitlen(k); i-- > 0;) {
        const bool b = bit(k, i);
        R = run.plain(StepKind::Promote, b ? 1 : 0, 2, [&](OpCounter& ctr) {
            AffinePoint T = point_double(R, run.E, ctr);
            return b ? point_add(T, P, run.E, ctr) : T;
        });
    }
    return R;
}

AffinePoint three_point_impl(Run& run, const mpz_class& k, const AffinePoint& P,
                             const AffinePoint& Q) {
    const CurveParams& E = run.E;
    AffinePoint A = AffinePoint::infinity(), B = Q, C = P;
    for (std::size_t i = bitlen(k); i-- > 0;) {
        const bool b = bit(k, i);
        run.plain(StepKind::Promote, b ? 1 : 0, 2, [&](OpCounter& ctr) {
            if (b) {
                AffinePoint a2 = point_add(A, B, E, ctr);
                AffinePoint b2 = point_double(B, E, ctr);
                AffinePoint c2 = point_add(B, C, E, ctr);
                A = std::move(a2), B = std::move(b2), C = std::move(c2);
            } else {
                AffinePoint a2 = point_double(A, E, ctr);
                AffinePoint b2 = point_add(A, B, E, ctr);
                AffinePoint c2 = point_add(A, C, E, ctr);
                A = std::move(a2), B = std::move(b2), C = std::move(c2);
            }
            return C;
        });
    }
    return C;
}

// R starts at R0 and gains [2^j]P for every set bit j; H tracks [2^j]P.
AffinePoint r2l_impl(Run& run, const mpz_class& k, const AffinePoint& P, AffinePoint R,
                     bool knapsack) {
    const CurveParams& E = run.E;
    AffinePoint H = P;
    const std::size_t n = bitlen(k);
    std::size_t hpos = 0;
    std::size_t i = 0;
    while (i < n) {
        if (!bit(k, i)) {
            ++i;
            continue;
        }
        const auto gap = static_cast<unsigned>(i - hpos);
        if (knapsack) {
            H = knapsack_impl(run, H, gap, StepKind::Double);
        } else {
            // Blocks of at most four, bounded by the distance to bit i.
            unsigned left = gap;
            while (left > 0) {
                const unsigned l = left < 4 ? left : 4;
                H = run.guarded(
                    StepKind::Double, l, 1u << l,
                    [&](OpCounter& ctr) -> AffinePoint {
                        if (l == 1) return point_double(H, E, ctr);
                        return double_n(l, H, E, ctr).point;
                    },
                    [&](OpCounter& ctr) { return double_times(H, l, E, ctr); });
                left -= l;
            }
        }
        hpos = i;
        R = run.plain(
            StepKind::Accumulate, 1, 1, [&](OpCounter& ctr) { return point_add(R, H, E, ctr); },
            true);
        ++i;
    }
    return R;
}

AffinePoint l2r_da_impl(Run& run, const mpz_class& k, const AffinePoint& P) {
    const CurveParams& E = run.E;
    const std::size_t n = bitlen(k);
    if (n == 0) return AffinePoint::infinity();
    AffinePoint D = run.plain(StepKind::Lead, 1, 1, [&](OpCounter&) { return P; });
    std::size_t prev = n - 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        if (!bit(k, i)) continue;
        auto l = static_cast<unsigned>(prev - i);
        if (l > 4) {
            D = knapsack_impl(run, D, l - 4, StepKind::Shift);
            l = 4;
        }
        D = run.guarded(
            StepKind::Promote, 1, 1u << l,
            [&](OpCounter& ctr) { return doublek_plus_point(l, D, P, E, ctr); },
            [&](OpCounter& ctr) { return point_add(double_times(D, l, E, ctr), P, E, ctr); });
        prev = i;
    }
    if (prev > 0) D = knapsack_impl(run, D, static_cast<unsigned>(prev), StepKind::Shift);
    return D;
}

AffinePoint signed_point(const AffinePoint& M, bool neg, const CurveParams& E, OpCounter& ctr) {
    return neg ? point_negate(M, E, ctr) : M;
}

const AffinePoint& memo_get(MultipleMemo& memo, unsigned a, const AffinePoint& P,
                            const CurveParams& E, OpCounter& ctr) {
    auto it = memo.find(a);
    if (it != memo.end()) return it->second;
    return memo.emplace(a, scalar_mul_reference(mpz_class(a), P, E, ctr)).first->second;
}

AffinePoint rpa_impl(Run& run, AffinePoint D, std::int32_t m, unsigned n, const AffinePoint& P,
                     MultipleMemo& memo) {
    const CurveParams& E = run.E;
    if (m == 0) return knapsack_impl(run, D, n, StepKind::Shift);
    if (n == 0) throw std::invalid_argument("radix promotion needs a base of at least 2");
    if (n > 4) {
        D = knapsack_impl(run, D, n - 4, StepKind::Shift);
        n = 4;
    }
    const auto a = static_cast<unsigned>(std::abs(m));
    if (a > 31) throw std::out_of_range("digit magnitude above 31");
    const bool neg = m < 0;
    if (a == 1) memo.emplace(1, P);
    return run.guarded(
        StepKind::Promote, m, 1u << n,
        [&](OpCounter& ctr) -> CompositeResult {
            auto it = memo.find(a);
            if (it != memo.end())
                return doublek_plus_point(n, D, signed_point(it->second, neg, E, ctr), E, ctr);
            AffinePoint mo = AffinePoint::infinity();
            CompositeResult r =
                doublek_plus_mq(n, a, D, signed_point(P, neg, E, ctr), E, ctr, &mo);
            memo.emplace(a, signed_point(mo, neg, E, ctr));
            return r;
        },
        [&](OpCounter& ctr) {
            AffinePoint T = double_times(D, n, E, ctr);
            return point_add(T, signed_point(memo_get(memo, a, P, E, ctr), neg, E, ctr), E, ctr);
        });
}

AffinePoint eval_repr_impl(Run& run, const MixedBaseRepr& r, const AffinePoint& P,
                           MultipleMemo& memo) {
    const CurveParams& E = run.E;
    std::size_t top = r.digits.size();
    while (top > 0 && r.digits[top - 1] == 0) --top;
    if (top == 0) return AffinePoint::infinity();
    const std::int32_t m = r.digits[top - 1];
    const auto a = static_cast<unsigned>(std::abs(m));
    AffinePoint D = run.guarded(
        StepKind::Lead, m, 1,
        [&](OpCounter& ctr) {
            CompositeResult c = mul_small(a, P, E, ctr);
            memo.emplace(a, c.point);
            c.point = signed_point(c.point, m < 0, E, ctr);
            return c;
        },
        [&](OpCounter& ctr) { return signed_point(memo_get(memo, a, P, E, ctr), m < 0, E, ctr); });
    unsigned shift = 0;
    for (std::size_t i = top - 1; i-- > 0;) {
        shift += base_log2(r.bases[i]);
        if (r.digits[i] == 0) continue;
        D = rpa_impl(run, D, r.digits[i], shift, P, memo);
        shift = 0;
    }
    if (shift > 0) D = knapsack_impl(run, D, shift, StepKind::Shift);
    return D;
}

AffinePoint dispatch(Run& run, Algorithm a, const mpz_class& k, const AffinePoint& P) {
    switch (a) {
        case Algorithm::Ref: return ref_impl(run, k, P);
        case Algorithm::R2L: return r2l_impl(run, k, P, AffinePoint::infinity(), false);
        case Algorithm::R2LKnap: return r2l_impl(run, k, P, AffinePoint::infinity(), true);
        case Algorithm::L2RDoubleAdd: return l2r_da_impl(run, k, P);
        case Algorithm::L2RNafMix: {
            MultipleMemo memo;
            return eval_repr_impl(run, mixed_naf_knapsack(k), P, memo);
        }
        case Algorithm::Base16: {
            MultipleMemo memo;
            return eval_repr_impl(run, to_base16(k), P, memo);
        }
        case Algorithm::ThreePoint: return three_point_impl(run, k, AffinePoint::infinity(), P);
    }
    throw std::logic_error("unknown algorithm");
}

template <class F>
AffinePoint with_run(std::string_view name, const CurveParams& E, OpCounter& ctr,
                     const LadderOptions& opt, F&& f) {
    Run run(name, E, ctr, opt);
    AffinePoint R = f(run);
    run.close();
    return R;
}

}  // namespace

AffinePoint three_point_ladder(const mpz_class& k, const AffinePoint& P, const AffinePoint& Q,
                               const CurveParams& E, OpCounter& ctr, const LadderOptions& opt) {
    require_scalar(k);
    return with_run("three-point", E, ctr, opt,
                    [&](Run& run) { return three_point_impl(run, k, P, Q); });
}

AffinePoint r2l_multiply(const mpz_class& k, const AffinePoint& P, const CurveParams& E,
                         OpCounter& ctr, const LadderOptions& opt) {
    require_scalar(k);
    return with_run("r2l", E, ctr, opt, [&](Run& run) {
        return r2l_impl(run, k, P, AffinePoint::infinity(), false);
    });
}

AffinePoint r2l_knapsack(const mpz_class& k, const AffinePoint& P, const CurveParams& E,
                         OpCounter& ctr, const LadderOptions& opt) {
    require_scalar(k);
    return with_run("r2l-knap", E, ctr, opt, [&](Run& run) {
        return r2l_impl(run, k, P, AffinePoint::infinity(), true);
    });
}

AffinePoint double_knapsack(const AffinePoint& H, unsigned l, const CurveParams& E,
                            OpCounter& ctr, const LadderOptions& opt) {
    return with_run("double_knapsack", E, ctr, opt,
                    [&](Run& run) { return knapsack_impl(run, H, l, StepKind::Shift); });
}

AffinePoint l2r_double_add(const mpz_class& k, const AffinePoint& P, const CurveParams& E,
                           OpCounter& ctr, const LadderOptions& opt) {
    require_scalar(k);
    return with_run("l2r-da", E, ctr, opt, [&](Run& run) { return l2r_da_impl(run, k, P); });
}

AffinePoint l2r_naf_mix(const mpz_class& k, const AffinePoint& P, const CurveParams& E,
                        OpCounter& ctr, const LadderOptions& opt) {
    require_scalar(k);
    return with_run("l2r-naf", E, ctr, opt,
                    [&](Run& run) { return dispatch(run, Algorithm::L2RNafMix, k, P); });
}

AffinePoint radix_promote_and_add(const AffinePoint& D, std::int32_t m, std::uint32_t B,
                                  const AffinePoint& P, MultipleMemo& memo, const CurveParams& E,
                                  OpCounter& ctr, const LadderOptions& opt) {
    const unsigned n = base_log2(B);
    return with_run("radix_promote_and_add", E, ctr, opt, [&](Run& run) {
        if (D.is_infinity()) {
            const auto a = static_cast<unsigned>(std::abs(m));
            if (a == 0) return AffinePoint::infinity();
            return run.plain(StepKind::Lead, m, 1, [&](OpCounter& c) {
                auto it = memo.find(a);
                if (it == memo.end()) it = memo.emplace(a, mul_small(a, P, E, c).point).first;
                return signed_point(it->second, m < 0, E, c);
            });
        }
        return rpa_impl(run, D, m, n, P, memo);
    });
}

AffinePoint base16_horner(const mpz_class& k, const AffinePoint& P, const CurveParams& E,
                          OpCounter& ctr, const LadderOptions& opt) {
    require_scalar(k);
    return with_run("base16", E, ctr, opt,
                    [&](Run& run) { return dispatch(run, Algorithm::Base16, k, P); });
}

AffinePoint multiply(Algorithm a, const mpz_class& k, const AffinePoint& P, const CurveParams& E,
                     OpCounter& ctr, const LadderOptions& opt) {
    require_scalar(k);
    return with_run(algorithm_name(a), E, ctr, opt,
                    [&](Run& run) { return dispatch(run, a, k, P); });
}

AffinePoint kernel_compute(const mpz_class& k, const AffinePoint& P, const AffinePoint& Q,
                           const CurveParams& E, OpCounter& ctr, Algorithm a,
                           const LadderOptions& opt) {
    require_scalar(k);
    const std::string name =
        "kernel_" + std::string(opt.table ? "table" : algorithm_name(a));
    return with_run(name, E, ctr, opt, [&](Run& run) -> AffinePoint {
        if (opt.table) {
            const std::size_t n = bitlen(k);
            if (opt.table->doubles.size() < n)
                throw std::invalid_argument("doubles table shorter than the scalar");
            AffinePoint R = P;
            std::size_t wpos = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (!bit(k, i)) continue;
                // Table lookups stand in for the doublings at no cost.
                for (std::size_t gap = i - wpos; gap > 0;) {
                    const unsigned c = gap < 4 ? static_cast<unsigned>(gap) : 4;
                    run.record(StepKind::Double, c, 1u << c, 0, false, false);
                    gap -= c;
                }
                wpos = i;
                R = run.plain(
                    StepKind::Accumulate, 1, 1,
                    [&](OpCounter& c) { return point_add(R, opt.table->doubles[i], E, c); }, true);
            }
            return R;
        }
        switch (a) {
            case Algorithm::ThreePoint: return three_point_impl(run, k, P, Q);
            case Algorithm::R2L: return r2l_impl(run, k, Q, P, false);
            case Algorithm::R2LKnap: return r2l_impl(run, k, Q, P, true);
            default: {
                AffinePoint R = dispatch(run, a, k, Q);
                return run.plain(StepKind::KernelAdd, 0, 0,
                                 [&](OpCounter& c) { return point_add(P, R, E, c); });
            }
        }
    });
}

}  // namespace ecc
