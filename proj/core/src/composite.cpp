#include "ecc/composite.hpp"

#include <stdexcept>

namespace ecc {

using chain::SlopeChain;

namespace {

thread_local std::optional<std::string> g_fault;

// Doubling stages D[i] = [2^i]Q built on demand and shared by every summand.
class DoublingLadder {
public:
    DoublingLadder(const AffinePoint& Q, const CurveParams& E, OpCounter& ctr)
        : E_(E), ctr_(ctr) {
        stages_[0] = chain::seed(Q, E);
    }

    const SlopeChain& at(unsigned i) {
        if (i > 4) throw std::out_of_range("doubling stage beyond 2^4");
        while (built_ < i) {
            stages_[built_ + 1] = chain::dbl(*stages_[built_], E_, ctr_, kStageNames[built_ + 1]);
            ++built_;
        }
        return *stages_[i];
    }

private:
    static constexpr const char* kStageNames[5] = {"seed", "dbl1", "dbl2", "dbl3", "dbl4"};
    const CurveParams& E_;
    OpCounter& ctr_;
    std::array<std::optional<SlopeChain>, 5> stages_;
    unsigned built_ = 0;
};

constexpr SmallRecipe R(RecipeKind k, unsigned n = 0, int s = 0, unsigned m = 0,
                        unsigned inv = 1) {
    return SmallRecipe{k, n, s, m, inv};
}

constexpr std::array<SmallRecipe, 32> kTable = {
    R(RecipeKind::Identity, 0, 0, 0, 0),      // 0 unused
    R(RecipeKind::Identity, 0, 0, 0, 0),      // 1
    R(RecipeKind::Double, 1),                 // 2
    R(RecipeKind::Triple),                    // 3
    R(RecipeKind::Double, 2),                 // 4
    R(RecipeKind::PlusPoint, 2, +1),          // 5  = 4 + 1
    R(RecipeKind::PlusTwice, 2, +1),          // 6  = 4 + 2
    R(RecipeKind::PlusPoint, 3, -1),          // 7  = 8 - 1
    R(RecipeKind::Double, 3),                 // 8
    R(RecipeKind::PlusPoint, 3, +1),          // 9  = 8 + 1
    R(RecipeKind::PlusTwice, 3, +1),          // 10 = 8 + 2
    R(RecipeKind::PlusMultiple, 3, +1, 3),    // 11 = 8 + 3
    R(RecipeKind::PlusMultiple, 3, +1, 4),    // 12 = 8 + 4
    R(RecipeKind::PlusMultiple, 3, +1, 5),    // 13 = 8 + 5
    R(RecipeKind::PlusTwice, 4, -1),          // 14 = 16 - 2
    R(RecipeKind::PlusPoint, 4, -1),          // 15 = 16 - 1
    R(RecipeKind::Double, 4),                 // 16
    R(RecipeKind::PlusPoint, 4, +1),          // 17 = 16 + 1
    R(RecipeKind::PlusTwice, 4, +1),          // 18 = 16 + 2
    R(RecipeKind::PlusMultiple, 4, +1, 3),    // 19
    R(RecipeKind::PlusMultiple, 4, +1, 4),    // 20
    R(RecipeKind::PlusMultiple, 4, +1, 5),    // 21
    R(RecipeKind::PlusMultiple, 4, +1, 6),    // 22
    R(RecipeKind::PlusMultiple, 4, +1, 7),    // 23
    R(RecipeKind::PlusMultiple, 4, +1, 8),    // 24
    R(RecipeKind::PlusMultiple, 4, +1, 9),    // 25
    R(RecipeKind::PlusMultiple, 4, +1, 10),   // 26
    R(RecipeKind::PlusMultiple, 4, +1, 11),   // 27
    R(RecipeKind::PlusMultiple, 4, +1, 12),   // 28
    R(RecipeKind::PlusMultiple, 4, +1, 13),   // 29
    R(RecipeKind::PlusMultiple, 4, +1, 14),   // 30
    R(RecipeKind::PlusMultiple, 4, +1, 15),   // 31
};

SlopeChain chain_for(unsigned c, DoublingLadder& L, const CurveParams& E, OpCounter& ctr) {
    const SmallRecipe& r = kTable.at(c);
    switch (r.kind) {
        case RecipeKind::Identity:
            return L.at(0);
        case RecipeKind::Double:
            return L.at(r.n);
        case RecipeKind::Triple:
            return chain::add(L.at(1), L.at(0), E, ctr, "add3");
        case RecipeKind::PlusPoint: {
            SlopeChain p = r.sign > 0 ? L.at(0) : chain::negate(L.at(0), ctr);
            return chain::add(L.at(r.n), p, E, ctr, "add");
        }
        case RecipeKind::PlusTwice: {
            SlopeChain t = r.sign > 0 ? L.at(1) : chain::negate(L.at(1), ctr);
            return chain::add(L.at(r.n), t, E, ctr, "add");
        }
        case RecipeKind::PlusMultiple: {
            SlopeChain m = chain_for(r.m, L, E, ctr);
            return chain::add(L.at(r.n), m, E, ctr, "add");
        }
    }
    throw std::logic_error("unreachable recipe kind");
}

void maybe_inject(const char* op, SlopeChain& c, const CurveParams& E) {
    if (g_fault && *g_fault == op)
        c.Nx = fp::add(c.Nx, E.field().one(), OpCounter::discard());
}

AffinePoint finish(const char* op, SlopeChain c, const CurveParams& E, OpCounter& ctr) {
    maybe_inject(op, c, E);
    return chain::finalize(c, ctr);
}

// Runs body on a private counter, then folds it into ctr even on throw.
template <class F>
CompositeResult run(OpCounter& ctr, F&& body) {
    OpCounter local;
    struct Absorb {
        OpCounter& dst;
        const OpCounter& src;
        ~Absorb() { dst.absorb(src); }
    } guard{ctr, local};
    CompositeResult r{body(local), 0, {}, false};
    r.ops = local;
    r.inversions_used = static_cast<unsigned>(local.inv);
    return r;
}

void check_n(unsigned n, unsigned lo, unsigned hi, const char* op) {
    if (n < lo || n > hi)
        throw std::out_of_range(std::string(op) + ": doubling count out of range");
}

bool is_negation(const AffinePoint& P, const AffinePoint& Q) {
    return !P.is_infinity() && !Q.is_infinity() && P.x() == Q.x() && P.y() != Q.y();
}

const char* double_name(unsigned n) {
    static const char* names[] = {"", "double1", "double2", "double3", "double4"};
    return names[n];
}

}  // namespace

const std::array<SmallRecipe, 32>& small_multiple_table() { return kTable; }

unsigned small_multiple_cost(unsigned c) {
    if (c == 0) return 0;
    if (c > 31) throw std::out_of_range("small multiple beyond 31");
    return kTable[c].inversions;
}

chain::SlopeChain small_multiple_chain(unsigned c, const AffinePoint& Q, const CurveParams& E,
                                       OpCounter& ctr) {
    if (c == 0 || c > 31) throw std::out_of_range("small multiple must be in 1..31");
    DoublingLadder L(Q, E, ctr);
    return chain_for(c, L, E, ctr);
}

CompositeResult double_n(unsigned n, const AffinePoint& P, const CurveParams& E, OpCounter& ctr) {
    check_n(n, 1, 4, "double_n");
    return run(ctr, [&](OpCounter& c) {
        DoublingLadder L(P, E, c);
        return finish(double_name(n), L.at(n), E, c);
    });
}

CompositeResult double2(const AffinePoint& P, const CurveParams& E, OpCounter& ctr) {
    return double_n(2, P, E, ctr);
}
CompositeResult double3(const AffinePoint& P, const CurveParams& E, OpCounter& ctr) {
    return double_n(3, P, E, ctr);
}
CompositeResult double4(const AffinePoint& P, const CurveParams& E, OpCounter& ctr) {
    return double_n(4, P, E, ctr);
}

CompositeResult triple(const AffinePoint& P, const CurveParams& E, OpCounter& ctr) {
    return run(ctr, [&](OpCounter& c) {
        DoublingLadder L(P, E, c);
        return finish("triple", chain::add(L.at(1), L.at(0), E, c, "add3"), E, c);
    });
}

CompositeResult doublek_plus_point(unsigned n, const AffinePoint& Q, const AffinePoint& P,
                                   const CurveParams& E, OpCounter& ctr) {
    check_n(n, 1, 4, "doublek_plus_point");
    if (P.is_infinity()) return double_n(n, Q, E, ctr);
    return run(ctr, [&](OpCounter& c) {
        DoublingLadder L(Q, E, c);
        SlopeChain s = chain::add(L.at(n), chain::seed(P, E), E, c, "add");
        return finish("doublek_plus_point", std::move(s), E, c);
    });
}

CompositeResult doublek_plus_2q(unsigned n, const AffinePoint& P, const AffinePoint& Q,
                                const CurveParams& E, OpCounter& ctr) {
    check_n(n, 2, 4, "doublek_plus_2q");
    return run(ctr, [&](OpCounter& c) {
        DoublingLadder LP(P, E, c);
        SlopeChain big = LP.at(n);
        SlopeChain two = [&] {
            if (Q == P) return LP.at(1);
            if (is_negation(P, Q)) return chain::negate(LP.at(1), c);
            DoublingLadder LQ(Q, E, c);
            return LQ.at(1);
        }();
        return finish("doublek_plus_2q", chain::add(big, two, E, c, "add"), E, c);
    });
}

CompositeResult doublek_plus_mq(unsigned n, unsigned m, const AffinePoint& P,
                                const AffinePoint& Q, const CurveParams& E, OpCounter& ctr,
                                AffinePoint* m_out) {
    check_n(n, 1, 4, "doublek_plus_mq");
    if (m < 2 || m > 31) throw std::out_of_range("doublek_plus_mq: m must be in 2..31");
    return run(ctr, [&](OpCounter& c) {
        DoublingLadder LP(P, E, c);
        std::optional<DoublingLadder> LQ;
        if (Q != P) LQ.emplace(Q, E, c);
        SlopeChain mq = chain_for(m, LQ ? *LQ : LP, E, c);
        SlopeChain s = chain::add(LP.at(n), mq, E, c, "add");
        maybe_inject("doublek_plus_mq", s, E);
        if (m_out == nullptr) return chain::finalize(s, c);
        chain::FinalPair fp2 = chain::finalize_pair(s, mq, c);
        *m_out = fp2.b;
        return fp2.a;
    });
}

CompositeResult six_q_alt(const AffinePoint& P, const CurveParams& E, OpCounter& ctr) {
    return run(ctr, [&](OpCounter& c) {
        DoublingLadder L(P, E, c);
        SlopeChain t = chain::add(L.at(1), L.at(0), E, c, "add3");
        return finish("six_q_alt", chain::dbl(t, E, c, "dbl6"), E, c);
    });
}

CompositeResult ten_q_alt(const AffinePoint& P, const CurveParams& E, OpCounter& ctr) {
    return run(ctr, [&](OpCounter& c) {
        DoublingLadder L(P, E, c);
        SlopeChain f = chain::add(L.at(2), L.at(0), E, c, "add5");
        return finish("ten_q_alt", chain::dbl(f, E, c, "dbl10"), E, c);
    });
}

CompositeResult mul_small(unsigned c, const AffinePoint& P, const CurveParams& E, OpCounter& ctr) {
    if (c == 0 || c > 31) throw std::out_of_range("mul_small: c must be in 1..31");
    if (P.is_infinity() || c == 1) return CompositeResult{P, 0, {}, false};
    const OpCounter before = ctr;
    const SmallRecipe& r = kTable[c];
    auto dispatch = [&]() -> CompositeResult {
        switch (r.kind) {
            case RecipeKind::Double:
                return double_n(r.n, P, E, ctr);
            case RecipeKind::Triple:
                return triple(P, E, ctr);
            case RecipeKind::PlusPoint:
                return doublek_plus_point(r.n, P, r.sign > 0 ? P : point_negate(P, E, ctr), E,
                                          ctr);
            case RecipeKind::PlusTwice:
                return doublek_plus_2q(r.n, P, r.sign > 0 ? P : point_negate(P, E, ctr), E, ctr);
            case RecipeKind::PlusMultiple:
                return doublek_plus_mq(r.n, r.m, P, P, E, ctr);
            case RecipeKind::Identity:
                break;
        }
        throw std::logic_error("unreachable recipe kind");
    };
    try {
        CompositeResult res = dispatch();
        // Include the sign flip spent outside the composite.
        res.ops = ctr - before;
        return res;
    } catch (const DegenerateChain&) {
        AffinePoint R = scalar_mul_reference(mpz_class(c), P, E, ctr);
        OpCounter d = ctr - before;
        return CompositeResult{std::move(R), static_cast<unsigned>(d.inv), d, true};
    }
}

FaultInjection::FaultInjection(std::string op) : previous_(g_fault) { g_fault = std::move(op); }
FaultInjection::~FaultInjection() { g_fault = previous_; }

bool FaultInjection::active(std::string_view op) { return g_fault && *g_fault == op; }

}  // namespace ecc
