#pragma once

#include "ecc/curve.hpp"
#include "ecc/slope_chain.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace ecc {

struct CompositeResult {
    AffinePoint point;
    unsigned inversions_used = 0;
    OpCounter ops;  // deltas spent by this call, already absorbed into the caller's counter
    bool fell_back = false;
};

// Every composite below builds slope chains and spends exactly one inversion.
// Infinity inputs and vanishing denominators raise DegenerateChain before the
// inversion. Work done before the throw stays on the caller's counter.

CompositeResult double2(const AffinePoint& P, const CurveParams& E, OpCounter& ctr);  // [4]P
CompositeResult double3(const AffinePoint& P, const CurveParams& E, OpCounter& ctr);  // [8]P
CompositeResult double4(const AffinePoint& P, const CurveParams& E, OpCounter& ctr);  // [16]P
// [2^n]P for n in 1..4.
CompositeResult double_n(unsigned n, const AffinePoint& P, const CurveParams& E, OpCounter& ctr);
CompositeResult triple(const AffinePoint& P, const CurveParams& E, OpCounter& ctr);  // [3]P

// [2^n]Q + P, n in 1..4. P = Infinity reduces to double_n.
CompositeResult doublek_plus_point(unsigned n, const AffinePoint& Q, const AffinePoint& P,
                                   const CurveParams& E, OpCounter& ctr);

// [2^n]P + [2]Q, n in 2..4. With P == Q the doubling chain is shared.
CompositeResult doublek_plus_2q(unsigned n, const AffinePoint& P, const AffinePoint& Q,
                                const CurveParams& E, OpCounter& ctr);

// [2^n]P + [m]Q, n in 1..4, m in 2..31; the [m]Q chain follows the small
// multiple table. When m_out is set it receives [m]Q from the same inversion.
CompositeResult doublek_plus_mq(unsigned n, unsigned m, const AffinePoint& P,
                                const AffinePoint& Q, const CurveParams& E, OpCounter& ctr,
                                AffinePoint* m_out = nullptr);

CompositeResult six_q_alt(const AffinePoint& P, const CurveParams& E, OpCounter& ctr);  // 2(3P)
CompositeResult ten_q_alt(const AffinePoint& P, const CurveParams& E, OpCounter& ctr);  // 2(5P)

// [c]P for c in 1..31 through the recipe table. Infinity gives Infinity and
// c = 1 gives P, both without inversions. A degenerate chain is recomputed
// with scalar_mul_reference and flagged.
CompositeResult mul_small(unsigned c, const AffinePoint& P, const CurveParams& E, OpCounter& ctr);

enum class RecipeKind {
    Identity,      // P
    Double,        // [2^n]P, n in 1..4
    Triple,        // [3]P
    PlusPoint,     // [2^n]P + sign * P
    PlusTwice,     // [2^n]P + sign * [2]P
    PlusMultiple,  // [2^n]P + [m]P
};

struct SmallRecipe {
    RecipeKind kind;
    unsigned n;
    int sign;
    unsigned m;
    unsigned inversions;
};

// Index by c in 0..31; entry 0 is unused.
const std::array<SmallRecipe, 32>& small_multiple_table();

// Inversions spent by mul_small(c) on a non-degenerate input; 0 for c = 0.
unsigned small_multiple_cost(unsigned c);

// Slope chain for [c]Q per the table, without finalizing. Doubling stages are
// shared between the summands.
chain::SlopeChain small_multiple_chain(unsigned c, const AffinePoint& Q, const CurveParams& E,
                                       OpCounter& ctr);

// Test hook: while active, the named composite (e.g. "double4") perturbs its
// final x numerator so callers see a wrong point.
class FaultInjection {
public:
    explicit FaultInjection(std::string op);
    ~FaultInjection();
    FaultInjection(const FaultInjection&) = delete;
    FaultInjection& operator=(const FaultInjection&) = delete;

    static bool active(std::string_view op);

private:
    std::optional<std::string> previous_;
};

}  // namespace ecc
