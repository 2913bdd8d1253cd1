#pragma once

#include "ecc/curve.hpp"

#include <stdexcept>
#include <string>

namespace ecc {

// A zero denominator appeared while building a chain. Raised before any
// inversion is spent.
class DegenerateChain : public std::runtime_error {
public:
    explicit DegenerateChain(std::string stage)
        : std::runtime_error("degenerate chain at stage " + stage), stage_(std::move(stage)) {}
    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

namespace chain {

// A point held as x = Nx / U^2, y = Ny / U^3 with U != 0.
// After every stage U_new = U_prev * q (or U_a * U_b * q for a sum), so each
// stage denominator divides the next and one inversion of the final U
// recovers the coordinates.
struct SlopeChain {
    FieldElement W;  // slope numerator of the last stage
    FieldElement U;
    FieldElement q;  // denominator cofactor of the last stage
    FieldElement Nx;
    FieldElement Ny;
    bool unit;  // U == 1 and no stage applied yet
};

// Affine seed; P must be finite.
SlopeChain seed(const AffinePoint& P, const CurveParams& E);

// [2]c. Degenerate when Ny == 0.
SlopeChain dbl(const SlopeChain& c, const CurveParams& E, OpCounter& ctr,
               const char* stage = "dbl");

// a + b for distinct x. Degenerate when x(a) == x(b).
SlopeChain add(const SlopeChain& a, const SlopeChain& b, const CurveParams& E, OpCounter& ctr,
               const char* stage = "add");

SlopeChain negate(const SlopeChain& c, OpCounter& ctr);

// One inversion (none for a unit chain).
AffinePoint finalize(const SlopeChain& c, OpCounter& ctr);

struct FinalPair {
    AffinePoint a;
    AffinePoint b;
};

// Both chains with a single inversion of U_a * U_b.
FinalPair finalize_pair(const SlopeChain& a, const SlopeChain& b, OpCounter& ctr);

// Test and debug aid; spends its arithmetic on OpCounter::discard().
AffinePoint to_affine_uncounted(const SlopeChain& c);

}  // namespace chain
}  // namespace ecc
