#pragma once

#include "ecc/field.hpp"

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace ecc {

class Rng;

struct NotOnCurve : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Infinity or a finite (x, y). Finite points built through CurveParams::point
// are checked against the curve equation; trusted() is for formula outputs
// whose correctness is established by construction.
class AffinePoint {
public:
    static AffinePoint infinity() { return AffinePoint(); }
    static AffinePoint trusted(FieldElement x, FieldElement y) {
        return AffinePoint(std::move(x), std::move(y));
    }

    bool is_infinity() const { return !xy_.has_value(); }
    const FieldElement& x() const { return finite().first; }
    const FieldElement& y() const { return finite().second; }

    friend bool operator==(const AffinePoint& a, const AffinePoint& b) { return a.xy_ == b.xy_; }
    friend bool operator!=(const AffinePoint& a, const AffinePoint& b) { return !(a == b); }

    // "infinity" or "(x, y)" in hex.
    std::string to_string() const;

private:
    AffinePoint() = default;
    AffinePoint(FieldElement x, FieldElement y) : xy_(std::in_place, std::move(x), std::move(y)) {}

    const std::pair<FieldElement, FieldElement>& finite() const {
        if (!xy_) throw std::logic_error("coordinate of the point at infinity requested");
        return *xy_;
    }

    std::optional<std::pair<FieldElement, FieldElement>> xy_;
};

// y^2 = x^3 + a x + b over F_p, nonsingular. order, when present, obeys the
// Hasse bound.
class CurveParams {
public:
    static CurveParams create(std::string name, const mpz_class& p, const mpz_class& a,
                              const mpz_class& b, std::optional<mpz_class> order = std::nullopt);

    const std::string& name() const { return name_; }
    const PrimeModulus& field() const { return *mod_; }
    const std::shared_ptr<const PrimeModulus>& field_ptr() const { return mod_; }
    const FieldElement& a() const { return a_; }
    const FieldElement& b() const { return b_; }
    const std::optional<mpz_class>& order() const { return order_; }

    // Throws NotOnCurve when (x, y) fails the curve equation.
    AffinePoint point(const FieldElement& x, const FieldElement& y) const;
    AffinePoint point_hex(std::string_view x, std::string_view y) const;

    // x^3 + a x + b.
    FieldElement rhs(const FieldElement& x, OpCounter& ctr) const;

private:
    CurveParams(std::string name, std::shared_ptr<const PrimeModulus> mod, FieldElement a,
                FieldElement b, std::optional<mpz_class> order)
        : name_(std::move(name)), mod_(std::move(mod)), a_(std::move(a)), b_(std::move(b)),
          order_(std::move(order)) {}

    std::string name_;
    std::shared_ptr<const PrimeModulus> mod_;
    FieldElement a_;
    FieldElement b_;
    std::optional<mpz_class> order_;
};

bool is_on_curve(const AffinePoint& P, const CurveParams& E);

// Total: handles identity, inverse and doubling cases internally.
AffinePoint point_add(const AffinePoint& P, const AffinePoint& Q, const CurveParams& E,
                      OpCounter& ctr);
AffinePoint point_double(const AffinePoint& P, const CurveParams& E, OpCounter& ctr);
AffinePoint point_negate(const AffinePoint& P, const CurveParams& E, OpCounter& ctr);

// Left-to-right double-and-add over point_add/point_double. The oracle for
// every other multiplication routine.
AffinePoint scalar_mul_reference(const mpz_class& k, const AffinePoint& P, const CurveParams& E,
                                 OpCounter& ctr);

struct Complement {
    mpz_class scalar;
    bool negate;
};

// [k]P = [#E - k](-P); picks the side with the smaller binary Hamming weight.
// Requires E.order() and 0 <= k <= #E.
Complement complement_scalar(const mpz_class& k, const CurveParams& E);

bool validate_hasse(const mpz_class& p, const mpz_class& order);
bool validate_hasse(const CurveParams& E);

// Uniform x, retried until x^3 + a x + b is a square; random sign of y.
AffinePoint random_point(const CurveParams& E, Rng& rng);

// Point with the given x and the square root chosen by fp::sqrt, if any.
std::optional<AffinePoint> lift_x(const CurveParams& E, const FieldElement& x);

}  // namespace ecc
