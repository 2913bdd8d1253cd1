#include "ecc/curve.hpp"

#include "ecc/hex.hpp"
#include "ecc/rng.hpp"

namespace ecc {

std::string AffinePoint::to_string() const {
    if (is_infinity()) return "infinity";
    return "(" + x().to_hex() + ", " + y().to_hex() + ")";
}

CurveParams CurveParams::create(std::string name, const mpz_class& p, const mpz_class& a,
                                const mpz_class& b, std::optional<mpz_class> order) {
    auto mod = PrimeModulus::make(p);
    FieldElement fa = mod->element(a);
    FieldElement fb = mod->element(b);
    OpCounter& c = OpCounter::discard();
    // 4a^3 + 27b^2 != 0
    FieldElement d = fp::add(fp::mul_small(fp::mul(fp::sqr(fa, c), fa, c), 4, c),
                             fp::mul_small(fp::sqr(fb, c), 27, c), c);
    if (d.is_zero()) throw std::invalid_argument("singular curve: 4a^3 + 27b^2 = 0");
    if (order) {
        if (sgn(*order) <= 0) throw std::invalid_argument("curve order must be positive");
        if (!validate_hasse(p, *order))
            throw std::invalid_argument("curve order violates the Hasse bound");
    }
    return CurveParams(std::move(name), std::move(mod), std::move(fa), std::move(fb),
                       std::move(order));
}

FieldElement CurveParams::rhs(const FieldElement& x, OpCounter& ctr) const {
    FieldElement x3 = fp::mul(fp::sqr(x, ctr), x, ctr);
    return fp::add(fp::add(x3, fp::mul(a_, x, ctr), ctr), b_, ctr);
}

AffinePoint CurveParams::point(const FieldElement& x, const FieldElement& y) const {
    if (&x.modulus() != mod_.get() || &y.modulus() != mod_.get()) throw ModulusMismatch();
    AffinePoint P = AffinePoint::trusted(x, y);
    if (!is_on_curve(P, *this))
        throw NotOnCurve("point (" + x.to_hex() + ", " + y.to_hex() + ") is not on " + name_);
    return P;
}

AffinePoint CurveParams::point_hex(std::string_view x, std::string_view y) const {
    return point(mod_->from_hex(x), mod_->from_hex(y));
}

bool is_on_curve(const AffinePoint& P, const CurveParams& E) {
    if (P.is_infinity()) return true;
    if (&P.x().modulus() != &E.field()) return false;
    OpCounter& c = OpCounter::discard();
    return fp::sqr(P.y(), c) == E.rhs(P.x(), c);
}

AffinePoint point_double(const AffinePoint& P, const CurveParams& E, OpCounter& ctr) {
    if (P.is_infinity() || P.y().is_zero()) return AffinePoint::infinity();
    const FieldElement& x = P.x();
    const FieldElement& y = P.y();
    FieldElement x2 = fp::sqr(x, ctr);
    FieldElement num = fp::add(fp::add(fp::twice(x2, ctr), x2, ctr), E.a(), ctr);
    FieldElement lambda = fp::mul(num, fp::inv(fp::twice(y, ctr), ctr), ctr);
    FieldElement xr = fp::sub(fp::sqr(lambda, ctr), fp::twice(x, ctr), ctr);
    FieldElement yr = fp::sub(fp::mul(lambda, fp::sub(x, xr, ctr), ctr), y, ctr);
    return AffinePoint::trusted(std::move(xr), std::move(yr));
}

AffinePoint point_add(const AffinePoint& P, const AffinePoint& Q, const CurveParams& E,
                      OpCounter& ctr) {
    if (P.is_infinity()) return Q;
    if (Q.is_infinity()) return P;
    if (P.x() == Q.x()) {
        if (P.y() == Q.y()) return point_double(P, E, ctr);
        return AffinePoint::infinity();
    }
    FieldElement lambda =
        fp::mul(fp::sub(Q.y(), P.y(), ctr), fp::inv(fp::sub(Q.x(), P.x(), ctr), ctr), ctr);
    FieldElement xr = fp::sub(fp::sub(fp::sqr(lambda, ctr), P.x(), ctr), Q.x(), ctr);
    FieldElement yr = fp::sub(fp::mul(lambda, fp::sub(P.x(), xr, ctr), ctr), P.y(), ctr);
    return AffinePoint::trusted(std::move(xr), std::move(yr));
}

AffinePoint point_negate(const AffinePoint& P, const CurveParams&, OpCounter& ctr) {
    if (P.is_infinity()) return P;
    return AffinePoint::trusted(P.x(), fp::neg(P.y(), ctr));
}

AffinePoint scalar_mul_reference(const mpz_class& k, const AffinePoint& P, const CurveParams& E,
                                 OpCounter& ctr) {
    if (sgn(k) < 0) throw std::invalid_argument("scalar_mul_reference: negative scalar");
    AffinePoint R = AffinePoint::infinity();
    if (sgn(k) == 0) return R;
    for (long i = static_cast<long>(mpz_sizeinbase(k.get_mpz_t(), 2)) - 1; i >= 0; --i) {
        R = point_double(R, E, ctr);
        if (mpz_tstbit(k.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) R = point_add(R, P, E, ctr);
    }
    return R;
}

Complement complement_scalar(const mpz_class& k, const CurveParams& E) {
    if (!E.order()) throw std::invalid_argument("complement_scalar: curve order unknown");
    const mpz_class& n = *E.order();
    if (sgn(k) < 0 || k > n) throw std::out_of_range("complement_scalar: k outside [0, #E]");
    mpz_class c = n - k;
    if (mpz_popcount(c.get_mpz_t()) < mpz_popcount(k.get_mpz_t())) return {c, true};
    return {k, false};
}

bool validate_hasse(const mpz_class& p, const mpz_class& order) {
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), p.get_mpz_t());
    mpz_class d = order - (p + 1);
    mpz_class ad = abs(d);
    return ad <= 2 * s + 1;
}

bool validate_hasse(const CurveParams& E) {
    if (!E.order()) return false;
    return validate_hasse(E.field().p(), *E.order());
}

std::optional<AffinePoint> lift_x(const CurveParams& E, const FieldElement& x) {
    OpCounter& c = OpCounter::discard();
    FieldElement y = E.field().zero();
    if (!fp::sqrt(E.rhs(x, c), y, c)) return std::nullopt;
    return AffinePoint::trusted(x, y);
}

AffinePoint random_point(const CurveParams& E, Rng& rng) {
    OpCounter& c = OpCounter::discard();
    for (;;) {
        FieldElement x = E.field().element(rng.below(E.field().p()));
        auto P = lift_x(E, x);
        if (!P) continue;
        if (rng.next() & 1) return point_negate(*P, E, c);
        return *P;
    }
}

}  // namespace ecc
