#include "ecc/montgomery.hpp"

#include <stdexcept>

namespace ecc {

MontgomeryCurve MontgomeryCurve::create(std::string name, const mpz_class& p, const mpz_class& A,
                                        const mpz_class& B) {
    auto mod = PrimeModulus::make(p);
    FieldElement fA = mod->element(A);
    FieldElement fB = mod->element(B);
    if (fB.is_zero()) throw std::invalid_argument("Montgomery curve needs B != 0");
    OpCounter& c = OpCounter::discard();
    if (fp::sqr(fA, c) == mod->element(4))
        throw std::invalid_argument("Montgomery curve needs A^2 != 4");
    FieldElement a24 = fp::mul(fp::add(fA, mod->element(2), c), fp::inv(mod->element(4), c), c);
    return MontgomeryCurve(std::move(name), std::move(mod), std::move(fA), std::move(fB),
                           std::move(a24));
}

XZPoint xadd(const XZPoint& P, const XZPoint& Q, const XZPoint& diff, const MontgomeryCurve&,
             OpCounter& ctr) {
    FieldElement u = fp::mul(fp::sub(P.X, P.Z, ctr), fp::add(Q.X, Q.Z, ctr), ctr);
    FieldElement v = fp::mul(fp::add(P.X, P.Z, ctr), fp::sub(Q.X, Q.Z, ctr), ctr);
    FieldElement X = fp::mul(diff.Z, fp::sqr(fp::add(u, v, ctr), ctr), ctr);
    FieldElement Z = fp::mul(diff.X, fp::sqr(fp::sub(u, v, ctr), ctr), ctr);
    return {std::move(X), std::move(Z)};
}

XZPoint xdbl(const XZPoint& P, const MontgomeryCurve& C, OpCounter& ctr) {
    FieldElement s = fp::sqr(fp::add(P.X, P.Z, ctr), ctr);
    FieldElement d = fp::sqr(fp::sub(P.X, P.Z, ctr), ctr);
    FieldElement t = fp::sub(s, d, ctr);  // 4 X Z
    FieldElement X = fp::mul(s, d, ctr);
    FieldElement Z = fp::mul(t, fp::add(d, fp::mul(C.a24(), t, ctr), ctr), ctr);
    return {std::move(X), std::move(Z)};
}

std::optional<FieldElement> mont_ladder(const mpz_class& k, const FieldElement& x_P,
                                        const MontgomeryCurve& C, OpCounter& ctr) {
    if (sgn(k) < 0) throw std::invalid_argument("mont_ladder: negative scalar");
    if (&x_P.modulus() != &C.field()) throw ModulusMismatch();
    if (sgn(k) == 0) return std::nullopt;
    // (0, 0) has order 2 and breaks the differential step.
    if (x_P.is_zero()) {
        if (mpz_even_p(k.get_mpz_t())) return std::nullopt;
        return x_P;
    }
    const PrimeModulus& f = C.field();
    const XZPoint base{x_P, f.one()};
    XZPoint R0{f.one(), f.zero()};
    XZPoint R1 = base;
    for (long i = static_cast<long>(mpz_sizeinbase(k.get_mpz_t(), 2)) - 1; i >= 0; --i) {
        if (mpz_tstbit(k.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) {
            R0 = xadd(R0, R1, base, C, ctr);
            R1 = xdbl(R1, C, ctr);
        } else {
            R1 = xadd(R0, R1, base, C, ctr);
            R0 = xdbl(R0, C, ctr);
        }
    }
    if (R0.is_infinity()) return std::nullopt;
    return fp::mul(R0.X, fp::inv(R0.Z, ctr), ctr);
}

}  // namespace ecc
