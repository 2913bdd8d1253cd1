#include "ecc/slope_chain.hpp"

namespace ecc::chain {

SlopeChain seed(const AffinePoint& P, const CurveParams& E) {
    if (P.is_infinity()) throw DegenerateChain("seed");
    const PrimeModulus& f = E.field();
    return SlopeChain{f.zero(), f.one(), f.one(), P.x(), P.y(), true};
}

SlopeChain dbl(const SlopeChain& c, const CurveParams& E, OpCounter& ctr, const char* stage) {
    if (c.Ny.is_zero()) throw DegenerateChain(stage);
    // W = 3 Nx^2 + a U^4, q = 2 Ny, U' = U q.
    FieldElement nx2 = fp::sqr(c.Nx, ctr);
    FieldElement W = fp::add(fp::twice(nx2, ctr), nx2, ctr);
    if (c.unit) {
        W = fp::add(W, E.a(), ctr);
    } else {
        FieldElement u4 = fp::sqr(fp::sqr(c.U, ctr), ctr);
        W = fp::add(W, fp::mul(E.a(), u4, ctr), ctr);
    }
    FieldElement q = fp::twice(c.Ny, ctr);
    FieldElement U = c.unit ? q : fp::mul(c.U, q, ctr);
    // Nx' = W^2 - 2 Nx q^2, Ny' = W (Nx q^2 - Nx') - Ny q^3.
    FieldElement q2 = fp::sqr(q, ctr);
    FieldElement nxq2 = fp::mul(c.Nx, q2, ctr);
    FieldElement Nx = fp::sub(fp::sqr(W, ctr), fp::twice(nxq2, ctr), ctr);
    FieldElement q3 = fp::mul(q2, q, ctr);
    FieldElement Ny =
        fp::sub(fp::mul(W, fp::sub(nxq2, Nx, ctr), ctr), fp::mul(c.Ny, q3, ctr), ctr);
    return SlopeChain{std::move(W), std::move(U), std::move(q), std::move(Nx), std::move(Ny),
                      false};
}

SlopeChain add(const SlopeChain& a, const SlopeChain& b, const CurveParams&, OpCounter& ctr,
               const char* stage) {
    // Cross-scale to the common denominator Ua Ub:
    // S = Ny * U_other^3, H = Nx * U_other^2.
    FieldElement Sa = a.Ny, Sb = b.Ny, Ha = a.Nx, Hb = b.Nx;
    if (!b.unit) {
        FieldElement ub2 = fp::sqr(b.U, ctr);
        Ha = fp::mul(a.Nx, ub2, ctr);
        Sa = fp::mul(a.Ny, fp::mul(ub2, b.U, ctr), ctr);
    }
    if (!a.unit) {
        FieldElement ua2 = fp::sqr(a.U, ctr);
        Hb = fp::mul(b.Nx, ua2, ctr);
        Sb = fp::mul(b.Ny, fp::mul(ua2, a.U, ctr), ctr);
    }
    FieldElement q = fp::sub(Ha, Hb, ctr);
    if (q.is_zero()) throw DegenerateChain(stage);
    FieldElement W = fp::sub(Sa, Sb, ctr);
    FieldElement U = q;
    if (!a.unit) U = fp::mul(U, a.U, ctr);
    if (!b.unit) U = fp::mul(U, b.U, ctr);
    // Nx' = W^2 - (Ha + Hb) q^2, Ny' = W (Hb q^2 - Nx') - Sb q^3.
    FieldElement q2 = fp::sqr(q, ctr);
    FieldElement Nx = fp::sub(fp::sqr(W, ctr), fp::mul(fp::add(Ha, Hb, ctr), q2, ctr), ctr);
    FieldElement hbq2 = fp::mul(Hb, q2, ctr);
    FieldElement Ny = fp::sub(fp::mul(W, fp::sub(hbq2, Nx, ctr), ctr),
                              fp::mul(Sb, fp::mul(q2, q, ctr), ctr), ctr);
    return SlopeChain{std::move(W), std::move(U), std::move(q), std::move(Nx), std::move(Ny),
                      false};
}

SlopeChain negate(const SlopeChain& c, OpCounter& ctr) {
    SlopeChain r = c;
    r.Ny = fp::neg(c.Ny, ctr);
    return r;
}

AffinePoint finalize(const SlopeChain& c, OpCounter& ctr) {
    if (c.unit) return AffinePoint::trusted(c.Nx, c.Ny);
    FieldElement z = fp::inv(c.U, ctr);
    FieldElement z2 = fp::sqr(z, ctr);
    FieldElement x = fp::mul(c.Nx, z2, ctr);
    FieldElement y = fp::mul(c.Ny, fp::mul(z2, z, ctr), ctr);
    return AffinePoint::trusted(std::move(x), std::move(y));
}

namespace {

AffinePoint scale_out(const SlopeChain& c, const FieldElement& z, OpCounter& ctr) {
    FieldElement z2 = fp::sqr(z, ctr);
    FieldElement x = fp::mul(c.Nx, z2, ctr);
    FieldElement y = fp::mul(c.Ny, fp::mul(z2, z, ctr), ctr);
    return AffinePoint::trusted(std::move(x), std::move(y));
}

}  // namespace

FinalPair finalize_pair(const SlopeChain& a, const SlopeChain& b, OpCounter& ctr) {
    if (a.unit) return {AffinePoint::trusted(a.Nx, a.Ny), finalize(b, ctr)};
    if (b.unit) return {finalize(a, ctr), AffinePoint::trusted(b.Nx, b.Ny)};
    FieldElement t = fp::inv(fp::mul(a.U, b.U, ctr), ctr);
    FieldElement za = fp::mul(t, b.U, ctr);
    FieldElement zb = fp::mul(t, a.U, ctr);
    return {scale_out(a, za, ctr), scale_out(b, zb, ctr)};
}

AffinePoint to_affine_uncounted(const SlopeChain& c) { return finalize(c, OpCounter::discard()); }

}  // namespace ecc::chain
