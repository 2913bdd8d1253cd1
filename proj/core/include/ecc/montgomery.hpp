#pragma once

#include "ecc/field.hpp"

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>

namespace ecc {

// B y^2 = x^3 + A x^2 + x with B != 0 and A^2 != 4.
class MontgomeryCurve {
public:
    static MontgomeryCurve create(std::string name, const mpz_class& p, const mpz_class& A,
                                  const mpz_class& B);

    const std::string& name() const { return name_; }
    const PrimeModulus& field() const { return *mod_; }
    const FieldElement& A() const { return A_; }
    const FieldElement& B() const { return B_; }
    // (A + 2) / 4, computed once at construction outside any counter.
    const FieldElement& a24() const { return a24_; }

private:
    MontgomeryCurve(std::string name, std::shared_ptr<const PrimeModulus> mod, FieldElement A,
                    FieldElement B, FieldElement a24)
        : name_(std::move(name)), mod_(std::move(mod)), A_(std::move(A)), B_(std::move(B)),
          a24_(std::move(a24)) {}

    std::string name_;
    std::shared_ptr<const PrimeModulus> mod_;
    FieldElement A_;
    FieldElement B_;
    FieldElement a24_;
};

// x = X / Z; Z = 0 is the identity class.
struct XZPoint {
    FieldElement X;
    FieldElement Z;
    bool is_infinity() const { return Z.is_zero(); }
};

// x(P + Q) from x(P), x(Q) and x(P - Q). Requires P != Q.
XZPoint xadd(const XZPoint& P, const XZPoint& Q, const XZPoint& diff, const MontgomeryCurve& C,
             OpCounter& ctr);
// x(2P).
XZPoint xdbl(const XZPoint& P, const MontgomeryCurve& C, OpCounter& ctr);

// x([k]P) with one final inversion; nullopt for the identity (no inversion).
std::optional<FieldElement> mont_ladder(const mpz_class& k, const FieldElement& x_P,
                                        const MontgomeryCurve& C, OpCounter& ctr);

}  // namespace ecc
