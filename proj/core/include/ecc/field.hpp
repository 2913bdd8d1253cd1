#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ecc {

class FieldElement;

// Raised when two residues from different moduli meet in one operation.
struct ModulusMismatch : std::logic_error {
    ModulusMismatch() : std::logic_error("field elements belong to different moduli") {}
};

struct ZeroInversion : std::domain_error {
    ZeroInversion() : std::domain_error("inverse of zero requested") {}
};

// Odd prime p > 3. Elements share ownership, so an element keeps its
// modulus alive. Elements from distinct moduli never mix, even for equal p.
class PrimeModulus : public std::enable_shared_from_this<PrimeModulus> {
public:
    static std::shared_ptr<const PrimeModulus> make(const mpz_class& p);

    PrimeModulus(const PrimeModulus&) = delete;
    PrimeModulus& operator=(const PrimeModulus&) = delete;

    const mpz_class& p() const { return p_; }
    std::size_t bit_length() const { return bits_; }

    // Reduces v mod p into [0, p).
    FieldElement element(const mpz_class& v) const;
    FieldElement element(long v) const;
    FieldElement from_hex(std::string_view hex) const;
    FieldElement zero() const;
    FieldElement one() const;

private:
    explicit PrimeModulus(mpz_class p);
    mpz_class p_;
    std::size_t bits_;
};

class FieldElement {
public:
    const mpz_class& value() const { return v_; }
    const PrimeModulus& modulus() const { return *m_; }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    std::string to_hex() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.m_ == b.m_ && a.v_ == b.v_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

private:
    FieldElement(std::shared_ptr<const PrimeModulus> m, mpz_class v)
        : m_(std::move(m)), v_(std::move(v)) {}
    std::shared_ptr<const PrimeModulus> m_;
    mpz_class v_;

    friend class PrimeModulus;
    friend struct FieldAccess;
};

// Tally of field operations. Counts only grow while a scope is live.
class OpCounter {
public:
    std::uint64_t mul = 0;
    std::uint64_t sqr = 0;
    std::uint64_t add_sub = 0;
    std::uint64_t inv = 0;
    std::uint64_t neg = 0;

    OpCounter() = default;

    // Thread-local sink for oracle and setup code; never read by reports.
    static OpCounter& discard();

    void absorb(const OpCounter& o) {
        mul += o.mul;
        sqr += o.sqr;
        add_sub += o.add_sub;
        inv += o.inv;
        neg += o.neg;
    }
    std::uint64_t total() const { return mul + sqr + add_sub + inv + neg; }

    friend OpCounter operator-(const OpCounter& a, const OpCounter& b);
    friend bool operator==(const OpCounter& a, const OpCounter& b) {
        return a.mul == b.mul && a.sqr == b.sqr && a.add_sub == b.add_sub && a.inv == b.inv &&
               a.neg == b.neg;
    }
};

namespace fp {

FieldElement add(const FieldElement& a, const FieldElement& b, OpCounter& ctr);
FieldElement sub(const FieldElement& a, const FieldElement& b, OpCounter& ctr);
FieldElement mul(const FieldElement& a, const FieldElement& b, OpCounter& ctr);
FieldElement sqr(const FieldElement& a, OpCounter& ctr);
FieldElement inv(const FieldElement& a, OpCounter& ctr);
FieldElement neg(const FieldElement& a, OpCounter& ctr);

// 2a, counted as one add_sub.
FieldElement twice(const FieldElement& a, OpCounter& ctr);
// a * c for a small constant c, counted as one mul.
FieldElement mul_small(const FieldElement& a, unsigned long c, OpCounter& ctr);

// Square-and-multiply; counts every sqr and mul it performs.
FieldElement pow(const FieldElement& a, const mpz_class& e, OpCounter& ctr);
bool is_square(const FieldElement& a, OpCounter& ctr);
// Tonelli-Shanks. Returns false when a is a non-residue.
bool sqrt(const FieldElement& a, FieldElement& out, OpCounter& ctr);

}  // namespace fp

}  // namespace ecc
