#include "ecc/field.hpp"

#include "ecc/hex.hpp"

namespace ecc {

struct FieldAccess {
    static FieldElement make(std::shared_ptr<const PrimeModulus> m, mpz_class v) {
        return {std::move(m), std::move(v)};
    }
    static const std::shared_ptr<const PrimeModulus>& mod(const FieldElement& e) { return e.m_; }
};

namespace {

const std::shared_ptr<const PrimeModulus>& same_modulus(const FieldElement& a,
                                                        const FieldElement& b) {
    const auto& m = FieldAccess::mod(a);
    if (m != FieldAccess::mod(b)) throw ModulusMismatch();
    return m;
}

}  // namespace

PrimeModulus::PrimeModulus(mpz_class p) : p_(std::move(p)), bits_(mpz_sizeinbase(p_.get_mpz_t(), 2)) {}

std::shared_ptr<const PrimeModulus> PrimeModulus::make(const mpz_class& p) {
    if (p <= 3 || mpz_even_p(p.get_mpz_t()))
        throw std::invalid_argument("modulus must be an odd prime > 3");
    if (mpz_probab_prime_p(p.get_mpz_t(), 32) == 0)
        throw std::invalid_argument("modulus is not prime: " + p.get_str(16));
    return std::shared_ptr<const PrimeModulus>(new PrimeModulus(p));
}

FieldElement PrimeModulus::element(const mpz_class& v) const {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), p_.get_mpz_t());
    return FieldAccess::make(shared_from_this(), std::move(r));
}

FieldElement PrimeModulus::element(long v) const { return element(mpz_class(v)); }

FieldElement PrimeModulus::from_hex(std::string_view hex) const {
    mpz_class v = parse_hex(hex);
    if (v >= p_) throw std::out_of_range("residue not below modulus: " + std::string(hex));
    return FieldAccess::make(shared_from_this(), std::move(v));
}

FieldElement PrimeModulus::zero() const { return FieldAccess::make(shared_from_this(), mpz_class(0)); }
FieldElement PrimeModulus::one() const { return FieldAccess::make(shared_from_this(), mpz_class(1)); }

std::string FieldElement::to_hex() const { return ecc::to_hex(v_); }

OpCounter& OpCounter::discard() {
    thread_local OpCounter sink;
    return sink;
}

OpCounter operator-(const OpCounter& a, const OpCounter& b) {
    OpCounter d;
    d.mul = a.mul - b.mul;
    d.sqr = a.sqr - b.sqr;
    d.add_sub = a.add_sub - b.add_sub;
    d.inv = a.inv - b.inv;
    d.neg = a.neg - b.neg;
    return d;
}

namespace fp {

FieldElement add(const FieldElement& a, const FieldElement& b, OpCounter& ctr) {
    const auto& m = same_modulus(a, b);
    ++ctr.add_sub;
    mpz_class r = a.value() + b.value();
    if (r >= m->p()) r -= m->p();
    return FieldAccess::make(m, std::move(r));
}

FieldElement sub(const FieldElement& a, const FieldElement& b, OpCounter& ctr) {
    const auto& m = same_modulus(a, b);
    ++ctr.add_sub;
    mpz_class r = a.value() - b.value();
    if (sgn(r) < 0) r += m->p();
    return FieldAccess::make(m, std::move(r));
}

FieldElement mul(const FieldElement& a, const FieldElement& b, OpCounter& ctr) {
    const auto& m = same_modulus(a, b);
    ++ctr.mul;
    mpz_class r = a.value() * b.value();
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m->p().get_mpz_t());
    return FieldAccess::make(m, std::move(r));
}

FieldElement sqr(const FieldElement& a, OpCounter& ctr) {
    const auto& m = FieldAccess::mod(a);
    ++ctr.sqr;
    mpz_class r = a.value() * a.value();
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m->p().get_mpz_t());
    return FieldAccess::make(m, std::move(r));
}

FieldElement inv(const FieldElement& a, OpCounter& ctr) {
    if (a.is_zero()) throw ZeroInversion();
    const auto& m = FieldAccess::mod(a);
    ++ctr.inv;
    mpz_class r;
    mpz_invert(r.get_mpz_t(), a.value().get_mpz_t(), m->p().get_mpz_t());
    return FieldAccess::make(m, std::move(r));
}

FieldElement neg(const FieldElement& a, OpCounter& ctr) {
    const auto& m = FieldAccess::mod(a);
    ++ctr.neg;
    if (a.is_zero()) return a;
    return FieldAccess::make(m, m->p() - a.value());
}

FieldElement twice(const FieldElement& a, OpCounter& ctr) { return add(a, a, ctr); }

FieldElement mul_small(const FieldElement& a, unsigned long c, OpCounter& ctr) {
    const auto& m = FieldAccess::mod(a);
    ++ctr.mul;
    mpz_class r = a.value() * c;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m->p().get_mpz_t());
    return FieldAccess::make(m, std::move(r));
}

FieldElement pow(const FieldElement& a, const mpz_class& e, OpCounter& ctr) {
    if (sgn(e) < 0) throw std::invalid_argument("fp::pow: negative exponent");
    FieldElement r = a.modulus().one();
    for (long i = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; i >= 0; --i) {
        r = sqr(r, ctr);
        if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) r = mul(r, a, ctr);
    }
    return r;
}

bool is_square(const FieldElement& a, OpCounter& ctr) {
    if (a.is_zero()) return true;
    mpz_class e = (a.modulus().p() - 1) / 2;
    return pow(a, e, ctr).is_one();
}

bool sqrt(const FieldElement& a, FieldElement& out, OpCounter& ctr) {
    const PrimeModulus& m = a.modulus();
    if (a.is_zero()) {
        out = a;
        return true;
    }
    if (!is_square(a, ctr)) return false;
    const mpz_class& p = m.p();
    if (mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) {
        out = pow(a, (p + 1) / 4, ctr);
        return true;
    }
    // p - 1 = q * 2^s with q odd.
    mpz_class q = p - 1;
    unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
    q >>= s;
    FieldElement z = m.element(2);
    while (is_square(z, ctr)) z = add(z, m.one(), ctr);
    FieldElement c = pow(z, q, ctr);
    FieldElement t = pow(a, q, ctr);
    FieldElement r = pow(a, (q + 1) / 2, ctr);
    unsigned long mexp = s;
    while (!t.is_one()) {
        unsigned long i = 0;
        FieldElement t2 = t;
        while (!t2.is_one()) {
            t2 = sqr(t2, ctr);
            ++i;
        }
        FieldElement b = c;
        for (unsigned long j = 0; j + i + 1 < mexp; ++j) b = sqr(b, ctr);
        mexp = i;
        c = sqr(b, ctr);
        t = mul(t, c, ctr);
        r = mul(r, b, ctr);
    }
    out = r;
    return true;
}

}  // namespace fp

}  // namespace ecc
