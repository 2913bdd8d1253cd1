#include "ecc/recode.hpp"

#include "ecc/composite.hpp"

#include <cstdlib>
#include <stdexcept>

namespace ecc {

namespace {

std::size_t bitlen(const mpz_class& k) {
    return sgn(k) == 0 ? 0 : mpz_sizeinbase(k.get_mpz_t(), 2);
}

unsigned window(const mpz_class& k, std::size_t pos, unsigned width) {
    unsigned v = 0;
    for (unsigned i = 0; i < width; ++i)
        if (mpz_tstbit(k.get_mpz_t(), pos + i)) v |= 1u << i;
    return v;
}

void require_nonnegative(const mpz_class& k, const char* what) {
    if (sgn(k) < 0) throw std::invalid_argument(std::string(what) + ": negative scalar");
}

}  // namespace

std::string MixedBaseRepr::digits_msb_first() const {
    if (digits.empty()) return "0";
    std::string s;
    for (std::size_t i = digits.size(); i-- > 0;) {
        s += std::to_string(digits[i]);
        if (i != 0) s += ' ';
    }
    return s;
}

std::string MixedBaseRepr::bases_msb_first() const {
    std::string s;
    for (std::size_t i = bases.size(); i-- > 0;) {
        s += std::to_string(bases[i]);
        if (i != 0) s += ' ';
    }
    return s;
}

MixedBaseRepr to_binary(const mpz_class& k) {
    require_nonnegative(k, "to_binary");
    MixedBaseRepr r{{}, {}, k};
    for (std::size_t i = 0, n = bitlen(k); i < n; ++i) {
        r.digits.push_back(mpz_tstbit(k.get_mpz_t(), i) ? 1 : 0);
        r.bases.push_back(2);
    }
    return r;
}

MixedBaseRepr to_naf(const mpz_class& k) {
    require_nonnegative(k, "to_naf");
    MixedBaseRepr r{{}, {}, k};
    mpz_class n = k;
    while (sgn(n) > 0) {
        std::int32_t d = 0;
        if (mpz_odd_p(n.get_mpz_t())) {
            d = 2 - static_cast<std::int32_t>(mpz_fdiv_ui(n.get_mpz_t(), 4));
            n -= d;
        }
        r.digits.push_back(d);
        r.bases.push_back(2);
        n >>= 1;
    }
    return r;
}

std::vector<unsigned> to_base16_digits(const mpz_class& k) {
    require_nonnegative(k, "to_base16_digits");
    if (sgn(k) == 0) return {0};
    std::vector<unsigned> out;
    std::size_t n = bitlen(k);
    for (std::size_t pos = 0; pos < n; pos += 4) out.push_back(window(k, pos, 4));
    return {out.rbegin(), out.rend()};
}

MixedBaseRepr to_base16(const mpz_class& k) {
    std::vector<unsigned> msb = to_base16_digits(k);
    MixedBaseRepr r{{}, {}, k};
    for (auto it = msb.rbegin(); it != msb.rend(); ++it) {
        r.digits.push_back(static_cast<std::int32_t>(*it));
        r.bases.push_back(16);
    }
    return r;
}

MixedBaseRepr mixed_naf_knapsack(const mpz_class& k) {
    require_nonnegative(k, "mixed_naf_knapsack");
    const CostModel model = CostModel::affine();
    MixedBaseRepr r{{}, {}, k};
    const std::size_t n = bitlen(k);
    // A non-final base-32 window pays off only if a 5-bit shift is no costlier
    // per bit than a 4-bit one.
    const bool wide_inner = 4 * model.block_cost(5) <= 5 * model.block_cost(4);
    std::size_t pos = 0;
    unsigned carry = 0;
    while (pos < n) {
        const std::size_t remaining = n - pos;
        if (remaining <= 5) {
            unsigned v = window(k, pos, static_cast<unsigned>(remaining)) + carry;
            if (v <= 31 && model.digit_cost[v] <= 1) {
                r.digits.push_back(static_cast<std::int32_t>(v));
                r.bases.push_back(32);
                return r;
            }
        }
        unsigned width = 4;
        if (wide_inner && remaining > 5) {
            unsigned v5 = window(k, pos, 5) + carry;
            int d5 = v5 > 16 ? static_cast<int>(v5) - 32 : static_cast<int>(v5);
            if (model.digit_cost[static_cast<unsigned>(std::abs(d5))] <= 1) width = 5;
        }
        const unsigned B = 1u << width;
        unsigned v = window(k, pos, width) + carry;
        std::int32_t d;
        if (v > B / 2) {
            d = static_cast<std::int32_t>(v) - static_cast<std::int32_t>(B);
            carry = 1;
        } else {
            d = static_cast<std::int32_t>(v);
            carry = 0;
        }
        r.digits.push_back(d);
        r.bases.push_back(B);
        pos += width;
    }
    if (carry > 0) {
        r.digits.push_back(static_cast<std::int32_t>(carry));
        r.bases.push_back(r.bases.empty() ? 16 : r.bases.back());
    }
    return r;
}

mpz_class repr_eval(const MixedBaseRepr& r) {
    if (r.digits.size() != r.bases.size())
        throw std::invalid_argument("repr_eval: digit and base counts differ");
    mpz_class acc = 0;
    for (std::size_t i = r.digits.size(); i-- > 0;) {
        acc *= r.bases[i];
        acc += r.digits[i];
    }
    return acc;
}

mpz_class base16_eval(const std::vector<unsigned>& msb_first) {
    mpz_class acc = 0;
    for (unsigned d : msb_first) {
        if (d > 15) throw std::invalid_argument("base16_eval: digit above 15");
        acc = acc * 16 + d;
    }
    return acc;
}

unsigned base_log2(std::uint32_t b) {
    if (b < 2 || (b & (b - 1)) != 0) throw std::invalid_argument("base must be a power of two");
    return static_cast<unsigned>(__builtin_ctz(b));
}

CostModel CostModel::affine() {
    CostModel m;
    for (unsigned c = 0; c < 32; ++c) m.digit_cost[c] = small_multiple_cost(c);
    m.max_fused_doublings = 4;
    return m;
}

unsigned CostModel::leading_cost(std::int32_t m) const {
    unsigned a = static_cast<unsigned>(std::abs(m));
    if (a > 31) throw std::out_of_range("digit magnitude above 31");
    return digit_cost[a];
}

unsigned CostModel::block_cost(unsigned shift) const {
    return (shift + max_fused_doublings - 1) / max_fused_doublings;
}

unsigned estimate_inversions(const MixedBaseRepr& r, const CostModel& model) {
    std::size_t top = r.digits.size();
    while (top > 0 && r.digits[top - 1] == 0) --top;
    if (top == 0) return 0;
    unsigned total = model.leading_cost(r.digits[top - 1]);
    unsigned shift = 0;
    for (std::size_t i = top - 1; i-- > 0;) {
        shift += base_log2(r.bases[i]);
        if (r.digits[i] != 0) {
            model.leading_cost(r.digits[i]);  // range check
            total += model.block_cost(shift);
            shift = 0;
        }
    }
    return total + model.block_cost(shift);
}

}  // namespace ecc
