#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ecc {

// k = sum_i digits[i] * prod_{j<i} bases[j]. Position 0 is least significant.
struct MixedBaseRepr {
    std::vector<std::int32_t> digits;
    std::vector<std::uint32_t> bases;
    mpz_class source_scalar;

    std::size_t size() const { return digits.size(); }
    // Digits most significant first, space separated; "0" when empty.
    std::string digits_msb_first() const;
    std::string bases_msb_first() const;
};

MixedBaseRepr to_binary(const mpz_class& k);
// Digits in {-1, 0, 1}, no two adjacent nonzero. 0 gives an empty repr.
MixedBaseRepr to_naf(const mpz_class& k);
// Most significant first; 0 gives [0].
std::vector<unsigned> to_base16_digits(const mpz_class& k);
MixedBaseRepr to_base16(const mpz_class& k);

// Right-to-left scan in 4-bit base-16 windows with a signed adjustment
// (window + carry > 8 becomes a negative digit and carry 1). The most
// significant window widens to 5 bits (base 32) when its value is a one
// inversion table entry. Every digit satisfies |m| <= 31.
MixedBaseRepr mixed_naf_knapsack(const mpz_class& k);

mpz_class repr_eval(const MixedBaseRepr& r);
// Horner over most-significant-first base-16 digits.
mpz_class base16_eval(const std::vector<unsigned>& msb_first);

// Inversion costs for the left-to-right evaluator: the leading digit costs
// digit_cost[|m|], each later nonzero digit costs ceil(shift / max_fused)
// where shift accumulates log2 of the bases skipped since the last nonzero
// digit, and trailing zeros flush the same way.
struct CostModel {
    std::array<unsigned, 32> digit_cost{};
    unsigned max_fused_doublings = 4;

    static CostModel affine();
    unsigned leading_cost(std::int32_t m) const;
    unsigned block_cost(unsigned shift) const;
};

unsigned estimate_inversions(const MixedBaseRepr& r, const CostModel& model);

// log2(b) for a power of two b >= 2; throws otherwise.
unsigned base_log2(std::uint32_t b);

}  // namespace ecc
