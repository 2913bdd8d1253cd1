#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace ecc {

// xorshift64* with a fixed seed scramble; the exact stream is documented in
// docs/formats.md so random trials reproduce across implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : s_(seed ^ 0x9E3779B97F4A7C15ULL) {
        if (s_ == 0) s_ = 1;
    }

    std::uint64_t next() {
        s_ ^= s_ >> 12;
        s_ ^= s_ << 25;
        s_ ^= s_ >> 27;
        return s_ * 0x2545F4914F6CDD1DULL;
    }

    // Uniform in [0, 2^bits): ceil(bits/64) words, most significant first,
    // top word masked.
    mpz_class bits(unsigned bits);

    // Uniform in [0, bound) by rejection over bits(bitlen(bound)). bound > 0.
    mpz_class below(const mpz_class& bound);

    // Uniform in [0, bound). bound > 0.
    std::uint64_t below_u64(std::uint64_t bound);

private:
    std::uint64_t s_;
};

// Seed from ECC_SEED when set and parseable, else fallback.
std::uint64_t seed_from_env(std::uint64_t fallback);

}  // namespace ecc
