#include "ecc/rng.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ecc {

mpz_class Rng::bits(unsigned n) {
    mpz_class r = 0;
    if (n == 0) return r;
    unsigned words = (n + 63) / 64;
    for (unsigned i = 0; i < words; ++i) {
        std::uint64_t w = next();
        if (i == 0 && n % 64 != 0) w &= (std::uint64_t{1} << (n % 64)) - 1;
        r <<= 64;
        mpz_class wz;
        mpz_import(wz.get_mpz_t(), 1, 1, sizeof(w), 0, 0, &w);
        r += wz;
    }
    return r;
}

mpz_class Rng::below(const mpz_class& bound) {
    if (sgn(bound) <= 0) throw std::invalid_argument("Rng::below: bound must be positive");
    auto n = static_cast<unsigned>(mpz_sizeinbase(bound.get_mpz_t(), 2));
    for (;;) {
        mpz_class v = bits(n);
        if (v < bound) return v;
    }
}

std::uint64_t Rng::below_u64(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
    unsigned n = 64 - static_cast<unsigned>(__builtin_clzll(bound));
    std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    for (;;) {
        std::uint64_t v = next() & mask;
        if (v < bound) return v;
    }
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
    const char* s = std::getenv("ECC_SEED");
    if (s == nullptr || *s == '\0') return fallback;
    try {
        std::size_t pos = 0;
        unsigned long long v = std::stoull(s, &pos, 10);
        if (pos != std::string(s).size()) return fallback;
        return v;
    } catch (const std::exception&) {
        return fallback;
    }
}

}  // namespace ecc
