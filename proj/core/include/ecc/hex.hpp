#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace ecc {

struct HexParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Lowercase, big-endian, no prefix. Zero is "0".
std::string to_hex(const mpz_class& v);

// Accepts [0-9a-fA-F]+ only; a leading "0x", a sign, whitespace, or an empty
// string raise HexParseError.
mpz_class parse_hex(std::string_view s);

}  // namespace ecc
