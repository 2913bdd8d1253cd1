#include "ecc/hex.hpp"

namespace ecc {

std::string to_hex(const mpz_class& v) {
    if (sgn(v) < 0) throw std::invalid_argument("to_hex: negative value");
    return v.get_str(16);
}

mpz_class parse_hex(std::string_view s) {
    if (s.empty()) throw HexParseError("empty hex string");
    if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X'))
        throw HexParseError("hex must not carry a 0x prefix: " + std::string(s));
    for (char c : s) {
        bool ok = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
        if (!ok) throw HexParseError("invalid hex digit in: " + std::string(s));
    }
    return mpz_class(std::string(s), 16);
}

}  // namespace ecc
