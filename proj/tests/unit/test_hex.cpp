#include "ecc/hex.hpp"

#include <gtest/gtest.h>

using ecc::HexParseError;
using ecc::parse_hex;
using ecc::to_hex;

TEST(Hex, RoundTrip) {
    for (const char* s : {"0", "1", "f", "10", "27a6", "deadbeefcafebabe0123456789"})
        EXPECT_EQ(to_hex(parse_hex(s)), s);
}

TEST(Hex, AcceptsUppercaseInput) {
    EXPECT_EQ(parse_hex("ABCDEF"), 0xabcdef);
    EXPECT_EQ(to_hex(parse_hex("ABCDEF")), "abcdef");
}

TEST(Hex, LeadingZerosCollapse) { EXPECT_EQ(to_hex(parse_hex("000f")), "f"); }

TEST(Hex, RejectsMalformed) {
    for (const char* s : {"", "0x1f", "0X1F", "-1", "+1", " 1", "1 ", "g", "12z"})
        EXPECT_THROW(parse_hex(s), HexParseError) << '"' << s << '"';
}
