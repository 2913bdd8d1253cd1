#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace ecc::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kUsage = 2;
inline constexpr int kOffCurve = 3;

struct MulArgs {
    std::string curve;
    std::string k;
    std::string algo = "ref";
    std::optional<std::string> px, py;
    std::optional<std::string> qx, qy;  // kernel mode: P + [k]Q
    bool trace = false;
};

struct RecodeArgs {
    std::string k;
    std::string mode = "naf";
};

struct VerifyArgs {
    std::string curve;
    unsigned exhaustive_bits = 0;
    unsigned random_trials = 0;
    std::uint64_t seed = 1;
    std::optional<std::string> inject_fault;
};

struct BenchArgs {
    std::string curve;
    unsigned trials = 10;
    std::string out;
    std::uint64_t seed = 1;
};

int cmd_mul(const MulArgs& a, std::ostream& out, std::ostream& err);
int cmd_recode(const RecodeArgs& a, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err);

// The bench CSV without timing, for determinism checks.
std::string strip_wall_column(const std::string& csv);

}  // namespace ecc::cli
