#pragma once

#include "ecc/curve.hpp"
#include "ecc/recode.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ecc {

// Replay semantics over (acc, weight), both starting at acc = 0, weight = 1:
//   lead        acc = block
//   shift       acc = acc * base
//   promote     acc = acc * base + block
//   double      weight = weight * base
//   accumulate  acc = acc + block * weight
//   kernel_add  no effect (adds the kernel offset point)
enum class StepKind { Lead, Shift, Promote, Double, Accumulate, KernelAdd };

std::string_view step_kind_name(StepKind k);

struct TraceStep {
    StepKind kind;
    std::int64_t block;
    std::uint64_t base;
    std::uint64_t inv;
    bool may_overlap = false;  // may run concurrently with the next chain
    bool fell_back = false;    // composite degenerated; primitives used
};

struct LadderTrace {
    std::string algorithm;
    std::vector<TraceStep> steps;
    OpCounter total;

    // One line per step: "step <i>: kind=<name> block=<int> base=<int> inv=<int>".
    std::string to_text() const;
    std::uint64_t step_inversions() const;
};

// Scalar reconstructed from a trace by the replay semantics above.
mpz_class replay_trace(const LadderTrace& t);

enum class Algorithm { Ref, R2L, R2LKnap, L2RDoubleAdd, L2RNafMix, Base16, ThreePoint };

std::string_view algorithm_name(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view name);
const std::vector<Algorithm>& all_algorithms();

// [2^i]Q for i < size, built once outside any measured counter.
struct DoublesTable {
    std::vector<AffinePoint> doubles;
    static DoublesTable build(const AffinePoint& Q, std::size_t bits, const CurveParams& E);
};

struct LadderOptions {
    LadderTrace* trace = nullptr;
    // Pretend the composite at this guarded step index degenerates.
    std::optional<std::size_t> force_degenerate_step;
    // Kernel mode only: additions read [2^i]Q from here.
    const DoublesTable* table = nullptr;
};

// |m| -> [|m|]P; signs are applied by negation.
using MultipleMemo = std::map<unsigned, AffinePoint>;

// P + [k]Q with three registers over primitive operations.
AffinePoint three_point_ladder(const mpz_class& k, const AffinePoint& P, const AffinePoint& Q,
                               const CurveParams& E, OpCounter& ctr,
                               const LadderOptions& opt = {});

// Right-to-left: gaps doubled in blocks of at most four, one add per set bit.
AffinePoint r2l_multiply(const mpz_class& k, const AffinePoint& P, const CurveParams& E,
                         OpCounter& ctr, const LadderOptions& opt = {});

// Right-to-left with each whole gap handed to double_knapsack.
AffinePoint r2l_knapsack(const mpz_class& k, const AffinePoint& P, const CurveParams& E,
                         OpCounter& ctr, const LadderOptions& opt = {});

// [2^l]H in ceil(l/4) inversions: greedy blocks of four, then the remainder.
AffinePoint double_knapsack(const AffinePoint& H, unsigned l, const CurveParams& E,
                            OpCounter& ctr, const LadderOptions& opt = {});

// Left-to-right: each set bit fuses the preceding gap with the addition.
AffinePoint l2r_double_add(const mpz_class& k, const AffinePoint& P, const CurveParams& E,
                           OpCounter& ctr, const LadderOptions& opt = {});

// Left-to-right over mixed_naf_knapsack digits.
AffinePoint l2r_naf_mix(const mpz_class& k, const AffinePoint& P, const CurveParams& E,
                        OpCounter& ctr, const LadderOptions& opt = {});

// [B]D + [m]P for a power-of-two B >= 2 and |m| <= 31, memoizing [|m|]P.
AffinePoint radix_promote_and_add(const AffinePoint& D, std::int32_t m, std::uint32_t B,
                                  const AffinePoint& P, MultipleMemo& memo, const CurveParams& E,
                                  OpCounter& ctr, const LadderOptions& opt = {});

// Horner over base-16 digits: D = [16]D + [d]P.
AffinePoint base16_horner(const mpz_class& k, const AffinePoint& P, const CurveParams& E,
                          OpCounter& ctr, const LadderOptions& opt = {});

// [k]P through the chosen algorithm.
AffinePoint multiply(Algorithm a, const mpz_class& k, const AffinePoint& P, const CurveParams& E,
                     OpCounter& ctr, const LadderOptions& opt = {});

// P + [k]Q. The right-to-left forms seed the accumulator with P, the
// three-point ladder is native, the rest add P at the end. With opt.table set
// every set bit adds a precomputed [2^i]Q.
AffinePoint kernel_compute(const mpz_class& k, const AffinePoint& P, const AffinePoint& Q,
                           const CurveParams& E, OpCounter& ctr, Algorithm a,
                           const LadderOptions& opt = {});

}  // namespace ecc
