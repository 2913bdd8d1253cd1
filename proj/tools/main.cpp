#include "commands.hpp"

#include "ecc/rng.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using namespace ecc::cli;
    CLI::App app{"Affine elliptic-curve composite operations and ladders"};
    app.require_subcommand(1);

    const std::uint64_t default_seed = ecc::seed_from_env(1);

    MulArgs mul;
    auto* m = app.add_subcommand("mul", "Scalar multiplication [k]P or P + [k]Q");
    m->add_option("--curve", mul.curve, "Curve file")->required();
    m->add_option("--k", mul.k, "Scalar in lowercase hex")->required();
    m->add_option("--algo", mul.algo,
                  "ref, r2l, r2l-knap, l2r-da, l2r-naf, base16, three-point, montgomery-xz");
    m->add_option("--px", mul.px, "P x coordinate (default: curve base point)");
    m->add_option("--py", mul.py, "P y coordinate");
    m->add_option("--qx", mul.qx, "Q x coordinate; selects P + [k]Q");
    m->add_option("--qy", mul.qy, "Q y coordinate");
    m->add_flag("--trace", mul.trace, "Print the ladder trace");

    RecodeArgs rec;
    auto* r = app.add_subcommand("recode", "Show a scalar recoding and its inversion estimate");
    r->add_option("--k", rec.k, "Scalar in lowercase hex")->required();
    r->add_option("--mode", rec.mode, "naf, base16 or mixed");

    VerifyArgs ver;
    ver.seed = default_seed;
    std::string fault;
    auto* v = app.add_subcommand("verify", "Check composites and ladders against the oracle");
    v->add_option("--curve", ver.curve, "Curve file")->required();
    v->add_option("--exhaustive-bits", ver.exhaustive_bits, "Check every k < 2^n");
    v->add_option("--random-trials", ver.random_trials, "Random points and scalars");
    v->add_option("--seed", ver.seed, "RNG seed (default: ECC_SEED or 1)");
    auto* fo = v->add_option("--inject-fault", fault, "Perturb the named composite (testing)");

    BenchArgs bench;
    bench.seed = default_seed;
    auto* b = app.add_subcommand("bench", "Write the composite-vs-primitive cost CSV");
    b->add_option("--curve", bench.curve, "Curve file")->required();
    b->add_option("--trials", bench.trials, "Trials per routine");
    b->add_option("--out", bench.out, "CSV output path")->required();
    b->add_option("--seed", bench.seed, "RNG seed (default: ECC_SEED or 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    if (m->parsed()) return cmd_mul(mul, std::cout, std::cerr);
    if (r->parsed()) return cmd_recode(rec, std::cout, std::cerr);
    if (v->parsed()) {
        if (fo->count() > 0) ver.inject_fault = fault;
        return cmd_verify(ver, std::cout, std::cerr);
    }
    if (b->parsed()) return cmd_bench(bench, std::cout, std::cerr);
    return kUsage;
}
