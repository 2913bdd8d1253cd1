#include "commands.hpp"
#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace ecc::cli;

namespace {

struct Out {
    std::ostringstream out, err;
};

int mul(const MulArgs& a, Out& o) { return cmd_mul(a, o.out, o.err); }

MulArgs mul_args(const char* curve, const char* k, const char* algo) {
    MulArgs a;
    a.curve = fixtures::curve_path(curve);
    a.k = k;
    a.algo = algo;
    return a;
}

// Point lines only; the counters differ by algorithm.
std::string point_lines(const std::string& s) {
    std::istringstream in(s);
    std::string line, out;
    while (std::getline(in, line))
        if (line.rfind("x = ", 0) == 0 || line.rfind("y = ", 0) == 0 || line == "infinity")
            out += line + "\n";
    return out;
}

int run_tool(const std::string& args) {
    std::string cmd = std::string(ECC_TOOL_PATH) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string temp_path(const char* name) {
    return (testing::TempDir() + "/") + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

TEST(Cli, MulAgreesAcrossAlgorithms) {
    for (const char* curve : {"p521.curve", "toy1019.curve", "toy211.curve"}) {
        for (const char* k : {"0", "1", "2f", "27a6", "fffff", "123456789abcdef"}) {
            Out ref;
            ASSERT_EQ(mul(mul_args(curve, k, "ref"), ref), kOk) << ref.err.str();
            for (const char* algo :
                 {"r2l", "r2l-knap", "l2r-da", "l2r-naf", "base16", "three-point"}) {
                Out o;
                ASSERT_EQ(mul(mul_args(curve, k, algo), o), kOk) << o.err.str();
                EXPECT_EQ(point_lines(o.out.str()), point_lines(ref.out.str()))
                    << curve << " k=" << k << " " << algo;
            }
        }
    }
}

TEST(Cli, MulKernelModeAgrees) {
    Out base;
    MulArgs g = mul_args("toy1019.curve", "5", "ref");
    ASSERT_EQ(mul(g, base), kOk);
    // Q = [5]G, then P + [k]Q with default P = G.
    std::istringstream in(point_lines(base.out.str()));
    std::string xl, yl;
    std::getline(in, xl);
    std::getline(in, yl);
    std::string qx = xl.substr(4), qy = yl.substr(4);
    std::string first;
    for (const char* algo : {"ref", "r2l", "r2l-knap", "l2r-da", "l2r-naf", "base16", "three-point"}) {
        MulArgs a = mul_args("toy1019.curve", "3e", algo);
        a.qx = qx, a.qy = qy;
        Out o;
        ASSERT_EQ(mul(a, o), kOk) << o.err.str();
        if (first.empty()) first = point_lines(o.out.str());
        EXPECT_EQ(point_lines(o.out.str()), first) << algo;
    }
    // 1 + 62 * 5 = 311.
    Out direct;
    ASSERT_EQ(mul(mul_args("toy1019.curve", "137", "ref"), direct), kOk);
    EXPECT_EQ(first, point_lines(direct.out.str()));
}

TEST(Cli, MulTraceForFortySeven) {
    MulArgs a = mul_args("p521.curve", "2f", "l2r-naf");
    a.trace = true;
    Out o;
    ASSERT_EQ(mul(a, o), kOk);
    const std::string s = o.out.str();
    EXPECT_NE(s.find("inv = 2\n"), std::string::npos) << s;
    EXPECT_NE(s.find("step 0: kind=lead block=3 base=1 inv=1\n"), std::string::npos) << s;
    EXPECT_NE(s.find("step 1: kind=promote block=-1 base=16 inv=1\n"), std::string::npos) << s;
}

TEST(Cli, MulMontgomery) {
    Out o;
    ASSERT_EQ(mul(mul_args("mont2011.curve", "5", "montgomery-xz"), o), kOk) << o.err.str();
    EXPECT_EQ(o.out.str().substr(0, 7), "x = 1a\n");
    EXPECT_NE(o.out.str().find("inv = 1\n"), std::string::npos);
    Out w;
    EXPECT_EQ(mul(mul_args("p521.curve", "5", "montgomery-xz"), w), kUsage);
    Out m;
    EXPECT_EQ(mul(mul_args("mont2011.curve", "5", "ref"), m), kUsage);
}

TEST(Cli, ExitCodes) {
    Out a;
    EXPECT_EQ(mul(mul_args("nonexistent.curve", "1", "ref"), a), kUsage);
    Out b;
    EXPECT_EQ(mul(mul_args("p521.curve", "0x1", "ref"), b), kUsage);
    Out c;
    EXPECT_EQ(mul(mul_args("p521.curve", "1", "fft"), c), kUsage);
    MulArgs off = mul_args("toy211.curve", "1", "ref");
    off.px = "c";
    off.py = "37";
    Out d;
    EXPECT_EQ(mul(off, d), kOffCurve);
    EXPECT_FALSE(d.err.str().empty());
    MulArgs half = mul_args("toy211.curve", "1", "ref");
    half.px = "c";
    Out e;
    EXPECT_EQ(mul(half, e), kUsage);
    RecodeArgs r{"2f", "ternary"};
    Out f;
    EXPECT_EQ(cmd_recode(r, f.out, f.err), kUsage);
}

TEST(Cli, RecodeOutputs) {
    struct Case {
        const char* k;
        const char* mode;
        const char* expect;
    };
    for (const Case& c : {
             Case{"27a6", "base16", "2 7 10 6\nbases: 16 16 16 16\ninversions: 4\n"},
             Case{"f", "naf", "1 0 0 0 -1\nbases: 2 2 2 2 2\ninversions: 1\n"},
             Case{"2f", "mixed", "3 -1\nbases: 32 16\ninversions: 2\n"},
             Case{"2f", "naf", "1 0 -1 0 0 0 -1\nbases: 2 2 2 2 2 2 2\ninversions: 2\n"},
             Case{"0", "naf", "0\nbases:\ninversions: 0\n"},
         }) {
        Out o;
        ASSERT_EQ(cmd_recode(RecodeArgs{c.k, c.mode}, o.out, o.err), kOk);
        EXPECT_EQ(o.out.str(), c.expect) << c.k << " " << c.mode;
    }
}

TEST(Cli, VerifySmallCurve) {
    VerifyArgs v;
    v.curve = fixtures::curve_path("toy211.curve");
    v.exhaustive_bits = 6;
    v.random_trials = 3;
    Out o;
    EXPECT_EQ(cmd_verify(v, o.out, o.err), kOk) << o.out.str();
    EXPECT_EQ(o.out.str().rfind("ok: ", 0), 0u) << o.out.str();
}

TEST(Cli, VerifyDetectsInjectedFault) {
    VerifyArgs v;
    v.curve = fixtures::curve_path("toy211.curve");
    v.exhaustive_bits = 4;
    v.random_trials = 2;
    v.inject_fault = "double4";
    Out o;
    EXPECT_EQ(cmd_verify(v, o.out, o.err), kMismatch);
    const std::string s = o.out.str();
    EXPECT_NE(s.find("FAIL curve="), std::string::npos);
    EXPECT_NE(s.find("op=double4"), std::string::npos) << s;
    EXPECT_NE(s.find("\nFAIL: "), std::string::npos);
    v.inject_fault = "no_such_op";
    Out bad;
    EXPECT_EQ(cmd_verify(v, bad.out, bad.err), kUsage);
}

TEST(Cli, VerifyNothingToDo) {
    VerifyArgs v;
    v.curve = fixtures::curve_path("p521.curve");
    Out o;
    EXPECT_EQ(cmd_verify(v, o.out, o.err), kOk);
    EXPECT_EQ(o.out.str(), "ok: 0 checks\n");
}

TEST(Cli, BenchIsDeterministicAndTrialIndependent) {
    BenchArgs b;
    b.curve = fixtures::curve_path("p521.curve");
    b.seed = 5;
    b.trials = 2;
    b.out = temp_path("bench_a.csv");
    Out o1;
    ASSERT_EQ(cmd_bench(b, o1.out, o1.err), kOk) << o1.err.str();
    std::string a = slurp(b.out);
    b.out = temp_path("bench_b.csv");
    Out o2;
    ASSERT_EQ(cmd_bench(b, o2.out, o2.err), kOk);
    std::string c = slurp(b.out);
    EXPECT_EQ(strip_wall_column(a), strip_wall_column(c));
    b.trials = 3;
    b.out = temp_path("bench_c.csv");
    Out o3;
    ASSERT_EQ(cmd_bench(b, o3.out, o3.err), kOk);
    // Counts depend only on the scalar, which the seed fixes.
    EXPECT_EQ(strip_wall_column(slurp(b.out)), strip_wall_column(a));
    EXPECT_EQ(a.substr(0, a.find('\n')), "routine,mul,sqr,add_sub,inv,wall_ns_mean");
    EXPECT_NE(a.find("\n4P_composite,"), std::string::npos);
}

TEST(Cli, BenchRejectsZeroTrials) {
    BenchArgs b;
    b.curve = fixtures::curve_path("p521.curve");
    b.trials = 0;
    b.out = temp_path("bench_zero.csv");
    Out o;
    EXPECT_EQ(cmd_bench(b, o.out, o.err), kUsage);
}

TEST(Cli, StripWallColumn) {
    EXPECT_EQ(strip_wall_column("a,b,c\n1,2,3\n"), "a,b\n1,2\n");
}

TEST(Cli, BinaryExitCodes) {
    const std::string toy = fixtures::curve_path("toy211.curve");
    EXPECT_EQ(run_tool(""), kUsage);
    EXPECT_EQ(run_tool("frobnicate"), kUsage);
    EXPECT_EQ(run_tool("mul --k 1"), kUsage);
    EXPECT_EQ(run_tool("mul --curve " + toy + " --k 5"), kOk);
    EXPECT_EQ(run_tool("mul --curve " + toy + " --k 5 --px c --py 37"), kOffCurve);
    EXPECT_EQ(run_tool("recode --k 2f --mode mixed"), kOk);
    EXPECT_EQ(run_tool("verify --curve " + toy + " --exhaustive-bits 3"), kOk);
    EXPECT_EQ(run_tool("verify --curve " + toy + " --exhaustive-bits 3 --inject-fault triple"),
              kMismatch);
    EXPECT_EQ(run_tool("--help"), kOk);
}

}  // namespace
