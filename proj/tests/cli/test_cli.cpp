#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = butterfly::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, SeqEndsWithLastTerm) {
    const Result r = run({"seq", "s", "--to", "18"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.ends_with("\n18 2\n")) << r.out;
}

TEST(Cli, EnumButterfly) {
    const Result r = run({"enum", "butterfly", "18"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "7+6+5\n6+5+4+3\n");
}

TEST(Cli, VerifyIdentity) {
    const Result r = run({"verify", "identity-2.12", "--order", "60"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "OK 0 mismatches\n");
    const Result printed = run({"verify", "identity-5.24", "--order", "12", "--reading", "printed"});
    EXPECT_EQ(printed.code, 1);
    EXPECT_EQ(printed.out, "FAIL 2 mismatches\n11 -1 -2\n12 0 1\n");
}

TEST(Cli, VerifyAllIsDeterministic) {
    const Result a = run({"verify", "--all", "--order", "40"});
    const Result b = run({"verify", "--all", "--order", "40"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_TRUE(a.out.starts_with("identity-2.1 distinct-filtered OK 0 mismatches\n"));
}

TEST(Cli, SplitMergeCaps) {
    EXPECT_EQ(run({"split", "9+8+7+6+5+4+3+2"}).out, "13+7+7+5+3+3+3+3\n");
    EXPECT_EQ(run({"split", "10+9+8", "--variant", "switched"}).out, "9+9+9\n");
    EXPECT_EQ(run({"merge", "25+11+11+9+7+5+5+5+3+3+3+3"}).out, "13+12+11+10+9+8+7+6+5+4+3+2\n");
    EXPECT_EQ(run({"caps", "5+3+3+3"}).out, "form step-i\nbound 2\nt 1 cap 2*1=2 <= 2 ok tight\nv 0 n/a\nsatisfied\n");
    const Result bad = run({"merge", "13+5+5+3"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_FALSE(bad.err.empty());
}

TEST(Cli, ClassifyParityDiagram) {
    EXPECT_EQ(run({"classify", "8+7+6+3"}).out, "horizontal-bar 3\n");
    EXPECT_EQ(run({"parity", "12"}).out, "relation even-plus-one form 2 t 2\ns_e 1 s_o 0 agree\n");
    EXPECT_EQ(run({"diagram", "4+3+2"}).out, "####\n###\n##\n");
    EXPECT_EQ(run({"diagram", "2+1", "--mark", "0:1:x"}).out, "#x\n#\n");
}

TEST(Cli, ChecksumAndSolve) {
    EXPECT_EQ(run({"checksum", "t", "10"}).out, "10 2 2\n");
    const Result all = run({"checksum", "s", "--to", "200"});
    EXPECT_EQ(all.code, 0);
    EXPECT_EQ(all.out.find("MISMATCH"), std::string::npos);
    EXPECT_TRUE(run({"solve", "q", "--to", "23"}).out.ends_with("\n23 104\n"));
}

TEST(Cli, BijectionRange) {
    EXPECT_EQ(run({"bij", "bar", "21", "40", "--h", "3"}).code, 0);
    EXPECT_EQ(run({"bij", "butterfly", "6", "30"}).code, 0);
}

TEST(Cli, JsonEnvelope) {
    const Result r = run({"--json", "classify", "6+5+4"});
    EXPECT_EQ(r.out, R"({"command":"classify","result":{"kind":"generalized-pentagonal","h":3}})"
                     "\n");
    const Result seq = run({"--json", "seq", "q", "--to", "3"});
    EXPECT_EQ(seq.out,
              R"({"command":"seq","result":{"name":"q","offset":0,"provenance":"enumerated","values":[1,1,1,2]}})"
              "\n");
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"enum", "nope", "5"}).code, 2);
    EXPECT_EQ(run({"seq", "q", "--to", "x"}).code, 2);
    EXPECT_EQ(run({"verify", "identity-9.9"}).code, 2);
    EXPECT_EQ(run({"split", "5+4+2"}).code, 2);
    EXPECT_EQ(run({"seq", "q", "--to", "900"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}
