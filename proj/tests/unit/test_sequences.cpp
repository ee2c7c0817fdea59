#include <gtest/gtest.h>

#include "butterfly/errors.hpp"
#include "butterfly/sequences.hpp"
#include "oracle.hpp"

using namespace butterfly;

namespace {

std::vector<std::int64_t> tail(const SequenceTable& t, std::int64_t from) {
    return {t.values.begin() + (from - t.offset), t.values.end()};
}

}  // namespace

TEST(Sequences, StrictCountsMatchPrintedPrefix) {
    EXPECT_EQ(named_sequence("q", 23).values,
              (std::vector<std::int64_t>{1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15, 18, 22, 27, 32, 38, 46, 54, 64, 76, 89, 104}));
}

TEST(Sequences, DifferenceExamples) {
    const SequenceTable q = named_sequence("q", 20);
    EXPECT_EQ(difference(q).at(9), 2);
    EXPECT_EQ(difference(difference(q)).at(18), 2);
    const SequenceTable ones{"one", 0, {1, 1, 1, 1}};
    EXPECT_EQ(difference(ones).values, (std::vector<std::int64_t>{1, 0, 0, 0}));
}

TEST(Sequences, NamedExamples) {
    EXPECT_EQ(named_sequence("t", 14).at(14), 2);
    EXPECT_EQ(named_sequence("s_e", 12).at(12), 1);
    EXPECT_EQ(named_sequence("s_o", 12).at(12), 0);
    EXPECT_EQ(named_sequence("d2p", 4).at(4), 1);
    EXPECT_EQ(named_sequence("s", 18).at(18), 2);
}

TEST(Sequences, UnknownNameAndLimits) {
    EXPECT_THROW(named_sequence("zz", 5), std::invalid_argument);
    EXPECT_THROW(named_sequence("q", 500), ResourceLimitError);
    const SequenceTable q = named_sequence("q", 5);
    EXPECT_THROW(q.at(6), std::out_of_range);
    EXPECT_EQ(q.value_or_zero(-3), 0);
}

TEST(Sequences, Mod3Slices) {
    const SequenceTable s = named_sequence("s", 60);
    EXPECT_EQ(tail(mod3_slices(s, 0, 3), 3).size(), 18u);
    const auto zero = mod3_slices(s, 0, 3).values;
    EXPECT_EQ(std::vector<std::int64_t>(zero.begin(), zero.begin() + 15),
              (std::vector<std::int64_t>{1, 1, 1, 2, 2, 3, 4, 6, 8, 10, 14, 19, 26, 34, 45}));
    const auto one = mod3_slices(s, 1, 3).values;
    EXPECT_EQ(std::vector<std::int64_t>(one.begin(), one.begin() + 8), (std::vector<std::int64_t>{0, 0, 0, 0, 1, 2, 3, 4}));
    EXPECT_EQ(mod3_slices(s, 2, 3).values.front(), 0);
}

TEST(Sequences, ExceptionalInputs) {
    EXPECT_TRUE(parity_exception_inputs(8).empty());
    EXPECT_EQ(parity_exception_inputs(60),
              (std::vector<std::int64_t>{9, 12, 14, 15, 17, 22, 24, 26, 28, 35, 37, 40, 42, 51, 53, 57, 59}));
    const auto f = exceptional_form(12);
    ASSERT_TRUE(f);
    EXPECT_EQ(f->which, 2);
    EXPECT_EQ(f->t, 2);
    EXPECT_FALSE(exceptional_form(18));
}

TEST(Sequences, ExceptionalInputsMatchEnumeratedParity) {
    const SequenceTable se = named_sequence("s_e", 90);
    const SequenceTable so = named_sequence("s_o", 90);
    std::vector<std::int64_t> differing;
    for (std::int64_t n = 6; n <= 90; ++n)
        if (se.at(n) != so.at(n)) differing.push_back(n);
    EXPECT_EQ(differing, parity_exception_inputs(90));
}

TEST(Sequences, AgreeWithOracleTables) {
    const int N = 70;
    const auto q = oracle::q_table(N);
    const auto r = oracle::difference(q);
    const auto s = oracle::difference(r);
    const auto t = oracle::odd_parts_from(5, N);
    EXPECT_EQ(named_sequence("q", N).values, q);
    EXPECT_EQ(named_sequence("r", N).values, r);
    EXPECT_EQ(named_sequence("s", N).values, s);
    EXPECT_EQ(named_sequence("t", N).values, t);
    const auto p = oracle::p_table(40);
    EXPECT_EQ(named_sequence("p", 40).values, p);
    EXPECT_EQ(named_sequence("dp", 40).values, oracle::difference(p));
}

TEST(Sequences, SubfamiliesAgreeWithOracle) {
    for (int n = 6; n <= 40; ++n) {
        EXPECT_EQ(named_sequence("r1", n).at(n), oracle::count_strict(n, oracle::r1));
        EXPECT_EQ(named_sequence("r2", n).at(n), oracle::count_strict(n, oracle::r2));
        EXPECT_EQ(named_sequence("r1p", n).at(n), oracle::count_strict(n, oracle::r1_prime));
        EXPECT_EQ(named_sequence("s_e", n).at(n),
                  oracle::count_strict(n, [](const oracle::Parts& p) { return oracle::butterfly(p) && p[1] % 2 == 0; }));
    }
}

TEST(Sequences, ComponentIdentities) {
    const SequenceTable r = named_sequence("r", 60), r1 = named_sequence("r1", 60), r2 = named_sequence("r2", 60);
    const SequenceTable r1p = named_sequence("r1p", 60), r1pp = named_sequence("r1pp", 60);
    const SequenceTable s = named_sequence("s", 60), se = named_sequence("s_e", 60), so = named_sequence("s_o", 60);
    for (int n = 3; n <= 60; ++n) EXPECT_EQ(r1.at(n) + r2.at(n), r.at(n)) << n;
    for (int n = 4; n <= 60; ++n) EXPECT_EQ(r1.at(n - 1), r2.at(n)) << n;
    for (int n = 5; n <= 60; ++n) EXPECT_EQ(r1p.at(n) + r1pp.at(n), r1.at(n)) << n;
    for (int n = 6; n <= 60; ++n) {
        EXPECT_EQ(r2.at(n - 1), r1p.at(n)) << n;
        EXPECT_EQ(se.at(n) + so.at(n), s.at(n)) << n;
    }
}

TEST(Sequences, BfileAndJson) {
    const SequenceTable s = named_sequence("s", 3);
    EXPECT_EQ(to_bfile(s), "0 1\n1 -1\n2 0\n3 1\n");
    EXPECT_EQ(to_json(s), R"({"name":"s","offset":0,"provenance":"enumerated","values":[1,-1,0,1]})");
}
