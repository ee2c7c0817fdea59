#include <gtest/gtest.h>

#include "butterfly/errors.hpp"
#include "butterfly/family.hpp"
#include "oracle.hpp"

using namespace butterfly;

namespace {

std::vector<std::vector<Part>> members(int n, const FamilySpec& f) {
    std::vector<std::vector<Part>> out;
    for (const Partition& p : enumerate_family(n, f)) out.push_back(p.parts());
    return out;
}

}  // namespace

TEST(Family, MembershipExamples) {
    EXPECT_TRUE(in_family(Partition{4, 3, 2}, {FamilyTag::Butterfly}));
    EXPECT_TRUE(in_family(Partition{}, {FamilyTag::Strict}));
    EXPECT_FALSE(in_family(Partition{5, 4, 2}, {FamilyTag::Butterfly}));
    EXPECT_TRUE(in_family(Partition{6, 5, 4, 3}, {FamilyTag::ButterflySecondOdd}));
}

TEST(Family, EnumerationExamples) {
    EXPECT_EQ(members(5, {FamilyTag::Strict}), (std::vector<std::vector<Part>>{{5}, {4, 1}, {3, 2}}));
    EXPECT_EQ(members(9, {FamilyTag::Butterfly}), (std::vector<std::vector<Part>>{{4, 3, 2}}));
    EXPECT_EQ(members(18, {FamilyTag::Butterfly}), (std::vector<std::vector<Part>>{{7, 6, 5}, {6, 5, 4, 3}}));
    EXPECT_EQ(members(0, {FamilyTag::Strict}), (std::vector<std::vector<Part>>{{}}));
}

TEST(Family, CountExamples) {
    EXPECT_EQ(count_family(18, {FamilyTag::Butterfly}), 2u);
    EXPECT_EQ(count_family(9, {FamilyTag::R1}), 2u);
    EXPECT_EQ(count_family(6, FamilySpec::odd_parts_at_least(3)), 1u);
}

TEST(Family, NamesRoundTrip) {
    for (const std::string& name : family_names()) {
        const FamilySpec f = parse_family(name, 4);
        EXPECT_EQ(parse_family(family_name(f), 4), f) << name;
    }
    EXPECT_THROW(parse_family("no-such-family"), std::invalid_argument);
}

TEST(Family, OutputIsLexicographicallyDecreasing) {
    for (const FamilyTag tag : {FamilyTag::Strict, FamilyTag::Butterfly, FamilyTag::ConjugateButterfly}) {
        const auto list = enumerate_family(24, {tag});
        for (std::size_t i = 1; i < list.size(); ++i) EXPECT_GT(list[i - 1], list[i]);
    }
}

TEST(Family, RefusesOversizedRequests) {
    EXPECT_THROW(enumerate_family(201, {FamilyTag::Strict}), ResourceLimitError);
    EnumerationLimits tight;
    tight.max_candidates = 100;
    EXPECT_THROW(count_family(30, FamilySpec::odd_parts_at_least(1), tight), ResourceLimitError);
    EXPECT_THROW(enumerate_family(-1, {FamilyTag::Strict}), PreconditionError);
}

TEST(Family, CountsAgreeWithOracle) {
    for (int n = 0; n <= 30; ++n) {
        EXPECT_EQ(count_family(n, {FamilyTag::Strict}), static_cast<std::uint64_t>(oracle::count_strict(n, [](auto&) { return true; })));
        EXPECT_EQ(count_family(n, {FamilyTag::Butterfly}), static_cast<std::uint64_t>(oracle::count_strict(n, oracle::butterfly)));
        EXPECT_EQ(count_family(n, {FamilyTag::R1Prime}), static_cast<std::uint64_t>(oracle::count_strict(n, oracle::r1_prime)));
        EXPECT_EQ(count_family(n, {FamilyTag::EqualTripleHead}),
                  static_cast<std::uint64_t>(oracle::count_partitions(n, oracle::equal_triple_head)));
        EXPECT_EQ(count_family(n, {FamilyTag::ConjugateButterfly}),
                  static_cast<std::uint64_t>(oracle::count_partitions(n, [](const oracle::Parts& p) {
                      return oracle::butterfly(oracle::conjugate(p));
                  })));
        EXPECT_EQ(unrestricted_count(n), static_cast<std::uint64_t>(oracle::p_table(n)[n]));
    }
}

TEST(Family, EveryVisitedPartitionIsAMember) {
    for (const std::string& name : family_names()) {
        const FamilySpec f = parse_family(name, 3);
        for_each_in_family(20, f, [&](PartsView parts) {
            EXPECT_TRUE(in_family(parts, f)) << name;
            std::int64_t sum = 0;
            for (Part x : parts) sum += x;
            EXPECT_EQ(sum, 20) << name;
        });
    }
}
