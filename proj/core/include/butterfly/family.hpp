#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "butterfly/partition.hpp"

namespace butterfly {

enum class FamilyTag {
    Strict,
    TwoLargestConsecutive,   // strict, at least two parts, p1 = p2 + 1
    R1,                      // ... and smallest part >= 2
    R2,                      // ... and smallest part = 1
    R1Prime,                 // R1 with two parts, or p2 - p3 >= 2
    Butterfly,               // strict, k >= 3, p1 = p2 + 1 = p3 + 2, smallest >= 2
    EqualTripleHead,         // a = p1 = p2 = p3 >= 3, tail distinct, p4 <= a - 2, smallest >= 2
    ConjugateButterfly,      // conjugates of butterfly partitions
    ConjugateEqualTriple,    // conjugates of EqualTripleHead partitions
    OddPartsAtLeast,         // all parts odd and >= param
    ButterflySecondEven,
    ButterflySecondOdd,
    OddFormStepI,            // image of the even-second split, caps included
    OddFormStepII,           // image of the odd-second split, caps included
    OddFormSwitchedI,        // switched even-second image, caps included
    OddFormSwitchedII,       // switched odd-second image, caps included
    BarAe,                   // horizontal bar param, second part even
    BarAo,
    BarBe,                   // vertical bar param, second part even
    BarBo,
    ButterflyWithOnes,       // butterfly body followed by zero, one or two parts equal to 1
    DistinctNotPowersOfTwo,
};

struct FamilySpec {
    FamilyTag tag = FamilyTag::Strict;
    int param = 0;  // b for OddPartsAtLeast, h for the bar sets

    static FamilySpec odd_parts_at_least(int b);
    static FamilySpec bar(FamilyTag tag, int h);

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// Identifier used on the command line, e.g. "butterfly", "odd5", "bar-ae:3".
std::string family_name(const FamilySpec& f);
FamilySpec parse_family(std::string_view name, int h = 3);
std::vector<std::string> family_names();

bool in_family(PartsView parts, const FamilySpec& f);
inline bool in_family(const Partition& p, const FamilySpec& f) { return in_family(p.view(), f); }

struct EnumerationLimits {
    int max_n = 200;
    // Refuse unrestricted walks whose candidate count p(n) exceeds this.
    std::uint64_t max_candidates = 50'000'000;
    // Refuse to materialize more results than this.
    std::size_t max_results = 10'000'000;
};

using PartsVisitor = std::function<void(PartsView)>;

// Visits members of f summing to n in lexicographically decreasing order.
void for_each_in_family(int n, const FamilySpec& f, const PartsVisitor& visit,
                        const EnumerationLimits& limits = {});
std::vector<Partition> enumerate_family(int n, const FamilySpec& f,
                                        const EnumerationLimits& limits = {});
std::uint64_t count_family(int n, const FamilySpec& f, const EnumerationLimits& limits = {});

// Every partition of n with parts >= min_part, in lexicographically decreasing order.
void for_each_partition(int n, int min_part, const PartsVisitor& visit,
                        const EnumerationLimits& limits = {});

// Number of unrestricted partitions of n, saturating at UINT64_MAX.
std::uint64_t unrestricted_count(int n);

}  // namespace butterfly
