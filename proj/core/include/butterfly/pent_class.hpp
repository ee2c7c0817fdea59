#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "butterfly/partition.hpp"
#include "butterfly/sequences.hpp"

namespace butterfly {

enum class PentKind {
    Pentagonal,           // 2h-1 > ... > h
    GenPentagonal,        // 2h > ... > h+1
    PentagonalDomino,     // pentagonal plus a part 2
    GenPentagonalDomino,  // generalized pentagonal plus a part 2
    NonPentHBar,          // removable part h
    NonPentVBar,          // removable column of height h
};

const char* to_string(PentKind kind);

struct PentClass {
    PentKind kind = PentKind::Pentagonal;
    int h = 0;

    friend bool operator==(const PentClass&, const PentClass&) = default;
};

Partition make_pentagonal(PentKind kind, int h);
PentClass classify(const Partition& p);

struct BarSets {
    std::vector<Partition> a_even, a_odd, b_even, b_odd;
};

BarSets enumerate_bars(int n, int h);

enum class ParityRelation { Equal, EvenMinusOne, EvenPlusOne };

const char* to_string(ParityRelation r);

struct ParityWitness {
    ParityRelation relation = ParityRelation::Equal;
    std::optional<ExceptionalForm> form;
};

ParityWitness parity_relation(std::int64_t n);

struct CorollaryCounts {
    std::int64_t n = 0;
    std::uint64_t s = 0, s_even = 0, s_odd = 0;
    std::uint64_t e = 0, o = 0;              // equal-triple heads, triple even / odd
    std::uint64_t e_prime = 0, o_prime = 0;  // conjugate butterflies, even / odd part count
    std::uint64_t e_dprime = 0, o_dprime = 0;  // conjugate equal-triples, even / odd part count
    ParityRelation relation = ParityRelation::Equal;

    bool halving_holds() const;        // s against 2 s_even
    bool triple_parity_holds() const;  // e against o
    bool conjugate_parity_holds() const;
    bool conjugate_triple_parity_holds() const;
};

CorollaryCounts corollary_counts(int n);

}  // namespace butterfly
