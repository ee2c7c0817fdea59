#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "butterfly/sequences.hpp"

namespace butterfly {

enum class ScheduleKind {
    PentagonalPairs,  // 3k^2 - k and 3k^2 + k for k >= 1, sign (-1)^k
    Triangular,       // k(k+1)/2 for k >= 0, sign +1
};

struct Offset {
    std::int64_t value = 0;
    int sign = 1;
};

// Offsets not exceeding bound, ascending.
std::vector<Offset> offsets(ScheduleKind kind, std::int64_t bound);

enum class Basis { P, DP, D2P, PWithPoly };

const char* to_string(Basis b);

struct BasisTables {
    SequenceTable p, dp, d2p;
};

// p, dp and the combinatorial d2p (no part 1, largest part repeated) by enumeration.
BasisTables enumerated_basis(std::int64_t N, const EnumerationLimits& limits = {});
// p, dp and the second difference of p from product expansions.
BasisTables series_basis(int N);

// Pentagonal-offset sums; name in {q, r, s}. Invalid name/basis pairs throw std::invalid_argument.
std::int64_t recur_value(std::string_view name, std::int64_t m, Basis basis, const BasisTables& tables);
// Triangular-offset sums over the arguments (m - j - k(k+1)/2) / 2.
std::int64_t triangular_value(std::string_view name, std::int64_t m, Basis basis,
                              const BasisTables& tables);

// table(m) + sum_{k>=1} (-1)^k [table(m-3k^2+k) + table(m-3k^2-k)].
std::int64_t checksum(const SequenceTable& table, std::int64_t m);
// Triangular case analysis; name in {q, r, s, t}.
std::int64_t expected_checksum(std::string_view name, std::int64_t m);
// Rebuilds name(0..N) from the checksum relation alone.
SequenceTable recursive_solve(std::string_view name, std::int64_t N);

}  // namespace butterfly
