#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "butterfly/partition.hpp"

namespace butterfly {

// Strict nonempty partition of n-1 -> strict partition of n whose two largest
// parts differ by at least 2 (a lone part counts as differing from 0).
Partition raise_largest(const Partition& p);
Partition lower_largest(const Partition& p);

// Strict, two largest consecutive, smallest part 1, at least three parts (sum n-1)
// -> two largest consecutive, smallest >= 2, second part at least 2 above the third (sum n).
Partition butterfly_forward(const Partition& p);
Partition butterfly_backward(const Partition& p);

// Horizontal bar h <-> vertical bar h; swaps the parity of the second part.
Partition bar_forward(const Partition& p, int h);
Partition bar_backward(const Partition& p, int h);

enum class BijectionKind { Raise, Butterfly, Bar };

struct BijectionSpec {
    BijectionKind kind = BijectionKind::Raise;
    int h = 3;  // bar only
};

std::string to_string(const BijectionSpec& spec);

struct BijectionReport {
    BijectionSpec spec;
    int n_from = 0;
    int n_to = 0;
    std::uint64_t checked = 0;
    std::optional<std::string> counterexample;  // first failure, human readable

    bool ok() const noexcept { return !counterexample.has_value(); }
};

// For each n, maps every source member forward and checks target membership,
// injectivity, inversion and equal source/target counts.
BijectionReport verify_bijection(const BijectionSpec& spec, int n_from, int n_to);

}  // namespace butterfly
