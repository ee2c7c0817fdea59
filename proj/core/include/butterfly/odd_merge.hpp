#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "butterfly/partition.hpp"

namespace butterfly {

enum class SplitVariant { Standard, Switched };

// Head shapes of the odd-part images.
//   StepI      q1 = 2m-1+2t, q2 = q3 = 2m-1, trailing sentinel 3   (second part even)
//   StepII     q1 = 2m+1+2t, q2 = 2m-1, q3 = 2m-3                 (second part odd)
//   SwitchedI  q1 = 2m+1+2t, q2 = 2m-1, q3 = 2m-3, sentinel 3     (second part even)
//   SwitchedII q1 = 2m-1+2t, q2 = q3 = 2m-1                        (second part odd)
enum class OddForm { StepI, StepII, SwitchedI, SwitchedII };

const char* to_string(OddForm form);
const char* to_string(SplitVariant variant);

// One merging cap: factor * largest_power(multiplicity) <= bound.
struct CapCheck {
    std::int64_t factor = 0;        // 2 for the 2t cap, q for u(q), 3 for v
    std::int64_t multiplicity = 0;  // t, u(q) or v
    std::int64_t largest_power = 0; // 0 when the multiplicity is 0
    std::int64_t bound = 0;
    bool applicable = false;
    bool satisfied = true;
    // The largest merged part reaches the bound's power-of-two ceiling.
    bool tight = false;

    std::int64_t largest_part() const noexcept { return factor * largest_power; }
};

struct MergeCaps {
    OddForm form = OddForm::StepI;
    std::int64_t two_t = 0;
    std::map<int, std::int64_t> u_by_q;  // odd q >= 5 in the tail
    std::int64_t v = 0;                  // parts equal to 3 in the tail, sentinel excluded
    std::int64_t bound = 0;              // largest admissible merged part
    CapCheck two_t_cap;
    std::map<int, CapCheck> u_caps;
    CapCheck v_cap;

    bool all_satisfied() const noexcept;
};

Partition split_even(const Partition& p);
Partition split_odd(const Partition& p);
Partition split_switched(const Partition& p);
Partition split(const Partition& p, SplitVariant variant);

// Form a merge under `variant` would use for q, or nullopt if no head shape fits.
std::optional<OddForm> route(const Partition& q, SplitVariant variant);

// Throws PreconditionError if q does not have the head shape of `form`.
MergeCaps caps_of(const Partition& q, OddForm form);

// Throws MergeError.
Partition merge_odd(const Partition& q, SplitVariant variant);

// Membership in the image of the split for `form`, including the small initial cases.
bool is_odd_form(PartsView q, OddForm form);

struct CappedCounts {
    std::uint64_t even = 0;  // images of second-part-even butterflies
    std::uint64_t odd = 0;

    friend bool operator==(const CappedCounts&, const CappedCounts&) = default;
};

CappedCounts count_capped(int n, SplitVariant variant);

}  // namespace butterfly
