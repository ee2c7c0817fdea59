#include "butterfly/family.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

#include "butterfly/errors.hpp"
#include "butterfly/odd_merge.hpp"

namespace butterfly {

namespace {

bool two_largest_consecutive(PartsView p) {
    return p.size() >= 2 && is_strict(p) && p[0] == p[1] + 1;
}

bool consecutive_prefix(PartsView p, std::size_t len) {
    if (p.size() < len) return false;
    for (std::size_t i = 1; i < len; ++i)
        if (p[i] != p[i - 1] - 1) return false;
    return true;
}

bool gaps_at_most_one(PartsView p) {
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i - 1] - p[i] > 1) return false;
    return true;
}

bool equal_triple_head(PartsView p) {
    if (p.size() < 3) return false;
    const Part a = p[0];
    if (a < 3 || p[1] != a || p[2] != a) return false;
    if (p.size() > 3 && p[3] > a - 2) return false;
    return is_strict(p.subspan(3)) && p.back() >= 2;
}

bool conjugate_butterfly(PartsView q) {
    const std::size_t h = q.size();
    return h >= 4 && q[0] == q[1] && gaps_at_most_one(q) && q[h - 1] == 1 && q[h - 2] == 2 &&
           q[h - 3] == 3;
}

bool conjugate_equal_triple(PartsView q) {
    const std::size_t h = q.size();
    return h >= 3 && q[0] == q[1] && gaps_at_most_one(q) && q[h - 1] == 3 && q[h - 2] == 3;
}

bool odd_parts_at_least(PartsView p, int b) {
    return std::all_of(p.begin(), p.end(), [b](Part x) { return x % 2 == 1 && x >= b; });
}

bool second_part_even(PartsView p) { return p.size() >= 2 && p[1] % 2 == 0; }

// Parts other than a trailing 2.
PartsView without_domino(PartsView p) {
    return (!p.empty() && p.back() == 2) ? p.first(p.size() - 1) : p;
}

bool horizontal_bar(PartsView p, int h, bool even) {
    if (h < 3 || !is_butterfly(p) || second_part_even(p) != even) return false;
    PartsView body = without_domino(p);
    if (body.empty() || body.back() != h) return false;
    if (body.size() < static_cast<std::size_t>(h) + 1) return false;  // h parts above the bar
    return consecutive_prefix(p, static_cast<std::size_t>(h));
}

bool vertical_bar(PartsView p, int h, bool even) {
    if (h < 3 || !is_butterfly(p) || second_part_even(p) != even) return false;
    PartsView body = without_domino(p);
    const auto hs = static_cast<std::size_t>(h);
    if (body.size() < hs || body.back() <= h) return false;
    if (!consecutive_prefix(p, hs) || p[hs - 1] < h + 2) return false;
    return p.size() == hs || p[hs] <= p[hs - 1] - 2;
}

bool butterfly_with_ones(PartsView p) {
    std::size_t ones = 0;
    while (ones < p.size() && p[p.size() - 1 - ones] == 1) ++ones;
    return ones <= 2 && is_butterfly(p.first(p.size() - ones));
}

bool distinct_not_powers_of_two(PartsView p) {
    return is_strict(p) &&
           std::none_of(p.begin(), p.end(), [](Part x) { return is_power_of_two(x); });
}

enum class Base { Strict, Unrestricted, GapAtMostOne, StrictPlusOnes };

struct Plan {
    Base base = Base::Strict;
    int min_part = 1;
    int head_consecutive = 0;  // first parts forced to step down by one
    int head_equal = 0;        // first parts forced equal
    bool odd_only = false;
};

// A candidate space that contains the family; membership is then decided by in_family.
Plan plan_for(const FamilySpec& f) {
    switch (f.tag) {
        case FamilyTag::Strict:
        case FamilyTag::DistinctNotPowersOfTwo: return {Base::Strict, 1, 0, 0, false};
        case FamilyTag::TwoLargestConsecutive:
        case FamilyTag::R2: return {Base::Strict, 1, 2, 0, false};
        case FamilyTag::R1:
        case FamilyTag::R1Prime: return {Base::Strict, 2, 2, 0, false};
        case FamilyTag::Butterfly:
        case FamilyTag::ButterflySecondEven:
        case FamilyTag::ButterflySecondOdd:
        case FamilyTag::BarAe:
        case FamilyTag::BarAo:
        case FamilyTag::BarBe:
        case FamilyTag::BarBo: return {Base::Strict, 2, 3, 0, false};
        case FamilyTag::EqualTripleHead: return {Base::Strict, 2, 0, 3, false};
        case FamilyTag::ConjugateButterfly: return {Base::GapAtMostOne, 1, 0, 2, false};
        case FamilyTag::ConjugateEqualTriple: return {Base::GapAtMostOne, 3, 0, 2, false};
        case FamilyTag::OddPartsAtLeast: return {Base::Unrestricted, std::max(1, f.param), 0, 0, true};
        case FamilyTag::OddFormStepI:
        case FamilyTag::OddFormStepII:
        case FamilyTag::OddFormSwitchedI:
        case FamilyTag::OddFormSwitchedII: return {Base::Unrestricted, 3, 0, 0, true};
        case FamilyTag::ButterflyWithOnes: return {Base::StrictPlusOnes, 1, 3, 0, false};
    }
    throw std::logic_error("unhandled family tag");
}

// Partitions of n into allowed parts, saturating.
std::uint64_t restricted_count(int n, int min_part, bool odd_only) {
    constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> ways(static_cast<std::size_t>(n) + 1, 0);
    ways[0] = 1;
    for (int part = std::max(1, min_part); part <= n; ++part) {
        if (odd_only && part % 2 == 0) continue;
        for (int s = part; s <= n; ++s) {
            auto& w = ways[static_cast<std::size_t>(s)];
            const auto add = ways[static_cast<std::size_t>(s - part)];
            w = (w > cap - add) ? cap : w + add;
        }
    }
    return ways[static_cast<std::size_t>(n)];
}

class Walker {
public:
    Walker(const Plan& plan, const PartsVisitor& visit) : plan_(plan), visit_(visit) {}

    void run(int n) {
        buf_.clear();
        ones_ = 0;
        descend(n);
    }

private:
    void descend(int remaining) {
        if (remaining == 0) {
            visit_(PartsView(buf_));
            return;
        }
        const auto depth = static_cast<int>(buf_.size());
        int hi = remaining;
        int lo = plan_.min_part;
        if (depth > 0) {
            const Part prev = buf_.back();
            if (depth < plan_.head_equal) {
                hi = std::min(hi, prev);
                lo = std::max(lo, prev);
            } else if (depth < plan_.head_consecutive) {
                hi = std::min(hi, prev - 1);
                lo = std::max(lo, prev - 1);
            } else {
                switch (plan_.base) {
                    case Base::Strict: hi = std::min(hi, prev - 1); break;
                    case Base::Unrestricted: hi = std::min(hi, prev); break;
                    case Base::GapAtMostOne:
                        hi = std::min(hi, prev);
                        lo = std::max(lo, prev - 1);
                        break;
                    case Base::StrictPlusOnes:
                        hi = std::min(hi, prev == 1 ? (ones_ < 2 ? 1 : 0) : prev - 1);
                        break;
                }
            }
        }
        const bool prune = plan_.base == Base::Strict && depth >= plan_.head_equal;
        for (int part = hi; part >= lo; --part) {
            if (plan_.odd_only && part % 2 == 0) continue;
            if (prune) {
                // Distinct parts in [min_part, part] must be able to reach the remainder.
                const std::int64_t top = part, bottom = plan_.min_part;
                if (top < bottom || (top + bottom) * (top - bottom + 1) / 2 < remaining) break;
            }
            buf_.push_back(part);
            if (part == 1) ++ones_;
            descend(remaining - part);
            if (part == 1) --ones_;
            buf_.pop_back();
        }
    }

    const Plan& plan_;
    const PartsVisitor& visit_;
    std::vector<Part> buf_;
    int ones_ = 0;
};

void check_limits(int n, const Plan& plan, const EnumerationLimits& limits) {
    if (n < 0) throw PreconditionError("n must be nonnegative");
    if (n > limits.max_n)
        throw ResourceLimitError("n = " + std::to_string(n) + " exceeds the enumeration limit " +
                                 std::to_string(limits.max_n));
    if (plan.base == Base::Unrestricted) {
        const auto candidates = restricted_count(n, plan.min_part, plan.odd_only);
        if (candidates > limits.max_candidates)
            throw ResourceLimitError("enumeration of n = " + std::to_string(n) + " would visit " +
                                     std::to_string(candidates) + " partitions");
    }
}

struct NamedFamily {
    std::string_view name;
    FamilyTag tag;
    int param;
};

constexpr std::array kNamed{
    NamedFamily{"strict", FamilyTag::Strict, 0},
    NamedFamily{"consecutive", FamilyTag::TwoLargestConsecutive, 0},
    NamedFamily{"r1", FamilyTag::R1, 0},
    NamedFamily{"r2", FamilyTag::R2, 0},
    NamedFamily{"r1p", FamilyTag::R1Prime, 0},
    NamedFamily{"butterfly", FamilyTag::Butterfly, 0},
    NamedFamily{"equal-triple", FamilyTag::EqualTripleHead, 0},
    NamedFamily{"conj-butterfly", FamilyTag::ConjugateButterfly, 0},
    NamedFamily{"conj-triple", FamilyTag::ConjugateEqualTriple, 0},
    NamedFamily{"odd", FamilyTag::OddPartsAtLeast, 1},
    NamedFamily{"odd3", FamilyTag::OddPartsAtLeast, 3},
    NamedFamily{"odd5", FamilyTag::OddPartsAtLeast, 5},
    NamedFamily{"butterfly-even", FamilyTag::ButterflySecondEven, 0},
    NamedFamily{"butterfly-odd", FamilyTag::ButterflySecondOdd, 0},
    NamedFamily{"odd-form-i", FamilyTag::OddFormStepI, 0},
    NamedFamily{"odd-form-ii", FamilyTag::OddFormStepII, 0},
    NamedFamily{"odd-form-switched-i", FamilyTag::OddFormSwitchedI, 0},
    NamedFamily{"odd-form-switched-ii", FamilyTag::OddFormSwitchedII, 0},
    NamedFamily{"bar-ae", FamilyTag::BarAe, -1},
    NamedFamily{"bar-ao", FamilyTag::BarAo, -1},
    NamedFamily{"bar-be", FamilyTag::BarBe, -1},
    NamedFamily{"bar-bo", FamilyTag::BarBo, -1},
    NamedFamily{"butterfly-ones", FamilyTag::ButterflyWithOnes, 0},
    NamedFamily{"distinct-no-pow2", FamilyTag::DistinctNotPowersOfTwo, 0},
};

}  // namespace

FamilySpec FamilySpec::odd_parts_at_least(int b) {
    if (b < 1 || b % 2 == 0) throw PreconditionError("odd-part bound must be a positive odd integer");
    return {FamilyTag::OddPartsAtLeast, b};
}

FamilySpec FamilySpec::bar(FamilyTag tag, int h) {
    if (tag != FamilyTag::BarAe && tag != FamilyTag::BarAo && tag != FamilyTag::BarBe &&
        tag != FamilyTag::BarBo)
        throw PreconditionError("not a bar family");
    if (h < 3) throw PreconditionError("bar size must be at least 3");
    return {tag, h};
}

std::string family_name(const FamilySpec& f) {
    for (const auto& nf : kNamed) {
        if (nf.tag != f.tag) continue;
        if (nf.param == -1) return std::string(nf.name) + ":" + std::to_string(f.param);
        if (nf.param == f.param || f.tag != FamilyTag::OddPartsAtLeast) return std::string(nf.name);
    }
    if (f.tag == FamilyTag::OddPartsAtLeast) return "odd" + std::to_string(f.param);
    throw std::logic_error("unnamed family");
}

FamilySpec parse_family(std::string_view name, int h) {
    if (name == "r1pp") name = "butterfly";
    if (name == "r") name = "consecutive";
    if (auto colon = name.find(':'); colon != std::string_view::npos) {
        h = std::stoi(std::string(name.substr(colon + 1)));
        name = name.substr(0, colon);
    }
    for (const auto& nf : kNamed) {
        if (nf.name != name) continue;
        if (nf.param == -1) return FamilySpec::bar(nf.tag, h);
        return {nf.tag, nf.param};
    }
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

std::vector<std::string> family_names() {
    std::vector<std::string> out;
    for (const auto& nf : kNamed) out.emplace_back(nf.name);
    return out;
}

bool in_family(PartsView p, const FamilySpec& f) {
    switch (f.tag) {
        case FamilyTag::Strict: return is_strict(p);
        case FamilyTag::TwoLargestConsecutive: return two_largest_consecutive(p);
        case FamilyTag::R1: return two_largest_consecutive(p) && p.back() >= 2;
        case FamilyTag::R2: return two_largest_consecutive(p) && p.back() == 1;
        case FamilyTag::R1Prime:
            return two_largest_consecutive(p) && p.back() >= 2 && (p.size() == 2 || p[1] - p[2] >= 2);
        case FamilyTag::Butterfly: return is_butterfly(p);
        case FamilyTag::EqualTripleHead: return equal_triple_head(p);
        case FamilyTag::ConjugateButterfly: return conjugate_butterfly(p);
        case FamilyTag::ConjugateEqualTriple: return conjugate_equal_triple(p);
        case FamilyTag::OddPartsAtLeast: return odd_parts_at_least(p, f.param);
        case FamilyTag::ButterflySecondEven: return is_butterfly(p) && second_part_even(p);
        case FamilyTag::ButterflySecondOdd: return is_butterfly(p) && !second_part_even(p);
        case FamilyTag::OddFormStepI: return is_odd_form(p, OddForm::StepI);
        case FamilyTag::OddFormStepII: return is_odd_form(p, OddForm::StepII);
        case FamilyTag::OddFormSwitchedI: return is_odd_form(p, OddForm::SwitchedI);
        case FamilyTag::OddFormSwitchedII: return is_odd_form(p, OddForm::SwitchedII);
        case FamilyTag::BarAe: return horizontal_bar(p, f.param, true);
        case FamilyTag::BarAo: return horizontal_bar(p, f.param, false);
        case FamilyTag::BarBe: return vertical_bar(p, f.param, true);
        case FamilyTag::BarBo: return vertical_bar(p, f.param, false);
        case FamilyTag::ButterflyWithOnes: return butterfly_with_ones(p);
        case FamilyTag::DistinctNotPowersOfTwo: return distinct_not_powers_of_two(p);
    }
    return false;
}

void for_each_in_family(int n, const FamilySpec& f, const PartsVisitor& visit,
                        const EnumerationLimits& limits) {
    const Plan plan = plan_for(f);
    check_limits(n, plan, limits);
    const PartsVisitor filter = [&](PartsView parts) {
        if (in_family(parts, f)) visit(parts);
    };
    Walker(plan, filter).run(n);
}

std::vector<Partition> enumerate_family(int n, const FamilySpec& f, const EnumerationLimits& limits) {
    std::vector<Partition> out;
    for_each_in_family(
        n, f,
        [&](PartsView parts) {
            if (out.size() >= limits.max_results)
                throw ResourceLimitError("more than " + std::to_string(limits.max_results) +
                                         " members; use count_family");
            out.emplace_back(std::vector<Part>(parts.begin(), parts.end()));
        },
        limits);
    return out;
}

std::uint64_t count_family(int n, const FamilySpec& f, const EnumerationLimits& limits) {
    std::uint64_t count = 0;
    for_each_in_family(n, f, [&](PartsView) { ++count; }, limits);
    return count;
}

std::uint64_t unrestricted_count(int n) { return n < 0 ? 0 : restricted_count(n, 1, false); }

void for_each_partition(int n, int min_part, const PartsVisitor& visit, const EnumerationLimits& limits) {
    const Plan plan{Base::Unrestricted, std::max(1, min_part), 0, 0, false};
    check_limits(n, plan, limits);
    Walker(plan, visit).run(n);
}

}  // namespace butterfly
