#include "butterfly/odd_merge.hpp"

#include <algorithm>
#include <functional>

#include "butterfly/errors.hpp"
#include "butterfly/family.hpp"

namespace butterfly {

namespace {

bool all_odd_at_least_three(PartsView q) {
    return std::all_of(q.begin(), q.end(), [](Part x) { return x % 2 == 1 && x >= 3; });
}

bool has_sentinel(OddForm form) { return form == OddForm::StepI || form == OddForm::SwitchedI; }

bool equal_head(OddForm form) { return form == OddForm::StepI || form == OddForm::SwitchedII; }

bool head_shape_fits(PartsView q, OddForm form) {
    if (!all_odd_at_least_three(q)) return false;
    const std::size_t min_len = has_sentinel(form) ? 4 : 3;
    if (q.size() < min_len) return false;
    if (has_sentinel(form) && q.back() != 3) return false;
    if (equal_head(form)) return q[1] == q[2];
    return q[1] == q[2] + 2 && q[0] >= q[1] + 2;
}

bool is_exactly(PartsView q, std::initializer_list<Part> parts) {
    return std::equal(q.begin(), q.end(), parts.begin(), parts.end());
}

// The second-part-even butterflies with p2 = 4 have no switched head (q3 would be 1);
// the switched variant routes them through the unswitched even split.
bool switched_initial(PartsView q) { return is_exactly(q, {3, 3, 3, 3}) || is_exactly(q, {5, 3, 3, 3}); }

CapCheck make_cap(std::int64_t factor, std::int64_t multiplicity, std::int64_t bound) {
    CapCheck c;
    c.factor = factor;
    c.multiplicity = multiplicity;
    c.bound = bound;
    c.applicable = multiplicity > 0;
    if (c.applicable) {
        c.largest_power = largest_power_of_two(multiplicity);
        c.satisfied = c.largest_part() <= bound;
        c.tight = c.satisfied && 2 * c.largest_part() > bound;
    }
    return c;
}

struct Tail {
    std::int64_t two_t = 0;
    std::vector<Part> odd;  // odd parts in non-increasing order
};

// Euler splitting of the parts below the three-part head.
Tail split_tail(PartsView rest) {
    Tail tail;
    for (Part part : rest) {
        if (is_power_of_two(part)) {
            tail.two_t += part;
            continue;
        }
        Part odd = part;
        std::int64_t copies = 1;
        while (odd % 2 == 0) {
            odd /= 2;
            copies *= 2;
        }
        tail.odd.insert(tail.odd.end(), static_cast<std::size_t>(copies), odd);
    }
    return tail;
}

Partition assemble(std::vector<Part> head, const Tail& tail, bool sentinel) {
    head.insert(head.end(), tail.odd.begin(), tail.odd.end());
    if (sentinel) head.push_back(3);
    return Partition::from_unsorted(std::move(head));
}

void require_butterfly(const Partition& p, const char* what) {
    if (!is_butterfly(p.view())) throw PreconditionError(std::string(what) + ": not a butterfly partition");
}

Part second_part(const Partition& p) { return p[1]; }

// Emits multiplier * 2^i for each set bit i of count.
void emit_binary(std::vector<Part>& out, std::int64_t count, std::int64_t multiplier) {
    for (std::int64_t bit = 1; count > 0; bit *= 2, count /= 2)
        if (count % 2) out.push_back(static_cast<Part>(multiplier * bit));
}

Partition reconstruct(const Partition& q, OddForm form) {
    MergeCaps caps;
    try {
        caps = caps_of(q, form);
    } catch (const PreconditionError& e) {
        throw MergeError(MergeError::Reason::UnknownShape, e.what());
    }
    if (!caps.all_satisfied())
        throw MergeError(MergeError::Reason::CapsViolated,
                         to_string(q) + " violates a merging cap of " + to_string(form));

    std::vector<Part> parts;
    switch (form) {
        case OddForm::StepI: parts = {q[2] + 2, q[2] + 1, q[2]}; break;
        case OddForm::StepII: parts = {q[1] + 1, q[1], q[1] - 1}; break;
        case OddForm::SwitchedI: parts = {q[1] + 2, q[1] + 1, q[1]}; break;
        case OddForm::SwitchedII: parts = {q[2] + 1, q[2], q[2] - 1}; break;
    }
    emit_binary(parts, caps.two_t / 2, 2);
    for (const auto& [odd, count] : caps.u_by_q) emit_binary(parts, count, odd);
    emit_binary(parts, caps.v, 3);

    Partition p = Partition::from_unsorted(std::move(parts));
    if (!is_butterfly(p.view()))
        throw MergeError(MergeError::Reason::NotStrict,
                         to_string(q) + " merges to " + to_string(p) + ", which is not a butterfly partition");
    return p;
}

}  // namespace

const char* to_string(OddForm form) {
    switch (form) {
        case OddForm::StepI: return "step-i";
        case OddForm::StepII: return "step-ii";
        case OddForm::SwitchedI: return "switched-i";
        case OddForm::SwitchedII: return "switched-ii";
    }
    return "?";
}

const char* to_string(SplitVariant variant) {
    return variant == SplitVariant::Standard ? "standard" : "switched";
}

bool MergeCaps::all_satisfied() const noexcept {
    if (!two_t_cap.satisfied || !v_cap.satisfied) return false;
    return std::all_of(u_caps.begin(), u_caps.end(), [](const auto& kv) { return kv.second.satisfied; });
}

Partition split_even(const Partition& p) {
    require_butterfly(p, "split_even");
    if (second_part(p) % 2 != 0) throw PreconditionError("split_even: second part is odd");
    const Part m = second_part(p) / 2;
    const Tail tail = split_tail(p.view().subspan(3));
    const auto two_t = static_cast<Part>(tail.two_t);
    return assemble({2 * m - 1 + two_t, 2 * m - 1, 2 * m - 1}, tail, true);
}

Partition split_odd(const Partition& p) {
    require_butterfly(p, "split_odd");
    if (second_part(p) % 2 == 0) throw PreconditionError("split_odd: second part is even");
    if (p == Partition{4, 3, 2}) return Partition{3, 3, 3};
    const Part m = p[0] / 2;
    const Tail tail = split_tail(p.view().subspan(3));
    const auto two_t = static_cast<Part>(tail.two_t);
    return assemble({2 * m + 1 + two_t, 2 * m - 1, 2 * m - 3}, tail, false);
}

Partition split_switched(const Partition& p) {
    require_butterfly(p, "split_switched");
    const Tail tail = split_tail(p.view().subspan(3));
    const auto two_t = static_cast<Part>(tail.two_t);
    if (second_part(p) % 2 == 0) {
        const Part m = second_part(p) / 2;
        if (m == 2) return split_even(p);
        return assemble({2 * m + 1 + two_t, 2 * m - 1, 2 * m - 3}, tail, true);
    }
    const Part m = p[0] / 2;
    return assemble({2 * m - 1 + two_t, 2 * m - 1, 2 * m - 1}, tail, false);
}

Partition split(const Partition& p, SplitVariant variant) {
    if (variant == SplitVariant::Switched) return split_switched(p);
    require_butterfly(p, "split");
    return second_part(p) % 2 == 0 ? split_even(p) : split_odd(p);
}

std::optional<OddForm> route(const Partition& q, SplitVariant variant) {
    const PartsView v = q.view();
    if (v.size() < 3 || !all_odd_at_least_three(v)) return std::nullopt;
    if (variant == SplitVariant::Standard) {
        if (is_exactly(v, {3, 3, 3})) return OddForm::StepII;
        if (v[1] == v[2]) return OddForm::StepI;
        if (v[1] == v[2] + 2) return OddForm::StepII;
        return std::nullopt;
    }
    if (switched_initial(v)) return OddForm::StepI;
    if (v[1] == v[2] + 2) return OddForm::SwitchedI;
    if (v[1] == v[2]) return OddForm::SwitchedII;
    return std::nullopt;
}

MergeCaps caps_of(const Partition& q, OddForm form) {
    const PartsView v = q.view();
    MergeCaps caps;
    caps.form = form;
    if (form == OddForm::StepII && is_exactly(v, {3, 3, 3})) {
        caps.bound = 2;
        return caps;
    }
    if (!head_shape_fits(v, form))
        throw PreconditionError(to_string(q) + " does not have the " + to_string(form) + " head shape");

    const std::int64_t q1 = v[0], q2 = v[1], q3 = v[2];
    switch (form) {
        case OddForm::StepI:
            caps.two_t = q1 - q2;
            caps.bound = q3 - 1;
            break;
        case OddForm::StepII:
            caps.two_t = q1 - q2 - 2;
            caps.bound = q3;
            break;
        case OddForm::SwitchedI:
            caps.two_t = q1 - q2 - 2;
            caps.bound = q3 + 1;
            break;
        case OddForm::SwitchedII:
            caps.two_t = q1 - q2;
            caps.bound = q3 - 2;
            break;
    }
    const std::size_t tail_end = has_sentinel(form) ? v.size() - 1 : v.size();
    for (std::size_t i = 3; i < tail_end; ++i) {
        if (v[i] == 3)
            ++caps.v;
        else
            ++caps.u_by_q[v[i]];
    }
    caps.two_t_cap = make_cap(2, caps.two_t / 2, caps.bound);
    for (const auto& [odd, count] : caps.u_by_q) caps.u_caps[odd] = make_cap(odd, count, caps.bound);
    caps.v_cap = make_cap(3, caps.v, caps.bound);
    return caps;
}

Partition merge_odd(const Partition& q, SplitVariant variant) {
    const auto form = route(q, variant);
    if (!form)
        throw MergeError(MergeError::Reason::UnknownShape,
                         to_string(q) + " matches no " + to_string(variant) + " head shape");
    if (variant == SplitVariant::Standard && q == Partition{3, 3, 3}) return Partition{4, 3, 2};
    return reconstruct(q, *form);
}

bool is_odd_form(PartsView q, OddForm form) {
    if (form == OddForm::StepII && is_exactly(q, {3, 3, 3})) return true;
    if (form == OddForm::SwitchedI && switched_initial(q)) return true;
    if (!head_shape_fits(q, form)) return false;
    return caps_of(Partition(std::vector<Part>(q.begin(), q.end())), form).all_satisfied();
}

CappedCounts count_capped(int n, SplitVariant variant) {
    const OddForm even_form = variant == SplitVariant::Standard ? OddForm::StepI : OddForm::SwitchedI;
    const OddForm odd_form = variant == SplitVariant::Standard ? OddForm::StepII : OddForm::SwitchedII;
    CappedCounts counts;
    for_each_in_family(n, FamilySpec::odd_parts_at_least(3), [&](PartsView q) {
        if (is_odd_form(q, even_form)) ++counts.even;
        if (is_odd_form(q, odd_form)) ++counts.odd;
    });
    return counts;
}

}  // namespace butterfly
