#include "butterfly/sequences.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include "butterfly/errors.hpp"

namespace butterfly {

namespace {

std::int64_t count(int n, const FamilySpec& f, const EnumerationLimits& limits) {
    return static_cast<std::int64_t>(count_family(n, f, limits));
}

std::int64_t count_if_in(int n, FamilyTag tag, const EnumerationLimits& limits,
                         bool (*keep)(PartsView)) {
    std::int64_t c = 0;
    for_each_in_family(n, FamilySpec{tag, 0}, [&](PartsView p) { c += keep(p) ? 1 : 0; }, limits);
    return c;
}

std::int64_t partitions_min(int n, int min_part, const EnumerationLimits& limits,
                            bool largest_repeated) {
    std::int64_t c = 0;
    for_each_partition(n, min_part, [&](PartsView p) {
        if (!largest_repeated || (p.size() >= 2 && p[0] == p[1])) ++c;
    }, limits);
    return c;
}

bool even_head(PartsView p) { return p[0] % 2 == 0; }
bool odd_head(PartsView p) { return p[0] % 2 != 0; }
bool even_length(PartsView p) { return p.size() % 2 == 0; }
bool odd_length(PartsView p) { return p.size() % 2 != 0; }

struct Entry {
    const char* name;
    std::int64_t offset;
    std::int64_t (*term)(int n, const EnumerationLimits& limits);
};

const std::array<Entry, 19> kCatalogue{{
    {"q", 0, [](int n, const EnumerationLimits& l) { return count(n, {FamilyTag::Strict}, l); }},
    {"r", 0, [](int n, const EnumerationLimits& l) { return count(n, {FamilyTag::TwoLargestConsecutive}, l); }},
    {"s", 0, [](int n, const EnumerationLimits& l) { return count(n, {FamilyTag::Butterfly}, l); }},
    {"t", 0, [](int n, const EnumerationLimits& l) { return count(n, FamilySpec::odd_parts_at_least(5), l); }},
    {"r1", 3, [](int n, const EnumerationLimits& l) { return count(n, {FamilyTag::R1}, l); }},
    {"r2", 3, [](int n, const EnumerationLimits& l) { return count(n, {FamilyTag::R2}, l); }},
    {"r1p", 5, [](int n, const EnumerationLimits& l) { return count(n, {FamilyTag::R1Prime}, l); }},
    {"r1pp", 5, [](int n, const EnumerationLimits& l) { return count(n, {FamilyTag::Butterfly}, l); }},
    {"s_e", 6, [](int n, const EnumerationLimits& l) { return count(n, {FamilyTag::ButterflySecondEven}, l); }},
    {"s_o", 6, [](int n, const EnumerationLimits& l) { return count(n, {FamilyTag::ButterflySecondOdd}, l); }},
    {"p", 0, [](int n, const EnumerationLimits& l) { return partitions_min(n, 1, l, false); }},
    {"dp", 0, [](int n, const EnumerationLimits& l) { return partitions_min(n, 2, l, false); }},
    {"d2p", 0, [](int n, const EnumerationLimits& l) { return partitions_min(n, 2, l, true); }},
    {"e", 6, [](int n, const EnumerationLimits& l) { return count_if_in(n, FamilyTag::EqualTripleHead, l, even_head); }},
    {"o", 6, [](int n, const EnumerationLimits& l) { return count_if_in(n, FamilyTag::EqualTripleHead, l, odd_head); }},
    {"e_prime", 6, [](int n, const EnumerationLimits& l) { return count_if_in(n, FamilyTag::ConjugateButterfly, l, even_length); }},
    {"o_prime", 6, [](int n, const EnumerationLimits& l) { return count_if_in(n, FamilyTag::ConjugateButterfly, l, odd_length); }},
    {"e_dprime", 6, [](int n, const EnumerationLimits& l) { return count_if_in(n, FamilyTag::ConjugateEqualTriple, l, even_length); }},
    {"o_dprime", 6, [](int n, const EnumerationLimits& l) { return count_if_in(n, FamilyTag::ConjugateEqualTriple, l, odd_length); }},
}};

const Entry& entry(std::string_view name) {
    for (const auto& e : kCatalogue)
        if (name == e.name) return e;
    throw std::invalid_argument("unknown sequence '" + std::string(name) + "'");
}

SequenceTable raw_table(const Entry& e, std::int64_t N, const EnumerationLimits& limits) {
    SequenceTable t{e.name, e.offset, {}, Provenance::Enumerated};
    for (std::int64_t n = e.offset; n <= N; ++n) t.values.push_back(e.term(static_cast<int>(n), limits));
    return t;
}

// Below its family threshold a difference of q is taken from the difference
// operator; above it the family count and the difference must agree.
SequenceTable difference_backed(const Entry& e, int order, std::int64_t threshold, std::int64_t N,
                                const EnumerationLimits& limits) {
    SequenceTable d = raw_table(entry("q"), N, limits);
    for (int i = 0; i < order; ++i) d = difference(d);
    d.name = e.name;
    for (std::int64_t n = threshold; n <= N; ++n) {
        const std::int64_t by_family = e.term(static_cast<int>(n), limits);
        if (by_family != d.at(n))
            throw std::logic_error(std::string(e.name) + "(" + std::to_string(n) +
                                   "): family count disagrees with the difference of q");
    }
    return d;
}

}  // namespace

const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::Enumerated: return "enumerated";
        case Provenance::Series: return "series";
        case Provenance::Recurrence: return "recurrence";
    }
    return "?";
}

std::int64_t SequenceTable::at(std::int64_t n) const {
    if (!covers(n))
        throw std::out_of_range(name + ": index " + std::to_string(n) + " outside [" +
                                std::to_string(offset) + ", " + std::to_string(last()) + "]");
    return values[static_cast<std::size_t>(n - offset)];
}

std::int64_t SequenceTable::value_or_zero(std::int64_t n) const { return n < offset ? 0 : at(n); }

SequenceTable difference(const SequenceTable& t) {
    SequenceTable d{t.name.empty() ? std::string{} : "d" + t.name, t.offset, {}, t.provenance};
    d.values.reserve(t.values.size());
    std::int64_t previous = 0;
    for (std::int64_t v : t.values) {
        d.values.push_back(v - previous);
        previous = v;
    }
    return d;
}

std::vector<std::string> sequence_names() {
    std::vector<std::string> names;
    for (const auto& e : kCatalogue) names.emplace_back(e.name);
    return names;
}

std::int64_t sequence_offset(std::string_view name) { return entry(name).offset; }

SequenceTable named_sequence(std::string_view name, std::int64_t N, const EnumerationLimits& limits) {
    const Entry& e = entry(name);
    if (N < e.offset)
        throw PreconditionError(std::string(e.name) + " starts at " + std::to_string(e.offset));
    if (N > limits.max_n)
        throw ResourceLimitError("N = " + std::to_string(N) + " exceeds the enumeration limit " +
                                 std::to_string(limits.max_n));
    if (name == "r") return difference_backed(e, 1, 3, N, limits);
    if (name == "s") return difference_backed(e, 2, 6, N, limits);
    return raw_table(e, N, limits);
}

SequenceTable mod3_slices(const SequenceTable& s, int residue, std::int64_t m0) {
    if (residue < 0 || residue > 2) throw PreconditionError("residue must be 0, 1 or 2");
    SequenceTable out{s.name + "(3m+" + std::to_string(residue) + ")", m0, {}, s.provenance};
    for (std::int64_t m = m0; 3 * m + residue <= s.last(); ++m) out.values.push_back(s.value_or_zero(3 * m + residue));
    return out;
}

std::optional<ExceptionalForm> exceptional_form(std::int64_t n) {
    // Each form is increasing in t, so scan until all four exceed n.
    for (std::int64_t t = 2;; ++t) {
        const std::int64_t u = t + 1;
        const std::array<std::int64_t, 4> forms{
            (3 * t * t + t + 4) / 2,
            (3 * u * u - t - 1) / 2,
            (3 * u * u - t + 3) / 2,
            (3 * u * u + t + 1) / 2,
        };
        for (int i = 0; i < 4; ++i)
            if (forms[static_cast<std::size_t>(i)] == n) return ExceptionalForm{i + 1, t};
        if (forms[0] > n) return std::nullopt;
    }
}

std::vector<std::int64_t> parity_exception_inputs(std::int64_t N) {
    std::vector<std::int64_t> out;
    for (std::int64_t n = 0; n <= N; ++n)
        if (exceptional_form(n)) out.push_back(n);
    return out;
}

std::string to_bfile(const SequenceTable& t) {
    std::ostringstream os;
    for (std::size_t i = 0; i < t.values.size(); ++i)
        os << t.offset + static_cast<std::int64_t>(i) << ' ' << t.values[i] << '\n';
    return os.str();
}

std::string to_json(const SequenceTable& t) {
    std::ostringstream os;
    os << "{\"name\":\"" << t.name << "\",\"offset\":" << t.offset << ",\"provenance\":\""
       << to_string(t.provenance) << "\",\"values\":[";
    for (std::size_t i = 0; i < t.values.size(); ++i) os << (i ? "," : "") << t.values[i];
    os << "]}";
    return os.str();
}

}  // namespace butterfly
