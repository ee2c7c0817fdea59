#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "butterfly/family.hpp"

namespace butterfly {

enum class Provenance { Enumerated, Series, Recurrence };

const char* to_string(Provenance p);

struct SequenceTable {
    std::string name;
    std::int64_t offset = 0;
    std::vector<std::int64_t> values;  // values[i] is the term at offset + i
    Provenance provenance = Provenance::Enumerated;

    std::int64_t last() const noexcept { return offset + static_cast<std::int64_t>(values.size()) - 1; }
    bool covers(std::int64_t n) const noexcept { return n >= offset && n <= last(); }
    // Throws std::out_of_range outside [offset, last()].
    std::int64_t at(std::int64_t n) const;
    // Zero below the offset; throws above last().
    std::int64_t value_or_zero(std::int64_t n) const;

    friend bool operator==(const SequenceTable&, const SequenceTable&) = default;
};

// t[n] - t[n-1] with t[m] = 0 below the offset.
SequenceTable difference(const SequenceTable& t);

// Catalogue: q r s t r1 r2 r1p r1pp s_e s_o p dp d2p e o e_prime o_prime e_dprime o_dprime
std::vector<std::string> sequence_names();
std::int64_t sequence_offset(std::string_view name);
// Computed by enumeration; throws std::invalid_argument for unknown names.
SequenceTable named_sequence(std::string_view name, std::int64_t N,
                             const EnumerationLimits& limits = {});

// s(3m + residue) for m = m0 .. while within the table.
SequenceTable mod3_slices(const SequenceTable& s, int residue, std::int64_t m0);

// Inputs where the even/odd butterfly counts differ: the four closed forms with t >= 2.
struct ExceptionalForm {
    int which = 0;  // 1..4
    std::int64_t t = 0;
};

std::optional<ExceptionalForm> exceptional_form(std::int64_t n);
std::vector<std::int64_t> parity_exception_inputs(std::int64_t N);

// "n value" per line.
std::string to_bfile(const SequenceTable& t);
std::string to_json(const SequenceTable& t);

}  // namespace butterfly
