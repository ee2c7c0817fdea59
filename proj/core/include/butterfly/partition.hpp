#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace butterfly {

using Part = int;
using PartsView = std::span<const Part>;

// A finite non-increasing list of positive parts. The empty partition is valid.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<Part> parts);
    explicit Partition(std::vector<Part> parts);

    // Sorts the parts into non-increasing order first.
    static Partition from_unsorted(std::vector<Part> parts);

    const std::vector<Part>& parts() const noexcept { return parts_; }
    PartsView view() const noexcept { return parts_; }
    std::int64_t n() const noexcept { return n_; }
    std::size_t size() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    Part operator[](std::size_t i) const { return parts_[i]; }
    Part largest() const;
    Part smallest() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    // Lexicographic on parts.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<Part> parts_;
    std::int64_t n_ = 0;
};

// "6+5+4+3"; the empty partition prints as "0".
std::string to_string(const Partition& p);

// Accepts "6+5+4+3", "6,5,4,3" or "6 5 4 3" in any order; "0" or "" is empty.
Partition parse_partition(std::string_view text);

bool is_strict(PartsView parts) noexcept;
bool is_butterfly(PartsView parts) noexcept;

struct YoungMark {
    std::size_t row = 0;
    std::size_t col = 0;
    char label = '*';
};

// One row of '#' per part, left aligned, rows joined by '\n' (no trailing newline).
std::string render_young(const Partition& p, std::span<const YoungMark> marks = {});

// Largest power of two not exceeding x (x >= 1).
std::int64_t largest_power_of_two(std::int64_t x);
bool is_power_of_two(std::int64_t x) noexcept;

}  // namespace butterfly
