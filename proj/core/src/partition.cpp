#include "butterfly/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "butterfly/errors.hpp"

namespace butterfly {

namespace {

void validate(const std::vector<Part>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw PreconditionError("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw PreconditionError("partition parts must be non-increasing");
    }
}

}  // namespace

Partition::Partition(std::initializer_list<Part> parts) : Partition(std::vector<Part>(parts)) {}

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
    validate(parts_);
    n_ = std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

Partition Partition::from_unsorted(std::vector<Part> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Part Partition::largest() const {
    if (parts_.empty()) throw PreconditionError("empty partition has no largest part");
    return parts_.front();
}

Part Partition::smallest() const {
    if (parts_.empty()) throw PreconditionError("empty partition has no smallest part");
    return parts_.back();
}

std::string to_string(const Partition& p) {
    if (p.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += '+';
        out += std::to_string(p[i]);
    }
    return out;
}

Partition parse_partition(std::string_view text) {
    std::vector<Part> parts;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '+' || c == ',' || c == ' ' || c == '\t' || c == '[' || c == ']') {
            ++i;
            continue;
        }
        Part value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
        if (ec != std::errc() || ptr == text.data() + i)
            throw PreconditionError("cannot parse partition: '" + std::string(text) + "'");
        if (value < 0) throw PreconditionError("partition parts must be positive");
        if (value > 0) parts.push_back(value);
        i = static_cast<std::size_t>(ptr - text.data());
    }
    return Partition::from_unsorted(std::move(parts));
}

bool is_strict(PartsView parts) noexcept {
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] >= parts[i - 1]) return false;
    return true;
}

bool is_butterfly(PartsView parts) noexcept {
    return parts.size() >= 3 && is_strict(parts) && parts[0] == parts[1] + 1 &&
           parts[1] == parts[2] + 1 && parts.back() >= 2;
}

std::string render_young(const Partition& p, std::span<const YoungMark> marks) {
    std::vector<std::string> rows;
    rows.reserve(p.size());
    for (Part part : p.parts()) rows.emplace_back(static_cast<std::size_t>(part), '#');
    for (const YoungMark& m : marks) {
        if (m.row >= rows.size() || m.col >= rows[m.row].size())
            throw std::out_of_range("mark (" + std::to_string(m.row) + ", " + std::to_string(m.col) +
                                    ") lies outside the diagram");
        rows[m.row][m.col] = m.label;
    }
    std::string out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out += '\n';
        out += rows[i];
    }
    return out;
}

std::int64_t largest_power_of_two(std::int64_t x) {
    if (x < 1) throw PreconditionError("largest_power_of_two needs x >= 1");
    std::int64_t p = 1;
    while (p <= x / 2) p *= 2;
    return p;
}

bool is_power_of_two(std::int64_t x) noexcept { return x > 0 && (x & (x - 1)) == 0; }

}  // namespace butterfly
