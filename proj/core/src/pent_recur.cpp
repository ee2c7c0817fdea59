#include "butterfly/pent_recur.hpp"

#include <span>
#include <stdexcept>

#include "butterfly/errors.hpp"
#include "butterfly/power_series.hpp"

namespace butterfly {

namespace {

constexpr std::int64_t kQKernel[] = {1};
constexpr std::int64_t kRKernel[] = {1, -1};
constexpr std::int64_t kSKernel[] = {1, -2, 1};
constexpr std::int64_t kTKernel[] = {1, -1, 0, -1, 1};  // (1 - x)(1 - x^3)

std::span<const std::int64_t> kernel(std::string_view name) {
    if (name == "q") return kQKernel;
    if (name == "r") return kRKernel;
    if (name == "s") return kSKernel;
    if (name == "t") return kTKernel;
    throw std::invalid_argument("no checksum kernel for '" + std::string(name) + "'");
}

bool is_triangular(std::int64_t m) {
    if (m < 0) return false;
    std::int64_t l = 0;
    while (l * (l + 1) / 2 < m) ++l;
    return l * (l + 1) / 2 == m;
}

// The basis table and the polynomial folded into the sum for a (name, basis) route.
struct Route {
    const SequenceTable* table;
    std::span<const std::int64_t> poly;
};

Route route_for(std::string_view name, Basis basis, const BasisTables& tables) {
    if (basis == Basis::PWithPoly && (name == "q" || name == "r" || name == "s"))
        return {&tables.p, kernel(name)};
    if (basis == Basis::P && name == "q") return {&tables.p, kQKernel};
    if (basis == Basis::DP && name == "r") return {&tables.dp, kQKernel};
    if (basis == Basis::D2P && name == "s") return {&tables.d2p, kQKernel};
    throw std::invalid_argument("no route for " + std::string(name) + " over basis " + to_string(basis));
}

std::int64_t value(const SequenceTable& t, std::int64_t n) { return n < 0 ? 0 : t.value_or_zero(n); }

// base(x) + sum_{k>=1} (-1)^k [base(x - 3k^2 + k) + base(x - 3k^2 - k)].
std::int64_t pentagonal_fold(const SequenceTable& base, std::int64_t x) {
    if (x < 0) return 0;
    std::int64_t total = value(base, x);
    for (const Offset& o : offsets(ScheduleKind::PentagonalPairs, x)) total += o.sign * value(base, x - o.value);
    return total;
}

}  // namespace

std::vector<Offset> offsets(ScheduleKind kind, std::int64_t bound) {
    std::vector<Offset> out;
    if (kind == ScheduleKind::Triangular) {
        for (std::int64_t k = 0; k * (k + 1) / 2 <= bound; ++k) out.push_back({k * (k + 1) / 2, 1});
        return out;
    }
    for (std::int64_t k = 1; 3 * k * k - k <= bound; ++k) {
        const int sign = k % 2 ? -1 : 1;
        out.push_back({3 * k * k - k, sign});
        if (3 * k * k + k <= bound) out.push_back({3 * k * k + k, sign});
    }
    return out;
}

const char* to_string(Basis b) {
    switch (b) {
        case Basis::P: return "p";
        case Basis::DP: return "dp";
        case Basis::D2P: return "d2p";
        case Basis::PWithPoly: return "p-with-poly";
    }
    return "?";
}

BasisTables enumerated_basis(std::int64_t N, const EnumerationLimits& limits) {
    return {named_sequence("p", N, limits), named_sequence("dp", N, limits), named_sequence("d2p", N, limits)};
}

BasisTables series_basis(int N) { return {series_table("p", N), series_table("dp", N), series_table("d2p", N)}; }

std::int64_t recur_value(std::string_view name, std::int64_t m, Basis basis, const BasisTables& tables) {
    const Route r = route_for(name, basis, tables);
    std::int64_t total = 0;
    for (std::size_t j = 0; j < r.poly.size(); ++j)
        total += r.poly[j] * pentagonal_fold(*r.table, m - static_cast<std::int64_t>(j));
    return total;
}

std::int64_t triangular_value(std::string_view name, std::int64_t m, Basis basis, const BasisTables& tables) {
    const Route r = route_for(name, basis, tables);
    std::int64_t total = 0;
    for (std::size_t j = 0; j < r.poly.size(); ++j) {
        const std::int64_t shifted = m - static_cast<std::int64_t>(j);
        for (const Offset& o : offsets(ScheduleKind::Triangular, shifted)) {
            const std::int64_t twice = shifted - o.value;
            if (twice % 2 == 0) total += r.poly[j] * value(*r.table, twice / 2);
        }
    }
    return total;
}

std::int64_t checksum(const SequenceTable& table, std::int64_t m) { return pentagonal_fold(table, m); }

std::int64_t expected_checksum(std::string_view name, std::int64_t m) {
    const auto k = kernel(name);
    std::int64_t total = 0;
    for (std::size_t j = 0; j < k.size(); ++j)
        if (is_triangular(m - static_cast<std::int64_t>(j))) total += k[j];
    return total;
}

SequenceTable recursive_solve(std::string_view name, std::int64_t N) {
    kernel(name);  // validates the name
    SequenceTable t{std::string(name), 0, {}, Provenance::Recurrence};
    for (std::int64_t m = 0; m <= N; ++m) {
        std::int64_t next = expected_checksum(name, m);
        for (const Offset& o : offsets(ScheduleKind::PentagonalPairs, m)) {
            const std::int64_t term = t.values[static_cast<std::size_t>(m - o.value)];
            if (o.sign > 0 ? __builtin_sub_overflow(next, term, &next) : __builtin_add_overflow(next, term, &next))
                throw ResourceLimitError(std::string(name) + "(" + std::to_string(m) + ") does not fit in 64 bits");
        }
        t.values.push_back(next);
    }
    return t;
}

}  // namespace butterfly
