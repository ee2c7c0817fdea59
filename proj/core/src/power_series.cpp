#include "butterfly/power_series.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "butterfly/errors.hpp"

namespace butterfly {

namespace {

std::size_t idx(int k) { return static_cast<std::size_t>(k); }

int triangular(int k) { return k * (k + 1) / 2; }

void require_order(int order) {
    if (order < 0) throw PreconditionError("series order must be nonnegative");
}

TruncSeries from_polynomial(int order, std::initializer_list<std::pair<int, int>> terms) {
    TruncSeries s(order);
    for (auto [exponent, c] : terms)
        if (exponent <= order) s[exponent] += c;
    return s;
}

TruncSeries polynomial_series(int order, std::span<const int> coefficients) {
    TruncSeries s(order);
    for (std::size_t j = 0; j < coefficients.size() && static_cast<int>(j) <= order; ++j)
        s[static_cast<int>(j)] = coefficients[j];
    return s;
}

}  // namespace

TruncSeries::TruncSeries(int order) {
    require_order(order);
    coeffs_.assign(idx(order) + 1, BigInt(0));
}

TruncSeries::TruncSeries(int order, std::span<const std::int64_t> coefficients) : TruncSeries(order) {
    for (std::size_t i = 0; i < coefficients.size() && i < coeffs_.size(); ++i) coeffs_[i] = coefficients[i];
}

TruncSeries TruncSeries::one(int order) { return monomial(order, 0); }

TruncSeries TruncSeries::monomial(int order, int exponent, BigInt coefficient) {
    TruncSeries s(order);
    if (exponent < 0) throw PreconditionError("negative exponent");
    if (exponent <= order) s[exponent] = std::move(coefficient);
    return s;
}

TruncSeries TruncSeries::truncated(int new_order) const {
    TruncSeries s(new_order);
    std::copy_n(coeffs_.begin(), std::min(coeffs_.size(), s.coeffs_.size()), s.coeffs_.begin());
    return s;
}

TruncSeries TruncSeries::shifted(int k) const {
    if (k < 0) throw PreconditionError("negative shift");
    TruncSeries s(order());
    for (int i = order(); i >= k; --i) s[i] = (*this)[i - k];
    return s;
}

TruncSeries TruncSeries::scaled(const BigInt& c) const {
    TruncSeries s = *this;
    for (auto& x : s.coeffs_) x *= c;
    return s;
}

void TruncSeries::times_one_plus_xk(int k) {
    for (int i = order(); i >= k; --i) coeffs_[idx(i)] += coeffs_[idx(i - k)];
}

void TruncSeries::times_one_minus_xk(int k) {
    for (int i = order(); i >= k; --i) coeffs_[idx(i)] -= coeffs_[idx(i - k)];
}

void TruncSeries::divide_one_minus_xk(int k) {
    for (int i = k; i <= order(); ++i) coeffs_[idx(i)] += coeffs_[idx(i - k)];
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& b) {
    if (b.order() < order()) *this = truncated(b.order());
    for (int i = 0; i <= order(); ++i) coeffs_[idx(i)] += b[i];
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& b) {
    if (b.order() < order()) *this = truncated(b.order());
    for (int i = 0; i <= order(); ++i) coeffs_[idx(i)] -= b[i];
    return *this;
}

TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    const int order = std::min(a.order(), b.order());
    TruncSeries c(order);
    for (int i = 0; i <= order; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= order; ++j)
            if (b[j] != 0) c[i + j] += a[i] * b[j];
    }
    return c;
}

TruncSeries expand_product(Product kind, int order) {
    TruncSeries s = TruncSeries::one(order);
    switch (kind) {
        case Product::DistinctParts:
            for (int n = 1; n <= order; ++n) s.times_one_plus_xk(n);
            break;
        case Product::OddParts:
        case Product::OddPartsFrom3:
        case Product::OddPartsFrom5: {
            const int first = kind == Product::OddParts ? 1 : kind == Product::OddPartsFrom3 ? 3 : 5;
            for (int j = first; j <= order; j += 2) s.divide_one_minus_xk(j);
            break;
        }
        case Product::Partitions:
        case Product::PartitionsNoOnes:
            for (int n = kind == Product::Partitions ? 1 : 2; n <= order; ++n) s.divide_one_minus_xk(n);
            break;
        case Product::EulerFunction:
            for (int n = 1; n <= order; ++n) s.times_one_minus_xk(n);
            break;
        case Product::DoubleProduct:
            for (int m = 1; m <= order; ++m) {
                s.times_one_plus_xk(m);
                if (2 * m <= order) s.times_one_minus_xk(2 * m);
            }
            break;
        case Product::Domino:
            for (int m = 2; m <= order; m += 2) s.divide_one_minus_xk(m);
            break;
    }
    return s;
}

std::vector<int> polynomial(Cyclotomic d) {
    switch (d) {
        case Cyclotomic::OneMinusX: return {1, -1};
        case Cyclotomic::OneMinusXSquared: return {1, -2, 1};
        case Cyclotomic::OnePlusXPlusXSquared: return {1, 1, 1};
    }
    return {1};
}

TruncSeries multiply(const TruncSeries& a, Cyclotomic d) {
    return a * polynomial_series(a.order(), polynomial(d));
}

TruncSeries multiply_polynomial(const TruncSeries& a, Cyclotomic d) {
    const std::vector<int> poly = polynomial(d);
    const int degree = static_cast<int>(poly.size()) - 1;
    const TruncSeries widened = a.truncated(a.order() + degree);
    return widened * polynomial_series(widened.order(), poly);
}

TruncSeries divide(const TruncSeries& a, Cyclotomic d) {
    const std::vector<int> poly = polynomial(d);
    TruncSeries q(a.order());
    for (int n = 0; n <= a.order(); ++n) {
        BigInt v = a[n];
        for (int j = 1; j < static_cast<int>(poly.size()) && j <= n; ++j) v -= poly[idx(j)] * q[n - j];
        q[n] = v;  // every divisor has constant term 1
    }
    return q;
}

TruncSeries div_exact(const TruncSeries& a, Cyclotomic d) {
    const std::vector<int> poly = polynomial(d);
    const int degree = static_cast<int>(poly.size()) - 1;
    if (a.order() < degree) throw PreconditionError("dividend order below the divisor degree");
    std::vector<BigInt> rem(a.coefficients());
    TruncSeries q(a.order() - degree);
    const int lead = poly.back();  // +1 for every divisor here
    for (int i = a.order(); i >= degree; --i) {
        const BigInt c = rem[idx(i)] / lead;
        q[i - degree] = c;
        for (int j = 0; j <= degree; ++j) rem[idx(i - degree + j)] -= c * poly[idx(j)];
    }
    for (int i = 0; i < degree; ++i)
        if (rem[idx(i)] != 0)
            throw InexactDivisionError("nonzero remainder at x^" + std::to_string(i) + ": " +
                                       rem[idx(i)].str());
    return q;
}

int default_lower_index(Filtered kind) {
    switch (kind) {
        case Filtered::DistinctByParts: return 1;
        case Filtered::ConsecutiveByParts: return 2;
        case Filtered::ButterflyBody:
        case Filtered::OddFrom5:
        case Filtered::ButterflyComplete: return 3;
    }
    return 1;
}

TruncSeries filtered_term(Filtered kind, int k, int order) {
    if (k < 1) throw PreconditionError("filtration index must be positive");
    const bool triangle = kind == Filtered::DistinctByParts || kind == Filtered::ConsecutiveByParts;
    const long long exponent = triangle ? triangular(k) : static_cast<long long>(k) * (k + 3) / 2;
    if (exponent > order) return TruncSeries(order);
    TruncSeries term = TruncSeries::monomial(order, static_cast<int>(exponent));
    const int first = kind == Filtered::DistinctByParts ? 1 : kind == Filtered::ConsecutiveByParts ? 2 : 3;
    for (int j = first; j <= k; ++j) term.divide_one_minus_xk(j);
    if (kind == Filtered::OddFrom5) term = multiply(term, Cyclotomic::OnePlusXPlusXSquared);
    return term;
}

TruncSeries filtered_series(Filtered kind, int order, std::optional<int> lower_index) {
    require_order(order);
    const int lower = lower_index.value_or(default_lower_index(kind));
    TruncSeries s(order);
    switch (kind) {
        case Filtered::DistinctByParts:
        case Filtered::ConsecutiveByParts: s = TruncSeries::one(order); break;
        case Filtered::ButterflyBody: break;
        case Filtered::OddFrom5: s = from_polynomial(order, {{0, 1}, {5, 1}, {7, 1}}); break;
        case Filtered::ButterflyComplete:
            s = from_polynomial(order, {{0, 1}, {1, -1}, {3, 1}, {4, -1}, {5, 1}});
            break;
    }
    for (int k = lower;; ++k) {
        const bool triangle = kind == Filtered::DistinctByParts || kind == Filtered::ConsecutiveByParts;
        const long long exponent = triangle ? triangular(k) : static_cast<long long>(k) * (k + 3) / 2;
        if (exponent > order) break;
        s += filtered_term(kind, k, order);
    }
    return s;
}

TruncSeries pentagonal_series(int order) {
    TruncSeries s = TruncSeries::one(order);
    for (int k = 1; 3 * k * k - k <= order; ++k) {
        const int sign = k % 2 ? -1 : 1;
        s[3 * k * k - k] += sign;
        if (3 * k * k + k <= order) s[3 * k * k + k] += sign;
    }
    return s;
}

TruncSeries triangular_series(int order) {
    TruncSeries s(order);
    for (int l = 0; triangular(l) <= order; ++l) s[triangular(l)] += 1;
    return s;
}

namespace {

constexpr std::array<IdentityInfo, 20> kIdentities{{
    {Identity::DistinctFiltered, "distinct-filtered", "identity-2.1", 0,
     "prod (1+x^n) = 1 + sum_{k>=1} x^{k(k+1)/2} / (1-x)..(1-x^k)", false},
    {Identity::OddFiltered, "odd-filtered", "identity-2.2", 0,
     "prod 1/(1-x^{2h+1}) = 1 + sum_{k>=1} x^{k(k+1)/2} / (1-x)..(1-x^k)", false},
    {Identity::ConsecutiveFiltered, "consecutive-filtered", "identity-2.3", 0,
     "(1-x) prod (1+x^n) = 1 + sum_{k>=2} x^{k(k+1)/2} / (1-x^2)..(1-x^k)", false},
    {Identity::Odd3Filtered, "odd3-filtered", "identity-2.4", 0,
     "prod_{h>=1} 1/(1-x^{2h+1}) = 1 + sum_{k>=2} x^{k(k+1)/2} / (1-x^2)..(1-x^k)", false},
    {Identity::SecondDifferenceFiltered, "second-difference-filtered", "identity-2.5", 0,
     "(1-x)^2 prod (1+x^n) = (1-x)^2 (1 + sum_{k>=1} x^{k(k+1)/2} / (1-x)..(1-x^k))", false},
    {Identity::SecondDifferenceOdd3, "second-difference-odd3", "identity-2.6", 0,
     "(1-x) prod_{h>=1} 1/(1-x^{2h+1}) = 1 - x + 1/(1+x) sum_{k>=2} x^{k(k+1)/2} / (1-x^3)..(1-x^k)", true},
    {Identity::Odd5ButterflyBody, "odd5-butterfly-body", "identity-2.9", 9,
     "prod_{h>=2} 1/(1-x^{2h+1}) = (1+x+x^2) sum_{k>=3} x^{k(k+3)/2} / (1-x^3)..(1-x^k) from x^9 on", false},
    {Identity::Odd5Complete, "odd5-complete", "identity-2.11", 0,
     "prod_{h>=2} 1/(1-x^{2h+1}) = 1 + x^5 + x^7 + (1+x+x^2) sum_{k>=3} x^{k(k+3)/2} / (1-x^3)..(1-x^k)", true},
    {Identity::ButterflyComplete, "butterfly-complete", "identity-2.12", 0,
     "prod_{h>=2} 1/(1-x^{2h+1}) / (1+x+x^2) = 1 - x + x^3 - x^4 + x^5 + sum_{k>=3} x^{k(k+3)/2} / (1-x^3)..(1-x^k)", true},
    {Identity::DistinctPentagonal, "distinct-pentagonal", "identity-5.1", 0,
     "prod (1+x^n) = P(x) (1 + sum_{k>=1} (-1)^k (x^{3k^2-k} + x^{3k^2+k}))", false},
    {Identity::FirstDifferencePentagonal, "first-difference-pentagonal", "identity-5.5", 0,
     "(1-x) prod (1+x^n) = P(x) (1-x) E(x)", false},
    {Identity::SecondDifferencePentagonal, "second-difference-pentagonal", "identity-5.6", 0,
     "(1-x)^2 prod (1+x^n) = P(x) (1-x)^2 E(x)", false},
    {Identity::DoubleProductTriangular, "double-product-triangular", "identity-5.11", 0,
     "prod (1+x^m)(1-x^{2m}) = sum_{k>=0} x^{k(k+1)/2}", false},
    {Identity::DistinctDominoTriangular, "distinct-domino-triangular", "identity-5.12", 0,
     "prod (1+x^m) = P(x^2) sum_{k>=0} x^{k(k+1)/2}", false},
    {Identity::FirstDifferenceDomino, "first-difference-domino", "identity-5.16", 0,
     "(1-x) prod (1+x^m) = P(x^2) (1-x) sum_{k>=0} x^{k(k+1)/2}", false},
    {Identity::SecondDifferenceDomino, "second-difference-domino", "identity-5.17", 0,
     "(1-x)^2 prod (1+x^m) = P(x^2) (1-x)^2 sum_{k>=0} x^{k(k+1)/2}", false},
    {Identity::ChecksumQ, "checksum-q", "identity-5.20", 0,
     "Q(x) E(x) = sum_{l>=0} x^{l(l+1)/2}", false},
    {Identity::ChecksumR, "checksum-r", "identity-5.21", 0,
     "R(x) E(x) = (1-x) sum_{l>=0} x^{l(l+1)/2}", true},
    {Identity::ChecksumS, "checksum-s", "identity-5.22", 0,
     "S(x) E(x) = (1-x)^2 sum_{l>=0} x^{l(l+1)/2}", false},
    {Identity::ChecksumT, "checksum-t", "identity-5.24", 0,
     "T(x) E(x) = (1-x)(1-x^3) sum_{l>=0} x^{l(l+1)/2}", true},
}};

// (1-x)^j times the distinct-parts product.
TruncSeries distinct_difference(int j, int order) {
    TruncSeries s = expand_product(Product::DistinctParts, order);
    for (int i = 0; i < j; ++i) s = multiply(s, Cyclotomic::OneMinusX);
    return s;
}

TruncSeries kernel_times_triangular(std::initializer_list<std::pair<int, int>> kernel, int order) {
    return triangular_series(order) * from_polynomial(order, kernel);
}

// sum_{l>=from} of kernel shifted by l(l+1)/2.
TruncSeries triangular_tail(std::initializer_list<std::pair<int, int>> kernel, int from, int order) {
    TruncSeries s(order);
    for (int l = from; triangular(l) <= order; ++l)
        for (auto [j, c] : kernel)
            if (triangular(l) + j <= order) s[triangular(l) + j] += c;
    return s;
}

// 1 - x + 1/(1+x) sum_{k>=lower} x^{k(k+1)/2} / (1-x^3)..(1-x^k).
TruncSeries second_difference_odd3_rhs(int order, int lower) {
    TruncSeries sum(order);
    for (int k = lower; triangular(k) <= order; ++k) {
        TruncSeries term = TruncSeries::monomial(order, triangular(k));
        for (int j = 3; j <= k; ++j) term.divide_one_minus_xk(j);
        sum += term;
    }
    // 1/(1+x) as the alternating geometric series.
    TruncSeries alternating(order);
    for (int i = 0; i <= order; ++i) alternating[i] = i % 2 ? -1 : 1;
    return from_polynomial(order, {{0, 1}, {1, -1}}) + sum * alternating;
}

std::pair<TruncSeries, TruncSeries> sides(Identity id, int order, Reading reading) {
    const bool printed = reading == Reading::Printed;
    const TruncSeries pent = pentagonal_series(order);
    const TruncSeries tri = triangular_series(order);
    switch (id) {
        case Identity::DistinctFiltered:
            return {expand_product(Product::DistinctParts, order), filtered_series(Filtered::DistinctByParts, order)};
        case Identity::OddFiltered:
            return {expand_product(Product::OddParts, order), filtered_series(Filtered::DistinctByParts, order)};
        case Identity::ConsecutiveFiltered:
            return {distinct_difference(1, order), filtered_series(Filtered::ConsecutiveByParts, order)};
        case Identity::Odd3Filtered:
            return {expand_product(Product::OddPartsFrom3, order), filtered_series(Filtered::ConsecutiveByParts, order)};
        case Identity::SecondDifferenceFiltered:
            return {distinct_difference(2, order),
                    multiply(filtered_series(Filtered::DistinctByParts, order), Cyclotomic::OneMinusXSquared)};
        case Identity::SecondDifferenceOdd3:
            return {multiply(expand_product(Product::OddPartsFrom3, order), Cyclotomic::OneMinusX),
                    second_difference_odd3_rhs(order, printed ? 3 : 2)};
        case Identity::Odd5ButterflyBody:
            return {expand_product(Product::OddPartsFrom5, order),
                    multiply(filtered_series(Filtered::ButterflyBody, order), Cyclotomic::OnePlusXPlusXSquared)};
        case Identity::Odd5Complete:
            return {expand_product(Product::OddPartsFrom5, order),
                    filtered_series(Filtered::OddFrom5, order, printed ? 2 : 3)};
        case Identity::ButterflyComplete:
            return {divide(expand_product(Product::OddPartsFrom5, order), Cyclotomic::OnePlusXPlusXSquared),
                    filtered_series(Filtered::ButterflyComplete, order, printed ? 2 : 3)};
        case Identity::DistinctPentagonal:
            return {distinct_difference(0, order), expand_product(Product::Partitions, order) * pent};
        case Identity::FirstDifferencePentagonal:
            return {distinct_difference(1, order),
                    expand_product(Product::Partitions, order) * multiply(pent, Cyclotomic::OneMinusX)};
        case Identity::SecondDifferencePentagonal:
            return {distinct_difference(2, order),
                    expand_product(Product::Partitions, order) * multiply(pent, Cyclotomic::OneMinusXSquared)};
        case Identity::DoubleProductTriangular:
            return {expand_product(Product::DoubleProduct, order), tri};
        case Identity::DistinctDominoTriangular:
            return {distinct_difference(0, order), expand_product(Product::Domino, order) * tri};
        case Identity::FirstDifferenceDomino:
            return {distinct_difference(1, order),
                    expand_product(Product::Domino, order) * multiply(tri, Cyclotomic::OneMinusX)};
        case Identity::SecondDifferenceDomino:
            return {distinct_difference(2, order),
                    expand_product(Product::Domino, order) * multiply(tri, Cyclotomic::OneMinusXSquared)};
        case Identity::ChecksumQ:
            return {distinct_difference(0, order) * pent, tri};
        case Identity::ChecksumR:
            if (printed) return {distinct_difference(1, order) * pent,
                                 TruncSeries::one(order) + triangular_tail({{0, 1}, {1, -1}}, 2, order)};
            return {distinct_difference(1, order) * pent, kernel_times_triangular({{0, 1}, {1, -1}}, order)};
        case Identity::ChecksumS:
            return {distinct_difference(2, order) * pent, kernel_times_triangular({{0, 1}, {1, -2}, {2, 1}}, order)};
        case Identity::ChecksumT: {
            const TruncSeries lhs = expand_product(Product::OddPartsFrom5, order) * pent;
            if (printed)
                return {lhs, from_polynomial(order, {{0, 1}, {2, -1}, {4, -1}, {5, 1}, {9, -1}, {10, 2}, {11, -2}, {12, 1}}) +
                                 triangular_tail({{0, 1}, {1, -1}, {3, -1}, {4, 1}}, 5, order)};
            return {lhs, kernel_times_triangular({{0, 1}, {1, -1}, {3, -1}, {4, 1}}, order)};
        }
    }
    throw std::logic_error("unhandled identity");
}

}  // namespace

std::span<const IdentityInfo> identities() { return kIdentities; }

const IdentityInfo& info(Identity id) {
    for (const auto& i : kIdentities)
        if (i.id == id) return i;
    throw std::logic_error("identity missing from the catalogue");
}

std::optional<Identity> parse_identity(std::string_view key_or_alias) {
    for (const auto& i : kIdentities)
        if (i.key == key_or_alias || i.alias == key_or_alias) return i.id;
    return std::nullopt;
}

IdentityReport verify_identity(Identity id, int order, Reading reading) {
    require_order(order);
    const IdentityInfo& meta = info(id);
    auto [lhs, rhs] = sides(id, order, meta.has_printed_variant ? reading : Reading::Derived);
    IdentityReport report{id, reading, order, meta.valid_from, std::move(lhs), std::move(rhs), {}};
    for (int n = meta.valid_from; n <= order; ++n)
        if (report.lhs[n] != report.rhs[n]) report.mismatches.push_back({n, report.lhs[n], report.rhs[n]});
    return report;
}

std::string format_report(const IdentityReport& report) {
    std::ostringstream os;
    for (int n = report.valid_from; n <= report.order; ++n)
        os << n << ' ' << report.lhs[n] << ' ' << report.rhs[n] << '\n';
    return os.str();
}

std::string to_json(const TruncSeries& s) {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i <= s.order(); ++i) os << (i ? "," : "") << s[i];
    os << ']';
    return os.str();
}

SequenceTable series_table(std::string_view name, int N) {
    require_order(N);
    TruncSeries s(N);
    if (name == "q" || name == "r" || name == "s") {
        s = distinct_difference(name == "q" ? 0 : name == "r" ? 1 : 2, N);
    } else if (name == "t") {
        s = expand_product(Product::OddPartsFrom5, N);
    } else if (name == "p" || name == "d2p") {
        s = expand_product(Product::Partitions, N);
        if (name == "d2p") s = multiply(s, Cyclotomic::OneMinusXSquared);
    } else if (name == "dp") {
        s = expand_product(Product::PartitionsNoOnes, N);
    } else {
        throw std::invalid_argument("no series for sequence '" + std::string(name) + "'");
    }
    SequenceTable t{std::string(name), 0, {}, Provenance::Series};
    t.values.reserve(idx(N) + 1);
    constexpr auto lo = std::numeric_limits<std::int64_t>::min(), hi = std::numeric_limits<std::int64_t>::max();
    for (int i = 0; i <= N; ++i) {
        if (s[i] < lo || s[i] > hi)
            throw ResourceLimitError(std::string(name) + "(" + std::to_string(i) + ") does not fit in 64 bits");
        t.values.push_back(static_cast<std::int64_t>(s[i]));
    }
    return t;
}

}  // namespace butterfly
