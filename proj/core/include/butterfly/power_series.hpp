#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "butterfly/sequences.hpp"

namespace butterfly {

using BigInt = boost::multiprecision::cpp_int;

// Coefficients of x^0 .. x^order of a formal power series.
class TruncSeries {
public:
    explicit TruncSeries(int order = 0);
    TruncSeries(int order, std::span<const std::int64_t> coefficients);

    static TruncSeries one(int order);
    static TruncSeries monomial(int order, int exponent, BigInt coefficient = 1);

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    BigInt& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }
    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

    TruncSeries truncated(int order) const;
    TruncSeries shifted(int k) const;  // times x^k, same order
    TruncSeries scaled(const BigInt& c) const;

    // In-place factor updates used by the product expansions.
    void times_one_plus_xk(int k);
    void times_one_minus_xk(int k);
    void divide_one_minus_xk(int k);

    TruncSeries& operator+=(const TruncSeries& b);
    TruncSeries& operator-=(const TruncSeries& b);

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b);
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b);
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

private:
    std::vector<BigInt> coeffs_;
};

enum class Product {
    DistinctParts,      // prod (1 + x^n)
    OddParts,           // prod over odd j of 1/(1 - x^j)
    OddPartsFrom3,
    OddPartsFrom5,
    Partitions,         // prod 1/(1 - x^n)
    PartitionsNoOnes,   // prod over n >= 2 of 1/(1 - x^n)
    EulerFunction,      // prod (1 - x^n)
    DoubleProduct,      // prod (1 + x^m)(1 - x^2m)
    Domino,             // prod 1/(1 - x^2m)
};

TruncSeries expand_product(Product kind, int order);

enum class Cyclotomic { OneMinusX, OneMinusXSquared, OnePlusXPlusXSquared };

// OneMinusXSquared is (1 - x)^2.
std::vector<int> polynomial(Cyclotomic d);

TruncSeries multiply(const TruncSeries& a, Cyclotomic d);
// Treats a as a polynomial; the result has order a.order() + deg d.
TruncSeries multiply_polynomial(const TruncSeries& a, Cyclotomic d);
// Power-series quotient, same order.
TruncSeries divide(const TruncSeries& a, Cyclotomic d);
// Polynomial division of a (degree <= order); result has order a.order() - deg d.
// Throws InexactDivisionError on a nonzero remainder.
TruncSeries div_exact(const TruncSeries& a, Cyclotomic d);

enum class Filtered {
    DistinctByParts,     // 1 + sum_{k>=1} x^{k(k+1)/2} / prod_{1..k}
    ConsecutiveByParts,  // 1 + sum_{k>=2} x^{k(k+1)/2} / prod_{2..k}
    ButterflyBody,       // sum_{k>=3} x^{k(k+3)/2} / prod_{3..k}
    OddFrom5,            // 1 + x^5 + x^7 + (1+x+x^2) sum_{k>=lower} x^{k(k+3)/2} / prod_{3..k}
    ButterflyComplete,   // 1 - x + x^3 - x^4 + x^5 + sum_{k>=lower} ...
};

// Lower summation index the filtered kind starts at by default.
int default_lower_index(Filtered kind);

// The k-th filtration term alone (no constant prefix).
TruncSeries filtered_term(Filtered kind, int k, int order);
TruncSeries filtered_series(Filtered kind, int order, std::optional<int> lower_index = {});

enum class Identity {
    DistinctFiltered,
    OddFiltered,
    ConsecutiveFiltered,
    Odd3Filtered,
    SecondDifferenceFiltered,
    SecondDifferenceOdd3,
    Odd5ButterflyBody,
    Odd5Complete,
    ButterflyComplete,
    DistinctPentagonal,
    FirstDifferencePentagonal,
    SecondDifferencePentagonal,
    DoubleProductTriangular,
    DistinctDominoTriangular,
    FirstDifferenceDomino,
    SecondDifferenceDomino,
    ChecksumQ,
    ChecksumR,
    ChecksumS,
    ChecksumT,
};

// Derived: both sides as they follow from the product manipulations.
// Printed: the lower indices and constant prefixes as typeset where they differ.
enum class Reading { Derived, Printed };

struct IdentityInfo {
    Identity id;
    std::string_view key;
    std::string_view alias;
    int valid_from;  // first exponent the identity claims
    std::string_view summary;
    bool has_printed_variant;
};

std::span<const IdentityInfo> identities();
const IdentityInfo& info(Identity id);
std::optional<Identity> parse_identity(std::string_view key_or_alias);

struct Mismatch {
    int n = 0;
    BigInt lhs, rhs;
};

struct IdentityReport {
    Identity id;
    Reading reading = Reading::Derived;
    int order = 0;
    int valid_from = 0;
    TruncSeries lhs, rhs;
    std::vector<Mismatch> mismatches;  // only exponents in [valid_from, order]

    bool ok() const noexcept { return mismatches.empty(); }
};

IdentityReport verify_identity(Identity id, int order, Reading reading = Reading::Derived);

// "n lhs rhs" per line over the checked range.
std::string format_report(const IdentityReport& report);
std::string to_json(const TruncSeries& s);

// The sparse series 1 + sum_{k>=1} (-1)^k (x^{3k^2-k} + x^{3k^2+k}).
TruncSeries pentagonal_series(int order);
// sum_{l>=0} x^{l(l+1)/2}.
TruncSeries triangular_series(int order);

// q r s t p dp d2p as product expansions (d2p is the second difference of p).
SequenceTable series_table(std::string_view name, int N);

}  // namespace butterfly
