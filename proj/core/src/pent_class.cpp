#include "butterfly/pent_class.hpp"

#include "butterfly/errors.hpp"
#include "butterfly/family.hpp"

namespace butterfly {

namespace {

std::vector<Part> run(Part top, int length) {
    std::vector<Part> parts;
    for (int i = 0; i < length; ++i) parts.push_back(top - i);
    return parts;
}

std::int64_t as_signed(std::uint64_t x) { return static_cast<std::int64_t>(x); }

// Expected (first - second) for a relation where the even-second side is `first`.
std::int64_t expected_gap(ParityRelation r) {
    switch (r) {
        case ParityRelation::Equal: return 0;
        case ParityRelation::EvenMinusOne: return -1;
        case ParityRelation::EvenPlusOne: return 1;
    }
    return 0;
}

}  // namespace

const char* to_string(PentKind kind) {
    switch (kind) {
        case PentKind::Pentagonal: return "pentagonal";
        case PentKind::GenPentagonal: return "generalized-pentagonal";
        case PentKind::PentagonalDomino: return "pentagonal-domino";
        case PentKind::GenPentagonalDomino: return "generalized-pentagonal-domino";
        case PentKind::NonPentHBar: return "horizontal-bar";
        case PentKind::NonPentVBar: return "vertical-bar";
    }
    return "?";
}

const char* to_string(ParityRelation r) {
    switch (r) {
        case ParityRelation::Equal: return "equal";
        case ParityRelation::EvenMinusOne: return "even-minus-one";
        case ParityRelation::EvenPlusOne: return "even-plus-one";
    }
    return "?";
}

Partition make_pentagonal(PentKind kind, int h) {
    const int min_h = kind == PentKind::GenPentagonalDomino ? 2 : 3;
    if (kind == PentKind::NonPentHBar || kind == PentKind::NonPentVBar)
        throw PreconditionError("bar kinds do not determine a partition");
    if (h < min_h) throw PreconditionError(std::string(to_string(kind)) + " needs h >= " + std::to_string(min_h));
    const bool generalized = kind == PentKind::GenPentagonal || kind == PentKind::GenPentagonalDomino;
    std::vector<Part> parts = run(generalized ? 2 * h : 2 * h - 1, h);
    if (kind == PentKind::PentagonalDomino || kind == PentKind::GenPentagonalDomino) parts.push_back(2);
    return Partition(std::move(parts));
}

PentClass classify(const Partition& p) {
    if (!is_butterfly(p.view())) throw PreconditionError(to_string(p) + " is not a butterfly partition");
    const bool domino = p.smallest() == 2;
    const PartsView body = domino ? p.view().first(p.size() - 1) : p.view();

    int run_length = 1;
    while (static_cast<std::size_t>(run_length) < body.size() &&
           body[static_cast<std::size_t>(run_length)] == body[0] - run_length)
        ++run_length;
    const int smallest = body.back();
    const bool consecutive = static_cast<std::size_t>(run_length) == body.size();

    if (consecutive && smallest == run_length)
        return {domino ? PentKind::PentagonalDomino : PentKind::Pentagonal, run_length};
    if (consecutive && smallest == run_length + 1)
        return {domino ? PentKind::GenPentagonalDomino : PentKind::GenPentagonal, run_length};
    if (smallest <= run_length) return {PentKind::NonPentHBar, smallest};
    return {PentKind::NonPentVBar, run_length};
}

BarSets enumerate_bars(int n, int h) {
    return BarSets{
        enumerate_family(n, FamilySpec::bar(FamilyTag::BarAe, h)),
        enumerate_family(n, FamilySpec::bar(FamilyTag::BarAo, h)),
        enumerate_family(n, FamilySpec::bar(FamilyTag::BarBe, h)),
        enumerate_family(n, FamilySpec::bar(FamilyTag::BarBo, h)),
    };
}

ParityWitness parity_relation(std::int64_t n) {
    ParityWitness w;
    w.form = exceptional_form(n);
    if (w.form)
        w.relation = (w.form->which == 1 || w.form->which == 4) ? ParityRelation::EvenMinusOne
                                                                 : ParityRelation::EvenPlusOne;
    return w;
}

bool CorollaryCounts::halving_holds() const {
    return as_signed(s) == 2 * as_signed(s_even) - expected_gap(relation);
}

bool CorollaryCounts::triple_parity_holds() const {
    return as_signed(e) - as_signed(o) == expected_gap(relation);
}

bool CorollaryCounts::conjugate_parity_holds() const {
    return as_signed(e_prime) - as_signed(o_prime) == -expected_gap(relation);
}

bool CorollaryCounts::conjugate_triple_parity_holds() const {
    return as_signed(e_dprime) - as_signed(o_dprime) == expected_gap(relation);
}

CorollaryCounts corollary_counts(int n) {
    CorollaryCounts c;
    c.n = n;
    c.relation = parity_relation(n).relation;
    for_each_in_family(n, {FamilyTag::Butterfly}, [&](PartsView p) {
        ++c.s;
        ++(p[1] % 2 == 0 ? c.s_even : c.s_odd);
    });
    for_each_in_family(n, {FamilyTag::EqualTripleHead}, [&](PartsView p) { ++(p[0] % 2 == 0 ? c.e : c.o); });
    for_each_in_family(n, {FamilyTag::ConjugateButterfly},
                       [&](PartsView p) { ++(p.size() % 2 == 0 ? c.e_prime : c.o_prime); });
    for_each_in_family(n, {FamilyTag::ConjugateEqualTriple},
                       [&](PartsView p) { ++(p.size() % 2 == 0 ? c.e_dprime : c.o_dprime); });
    return c;
}

}  // namespace butterfly
