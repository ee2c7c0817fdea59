#include "butterfly/bijections.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "butterfly/errors.hpp"
#include "butterfly/family.hpp"

namespace butterfly {

namespace {

bool gap_at_least_two(PartsView p) { return p.size() == 1 || (p.size() >= 2 && p[0] - p[1] >= 2); }

void require(bool ok, const char* op, const Partition& p, const char* why) {
    if (!ok) throw PreconditionError(std::string(op) + ": " + to_string(p) + " " + why);
}

bool in_any(const Partition& p, std::initializer_list<FamilySpec> families) {
    return std::any_of(families.begin(), families.end(), [&](const FamilySpec& f) { return in_family(p, f); });
}

struct Sides {
    std::vector<Partition> source;
    std::vector<Partition> target;
};

Sides sides_of(const BijectionSpec& spec, int n) {
    Sides s;
    switch (spec.kind) {
        case BijectionKind::Raise:
            for (auto& p : enumerate_family(n - 1, {FamilyTag::Strict}))
                if (!p.empty()) s.source.push_back(std::move(p));
            for (auto& p : enumerate_family(n, {FamilyTag::Strict}))
                if (!p.empty() && gap_at_least_two(p.view())) s.target.push_back(std::move(p));
            break;
        case BijectionKind::Butterfly:
            for (auto& p : enumerate_family(n - 1, {FamilyTag::R2}))
                if (p.size() >= 3) s.source.push_back(std::move(p));
            s.target = enumerate_family(n, {FamilyTag::R1Prime});
            break;
        case BijectionKind::Bar:
            for (auto tag : {FamilyTag::BarAe, FamilyTag::BarAo})
                for (auto& p : enumerate_family(n, FamilySpec::bar(tag, spec.h))) s.source.push_back(std::move(p));
            for (auto tag : {FamilyTag::BarBo, FamilyTag::BarBe})
                for (auto& p : enumerate_family(n, FamilySpec::bar(tag, spec.h))) s.target.push_back(std::move(p));
            break;
    }
    return s;
}

Partition forward(const BijectionSpec& spec, const Partition& p) {
    switch (spec.kind) {
        case BijectionKind::Raise: return raise_largest(p);
        case BijectionKind::Butterfly: return butterfly_forward(p);
        case BijectionKind::Bar: return bar_forward(p, spec.h);
    }
    return p;
}

Partition backward(const BijectionSpec& spec, const Partition& p) {
    switch (spec.kind) {
        case BijectionKind::Raise: return lower_largest(p);
        case BijectionKind::Butterfly: return butterfly_backward(p);
        case BijectionKind::Bar: return bar_backward(p, spec.h);
    }
    return p;
}

// The bar maps send second-part-even sources to second-part-odd targets and back.
bool parity_swapped(const BijectionSpec& spec, const Partition& from, const Partition& to) {
    return spec.kind != BijectionKind::Bar || (from[1] % 2) != (to[1] % 2);
}

}  // namespace

Partition raise_largest(const Partition& p) {
    require(!p.empty(), "raise_largest", p, "is empty");
    require(is_strict(p.view()), "raise_largest", p, "is not strict");
    std::vector<Part> parts = p.parts();
    ++parts[0];
    return Partition(std::move(parts));
}

Partition lower_largest(const Partition& p) {
    require(!p.empty() && is_strict(p.view()), "lower_largest", p, "is not a nonempty strict partition");
    require(gap_at_least_two(p.view()), "lower_largest", p, "has its two largest parts within 1");
    std::vector<Part> parts = p.parts();
    --parts[0];
    return Partition(std::move(parts));
}

Partition butterfly_forward(const Partition& p) {
    require(in_family(p, {FamilyTag::R2}) && p.size() >= 3, "butterfly_forward", p,
            "is not a strict partition with two largest parts consecutive, smallest part 1 and at least three parts");
    std::vector<Part> parts = p.parts();
    parts.pop_back();
    ++parts[0];
    ++parts[1];
    return Partition(std::move(parts));
}

Partition butterfly_backward(const Partition& p) {
    require(in_family(p, {FamilyTag::R1Prime}), "butterfly_backward", p,
            "is not a strict partition with two largest parts consecutive, smallest part at least 2 and a gap below the second part");
    require(p[1] >= 3, "butterfly_backward", p, "has second part below 3");
    std::vector<Part> parts = p.parts();
    --parts[0];
    --parts[1];
    parts.push_back(1);
    return Partition(std::move(parts));
}

Partition bar_forward(const Partition& p, int h) {
    require(h >= 3, "bar_forward", p, "needs h >= 3");
    require(in_any(p, {FamilySpec::bar(FamilyTag::BarAe, h), FamilySpec::bar(FamilyTag::BarAo, h)}),
            "bar_forward", p, "has no horizontal bar of that size");
    std::vector<Part> parts = p.parts();
    parts.erase(std::find(parts.begin(), parts.end(), h));
    for (int i = 0; i < h; ++i) ++parts[static_cast<std::size_t>(i)];
    return Partition(std::move(parts));
}

Partition bar_backward(const Partition& p, int h) {
    require(h >= 3, "bar_backward", p, "needs h >= 3");
    require(in_any(p, {FamilySpec::bar(FamilyTag::BarBe, h), FamilySpec::bar(FamilyTag::BarBo, h)}),
            "bar_backward", p, "has no vertical bar of that size");
    std::vector<Part> parts = p.parts();
    for (int i = 0; i < h; ++i) --parts[static_cast<std::size_t>(i)];
    parts.push_back(h);
    return Partition::from_unsorted(std::move(parts));
}

std::string to_string(const BijectionSpec& spec) {
    switch (spec.kind) {
        case BijectionKind::Raise: return "raise";
        case BijectionKind::Butterfly: return "butterfly";
        case BijectionKind::Bar: return "bar(" + std::to_string(spec.h) + ")";
    }
    return "?";
}

BijectionReport verify_bijection(const BijectionSpec& spec, int n_from, int n_to) {
    BijectionReport report{spec, n_from, n_to, 0, std::nullopt};
    const int shift = spec.kind == BijectionKind::Bar ? 0 : 1;
    for (int n = n_from; n <= n_to && report.ok(); ++n) {
        const Sides sides = sides_of(spec, n);
        const std::set<Partition> target(sides.target.begin(), sides.target.end());
        std::set<Partition> images;
        for (const Partition& p : sides.source) {
            ++report.checked;
            const std::string where = "n=" + std::to_string(n) + ": " + to_string(p);
            Partition image;
            try {
                image = forward(spec, p);
            } catch (const PreconditionError& e) {
                report.counterexample = where + " rejected: " + e.what();
                break;
            }
            if (image.n() != p.n() + shift) {
                report.counterexample = where + " -> " + to_string(image) + " changes n by the wrong amount";
            } else if (!target.contains(image) || !parity_swapped(spec, p, image)) {
                report.counterexample = where + " -> " + to_string(image) + " lies outside the target";
            } else if (!images.insert(image).second) {
                report.counterexample = where + " -> " + to_string(image) + " is hit twice";
            } else if (backward(spec, image) != p) {
                report.counterexample = where + " -> " + to_string(image) + " does not invert";
            }
            if (!report.ok()) break;
        }
        if (report.ok() && sides.source.size() != sides.target.size())
            report.counterexample = "n=" + std::to_string(n) + ": source has " + std::to_string(sides.source.size()) +
                                    " members, target has " + std::to_string(sides.target.size());
    }
    return report;
}

}  // namespace butterfly
