#include "lgl/dimension_formulas.hpp"

#include <algorithm>

#include "lgl/errors.hpp"
#include "lgl/partial_fractions.hpp"

namespace lgl {

Rank1Case classify_rank1(const RatFunc& f) {
    if (f.is_zero()) return {Rank1Case::Tag::Trivial, 1};
    const PartialFraction pf = partial_fractions(f);
    if (!pf.polynomial_part.is_zero()) return {Rank1Case::Tag::Gm, 0};
    Integer m(1);
    for (const auto& term : pf.terms) {
        if (term.order >= 2) return {Rank1Case::Tag::Gm, 0};
        m = lcm(m, term.coefficient.denominator());
    }
    if (m == 1) return {Rank1Case::Tag::Trivial, 1};
    return {Rank1Case::Tag::Cm, static_cast<long>(m.get_si())};
}

namespace {

struct Rank1Local {
    std::vector<Place> singular;
    long irr_sum = 0;              // reported irregularity indices
    long infinity_adjustment = 0;  // difference to the pole order of f dz at infinity
};

// Classify every pole of f and infinity. The irregularity index at infinity
// follows the coefficient-order convention (classify_rank1_place); the
// dimension formula needs the pole order of f dz there, which exceeds the
// index by one whenever f itself has a pole at infinity. The difference is
// carried as an explicit breakdown term.
Rank1Local rank1_local_data(const RatFunc& f) {
    Rank1Local out;
    std::vector<Place> candidates;
    if (!f.is_zero()) {
        const RationalRoots roots = rational_roots(f.den());
        if (!roots.fully_split)
            throw NonSplitDenominator("denominator has an irreducible factor of degree >= 2");
        for (const auto& [root, mult] : roots.roots) candidates.push_back(Place::finite(root));
        candidates.push_back(Place::infinity());
    }
    for (const auto& p : candidates) {
        const PlaceClassification c = classify_rank1_place(f, p);
        if (!c.is_singular()) continue;
        out.singular.push_back(p);
        if (c.tag == PlaceClassification::Tag::Irregular) {
            out.irr_sum += static_cast<long>(c.irregularity);
            if (p.is_infinity()) {
                const long ord = *order_at(f, p);
                const long fdz_index = 1 - ord;  // pole order of f dz minus one
                out.infinity_adjustment = fdz_index - static_cast<long>(c.irregularity);
            }
        }
    }
    return out;
}

}  // namespace

LglReport lgl_rank1(const RatFunc& f, long genus) {
    if (genus < 0) throw InvalidCombination("genus must be nonnegative");
    const Rank1Case c = classify_rank1(f);
    const Rank1Local local = rank1_local_data(f);

    LglReport report;
    report.case_tag = c.str();
    report.singular_set = local.singular;
    if (genus > 0) report.hypothesis_flags.push_back("evaluator-only: genus > 0 terms are not computed on a curve");

    const long s_count = static_cast<long>(local.singular.size());
    switch (c.tag) {
        case Rank1Case::Tag::Trivial:
            report.breakdown["genus_term"] = 2 * genus;
            report.dimension = 2 * genus;
            break;
        case Rank1Case::Tag::Cm:
            report.breakdown["genus_term"] = 2 * genus - 2;
            report.breakdown["s_term"] = s_count;
            report.dimension = 2 * genus - 2 + s_count;
            break;
        case Rank1Case::Tag::Gm:
            report.breakdown["genus_term"] = 2 * genus - 2;
            report.breakdown["s_term"] = s_count;
            report.breakdown["irr_term"] = local.irr_sum;
            if (local.infinity_adjustment != 0) {
                report.breakdown["infinity_irr_adjustment"] = local.infinity_adjustment;
                report.hypothesis_flags.push_back(
                    "irregularity index at infinity adjusted to the pole order of f dz");
            }
            report.dimension =
                2 * genus - 2 + s_count + local.irr_sum + local.infinity_adjustment;
            break;
    }
    if (report.dimension && *report.dimension < 0)
        throw InvalidCombination("formula produced a negative dimension");
    return report;
}

LglReport lgl_ga_nilpotent(const RatFunc& f, long n, long genus) {
    if (n < 2) throw InvalidCombination("nilpotent block size must be >= 2");
    if (genus < 0) throw InvalidCombination("genus must be nonnegative");

    std::vector<Place> s;
    if (!f.is_zero()) {
        for (const auto& p : pole_places(f)) {
            if (!residue(f, p).is_zero()) s.push_back(p);
        }
    }
    if (s.empty())
        throw ExactForm("f dz is exact (all residues vanish); this is the trivial-case path");

    LglReport report;
    report.case_tag = "Ga(n=" + std::to_string(n) + ")";
    report.singular_set = s;
    if (genus > 0) report.hypothesis_flags.push_back("evaluator-only: genus > 0 terms are not computed on a curve");

    const long s_count = static_cast<long>(s.size());
    const long ga_term = (n - 1) * (2 * genus - 2 + s_count);
    report.breakdown["genus_term"] = 2 * genus;
    report.breakdown["ga_term"] = ga_term;
    report.dimension = 2 * genus + ga_term;

    if (n == 2 && *report.dimension != 4 * genus - 2 + s_count)
        throw InvalidCombination("n = 2 consistency identity failed");
    if (*report.dimension < 0) throw InvalidCombination("formula produced a negative dimension");
    return report;
}

LglReport lgl_fuchsian(const FuchsianInput& input) {
    const std::size_t r = input.points.size();
    if (r < 1) throw InvalidCombination("need at least one singular point");
    if (input.matrices.size() != r)
        throw InvalidCombination("matrix count must match point count");
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            if (input.points[i] == input.points[j])
                throw InvalidCombination("singular points must be distinct");

    const long m = static_cast<long>(input.rank);
    long t0_sum = 0;
    bool some_invertible = false;
    QMatrix sum(input.rank, input.rank);
    for (const auto& a : input.matrices) {
        if (a.rows() != input.rank || a.cols() != input.rank)
            throw InvalidCombination("matrix size must equal the rank");
        const std::size_t t0 = t0_of_residue_matrix(a);
        t0_sum += static_cast<long>(t0);
        if (t0 == 0) some_invertible = true;
        sum = sum + a;
    }

    LglReport report;
    report.case_tag = "regular-singular";
    report.singular_set = input.points;
    const long chi = m * (2 - static_cast<long>(r)) + t0_sum;
    report.chi = chi;
    report.breakdown["rank_times_points_term"] = (static_cast<long>(r) - 2) * m;
    report.breakdown["t0_term"] = -t0_sum;
    report.breakdown["chi"] = chi;

    if (!sum.is_zero())
        report.hypothesis_flags.push_back(
            "sum of the given residue matrices is nonzero; global realizability not checked");

    if (some_invertible) {
        const long dim = (static_cast<long>(r) - 2) * m - t0_sum;
        if (dim != -chi) throw InvalidCombination("dimension / Euler characteristic mismatch");
        if (dim < 0) throw InvalidCombination("formula produced a negative dimension");
        report.dimension = dim;
    } else {
        report.dimension = std::nullopt;
        report.hypothesis_flags.push_back(
            "no invertible residue matrix: dimension unknown, second cohomology only bounded by rank " +
            std::to_string(m));
    }
    return report;
}

long lgl_genus_formula(FormulaCase c, const GenusFormulaArgs& a) {
    if (a.genus < 0) throw InvalidCombination("genus must be nonnegative");
    long dim = 0;
    switch (c) {
        case FormulaCase::Trivial:
            dim = 2 * a.genus;
            break;
        case FormulaCase::Gm:
            dim = 2 * a.genus - 2 + a.s_count + a.irr_sum;
            break;
        case FormulaCase::Cm:
            dim = 2 * a.genus - 2 + a.s_count;
            break;
        case FormulaCase::Ga:
            if (a.n < 2) throw InvalidCombination("nilpotent block size must be >= 2");
            dim = 2 * a.genus + (a.n - 1) * (2 * a.genus - 2 + a.s_count);
            break;
        case FormulaCase::RegularSingular:
            if (a.m < 1 || a.r < 1) throw InvalidCombination("rank and point count must be positive");
            dim = (a.r - 2) * a.m - a.t0_sum;
            break;
    }
    if (dim < 0) throw InvalidCombination("formula produced a negative dimension");
    return dim;
}

}  // namespace lgl
