#include "lgl/local_analysis.hpp"

#include <algorithm>

#include "lgl/errors.hpp"

namespace lgl {

PlaceClassification classify_rank1_place(const RatFunc& f, const Place& p) {
    PlaceClassification out{PlaceClassification::Tag::Regular, Rational(0), 0};
    const auto ord = order_at(f, p);
    if (!ord) return out;  // f = 0: regular everywhere

    if (!p.is_infinity()) {
        const long k = -*ord;  // pole order of f (= of f dz) at the point
        if (k <= 0) return out;
        if (k == 1) {
            const Rational res = residue(f, p);
            if (res.is_integer()) { out.residue = res; return out; }
            out.tag = PlaceClassification::Tag::RegularSingular;
            out.residue = res;
            return out;
        }
        out.tag = PlaceClassification::Tag::Irregular;
        out.irregularity = static_cast<std::size_t>(k - 1);
        return out;
    }

    // Infinity: f dz gains a double pole from dz = -dt/t^2.
    if (*ord >= 2) return out;  // f dz holomorphic
    if (*ord == 1) {
        const Rational res = residue(f, p);
        if (res.is_integer()) { out.residue = res; return out; }
        out.tag = PlaceClassification::Tag::RegularSingular;
        out.residue = res;
        return out;
    }
    out.tag = PlaceClassification::Tag::Irregular;
    out.irregularity = static_cast<std::size_t>(std::max(1L, -*ord));
    return out;
}

std::size_t irregularity(const DiffOp& op, const Place& p) {
    if (op.is_zero() || op.order() < 0) return 0;
    if (p.is_infinity()) {
        // Coefficient orders directly in t = 1/z.
        std::optional<long> lead;
        std::optional<long> min_ord;
        for (std::size_t i = 0; i < op.coefficients().size(); ++i) {
            const RatFunc& a = op.coefficients()[i];
            if (a.is_zero()) continue;
            const long o = *order_at(a, Place::infinity());
            if (!min_ord || o < *min_ord) min_ord = o;
            lead = o;  // last nonzero coefficient is the leading one
        }
        return static_cast<std::size_t>(std::max(0L, *lead - *min_ord));
    }
    std::optional<long> lead;
    std::optional<long> min_ord;
    const auto delta_coeffs = local_delta_coefficients(op, p);
    for (const auto& b : delta_coeffs) {
        if (b.is_zero()) continue;
        const long o = *order_at(b, Place::finite(Rational(0)));
        if (!min_ord || o < *min_ord) min_ord = o;
        lead = o;
    }
    return static_cast<std::size_t>(std::max(0L, *lead - *min_ord));
}

Poly indicial_polynomial(const DiffOp& op, const Place& p) {
    const auto delta_coeffs = local_delta_coefficients(op, p);
    long nu = 0;
    bool have = false;
    for (const auto& b : delta_coeffs) {
        if (b.is_zero()) continue;
        const long o = *order_at(b, Place::finite(Rational(0)));
        if (!have || o < nu) { nu = o; have = true; }
    }
    if (!have) return Poly();
    std::vector<Rational> cs(delta_coeffs.size(), Rational(0));
    for (std::size_t i = 0; i < delta_coeffs.size(); ++i) {
        const RatFunc& b = delta_coeffs[i];
        if (b.is_zero()) continue;
        if (*order_at(b, Place::finite(Rational(0))) == nu) {
            const LaurentSeries s = laurent_expand_local(b, p, 1);
            cs[i] = s.coefficient_at(nu);
        }
    }
    return Poly(std::move(cs));
}

std::vector<long> integer_indicial_roots(const DiffOp& op, const Place& p) {
    const Poly ind = indicial_polynomial(op, p);
    std::vector<long> out;
    if (ind.degree() < 1) return out;
    for (const auto& [root, mult] : rational_roots(ind).roots) {
        if (root.is_integer()) out.push_back(static_cast<long>(root.numerator().get_si()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Place> singular_places(const DiffOp& op) {
    const DiffOp cleared = clear_denominators(op);
    std::vector<Place> out;
    if (cleared.order() < 0) return out;

    const Poly lead = cleared.leading_coefficient().as_polynomial();
    const RationalRoots roots = rational_roots(lead);
    if (!roots.fully_split)
        throw NonSplitLeadingCoefficient(
            "leading coefficient has an irreducible factor of degree >= 2");
    for (const auto& [root, mult] : roots.roots) out.push_back(Place::finite(root));

    // Infinity is ordinary exactly when every localized coefficient divided
    // by the leading one is holomorphic at t = 0.
    const DiffOp at_inf = localize(cleared, Place::infinity());
    const auto lead_ord = order_at(at_inf.leading_coefficient(), Place::finite(Rational(0)));
    bool ordinary = true;
    for (std::size_t i = 0; i + 1 < at_inf.coefficients().size(); ++i) {
        const RatFunc& a = at_inf.coefficients()[i];
        if (a.is_zero()) continue;
        if (*order_at(a, Place::finite(Rational(0))) < *lead_ord) { ordinary = false; break; }
    }
    if (!ordinary) out.push_back(Place::infinity());
    return out;
}

std::size_t t0_of_residue_matrix(const QMatrix& a) {
    const Spectrum spec = rational_spectrum(a);
    if (!spec.fully_split)
        throw NonRationalEigenvalues("residue matrix must have rational eigenvalues");
    for (const auto& [lambda, mult] : spec.eigenvalues)
        if (lambda < Rational(0) || lambda >= Rational(1))
            throw UnnormalizedEigenvalues("eigenvalue " + lambda.str() + " outside [0,1)");
    return a.nullity();
}

LocalAnalysis analyze_place(const DiffOp& op, const Place& p) {
    LocalAnalysis out{p, irregularity(op, p), indicial_polynomial(op, p),
                      integer_indicial_roots(op, p), std::nullopt};
    if (op.order() == 1) {
        const RatFunc f = -(op.coefficient(0) / op.coefficient(1));
        out.rank1 = classify_rank1_place(f, p);
    }
    return out;
}

}  // namespace lgl
