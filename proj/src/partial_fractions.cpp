#include "lgl/partial_fractions.hpp"

#include <algorithm>

#include "lgl/laurent_series.hpp"

namespace lgl {

RatFunc PartialFraction::reassemble() const {
    RatFunc acc{polynomial_part};
    for (const auto& term : terms) {
        Poly den = Poly::one();
        const Poly lin = Poly::linear_root(term.pole);
        for (std::size_t i = 0; i < term.order; ++i) den *= lin;
        acc += RatFunc(Poly(term.coefficient), den);
    }
    return acc;
}

PartialFraction partial_fractions(const RatFunc& f) {
    PartialFraction out;
    const PolyDivision split = divide(f.num(), f.den());
    out.polynomial_part = split.quotient;

    const RationalRoots roots = rational_roots(f.den());
    if (!roots.fully_split)
        throw NonSplitDenominator("denominator has an irreducible factor of degree >= 2");

    for (const auto& [pole, mult] : roots.roots) {
        // Principal part coefficients are the negative-exponent coefficients
        // of the expansion at the pole.
        const LaurentSeries s = laurent_expand(f, Place::finite(pole), mult);
        for (std::size_t k = 1; k <= mult; ++k) {
            const Rational c = s.coefficient_at(-static_cast<long>(k));
            if (!c.is_zero()) out.terms.push_back({pole, k, c});
        }
    }
    std::sort(out.terms.begin(), out.terms.end(), [](const auto& a, const auto& b) {
        if (a.pole != b.pole) return a.pole < b.pole;
        return a.order < b.order;
    });
    return out;
}

}  // namespace lgl
