#pragma once

/// Partial fraction decomposition over Q with rational poles:
///   f = polynomial_part + sum c/(z - pole)^order.
/// Denominators with an irreducible factor of degree >= 2 are rejected with
/// NonSplitDenominator rather than approximated.

#include <vector>

#include "lgl/rational_function.hpp"

namespace lgl {

struct PartialFractionTerm {
    Rational pole;
    std::size_t order;   // >= 1
    Rational coefficient;
};

struct PartialFraction {
    Poly polynomial_part;
    std::vector<PartialFractionTerm> terms;  // sorted by (pole, order)

    // Exact reassembly; the inverse of partial_fractions.
    RatFunc reassemble() const;
};

PartialFraction partial_fractions(const RatFunc& f);

}  // namespace lgl
