#pragma once

/// Per-place analysis of operators and rank-1 connections: classification,
/// irregularity, indicial polynomial, singular-place detection, and the
/// kernel dimension of a normalized residue matrix.

#include <optional>
#include <set>
#include <vector>

#include "lgl/diff_op.hpp"
#include "lgl/qmatrix.hpp"

namespace lgl {

// Classification of a place for the rank-1 operator D - f.
//
// Conventions for f dz at a finite place c: pole order k = -ord_c(f);
// regular when k <= 1 with integer residue, regular singular when k = 1
// with non-integer residue, irregular with index k - 1 when k >= 2.
//
// At infinity the irregularity index follows the coefficient-order
// convention: a pole of f itself of order d >= 1 in t = 1/z reports
// Irregular(d); f with a nonzero finite limit at infinity reports
// Irregular(1). Dimension formulas account for the difference between this
// index and the pole order of f dz (see dimension_formulas.hpp).
struct PlaceClassification {
    enum class Tag { Regular, RegularSingular, Irregular };
    Tag tag;
    Rational residue;          // meaningful for Regular / RegularSingular
    std::size_t irregularity;  // meaningful for Irregular, >= 1

    bool is_singular() const { return tag != Tag::Regular; }
};

PlaceClassification classify_rank1_place(const RatFunc& f, const Place& p);

// Irregularity of an operator at a place. At a finite place this is the
// Newton height of the local delta form: ord(b_n) - min_i ord(b_i), floored
// at zero. At infinity the coefficient orders are taken directly in t = 1/z
// (matching classify_rank1_place's convention for rank 1).
std::size_t irregularity(const DiffOp& op, const Place& p);

// Indicial polynomial in the exponent variable s, computed from the minimal
// stratum of the true local delta form; its integer roots are exactly the
// exponents where recursive series solving can fail or branch.
Poly indicial_polynomial(const DiffOp& op, const Place& p);

// Nonnegative integer roots do not exist for every operator; all integer
// roots of the indicial polynomial, sorted.
std::vector<long> integer_indicial_roots(const DiffOp& op, const Place& p);

// Candidate singular places: rational roots of the leading coefficient
// (after clearing denominators) plus infinity when the local form at
// infinity is not an ordinary point. Places outside the set have a full
// local solution basis. Throws NonSplitLeadingCoefficient.
std::vector<Place> singular_places(const DiffOp& op);

// Nullity of a normalized local residue matrix. Preconditions: the
// characteristic polynomial splits over Q and all eigenvalues lie in [0,1).
std::size_t t0_of_residue_matrix(const QMatrix& a);

// Aggregated per-place report used by the CLI.
struct LocalAnalysis {
    Place place;
    std::size_t irregularity = 0;
    Poly indicial;
    std::vector<long> integer_roots;
    std::optional<PlaceClassification> rank1;  // present for order-1 operators
};

LocalAnalysis analyze_place(const DiffOp& op, const Place& p);

}  // namespace lgl
