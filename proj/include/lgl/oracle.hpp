#pragma once

/// Brute-force computation of dim lgl: a basis of the polynomial cokernel
/// Q[z]^n / image, then per-place formal-solvability obstructions stacked
/// and intersected. Independent of the closed-form dimension formulas; the
/// two sides are cross-checked in the acceptance suite.

#include <map>
#include <vector>

#include "lgl/local_solver.hpp"

namespace lgl {

// Cokernel of L acting on polynomials, with the degree bookkeeping that
// certifies the truncation: sigma is the generic degree shift, the symbol
// polynomial c(m) detects the exceptional degrees where deg L(z^m) drops,
// and the quotient dimension must survive two window extensions.
struct PolyCokernel {
    std::vector<std::vector<Poly>> basis;  // representatives; inner vector has one entry per component
    std::vector<long> exceptional_degrees;
    Poly symbol_polynomial;  // in the degree variable m
    long sigma = 0;
    long window = 0;             // largest input degree used
    bool stabilization_ok = false;  // two window extensions left the pattern unchanged
};

// Scalar operator with polynomial coefficients and coefficient gcd 1
// (callers run clear_denominators first; this function re-clears to be safe).
PolyCokernel poly_cokernel(const DiffOp& op);

struct OracleReport {
    std::size_t dimension = 0;
    std::size_t coker_dimension = 0;
    std::map<std::string, std::size_t> obstruction_ranks;  // place -> rank
    std::vector<std::vector<Poly>> witnesses;              // basis of the locally solvable subspace
    // For every rejected cokernel basis element, a place where some
    // obstruction functional evaluates to a nonzero value on it.
    std::vector<std::pair<std::size_t, std::string>> rejection_witnesses;
    // Rank of the classes of the polynomial model that are images of
    // rational functions with poles at the singular points; these are global
    // images and are excluded from the dimension.
    std::size_t global_image_rank = 0;
    bool stabilization_ok = false;
    std::vector<std::string> obstruction_places;
};

// dim lgl for a scalar operator over Q(z); leading coefficient must split
// over Q. Scaling by Q(z)^* does not change the answer, so the operator is
// cleared first.
OracleReport lgl_oracle(const DiffOp& op);

// dim lgl for the system y' = A y with A over Q(z).
OracleReport lgl_oracle_system(const DiffSystem& system);

// Membership: is f (an arbitrary rational right-hand side) locally solvable
// at every place? Uses the principal-part reduction to a polynomial
// representative before checking.
bool oracle_membership(const DiffOp& op, const RatFunc& f);

}  // namespace lgl
