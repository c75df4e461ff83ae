#pragma once

/// Formal local solvability over Q((t)) for scalar operators and first-order
/// systems, with explicit obstruction functionals.
///
/// The decision procedure models the operator on a finite exponent window
/// as an exact rational matrix. Rows w in [w_min, w_cut] of the image are
/// complete by construction (columns outside the window cannot touch them),
/// so the left null space of the truncated matrix is exactly the space of
/// linear conditions a right-hand side must satisfy in those rows; beyond
/// w_cut the recursion is invertible because the window is pushed past every
/// integer root of the indicial data. The window is then enlarged and the
/// obstruction rank must not change (stabilization certificate); a change
/// raises StabilizationFailure rather than guessing.

#include <string>
#include <vector>

#include "lgl/diff_op.hpp"
#include "lgl/local_analysis.hpp"

namespace lgl {

struct TruncationPolicy {
    long extra_margin = 0;  // widens the initial window top
    long extra_depth = 0;   // deepens the candidate-solution window bottom
};

// Linear conditions on a right-hand side's local coefficient vector.
struct Obstruction {
    Place place = Place::infinity();
    QMatrix functionals;                  // one row per independent condition
    std::vector<std::string> rhs_basis_labels;  // column labels: one per (exponent, component)
    long window_min = 0;                  // first modeled exponent
    long window_max = 0;                  // last modeled exponent
    std::size_t components = 1;

    std::size_t rank() const { return functionals.rows(); }
};

// The local model at a place, reusable across right-hand sides. Build once,
// then evaluate many rhs vectors against the same certified functionals.
class LocalSolvability {
public:
    // Scalar L at p. `max_rhs_pole_order` is the deepest pole (in the local
    // parameter) any right-hand side submitted later may have.
    LocalSolvability(const DiffOp& op, const Place& p, long max_rhs_pole_order,
                     const TruncationPolicy& policy = {});
    // System y' = A y at p.
    LocalSolvability(const DiffSystem& system, const Place& p, long max_rhs_pole_order,
                     const TruncationPolicy& policy = {});

    const Obstruction& obstruction() const { return obstruction_; }
    const Place& place() const { return place_; }

    // Local coefficient vector of a rational rhs over the modeled window.
    std::vector<Rational> rhs_vector(const RatFunc& g) const;
    std::vector<Rational> rhs_vector(const std::vector<RatFunc>& g) const;

    // Values of the obstruction functionals on the rhs; all-zero iff a
    // formal solution exists.
    std::vector<Rational> evaluate(const std::vector<Rational>& rhs_vec) const;
    bool solvable(const RatFunc& g) const;
    bool solvable(const std::vector<RatFunc>& g) const;

private:
    struct Model;
    void build(const Model& model, long max_rhs_pole_order, const TruncationPolicy& policy);

    Place place_ = Place::infinity();
    std::size_t ncomp_ = 1;
    bool is_system_ = false;
    Obstruction obstruction_;
};

// One-shot convenience: decide L(y) = g at p.
struct SolvabilityResult {
    bool solvable;
    Obstruction obstruction;
};
SolvabilityResult local_solvable(const DiffOp& op, const RatFunc& g, const Place& p,
                                 const TruncationPolicy& policy = {});
SolvabilityResult local_solvable(const DiffSystem& system, const std::vector<RatFunc>& g,
                                 const Place& p, const TruncationPolicy& policy = {});

}  // namespace lgl
