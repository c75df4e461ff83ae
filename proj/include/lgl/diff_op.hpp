#pragma once

/// The noncommutative operator algebra Q(z)[D] with D = d/dz, plus
/// first-order matrix systems D - A. Operators are kept in the normal form
/// sum a_i(z) D^i (all powers of D moved right); products are normalized
/// with the commutation rule D*a = a*D + a'.

#include <vector>

#include "lgl/laurent_series.hpp"
#include "lgl/qmatrix.hpp"
#include "lgl/rational_function.hpp"

namespace lgl {

class DiffOp {
public:
    DiffOp() = default;  // the zero operator
    explicit DiffOp(std::vector<RatFunc> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) {
        trim();
    }

    static DiffOp zero() { return DiffOp(); }
    static DiffOp derivation() { return DiffOp({RatFunc(0), RatFunc(1)}); }
    static DiffOp multiplication(const RatFunc& a) { return DiffOp({a}); }

    bool is_zero() const { return coeffs_.empty(); }
    // Order of the zero operator is -1 by convention.
    long order() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<RatFunc>& coefficients() const { return coeffs_; }
    RatFunc coefficient(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : RatFunc(0);
    }
    RatFunc leading_coefficient() const {
        return coeffs_.empty() ? RatFunc(0) : coeffs_.back();
    }

    DiffOp operator-() const;
    DiffOp operator+(const DiffOp& o) const;
    DiffOp operator-(const DiffOp& o) const { return *this + (-o); }
    DiffOp operator*(const DiffOp& o) const;  // noncommutative composition
    bool operator==(const DiffOp& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const DiffOp& o) const { return !(*this == o); }

    bool has_polynomial_coefficients() const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<RatFunc> coeffs_;  // a_0 .. a_n
};

// L(f) for rational f.
RatFunc apply(const DiffOp& op, const RatFunc& f);

// L acting on a truncated series at its place. An operator whose localized
// coefficients have a pole of order k at the place costs k coefficients of
// usable window; the result window reflects exactly what is known.
LaurentSeries apply_series(const DiffOp& op, const LaurentSeries& y);

// Formal adjoint sum (-1)^i D^i a_i, an involution.
DiffOp adjoint(const DiffOp& op);

// u * L with u in Q(z)^* chosen so all coefficients are integer polynomials,
// their collective content is 1, no common polynomial factor remains, and
// the leading coefficient has positive leading term. Idempotent.
DiffOp clear_denominators(const DiffOp& op);

// The operator rewritten in the local parameter at p: for finite p the
// coefficients are shifted; at infinity D = -t^2 d/dt is expanded so that
// (localized L)(y(1/t)) = (L y)(1/t). Coefficients are rational in t.
DiffOp localize(const DiffOp& op, const Place& p);

// Local coefficients of L written against delta = t d/dt at p, exact
// rational functions of t: L = sum delta_coeffs[i](t) delta^i.
std::vector<RatFunc> local_delta_coefficients(const DiffOp& op, const Place& p);

// Spec-facing view of the delta form with truncated-series coefficients.
struct LocalDeltaOp {
    Place place;
    std::vector<LaurentSeries> coeffs;  // b_0 .. b_n
};
LocalDeltaOp to_local_delta_form(const DiffOp& op, const Place& p, std::size_t precision);

// First-order system y' = A y, operator form D - A.
class DiffSystem {
public:
    explicit DiffSystem(std::vector<std::vector<RatFunc>> a);

    std::size_t dimension() const { return a_.size(); }
    const std::vector<std::vector<RatFunc>>& matrix() const { return a_; }
    const RatFunc& entry(std::size_t i, std::size_t j) const { return a_[i][j]; }

    // (D - A) applied to a vector of rational functions.
    std::vector<RatFunc> apply(const std::vector<RatFunc>& y) const;
    std::vector<LaurentSeries> apply_series(const std::vector<LaurentSeries>& y) const;

    // System in the local parameter: Y' = A_loc Y with A_loc(t) = A(c + t)
    // at a finite place and A_loc(t) = -t^{-2} A(1/t) at infinity. A right
    // hand side g transforms the same way at infinity.
    DiffSystem localized(const Place& p) const;
    static std::vector<RatFunc> localize_rhs(const std::vector<RatFunc>& g, const Place& p);

    // Companion system of a scalar operator (standard first-order reduction).
    static DiffSystem companion(const DiffOp& op);

private:
    std::vector<std::vector<RatFunc>> a_;
};

}  // namespace lgl
