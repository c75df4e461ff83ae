#pragma once

/// Truncated Laurent series at a place, with explicit precision tracking.
///
/// A series stores `precision` consecutive coefficients starting at exponent
/// `base`. Arithmetic never reads beyond the stored window; multiplying two
/// series keeps the smaller coefficient count, and dividing by a series of
/// valuation v costs nothing in count but shifts exponents.
///
/// A series that is zero on its whole window is "zero to known precision":
/// its valuation() reports the first unknown exponent (sentinel convention)
/// and is_zero_to_precision() is true.

#include <vector>

#include "lgl/place.hpp"
#include "lgl/rational_function.hpp"

namespace lgl {

class LaurentSeries {
public:
    // Window [base, base + coeffs.size()) of exponents of the local parameter.
    LaurentSeries(Place place, long base, std::vector<Rational> coeffs);

    static LaurentSeries zero(const Place& place, long known_to, std::size_t precision);

    const Place& place() const { return place_; }
    long base() const { return base_; }
    std::size_t precision() const { return coeffs_.size(); }

    // Exponent of the first nonzero stored coefficient; for a series with no
    // nonzero stored coefficient this is the sentinel base + precision
    // ("zero to this order").
    long valuation() const;
    bool is_zero_to_precision() const;

    Rational coefficient_at(long exponent) const;
    const std::vector<Rational>& window() const { return coeffs_; }

    LaurentSeries operator-() const;
    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator-(const LaurentSeries& o) const;
    LaurentSeries operator*(const LaurentSeries& o) const;
    LaurentSeries operator*(const Rational& c) const;

    // Multiplication by the monomial t^k.
    LaurentSeries shifted(long k) const;

    // Derivative with respect to z (not t): at a finite place this is d/dt,
    // at infinity d/dz = -t^2 d/dt. Costs one coefficient of precision at
    // infinity, none at a finite place (the window shifts instead).
    LaurentSeries dz_derivative() const;

    // Truncate to at most `count` coefficients starting at base.
    LaurentSeries truncated(std::size_t count) const;

    std::string str() const;

private:
    Place place_;
    long base_ = 0;
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LaurentSeries& s);

// Exact expansion of f at p: the first `precision` coefficients starting at
// the valuation of f (order_at(f, p)). precision >= 1.
LaurentSeries laurent_expand(const RatFunc& f, const Place& p, std::size_t precision);

// Expansion at t = 0 of a function already written in the local parameter
// of p; the result is tagged with p.
LaurentSeries laurent_expand_local(const RatFunc& f_local, const Place& p, std::size_t precision);

// exp of a series with strictly positive valuation (so the result has
// rational coefficients and constant term 1).
LaurentSeries exp_of_positive_part(const LaurentSeries& s, std::size_t precision);

// Multiplicative inverse; requires a nonzero leading coefficient.
LaurentSeries series_inverse(const LaurentSeries& s);

}  // namespace lgl
