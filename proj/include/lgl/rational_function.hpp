#pragma once

/// Rational functions over Q: reduced fractions num/den with den monic.
/// order_at / residue follow the conventions of the projective line: at a
/// finite place orders are taken in t = z - c, at infinity in t = 1/z, and
/// residues are residues of the differential form f dz.

#include <optional>
#include <string>

#include "lgl/place.hpp"
#include "lgl/polynomial.hpp"

namespace lgl {

class RatFunc {
public:
    RatFunc() : num_(), den_(Poly::one()) {}
    RatFunc(const Poly& p) : num_(p), den_(Poly::one()) {}  // NOLINT
    RatFunc(const Rational& c) : num_(Poly(c)), den_(Poly::one()) {}  // NOLINT
    RatFunc(int c) : RatFunc(Rational(c)) {}                // NOLINT
    RatFunc(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    // Valid only when is_polynomial().
    Poly as_polynomial() const { return num_; }
    bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }

    RatFunc operator-() const { return RatFunc(-num_, den_, NoReduce{}); }
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }

    RatFunc derivative() const;

    // Defined whenever den(x) != 0.
    Rational evaluate(const Rational& x) const;

    // f(t + c) as a rational function of t (finite place moved to 0).
    RatFunc shifted(const Rational& c) const;
    // f(1/t) as a rational function of t (infinity moved to 0).
    RatFunc at_infinity_parameter() const;

    std::string str(const std::string& var = "z") const;

private:
    struct NoReduce {};
    RatFunc(Poly num, Poly den, NoReduce) : num_(std::move(num)), den_(std::move(den)) {}

    Poly num_;
    Poly den_;  // monic, nonzero, coprime to num_
};

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

// Order of vanishing of f at p in the local parameter; negative at a pole.
// std::nullopt for f = 0 ("infinite order").
std::optional<long> order_at(const RatFunc& f, const Place& p);

// Residue of the differential form f dz at p. At infinity this is minus the
// coefficient of z^{-1} in the expansion of f, so that residues over all
// places sum to zero.
Rational residue(const RatFunc& f, const Place& p);

// All places (finite poles and possibly infinity) where f dz has a nonzero
// residue or any pole; throws NonSplitDenominator when the denominator has
// an irreducible factor of degree >= 2.
std::vector<Place> pole_places(const RatFunc& f);

}  // namespace lgl
