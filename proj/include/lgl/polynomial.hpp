#pragma once

/// Dense univariate polynomials over Q, coefficients stored in ascending
/// degree. The zero polynomial is the empty coefficient sequence; otherwise
/// the leading coefficient is nonzero.

#include <optional>
#include <string>
#include <vector>

#include "lgl/rational.hpp"

namespace lgl {

class Poly {
public:
    Poly() = default;
    Poly(const Rational& c) { if (!c.is_zero()) coeffs_ = {c}; }  // NOLINT
    Poly(int c) : Poly(Rational(c)) {}                            // NOLINT
    explicit Poly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(1); }
    // The monomial c * x^k.
    static Poly monomial(const Rational& c, std::size_t k);
    // x - c.
    static Poly linear_root(const Rational& c);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1 by convention here.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : Rational(0);
    }
    Rational leading_coefficient() const {
        return coeffs_.empty() ? Rational(0) : coeffs_.back();
    }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& c) const;
    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    Rational evaluate(const Rational& x) const;
    Poly derivative() const;
    // p(x + c): shift of the variable, used to move a finite place to the origin.
    Poly shifted(const Rational& c) const;
    // x^deg * p(1/x), used at the place at infinity.
    Poly reversed() const;
    // Multiplicity of c as a root (0 when p(c) != 0).
    std::size_t root_multiplicity(const Rational& c) const;

    Poly monic() const;

    std::string str(const std::string& var = "z") const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

struct PolyDivision {
    Poly quotient;
    Poly remainder;
};

// Euclidean division; throws DivisionByZeroPolynomial when divisor = 0.
PolyDivision divide(const Poly& num, const Poly& den);

// Monic gcd over Q[x]; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

// All rational roots with multiplicities, pairs (root, multiplicity).
// `fully_split` is set when deflating every rational root leaves a constant.
struct RationalRoots {
    std::vector<std::pair<Rational, std::size_t>> roots;
    bool fully_split = false;
};
RationalRoots rational_roots(const Poly& p);

// Multiply by the lcm of coefficient denominators and divide by the gcd of
// the resulting integer coefficients; sign chosen so the leading coefficient
// is positive. Maps 0 to 0.
Poly integer_primitive(const Poly& p);

}  // namespace lgl
