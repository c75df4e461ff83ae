#pragma once

/// Exact rational arithmetic over arbitrary-precision integers.
///
/// Rational wraps GMP's mpq_class and keeps every value canonical:
/// gcd(|num|, den) = 1 and den > 0. All library arithmetic is exact; there
/// is no floating point anywhere in the core.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "lgl/errors.hpp"

namespace lgl {

using Integer = mpz_class;

class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}                     // NOLINT: implicit by design
    Rational(long n) : v_(static_cast<long>(n)) {} // NOLINT
    Rational(const Integer& n) : v_(n) {}          // NOLINT
    Rational(const Integer& num, const Integer& den) : v_(num, den) {
        if (den == 0) throw DivisionByZeroPolynomial("rational with zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    // Accepts "p/q" or an integer string; exact, no floats.
    static Rational from_string(const std::string& text);

    const Integer numerator() const { return v_.get_num(); }
    const Integer denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_nonnegative_integer() const { return is_integer() && sgn(v_) >= 0; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw DivisionByZeroPolynomial("division of rationals by zero");
        return Rational(mpq_class(v_ / o.v_));
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    Rational inverse() const {
        if (is_zero()) throw DivisionByZeroPolynomial("inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    // "p/q", or just "p" when q = 1.
    std::string str() const;

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }
inline Rational operator+(long a, const Rational& b) { return Rational(a) + b; }
inline Rational operator-(long a, const Rational& b) { return Rational(a) - b; }

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

// Largest integer k with k <= r.
Integer floor_to_integer(const Rational& r);

// fractional part r - floor(r), in [0, 1).
Rational fractional_part(const Rational& r);

}  // namespace lgl
