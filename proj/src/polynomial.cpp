#include "lgl/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace lgl {

Poly Poly::monomial(const Rational& c, std::size_t k) {
    if (c.is_zero()) return Poly();
    std::vector<Rational> cs(k + 1, Rational(0));
    cs[k] = c;
    return Poly(std::move(cs));
}

Poly Poly::linear_root(const Rational& c) { return Poly({std::vector<Rational>{-c, Rational(1)}}); }

Poly Poly::operator-() const {
    std::vector<Rational> cs(coeffs_);
    for (auto& c : cs) c = -c;
    return Poly(std::move(cs));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> cs(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) cs[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) cs[i] += o.coeffs_[i];
    return Poly(std::move(cs));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rational> cs(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            cs[i + j] += coeffs_[i] * o.coeffs_[j];
    return Poly(std::move(cs));
}

Poly Poly::operator*(const Rational& c) const {
    if (c.is_zero()) return Poly();
    std::vector<Rational> cs(coeffs_);
    for (auto& x : cs) x *= c;
    return Poly(std::move(cs));
}

Rational Poly::evaluate(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<Rational> cs(coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 1; i < coeffs_.size(); ++i) cs[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(cs));
}

Poly Poly::shifted(const Rational& c) const {
    // Horner in the shifted variable.
    Poly acc;
    Poly lin = Poly::linear_root(-c);  // x + c
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lin + Poly(*it);
    return acc;
}

Poly Poly::reversed() const {
    std::vector<Rational> cs(coeffs_.rbegin(), coeffs_.rend());
    return Poly(std::move(cs));
}

std::size_t Poly::root_multiplicity(const Rational& c) const {
    if (is_zero()) return 0;
    std::size_t mult = 0;
    Poly p = *this;
    while (!p.is_zero() && p.evaluate(c).is_zero()) {
        p = divide(p, Poly::linear_root(c)).quotient;
        ++mult;
    }
    return mult;
}

Poly Poly::monic() const {
    if (is_zero()) return Poly();
    return *this * leading_coefficient().inverse();
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
        const Rational c = coefficient(static_cast<std::size_t>(k));
        if (c.is_zero()) continue;
        Rational a = c;
        if (first) {
            if (a.sign() < 0) { os << "-"; a = -a; }
            first = false;
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        const bool unit = (a == Rational(1));
        if (k == 0) {
            os << a.str();
        } else {
            if (!unit) {
                if (a.is_integer()) os << a.str() << "*";
                else os << "(" << a.str() << ")*";
            }
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

PolyDivision divide(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw DivisionByZeroPolynomial("polynomial division by zero");
    Poly r = num;
    Poly q;
    const Rational lc = den.leading_coefficient();
    while (!r.is_zero() && r.degree() >= den.degree()) {
        const auto shift = static_cast<std::size_t>(r.degree() - den.degree());
        const Rational factor = r.leading_coefficient() / lc;
        const Poly term = Poly::monomial(factor, shift);
        q += term;
        r -= den * term;
    }
    return {q, r};
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divide(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

namespace {

std::vector<Integer> divisors_of(const Integer& n) {
    // n != 0; plain trial division, desk-scale inputs.
    std::vector<Integer> out;
    Integer a = ::abs(n);
    for (Integer d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            out.push_back(d);
            if (d * d != a) out.push_back(a / d);
        }
    }
    return out;
}

}  // namespace

RationalRoots rational_roots(const Poly& p) {
    RationalRoots result;
    if (p.is_zero()) return result;

    Poly q = integer_primitive(p);
    // Strip the root at 0 first.
    std::size_t zero_mult = 0;
    while (!q.is_zero() && q.coefficient(0).is_zero()) {
        q = divide(q, Poly::monomial(Rational(1), 1)).quotient;
        ++zero_mult;
    }
    if (zero_mult > 0) result.roots.emplace_back(Rational(0), zero_mult);

    if (q.degree() >= 1) {
        const Integer a0 = q.coefficient(0).numerator();
        const Integer an = q.leading_coefficient().numerator();
        for (const Integer& num : divisors_of(a0)) {
            for (const Integer& den : divisors_of(an)) {
                for (int s : {1, -1}) {
                    const Rational cand(s * num, den);
                    std::size_t mult = 0;
                    while (q.degree() >= 1 && q.evaluate(cand).is_zero()) {
                        q = divide(q, Poly::linear_root(cand)).quotient;
                        ++mult;
                    }
                    if (mult > 0) result.roots.emplace_back(cand, mult);
                }
            }
        }
    }
    result.fully_split = q.degree() <= 0;
    std::sort(result.roots.begin(), result.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return result;
}

Poly integer_primitive(const Poly& p) {
    if (p.is_zero()) return p;
    Integer den_lcm = 1;
    for (const auto& c : p.coefficients()) den_lcm = lcm(den_lcm, c.denominator());
    Integer content = 0;
    for (const auto& c : p.coefficients()) {
        const Rational scaled = c * Rational(den_lcm);
        content = gcd(content, scaled.numerator());
    }
    Rational factor = Rational(den_lcm) / Rational(content);
    if (p.leading_coefficient().sign() < 0) factor = -factor;
    return p * factor;
}

}  // namespace lgl
