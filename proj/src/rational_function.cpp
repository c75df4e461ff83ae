#include "lgl/rational_function.hpp"

#include <ostream>
#include <sstream>

#include "lgl/laurent_series.hpp"

namespace lgl {

RatFunc::RatFunc(Poly num, Poly den) {
    if (den.is_zero()) throw DivisionByZeroPolynomial("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = Poly();
        den_ = Poly::one();
        return;
    }
    const Poly g = poly_gcd(num, den);
    num = divide(num, g).quotient;
    den = divide(den, g).quotient;
    const Rational lc = den.leading_coefficient();
    num_ = num * lc.inverse();
    den_ = den * lc.inverse();
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw DivisionByZeroPolynomial("division of rational functions by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rational RatFunc::evaluate(const Rational& x) const {
    const Rational d = den_.evaluate(x);
    if (d.is_zero()) throw DivisionByZeroPolynomial("evaluation at a pole");
    return num_.evaluate(x) / d;
}

RatFunc RatFunc::shifted(const Rational& c) const {
    return RatFunc(num_.shifted(c), den_.shifted(c));
}

RatFunc RatFunc::at_infinity_parameter() const {
    // f(1/t) = t^(deg den - deg num) * rev(num)(t) / rev(den)(t)
    if (is_zero()) return RatFunc();
    const long shift = den_.degree() - num_.degree();
    Poly n = num_.reversed();
    Poly d = den_.reversed();
    if (shift >= 0) n = n * Poly::monomial(Rational(1), static_cast<std::size_t>(shift));
    else d = d * Poly::monomial(Rational(1), static_cast<std::size_t>(-shift));
    return RatFunc(n, d);
}

std::string RatFunc::str(const std::string& var) const {
    if (is_polynomial()) return num_.str(var);
    std::ostringstream os;
    os << "(" << num_.str(var) << ")/(" << den_.str(var) << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.str(); }

std::optional<long> order_at(const RatFunc& f, const Place& p) {
    if (f.is_zero()) return std::nullopt;
    if (p.is_infinity()) return f.den().degree() - f.num().degree();
    const Rational& c = p.point();
    const long vn = static_cast<long>(f.num().root_multiplicity(c));
    const long vd = static_cast<long>(f.den().root_multiplicity(c));
    return vn - vd;
}

Rational residue(const RatFunc& f, const Place& p) {
    if (f.is_zero()) return Rational(0);
    const auto ord = order_at(f, p);
    if (p.is_infinity()) {
        // coefficient of z^{-1} = coefficient of t^{1} in f(1/t); needs the
        // expansion only when f vanishes at infinity.
        if (*ord > 1) return Rational(0);
        const long prec = 2 - *ord;  // reach exponent 1 inclusive
        const LaurentSeries s = laurent_expand(f, p, static_cast<std::size_t>(prec));
        return -s.coefficient_at(1);
    }
    if (*ord >= 0) return Rational(0);
    const LaurentSeries s = laurent_expand(f, p, static_cast<std::size_t>(-*ord));
    return s.coefficient_at(-1);
}

std::vector<Place> pole_places(const RatFunc& f) {
    std::vector<Place> out;
    if (f.is_zero()) return out;
    const RationalRoots roots = rational_roots(f.den());
    if (!roots.fully_split)
        throw NonSplitDenominator("denominator has an irreducible factor of degree >= 2");
    for (const auto& [root, mult] : roots.roots) out.push_back(Place::finite(root));
    const auto oi = order_at(f, Place::infinity());
    if (oi && *oi < 2) out.push_back(Place::infinity());
    return out;
}

}  // namespace lgl
