#include "lgl/laurent_series.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "lgl/errors.hpp"

namespace lgl {

LaurentSeries::LaurentSeries(Place place, long base, std::vector<Rational> coeffs)
    : place_(std::move(place)), base_(base), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw InsufficientPrecision("series with empty window");
}

LaurentSeries LaurentSeries::zero(const Place& place, long known_to, std::size_t precision) {
    if (precision == 0) throw InsufficientPrecision("zero series needs positive precision");
    return LaurentSeries(place, known_to, std::vector<Rational>(precision, Rational(0)));
}

long LaurentSeries::valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return base_ + static_cast<long>(i);
    return base_ + static_cast<long>(coeffs_.size());  // sentinel: zero to here
}

bool LaurentSeries::is_zero_to_precision() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c.is_zero(); });
}

Rational LaurentSeries::coefficient_at(long exponent) const {
    if (exponent < base_) return Rational(0);
    const long idx = exponent - base_;
    if (idx >= static_cast<long>(coeffs_.size()))
        throw InsufficientPrecision("coefficient beyond stored precision");
    return coeffs_[static_cast<std::size_t>(idx)];
}

LaurentSeries LaurentSeries::operator-() const {
    std::vector<Rational> cs(coeffs_);
    for (auto& c : cs) c = -c;
    return LaurentSeries(place_, base_, std::move(cs));
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    if (place_ != o.place_) throw InsufficientPrecision("series at different places");
    // The sum is known only where both windows are known.
    const long lo = std::min(base_, o.base_);
    const long hi = std::min(base_ + static_cast<long>(coeffs_.size()),
                             o.base_ + static_cast<long>(o.coeffs_.size()));
    if (hi <= lo) throw InsufficientPrecision("series windows do not overlap");
    std::vector<Rational> cs(static_cast<std::size_t>(hi - lo), Rational(0));
    for (long e = lo; e < hi; ++e) {
        Rational a = (e >= base_) ? coeffs_[static_cast<std::size_t>(e - base_)] : Rational(0);
        Rational b = (e >= o.base_) ? o.coeffs_[static_cast<std::size_t>(e - o.base_)] : Rational(0);
        cs[static_cast<std::size_t>(e - lo)] = a + b;
    }
    return LaurentSeries(place_, lo, std::move(cs));
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const { return *this + (-o); }

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    if (place_ != o.place_) throw InsufficientPrecision("series at different places");
    const std::size_t count = std::min(coeffs_.size(), o.coeffs_.size());
    const long base = base_ + o.base_;
    std::vector<Rational> cs(count, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i >= count) break;
        for (std::size_t j = 0; j < o.coeffs_.size() && i + j < count; ++j)
            cs[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return LaurentSeries(place_, base, std::move(cs));
}

LaurentSeries LaurentSeries::operator*(const Rational& c) const {
    std::vector<Rational> cs(coeffs_);
    for (auto& x : cs) x *= c;
    return LaurentSeries(place_, base_, std::move(cs));
}

LaurentSeries LaurentSeries::shifted(long k) const {
    return LaurentSeries(place_, base_ + k, coeffs_);
}

LaurentSeries LaurentSeries::dz_derivative() const {
    if (!place_.is_infinity()) {
        // d/dt of sum c_e t^e
        std::vector<Rational> cs(coeffs_.size(), Rational(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const long e = base_ + static_cast<long>(i);
            cs[i] = coeffs_[i] * Rational(e);
        }
        return LaurentSeries(place_, base_ - 1, std::move(cs));
    }
    // d/dz = -t^2 d/dt: t^e -> -e t^{e+1}
    std::vector<Rational> cs(coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const long e = base_ + static_cast<long>(i);
        cs[i] = coeffs_[i] * Rational(-e);
    }
    return LaurentSeries(place_, base_ + 1, std::move(cs));
}

LaurentSeries LaurentSeries::truncated(std::size_t count) const {
    if (count == 0) throw InsufficientPrecision("truncation to empty window");
    if (count >= coeffs_.size()) return *this;
    return LaurentSeries(place_, base_,
                         std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + count));
}

std::string LaurentSeries::str() const {
    std::ostringstream os;
    const std::string var = place_.is_infinity() ? "t" : "t";
    bool any = false;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        const long e = base_ + static_cast<long>(i);
        if (any) os << " + ";
        os << coeffs_[i].str();
        if (e != 0) os << "*" << var << "^" << e;
        any = true;
    }
    if (!any) os << "0";
    os << " + O(" << var << "^" << base_ + static_cast<long>(coeffs_.size()) << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentSeries& s) { return os << s.str(); }

LaurentSeries laurent_expand(const RatFunc& f, const Place& p, std::size_t precision) {
    const RatFunc local = p.is_infinity() ? f.at_infinity_parameter()
                          : p.point().is_zero() ? f
                                                : f.shifted(p.point());
    return laurent_expand_local(local, p, precision);
}

LaurentSeries laurent_expand_local(const RatFunc& local, const Place& p, std::size_t precision) {
    if (precision == 0) throw InsufficientPrecision("expansion needs precision >= 1");
    if (local.is_zero()) return LaurentSeries::zero(p, 0, precision);

    // local = t^v * (u_num / u_den) with units u_num, u_den at 0.
    Poly num = local.num();
    Poly den = local.den();
    long v = 0;
    while (!num.is_zero() && num.coefficient(0).is_zero()) {
        num = divide(num, Poly::monomial(Rational(1), 1)).quotient;
        ++v;
    }
    while (den.coefficient(0).is_zero()) {
        den = divide(den, Poly::monomial(Rational(1), 1)).quotient;
        --v;
    }

    // Power series division num/den to `precision` terms.
    std::vector<Rational> cs(precision, Rational(0));
    const Rational d0 = den.coefficient(0);
    for (std::size_t k = 0; k < precision; ++k) {
        Rational acc = num.coefficient(k);
        for (std::size_t j = 1; j <= k; ++j)
            acc -= den.coefficient(j) * cs[k - j];
        cs[k] = acc / d0;
    }
    return LaurentSeries(p, v, std::move(cs));
}

LaurentSeries exp_of_positive_part(const LaurentSeries& s, std::size_t precision) {
    if (!s.is_zero_to_precision() && s.valuation() <= 0)
        throw InsufficientPrecision("exp needs strictly positive valuation");
    // exp via the ODE y' = s' y in the t-grading: k*y_k = sum_j j*s_j*y_{k-j}
    std::vector<Rational> y(precision, Rational(0));
    y[0] = Rational(1);
    for (std::size_t k = 1; k < precision; ++k) {
        Rational acc(0);
        for (std::size_t j = 1; j <= k; ++j) {
            Rational sj(0);
            const long e = static_cast<long>(j);
            if (e >= s.base() && e < s.base() + static_cast<long>(s.precision()))
                sj = s.coefficient_at(e);
            if (!sj.is_zero()) acc += Rational(static_cast<long>(j)) * sj * y[k - j];
        }
        y[k] = acc / Rational(static_cast<long>(k));
    }
    return LaurentSeries(s.place(), 0, std::move(y));
}

LaurentSeries series_inverse(const LaurentSeries& s) {
    if (s.is_zero_to_precision() || s.valuation() != s.base())
        throw InsufficientPrecision("inverse needs a nonzero leading coefficient");
    const std::size_t n = s.precision();
    std::vector<Rational> inv(n, Rational(0));
    const Rational a0 = s.coefficient_at(s.base());
    inv[0] = a0.inverse();
    for (std::size_t k = 1; k < n; ++k) {
        Rational acc(0);
        for (std::size_t j = 1; j <= k; ++j)
            acc += s.coefficient_at(s.base() + static_cast<long>(j)) * inv[k - j];
        inv[k] = -acc / a0;
    }
    return LaurentSeries(s.place(), -s.base(), std::move(inv));
}

}  // namespace lgl
