#include "lgl/diff_op.hpp"

#include <algorithm>

#include "lgl/errors.hpp"

namespace lgl {

DiffOp DiffOp::operator-() const {
    std::vector<RatFunc> cs(coeffs_);
    for (auto& c : cs) c = -c;
    return DiffOp(std::move(cs));
}

DiffOp DiffOp::operator+(const DiffOp& o) const {
    std::vector<RatFunc> cs(std::max(coeffs_.size(), o.coeffs_.size()), RatFunc(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) cs[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) cs[i] += o.coeffs_[i];
    return DiffOp(std::move(cs));
}

DiffOp DiffOp::operator*(const DiffOp& o) const {
    if (is_zero() || o.is_zero()) return DiffOp();
    // D^i * b = sum_k binom(i,k) b^{(k)} D^{i-k}
    std::vector<RatFunc> cs(coeffs_.size() + o.coeffs_.size() - 1, RatFunc(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            RatFunc deriv = o.coeffs_[j];
            Rational binom(1);
            for (std::size_t k = 0; k <= i; ++k) {
                if (!deriv.is_zero() && !binom.is_zero())
                    cs[i - k + j] += coeffs_[i] * deriv * binom;
                if (k == i) break;
                binom *= Rational(static_cast<long>(i - k)) / Rational(static_cast<long>(k + 1));
                deriv = deriv.derivative();
            }
        }
    }
    return DiffOp(std::move(cs));
}

bool DiffOp::has_polynomial_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const RatFunc& c) { return c.is_polynomial(); });
}

RatFunc apply(const DiffOp& op, const RatFunc& f) {
    RatFunc acc(0);
    RatFunc deriv = f;
    for (std::size_t i = 0; i < op.coefficients().size(); ++i) {
        if (!op.coefficients()[i].is_zero()) acc += op.coefficients()[i] * deriv;
        deriv = deriv.derivative();
    }
    return acc;
}

LaurentSeries apply_series(const DiffOp& op, const LaurentSeries& y) {
    if (op.is_zero()) return LaurentSeries::zero(y.place(), y.base(), y.precision());
    const Place p = y.place();
    const auto local_coeffs = [&]() {
        std::vector<RatFunc> cs;
        const DiffOp loc = localize(op, p);
        for (const auto& c : loc.coefficients()) cs.push_back(c);
        return cs;
    }();

    std::optional<LaurentSeries> acc;
    LaurentSeries deriv = y;
    for (std::size_t i = 0; i < local_coeffs.size(); ++i) {
        if (!local_coeffs[i].is_zero()) {
            const LaurentSeries c = laurent_expand_local(local_coeffs[i], p, y.precision());
            const LaurentSeries term = c * deriv;
            acc = acc ? (*acc + term) : term;
        }
        // derivative in t of the localized unknown
        if (i + 1 < local_coeffs.size()) {
            std::vector<Rational> cs(deriv.window());
            for (std::size_t k = 0; k < cs.size(); ++k)
                cs[k] *= Rational(deriv.base() + static_cast<long>(k));
            deriv = LaurentSeries(p, deriv.base() - 1, std::move(cs));
        }
    }
    return *acc;
}

DiffOp adjoint(const DiffOp& op) {
    DiffOp acc;
    DiffOp dpow = DiffOp::multiplication(RatFunc(1));
    const DiffOp d = DiffOp::derivation();
    for (std::size_t i = 0; i < op.coefficients().size(); ++i) {
        const RatFunc& a = op.coefficients()[i];
        if (!a.is_zero()) {
            DiffOp term = dpow * DiffOp::multiplication(a);
            if (i % 2 == 1) term = -term;
            acc = acc + term;
        }
        dpow = d * dpow;
    }
    return acc;
}

DiffOp clear_denominators(const DiffOp& op) {
    if (op.is_zero()) return op;
    // Common polynomial denominator.
    Poly den = Poly::one();
    for (const auto& c : op.coefficients()) {
        const Poly g = poly_gcd(den, c.den());
        den = divide(den * c.den(), g).quotient;
    }
    std::vector<Poly> polys;
    for (const auto& c : op.coefficients()) {
        const RatFunc scaled = c * RatFunc(den);
        polys.push_back(scaled.as_polynomial());
    }
    // Remove the common polynomial factor.
    Poly g;
    for (const auto& p : polys) g = poly_gcd(g, p);
    if (g.degree() > 0) {
        for (auto& p : polys) p = divide(p, g).quotient;
    }
    // Integer normalization across all coefficients at once.
    Integer den_lcm = 1;
    for (const auto& p : polys)
        for (const auto& c : p.coefficients()) den_lcm = lcm(den_lcm, c.denominator());
    Integer content = 0;
    for (const auto& p : polys)
        for (const auto& c : p.coefficients())
            content = gcd(content, (c * Rational(den_lcm)).numerator());
    Rational factor = Rational(den_lcm) / Rational(content);
    if (polys.back().leading_coefficient().sign() < 0) factor = -factor;

    std::vector<RatFunc> cs;
    for (const auto& p : polys) cs.emplace_back(p * factor);
    return DiffOp(std::move(cs));
}

DiffOp localize(const DiffOp& op, const Place& p) {
    if (op.is_zero()) return op;
    std::vector<RatFunc> shifted;
    for (const auto& c : op.coefficients())
        shifted.push_back(p.is_infinity() ? c.at_infinity_parameter() : c.shifted(p.point()));
    if (!p.is_infinity()) return DiffOp(std::move(shifted));

    // D = -t^2 d/dt: expand sum a_i(1/t) (-t^2 D_t)^i in normal form.
    const DiffOp dt_twisted =
        DiffOp::multiplication(RatFunc(Poly::monomial(Rational(-1), 2))) * DiffOp::derivation();
    DiffOp acc;
    DiffOp power = DiffOp::multiplication(RatFunc(1));
    for (std::size_t i = 0; i < shifted.size(); ++i) {
        if (!shifted[i].is_zero()) acc = acc + DiffOp::multiplication(shifted[i]) * power;
        power = dt_twisted * power;
    }
    return acc;
}

std::vector<RatFunc> local_delta_coefficients(const DiffOp& op, const Place& p) {
    // With delta = t d/dt: D_t^i = t^{-i} delta (delta - 1) ... (delta - i + 1).
    const DiffOp loc = localize(op, p);
    const long n = loc.order();
    std::vector<RatFunc> delta_coeffs(static_cast<std::size_t>(n + 1), RatFunc(0));
    // falling[i][j]: coefficient of delta^j in delta(delta-1)...(delta-i+1)
    std::vector<std::vector<Rational>> falling(static_cast<std::size_t>(n + 1));
    falling[0] = {Rational(1)};
    for (long i = 1; i <= n; ++i) {
        auto& prev = falling[static_cast<std::size_t>(i - 1)];
        std::vector<Rational> cur(static_cast<std::size_t>(i + 1), Rational(0));
        // multiply prev (in delta) by (delta - (i-1))
        for (std::size_t j = 0; j < prev.size(); ++j) {
            cur[j + 1] += prev[j];
            cur[j] -= prev[j] * Rational(i - 1);
        }
        falling[static_cast<std::size_t>(i)] = std::move(cur);
    }
    const RatFunc t_inv(Poly::one(), Poly::monomial(Rational(1), 1));
    RatFunc t_pow(1);
    for (long i = 0; i <= n; ++i) {
        const RatFunc& a = loc.coefficient(static_cast<std::size_t>(i));
        if (!a.is_zero()) {
            const RatFunc scaled = a * t_pow;  // a_i t^{-i}
            const auto& row = falling[static_cast<std::size_t>(i)];
            for (std::size_t j = 0; j < row.size(); ++j)
                if (!row[j].is_zero()) delta_coeffs[j] += scaled * RatFunc(Poly(row[j]));
        }
        t_pow = t_pow * t_inv;
    }
    return delta_coeffs;
}

LocalDeltaOp to_local_delta_form(const DiffOp& op, const Place& p, std::size_t precision) {
    if (precision < static_cast<std::size_t>(op.order() + 1))
        throw InsufficientPrecision("delta form needs precision >= order + 1");
    LocalDeltaOp out{p, {}};
    for (const auto& c : local_delta_coefficients(op, p)) {
        if (c.is_zero()) {
            out.coeffs.push_back(LaurentSeries::zero(p, 0, precision));
        } else {
            // Coefficients are already rational functions of t; expand at 0 in t.
            out.coeffs.push_back(laurent_expand_local(c, p, precision));
        }
    }
    return out;
}

DiffSystem::DiffSystem(std::vector<std::vector<RatFunc>> a) : a_(std::move(a)) {
    for (const auto& row : a_)
        if (row.size() != a_.size())
            throw InvalidCombination("system matrix must be square");
}

std::vector<RatFunc> DiffSystem::apply(const std::vector<RatFunc>& y) const {
    std::vector<RatFunc> out(dimension(), RatFunc(0));
    for (std::size_t i = 0; i < dimension(); ++i) {
        out[i] = y[i].derivative();
        for (std::size_t j = 0; j < dimension(); ++j)
            if (!a_[i][j].is_zero()) out[i] -= a_[i][j] * y[j];
    }
    return out;
}

std::vector<LaurentSeries> DiffSystem::apply_series(const std::vector<LaurentSeries>& y) const {
    const Place p = y.at(0).place();
    const DiffSystem loc = localized(p);
    std::vector<LaurentSeries> out;
    for (std::size_t i = 0; i < dimension(); ++i) {
        // local derivative is d/dt on localized components
        std::vector<Rational> cs(y[i].window());
        for (std::size_t k = 0; k < cs.size(); ++k)
            cs[k] *= Rational(y[i].base() + static_cast<long>(k));
        LaurentSeries acc(p, y[i].base() - 1, std::move(cs));
        for (std::size_t j = 0; j < dimension(); ++j) {
            if (loc.a_[i][j].is_zero()) continue;
            const LaurentSeries c = laurent_expand_local(loc.a_[i][j], p, y[j].precision());
            acc = acc - c * y[j];
        }
        out.push_back(acc);
    }
    return out;
}

DiffSystem DiffSystem::localized(const Place& p) const {
    std::vector<std::vector<RatFunc>> b(dimension(), std::vector<RatFunc>(dimension(), RatFunc(0)));
    const RatFunc minus_tm2(Poly::monomial(Rational(-1), 0), Poly::monomial(Rational(1), 2));
    for (std::size_t i = 0; i < dimension(); ++i)
        for (std::size_t j = 0; j < dimension(); ++j) {
            if (a_[i][j].is_zero()) continue;
            b[i][j] = p.is_infinity() ? minus_tm2 * a_[i][j].at_infinity_parameter()
                                      : a_[i][j].shifted(p.point());
        }
    return DiffSystem(std::move(b));
}

std::vector<RatFunc> DiffSystem::localize_rhs(const std::vector<RatFunc>& g, const Place& p) {
    std::vector<RatFunc> out;
    const RatFunc minus_tm2(Poly::monomial(Rational(-1), 0), Poly::monomial(Rational(1), 2));
    for (const auto& gi : g)
        out.push_back(p.is_infinity() ? minus_tm2 * gi.at_infinity_parameter()
                                      : gi.shifted(p.point()));
    return out;
}

DiffSystem DiffSystem::companion(const DiffOp& op) {
    const long n = op.order();
    if (n < 1) throw InvalidCombination("companion system needs order >= 1");
    std::vector<std::vector<RatFunc>> a(static_cast<std::size_t>(n),
                                        std::vector<RatFunc>(static_cast<std::size_t>(n), RatFunc(0)));
    for (long i = 0; i + 1 < n; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = RatFunc(1);
    const RatFunc lead = op.leading_coefficient();
    for (long j = 0; j < n; ++j)
        a[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(j)] =
            -(op.coefficient(static_cast<std::size_t>(j)) / lead);
    return DiffSystem(std::move(a));
}

}  // namespace lgl
