#include "lgl/oracle.hpp"

#include <algorithm>

#include "lgl/errors.hpp"
#include "lgl/partial_fractions.hpp"

namespace lgl {

namespace {

// Echelon accumulation of polynomial vectors graded by (degree, component):
// index = degree * ncomp + component. Rows keep distinct leading indices.
class DegreeEchelon {
public:
    DegreeEchelon() = default;

    void insert(std::vector<Rational> v) {
        while (true) {
            const long lead = leading_index(v);
            if (lead < 0) return;  // reduced to zero
            const auto it = rows_.find(lead);
            if (it == rows_.end()) {
                const Rational inv = v[static_cast<std::size_t>(lead)].inverse();
                for (auto& c : v) c *= inv;
                rows_.emplace(lead, std::move(v));
                return;
            }
            const Rational f = v[static_cast<std::size_t>(lead)];
            const auto& row = it->second;
            for (std::size_t i = 0; i < row.size() && i < v.size(); ++i)
                if (!row[i].is_zero()) v[i] -= f * row[i];
            v[static_cast<std::size_t>(lead)] = Rational(0);
        }
    }

    bool is_hit(long index) const { return rows_.count(index) > 0; }
    long max_hit() const { return rows_.empty() ? -1 : rows_.rbegin()->first; }

    std::vector<long> unhit_below(long bound) const {
        std::vector<long> out;
        for (long i = 0; i <= bound; ++i)
            if (!is_hit(i)) out.push_back(i);
        return out;
    }

    // Residual of v after full reduction against the stored rows.
    std::vector<Rational> reduce(std::vector<Rational> v) const {
        for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
            const long lead = it->first;
            if (lead >= static_cast<long>(v.size())) continue;
            const Rational f = v[static_cast<std::size_t>(lead)];
            if (f.is_zero()) continue;
            const auto& row = it->second;
            for (std::size_t i = 0; i < row.size() && i < v.size(); ++i)
                if (!row[i].is_zero()) v[i] -= f * row[i];
            v[static_cast<std::size_t>(lead)] = Rational(0);
        }
        return v;
    }

private:
    static long leading_index(const std::vector<Rational>& v) {
        for (long i = static_cast<long>(v.size()) - 1; i >= 0; --i)
            if (!v[static_cast<std::size_t>(i)].is_zero()) return i;
        return -1;
    }

    std::map<long, std::vector<Rational>> rows_;  // ordered by leading index
};

struct PolynomialModel {
    // T(z^m e_j) as polynomial vectors; scalar case has ncomp = 1.
    std::size_t ncomp = 1;
    long order = 1;
    long sigma = 0;
    long deg_span = 0;
    Poly symbol;                       // c(m); zero when the symbol degenerates
    std::vector<long> exceptional;     // nonnegative integer roots of c(m)
    bool symbol_degenerate = false;

    std::vector<Poly> scalar_coeffs;            // scalar case
    Poly d;                                     // system case: d Y' - B Y
    std::vector<std::vector<Poly>> b;           // system case
    bool is_system = false;

    std::vector<Poly> image_of(long m, std::size_t j) const {
        if (!is_system) {
            Poly acc;
            Rational falling(1);
            // sum_i a_i * m(m-1)...(m-i+1) z^{m-i}
            for (std::size_t i = 0; i < scalar_coeffs.size(); ++i) {
                if (!falling.is_zero() && static_cast<long>(i) <= m && !scalar_coeffs[i].is_zero()) {
                    const Poly mono =
                        Poly::monomial(falling, static_cast<std::size_t>(m - static_cast<long>(i)));
                    acc += scalar_coeffs[i] * mono;
                }
                falling *= Rational(m - static_cast<long>(i));
            }
            return {acc};
        }
        std::vector<Poly> out(ncomp);
        if (m >= 1) {
            const Poly dz = d * Poly::monomial(Rational(m), static_cast<std::size_t>(m - 1));
            out[j] = dz;
        }
        const Poly zm = Poly::monomial(Rational(1), static_cast<std::size_t>(m));
        for (std::size_t i = 0; i < ncomp; ++i)
            if (!b[i][j].is_zero()) out[i] -= b[i][j] * zm;
        return out;
    }

    static PolynomialModel scalar(const DiffOp& cleared) {
        PolynomialModel pm;
        pm.order = cleared.order();
        for (const auto& c : cleared.coefficients()) pm.scalar_coeffs.push_back(c.as_polynomial());

        long sigma = 0, low = 0;
        bool have = false;
        for (std::size_t i = 0; i < pm.scalar_coeffs.size(); ++i) {
            if (pm.scalar_coeffs[i].is_zero()) continue;
            const long s = pm.scalar_coeffs[i].degree() - static_cast<long>(i);
            if (!have) { sigma = low = s; have = true; }
            sigma = std::max(sigma, s);
            low = std::min(low, s);
        }
        pm.sigma = sigma;
        pm.deg_span = sigma - low;

        // c(m) = sum over the top stratum of lc(a_i) m(m-1)...(m-i+1)
        Poly c;
        for (std::size_t i = 0; i < pm.scalar_coeffs.size(); ++i) {
            if (pm.scalar_coeffs[i].is_zero()) continue;
            if (pm.scalar_coeffs[i].degree() - static_cast<long>(i) != sigma) continue;
            Poly falling = Poly::one();
            for (std::size_t k = 0; k < i; ++k)
                falling *= Poly(std::vector<Rational>{Rational(-static_cast<long>(k)), Rational(1)});
            c += falling * pm.scalar_coeffs[i].leading_coefficient();
        }
        pm.symbol = c;
        pm.symbol_degenerate = c.is_zero();
        if (!pm.symbol_degenerate)
            for (const auto& [root, mult] : rational_roots(c).roots)
                if (root.is_nonnegative_integer())
                    pm.exceptional.push_back(static_cast<long>(root.numerator().get_si()));
        std::sort(pm.exceptional.begin(), pm.exceptional.end());
        return pm;
    }

    static PolynomialModel system(const DiffSystem& sys) {
        PolynomialModel pm;
        pm.is_system = true;
        pm.ncomp = sys.dimension();
        pm.order = 1;
        // Common denominator d and polynomial matrix B = d A.
        Poly den = Poly::one();
        for (const auto& row : sys.matrix())
            for (const auto& e : row) {
                const Poly g = poly_gcd(den, e.den());
                den = divide(den * e.den(), g).quotient;
            }
        pm.d = den;
        pm.b.assign(pm.ncomp, std::vector<Poly>(pm.ncomp, Poly()));
        for (std::size_t i = 0; i < pm.ncomp; ++i)
            for (std::size_t j = 0; j < pm.ncomp; ++j) {
                const RatFunc scaled = sys.matrix()[i][j] * RatFunc(den);
                pm.b[i][j] = scaled.as_polynomial();
            }

        long max_b = -1;
        for (const auto& row : pm.b)
            for (const auto& e : row) max_b = std::max(max_b, e.degree());
        pm.sigma = std::max(pm.d.degree() - 1, max_b);
        long low = pm.d.degree() - 1;
        for (const auto& row : pm.b)
            for (const auto& e : row)
                if (!e.is_zero()) low = std::min(low, e.degree());
        pm.deg_span = pm.sigma - low;

        // Symbol det(m d_top I - B_top) over the top stratum.
        QMatrix p(pm.ncomp, pm.ncomp), q(pm.ncomp, pm.ncomp);
        if (pm.d.degree() - 1 == pm.sigma)
            p = QMatrix::identity(pm.ncomp) * pm.d.leading_coefficient();
        for (std::size_t i = 0; i < pm.ncomp; ++i)
            for (std::size_t j = 0; j < pm.ncomp; ++j)
                if (pm.b[i][j].degree() == pm.sigma) q.at(i, j) = -pm.b[i][j].leading_coefficient();
        // det(m P + Q) as a polynomial in m via cofactor expansion
        std::vector<std::vector<Poly>> entries(pm.ncomp, std::vector<Poly>(pm.ncomp));
        for (std::size_t i = 0; i < pm.ncomp; ++i)
            for (std::size_t j = 0; j < pm.ncomp; ++j)
                entries[i][j] = Poly(std::vector<Rational>{q.at(i, j), p.at(i, j)});
        struct Det {
            const std::vector<std::vector<Poly>>& m;
            Poly operator()(std::size_t row, std::vector<std::size_t> use) const {
                if (use.empty()) return Poly::one();
                Poly acc;
                for (std::size_t idx = 0; idx < use.size(); ++idx) {
                    const Poly& e = m[row][use[idx]];
                    if (e.is_zero()) continue;
                    std::vector<std::size_t> rest;
                    for (std::size_t k = 0; k < use.size(); ++k)
                        if (k != idx) rest.push_back(use[k]);
                    Poly sub = (*this)(row + 1, std::move(rest));
                    if (idx % 2 == 1) sub = -sub;
                    acc += e * sub;
                }
                return acc;
            }
        };
        std::vector<std::size_t> cols(pm.ncomp);
        for (std::size_t j = 0; j < pm.ncomp; ++j) cols[j] = j;
        pm.symbol = Det{entries}(0, cols);
        pm.symbol_degenerate = pm.symbol.is_zero() || pm.symbol.degree() < 1;
        if (!pm.symbol.is_zero())
            for (const auto& [root, mult] : rational_roots(pm.symbol).roots)
                if (root.is_nonnegative_integer())
                    pm.exceptional.push_back(static_cast<long>(root.numerator().get_si()));
        std::sort(pm.exceptional.begin(), pm.exceptional.end());
        return pm;
    }
};

struct CokernelComputation {
    std::vector<long> unhit_indices;  // basis: index = degree * ncomp + component
    long window = 0;
    bool stabilization_ok = false;
    DegreeEchelon echelon;  // retained for reducing polynomials to basis coordinates
};

CokernelComputation run_cokernel(const PolynomialModel& pm) {
    const long n = static_cast<long>(pm.ncomp);
    long m_star = -1;
    for (long e : pm.exceptional) m_star = std::max(m_star, e);
    long m0 = m_star + pm.order + pm.deg_span + 2;
    if (pm.symbol_degenerate) m0 += 4 * (pm.deg_span + n + 2);
    m0 = std::max(m0, pm.order + 2);

    const long delta = pm.deg_span + pm.order + 2;
    // Degrees <= window + low are untouched by any column beyond the window,
    // so the quotient pattern is exact there; the top of that safe region
    // must be free of unhit indices before the window counts.
    const long low = pm.sigma - pm.deg_span;
    const long band_deg = pm.deg_span + pm.order + 2;

    std::vector<std::vector<long>> unhit_sets;
    long window = m0;
    int widenings = 0;
    CokernelComputation out;

    std::vector<DegreeEchelon> echelons;
    for (int pass = 0; pass < 3;) {
        DegreeEchelon ech;
        const long top_index = (window + std::max(pm.sigma, 0L) + 1) * n;
        for (long m = 0; m <= window; ++m) {
            for (std::size_t j = 0; j < pm.ncomp; ++j) {
                const auto polys = pm.image_of(m, j);
                std::vector<Rational> v(static_cast<std::size_t>(top_index + n), Rational(0));
                bool any = false;
                for (std::size_t comp = 0; comp < pm.ncomp; ++comp) {
                    for (long k = 0; k <= polys[comp].degree(); ++k) {
                        const Rational c = polys[comp].coefficient(static_cast<std::size_t>(k));
                        if (c.is_zero()) continue;
                        v[static_cast<std::size_t>(k * n + static_cast<long>(comp))] = c;
                        any = true;
                    }
                }
                if (any) ech.insert(std::move(v));
            }
        }
        const long safe_deg = window + low - 1;
        std::vector<long> unhit;
        bool usable = safe_deg >= 0;
        if (usable) {
            unhit = ech.unhit_below((safe_deg + 1) * n - 1);
            usable = unhit.empty() || unhit.back() < (safe_deg - band_deg + 1) * n;
        }
        if (!usable) {
            window += delta + 4;
            if (++widenings > 60)
                throw StabilizationFailure("cokernel window did not stabilize");
            continue;
        }
        unhit_sets.push_back(std::move(unhit));
        echelons.push_back(std::move(ech));
        if (pass == 0) out.window = window;
        window += delta;
        ++pass;
    }
    if (unhit_sets[0] != unhit_sets[1] || unhit_sets[1] != unhit_sets[2])
        throw StabilizationFailure("cokernel dimension changed across window extensions");
    out.unhit_indices = unhit_sets[0];
    out.stabilization_ok = true;
    out.echelon = std::move(echelons.back());
    return out;
}

PolyCokernel cokernel_view(const PolynomialModel& pm, const CokernelComputation& cc) {
    PolyCokernel out;
    out.sigma = pm.sigma;
    out.symbol_polynomial = pm.symbol;
    out.exceptional_degrees = pm.exceptional;
    out.window = cc.window;
    out.stabilization_ok = cc.stabilization_ok;
    const long n = static_cast<long>(pm.ncomp);
    for (long idx : cc.unhit_indices) {
        const long deg = idx / n;
        const long comp = idx % n;
        std::vector<Poly> vec(pm.ncomp, Poly());
        vec[static_cast<std::size_t>(comp)] = Poly::monomial(Rational(1), static_cast<std::size_t>(deg));
        out.basis.push_back(std::move(vec));
    }
    return out;
}

std::vector<Place> with_infinity(std::vector<Place> places) {
    const bool has_inf = std::any_of(places.begin(), places.end(),
                                     [](const Place& p) { return p.is_infinity(); });
    if (!has_inf) places.push_back(Place::infinity());
    return places;
}

// Incremental echelon over Q used to pick a basis complementary to the
// correction span.
class RowEchelon {
public:
    // Returns true when v added rank (its residual was nonzero).
    bool insert(std::vector<Rational> v) {
        for (const auto& row : rows_) {
            const Rational f = v[row.first];
            if (!f.is_zero())
                for (std::size_t i = 0; i < v.size(); ++i) v[i] -= f * row.second[i];
        }
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i].is_zero()) continue;
            const Rational inv = v[i].inverse();
            for (auto& c : v) c *= inv;
            rows_.emplace_back(i, std::move(v));
            return true;
        }
        return false;
    }
    std::size_t rank() const { return rows_.size(); }

private:
    std::vector<std::pair<std::size_t, std::vector<Rational>>> rows_;
};

// Shared obstruction stage: stack per-place functional values over the
// cokernel basis; the answer is the kernel of the stack modulo the span of
// the global-image corrections.
template <typename SolvableBuilder, typename RhsOf>
OracleReport obstruction_stage(const PolyCokernel& ck, const std::vector<Place>& places,
                               const std::vector<std::vector<Rational>>& corrections,
                               SolvableBuilder&& build_model, RhsOf&& rhs_of) {
    OracleReport report;
    report.coker_dimension = ck.basis.size();
    report.stabilization_ok = ck.stabilization_ok;
    for (const auto& p : places) report.obstruction_places.push_back(p.str());

    const std::size_t nb = ck.basis.size();
    if (nb == 0) {
        report.dimension = 0;
        return report;
    }

    std::vector<std::vector<Rational>> stacked;  // rows over basis columns
    std::vector<std::string> row_place;
    for (const auto& p : places) {
        auto model = build_model(p);
        const std::size_t rank = model.obstruction().rank();
        report.obstruction_ranks[p.str()] = rank;
        if (rank == 0) continue;
        for (std::size_t r = 0; r < rank; ++r) {
            stacked.emplace_back(nb, Rational(0));
            row_place.push_back(p.str());
        }
        const std::size_t base_row = stacked.size() - rank;
        for (std::size_t jb = 0; jb < nb; ++jb) {
            const auto values = model.evaluate(model.rhs_vector(rhs_of(ck.basis[jb])));
            for (std::size_t r = 0; r < rank; ++r) stacked[base_row + r][jb] = values[r];
        }
    }

    std::vector<std::vector<Rational>> kernel;
    if (stacked.empty()) {
        for (std::size_t j = 0; j < nb; ++j) {
            std::vector<Rational> e(nb, Rational(0));
            e[j] = Rational(1);
            kernel.push_back(std::move(e));
        }
    } else {
        QMatrix big(stacked.size(), nb);
        for (std::size_t r = 0; r < stacked.size(); ++r)
            for (std::size_t c = 0; c < nb; ++c) big.at(r, c) = stacked[r][c];
        kernel = big.nullspace();
    }

    // Global images are locally solvable everywhere; their coordinate
    // vectors must already satisfy every stacked condition.
    for (const auto& corr : corrections) {
        for (const auto& row : stacked) {
            Rational acc(0);
            for (std::size_t j = 0; j < nb; ++j) acc += row[j] * corr[j];
            if (!acc.is_zero())
                throw StabilizationFailure("global-image class violated a local condition");
        }
    }

    RowEchelon chooser;
    for (const auto& corr : corrections) chooser.insert(corr);
    report.global_image_rank = chooser.rank();

    for (const auto& kvec : kernel) {
        if (!chooser.insert(kvec)) continue;  // lies in the correction span
        std::vector<Poly> w(ck.basis[0].size(), Poly());
        for (std::size_t jb = 0; jb < nb; ++jb)
            if (!kvec[jb].is_zero())
                for (std::size_t comp = 0; comp < w.size(); ++comp)
                    w[comp] += ck.basis[jb][comp] * kvec[jb];
        report.witnesses.push_back(std::move(w));
    }
    report.dimension = report.witnesses.size();

    // Non-membership witnesses: basis elements with a nonzero stacked column.
    for (std::size_t jb = 0; jb < nb; ++jb) {
        for (std::size_t r = 0; r < stacked.size(); ++r) {
            if (!stacked[r][jb].is_zero()) {
                report.rejection_witnesses.emplace_back(jb, row_place[r]);
                break;
            }
        }
    }
    return report;
}

// Rational functions whose poles sit at the singular points and whose image
// is a polynomial (vector) represent classes of the polynomial model that
// are global images; their coordinates over the cokernel basis are removed
// from the local-global count.
template <typename ApplyToPolar>
std::vector<std::vector<Rational>> global_image_corrections(
    const CokernelComputation& cc, std::size_t ncomp,
    const std::vector<std::pair<Place, long>>& polar_bounds, ApplyToPolar&& image_of_polar) {
    std::vector<std::vector<Rational>> out;
    const long n = static_cast<long>(ncomp);
    std::map<long, std::size_t> unhit_pos;
    for (std::size_t i = 0; i < cc.unhit_indices.size(); ++i)
        unhit_pos[cc.unhit_indices[i]] = i;

    for (const auto& [place, bound] : polar_bounds) {
        if (bound <= 0 || place.is_infinity()) continue;
        const Rational c = place.point();

        // columns: polar exponent j = 1..bound and component; rows: the
        // negative part of the image, keyed by (order, component).
        struct ImageData {
            std::vector<std::map<std::pair<std::size_t, std::size_t>, Rational>> negative;
            std::vector<std::vector<Poly>> polynomial;
        } data;
        std::vector<std::pair<long, std::size_t>> columns;
        for (long j = 1; j <= bound; ++j)
            for (std::size_t comp = 0; comp < ncomp; ++comp) columns.emplace_back(j, comp);

        std::map<std::pair<std::size_t, std::size_t>, std::size_t> row_index;
        std::vector<std::map<std::pair<std::size_t, std::size_t>, Rational>> neg_parts;
        std::vector<std::vector<Poly>> poly_parts;
        for (const auto& [j, comp] : columns) {
            const auto image = image_of_polar(c, j, comp);  // vector<RatFunc>
            std::map<std::pair<std::size_t, std::size_t>, Rational> neg;
            std::vector<Poly> polys(ncomp, Poly());
            for (std::size_t i = 0; i < ncomp; ++i) {
                if (image[i].is_zero()) continue;
                const PartialFraction pf = partial_fractions(image[i]);
                polys[i] = pf.polynomial_part;
                for (const auto& term : pf.terms) {
                    if (term.coefficient.is_zero()) continue;
                    // poles can only sit at the place itself
                    neg[{term.order, i}] = term.coefficient;
                    row_index.try_emplace({term.order, i}, row_index.size());
                }
            }
            neg_parts.push_back(std::move(neg));
            poly_parts.push_back(std::move(polys));
        }

        QMatrix phi(row_index.size(), columns.size());
        for (std::size_t col = 0; col < columns.size(); ++col)
            for (const auto& [key, value] : neg_parts[col])
                phi.at(row_index.at(key), col) = value;

        for (const auto& combo : phi.nullspace()) {
            std::vector<Poly> p(ncomp, Poly());
            for (std::size_t col = 0; col < columns.size(); ++col)
                if (!combo[col].is_zero())
                    for (std::size_t i = 0; i < ncomp; ++i)
                        p[i] += poly_parts[col][i] * combo[col];
            // encode, reduce against the image echelon, read coordinates
            long maxdeg = 0;
            for (const auto& pi : p) maxdeg = std::max(maxdeg, pi.degree());
            std::vector<Rational> v(static_cast<std::size_t>((maxdeg + 1) * n), Rational(0));
            bool any = false;
            for (std::size_t i = 0; i < ncomp; ++i)
                for (long k = 0; k <= p[i].degree(); ++k) {
                    const Rational coeff = p[i].coefficient(static_cast<std::size_t>(k));
                    if (coeff.is_zero()) continue;
                    v[static_cast<std::size_t>(k * n + static_cast<long>(i))] = coeff;
                    any = true;
                }
            if (!any) continue;  // a rational kernel element of the operator
            const auto residual = cc.echelon.reduce(std::move(v));
            std::vector<Rational> coords(cc.unhit_indices.size(), Rational(0));
            bool nonzero = false;
            for (std::size_t i = 0; i < residual.size(); ++i) {
                if (residual[i].is_zero()) continue;
                const auto it = unhit_pos.find(static_cast<long>(i));
                if (it == unhit_pos.end())
                    throw StabilizationFailure(
                        "global-image residual escaped the certified window");
                coords[it->second] = residual[i];
                nonzero = true;
            }
            if (nonzero) out.push_back(std::move(coords));
        }
    }
    return out;
}

}  // namespace

PolyCokernel poly_cokernel(const DiffOp& op) {
    const DiffOp cleared = clear_denominators(op);
    if (cleared.is_zero()) throw InvalidCombination("cokernel of the zero operator");
    const PolynomialModel pm = PolynomialModel::scalar(cleared);
    return cokernel_view(pm, run_cokernel(pm));
}

OracleReport lgl_oracle(const DiffOp& op) {
    const DiffOp cleared = clear_denominators(op);
    if (cleared.order() < 0) throw InvalidCombination("oracle needs an operator of order >= 0");
    const PolynomialModel pm = PolynomialModel::scalar(cleared);
    const CokernelComputation cc = run_cokernel(pm);
    const PolyCokernel ck = cokernel_view(pm, cc);
    const std::vector<Place> places = with_infinity(singular_places(cleared));

    long max_deg = 0;
    for (const auto& b : ck.basis) max_deg = std::max(max_deg, b[0].degree());

    // Polar depth bounds at the finite singular points: a rational function
    // with deeper poles cannot map into polynomials.
    std::vector<std::pair<Place, long>> polar_bounds;
    for (const auto& p : places) {
        if (p.is_infinity()) continue;
        long nu = 0;
        bool have = false;
        for (const auto& b : local_delta_coefficients(cleared, p)) {
            if (b.is_zero()) continue;
            const long o = *order_at(b, Place::finite(Rational(0)));
            if (!have || o < nu) { nu = o; have = true; }
        }
        long min_root = 0;
        for (long r : integer_indicial_roots(cleared, p)) min_root = std::min(min_root, r);
        polar_bounds.emplace_back(p, std::max({0L, nu, -min_root}) + 2);
    }
    const auto corrections = global_image_corrections(
        cc, 1, polar_bounds, [&](const Rational& c, long j, std::size_t) {
            Poly den = Poly::one();
            for (long i = 0; i < j; ++i) den *= Poly::linear_root(c);
            return std::vector<RatFunc>{apply(cleared, RatFunc(Poly::one(), den))};
        });

    auto report = obstruction_stage(
        ck, places, corrections,
        [&](const Place& p) {
            const long pole_bound = p.is_infinity() ? max_deg : 0;
            return LocalSolvability(cleared, p, pole_bound);
        },
        [](const std::vector<Poly>& b) { return RatFunc(b[0]); });

    // Witness soundness: every reported class is locally solvable everywhere.
    for (const auto& w : report.witnesses) {
        for (const auto& p : places) {
            const auto res = local_solvable(cleared, RatFunc(w[0]), p);
            if (!res.solvable)
                throw StabilizationFailure("witness failed post-hoc local check at " + p.str());
        }
    }
    return report;
}

OracleReport lgl_oracle_system(const DiffSystem& system) {
    const PolynomialModel pm = PolynomialModel::system(system);
    const CokernelComputation cc = run_cokernel(pm);
    const PolyCokernel ck = cokernel_view(pm, cc);
    const std::size_t n = system.dimension();

    // Obstruction places: poles of A plus infinity.
    std::vector<Place> places;
    {
        const RationalRoots roots = rational_roots(pm.d);
        if (!roots.fully_split)
            throw NonSplitDenominator("system denominator has an irreducible factor of degree >= 2");
        for (const auto& [root, mult] : roots.roots) places.push_back(Place::finite(root));
        places = with_infinity(std::move(places));
    }

    const RatFunc dinv = RatFunc(Poly::one(), pm.d);
    const auto rhs_of = [&](const std::vector<Poly>& b) {
        std::vector<RatFunc> g;
        for (const auto& comp : b) g.push_back(RatFunc(comp) * dinv);
        return g;
    };

    // Polar depth bounds for the correction stage, from the local residue
    // pencil at each finite singular point.
    std::vector<std::pair<Place, long>> polar_bounds;
    for (const auto& p : places) {
        if (p.is_infinity()) continue;
        const DiffSystem loc = system.localized(p);
        long min_a = 0;
        for (const auto& row : loc.matrix())
            for (const auto& e : row) {
                if (e.is_zero()) continue;
                const auto o = order_at(e, Place::finite(Rational(0)));
                if (o) min_a = std::min(min_a, *o);
            }
        const long nu = std::min(0L, min_a + 1);
        QMatrix pencil_p(n, n), pencil_q(n, n);
        if (nu == 0) pencil_p = QMatrix::identity(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const RatFunc& e = loc.matrix()[i][j];
                if (e.is_zero()) continue;
                const auto o = order_at(e, Place::finite(Rational(0)));
                if (o && *o + 1 == nu)
                    pencil_q.at(i, j) = -laurent_expand_local(e, p, 1).coefficient_at(nu - 1);
            }
        bool degenerate = false;
        long min_root = 0;
        for (long r : integer_pencil_roots(pencil_p, pencil_q, &degenerate))
            min_root = std::min(min_root, r);
        long bound = std::max({0L, nu, -min_root}) + 2;
        if (degenerate) bound += static_cast<long>(n) * (std::max(0L, -min_a) + 2);
        polar_bounds.emplace_back(p, bound);
    }
    const auto corrections = global_image_corrections(
        cc, n, polar_bounds, [&](const Rational& c, long j, std::size_t comp) {
            Poly den = Poly::one();
            for (long i = 0; i < j; ++i) den *= Poly::linear_root(c);
            const RatFunc y(Poly::one(), den);
            // T(y e_comp) = d y' e_comp - y (B column comp)
            std::vector<RatFunc> image(n, RatFunc(0));
            image[comp] = RatFunc(pm.d) * y.derivative();
            for (std::size_t i = 0; i < n; ++i)
                if (!pm.b[i][comp].is_zero()) image[i] -= RatFunc(pm.b[i][comp]) * y;
            return image;
        });

    auto report = obstruction_stage(
        ck, places, corrections,
        [&](const Place& p) {
            long pole_bound = 0;
            for (const auto& b : ck.basis)
                for (const auto& comp : b) {
                    if (comp.is_zero()) continue;
                    const RatFunc g = RatFunc(comp) * dinv;
                    const RatFunc local = p.is_infinity()
                                              ? RatFunc(Poly::monomial(Rational(-1), 0),
                                                        Poly::monomial(Rational(1), 2)) *
                                                    g.at_infinity_parameter()
                                              : g.shifted(p.point());
                    const auto o = order_at(local, Place::finite(Rational(0)));
                    if (o) pole_bound = std::max(pole_bound, -*o);
                }
            return LocalSolvability(system, p, pole_bound);
        },
        rhs_of);

    for (const auto& w : report.witnesses) {
        for (const auto& p : places) {
            const auto res = local_solvable(system, rhs_of(w), p);
            if (!res.solvable)
                throw StabilizationFailure("witness failed post-hoc local check at " + p.str());
        }
    }
    return report;
}

bool oracle_membership(const DiffOp& op, const RatFunc& f) {
    // Scaling the operator would rescale which right-hand sides are
    // solvable, so the query runs against op itself; clearing is only used
    // to locate the singular places (a scale-invariant set).
    std::vector<Place> places = with_infinity(singular_places(op));
    if (!f.is_zero()) {
        for (const auto& p : pole_places(f)) {
            if (std::find(places.begin(), places.end(), p) == places.end()) places.push_back(p);
        }
    }
    for (const auto& p : places) {
        if (!local_solvable(op, f, p).solvable) return false;
    }
    return true;
}

}  // namespace lgl
