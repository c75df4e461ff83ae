#include "lgl/local_solver.hpp"

#include <algorithm>

#include "lgl/errors.hpp"

namespace lgl {

namespace {

long order_or(const RatFunc& f, long fallback) {
    const auto o = order_at(f, Place::finite(Rational(0)));
    return o ? *o : fallback;
}

}  // namespace

// Unified local data: columns L(t^k e_j) for a scalar operator or a system.
struct LocalSolvability::Model {
    Place place = Place::infinity();
    std::size_t ncomp = 1;
    long order = 1;
    long min_shift = 0;  // lower bound of val(L(t^k e_j)) - k
    long irr_bound = 0;  // irregularity-type contribution to the depth bound
    std::vector<long> integer_roots;

    std::vector<RatFunc> scalar_coeffs;     // localized d/dt-form, scalar case
    std::vector<std::vector<RatFunc>> sys;  // localized A, system case
    bool is_system = false;

    static Model scalar(const DiffOp& op, const Place& p) {
        Model m;
        m.place = p;
        const DiffOp loc = localize(op, p);
        if (loc.is_zero()) throw InvalidCombination("cannot solve against the zero operator");
        m.order = loc.order();
        for (const auto& c : loc.coefficients()) m.scalar_coeffs.push_back(c);
        long shift = 0;
        bool have = false;
        for (std::size_t i = 0; i < m.scalar_coeffs.size(); ++i) {
            if (m.scalar_coeffs[i].is_zero()) continue;
            const long s = order_or(m.scalar_coeffs[i], 0) - static_cast<long>(i);
            if (!have || s < shift) { shift = s; have = true; }
        }
        m.min_shift = shift;
        m.irr_bound = static_cast<long>(irregularity(op, p));
        m.integer_roots = integer_indicial_roots(op, p);
        return m;
    }

    static Model system(const DiffSystem& sys_in, const Place& p) {
        Model m;
        m.place = p;
        m.is_system = true;
        m.ncomp = sys_in.dimension();
        const DiffSystem loc = sys_in.localized(p);
        m.sys = loc.matrix();
        long min_a = 0;
        for (const auto& row : m.sys)
            for (const auto& e : row)
                if (!e.is_zero()) min_a = std::min(min_a, order_or(e, 0));
        m.min_shift = std::min(-1L, min_a);
        m.irr_bound = static_cast<long>(m.ncomp) * std::max(0L, -min_a - 1);

        // Minimal stratum of delta Y - (t A) Y.
        long nu = 0;  // the delta term sits at order 0
        for (const auto& row : m.sys)
            for (const auto& e : row)
                if (!e.is_zero()) nu = std::min(nu, order_or(e, 0) + 1);
        QMatrix pencil_p(m.ncomp, m.ncomp), pencil_q(m.ncomp, m.ncomp);
        if (nu == 0) pencil_p = QMatrix::identity(m.ncomp);
        for (std::size_t i = 0; i < m.ncomp; ++i)
            for (std::size_t j = 0; j < m.ncomp; ++j) {
                const RatFunc& e = m.sys[i][j];
                if (e.is_zero()) continue;
                if (order_or(e, 0) + 1 == nu)
                    pencil_q.at(i, j) =
                        -laurent_expand_local(e, p, 1).coefficient_at(nu - 1);
            }
        m.integer_roots = integer_pencil_roots(pencil_p, pencil_q);
        return m;
    }

    std::vector<std::vector<LaurentSeries>> expand_coeffs(std::size_t span) const {
        std::vector<std::vector<LaurentSeries>> out;
        if (!is_system) {
            out.emplace_back();
            for (const auto& c : scalar_coeffs)
                out[0].push_back(c.is_zero() ? LaurentSeries::zero(place, 0, span)
                                             : laurent_expand_local(c, place, span));
            return out;
        }
        out.resize(ncomp);
        for (std::size_t i = 0; i < ncomp; ++i)
            for (std::size_t j = 0; j < ncomp; ++j)
                out[i].push_back(sys[i][j].is_zero()
                                     ? LaurentSeries::zero(place, 0, span)
                                     : laurent_expand_local(sys[i][j], place, span));
        return out;
    }

    // Expansion of L(t^k e_j) clipped to [w_min, w_cut]. Row index layout:
    // (exponent - w_min) * ncomp + component.
    void write_column(long k, std::size_t j, long w_min, long w_cut,
                      const std::vector<std::vector<LaurentSeries>>& coeff_series,
                      std::vector<Rational>& col) const {
        const auto add = [&](long e, std::size_t comp, const Rational& v) {
            if (e < w_min || e > w_cut || v.is_zero()) return;
            col[static_cast<std::size_t>(e - w_min) * ncomp + comp] += v;
        };
        if (!is_system) {
            Rational falling(1);  // k (k-1) ... (k-i+1)
            for (std::size_t i = 0; i < scalar_coeffs.size(); ++i) {
                if (!falling.is_zero() && !scalar_coeffs[i].is_zero()) {
                    const LaurentSeries& s = coeff_series[0][i];
                    for (std::size_t idx = 0; idx < s.precision(); ++idx) {
                        const long e =
                            s.base() + static_cast<long>(idx) + k - static_cast<long>(i);
                        add(e, 0, s.window()[idx] * falling);
                    }
                }
                falling *= Rational(k - static_cast<long>(i));
            }
            return;
        }
        add(k - 1, j, Rational(k));
        for (std::size_t i = 0; i < ncomp; ++i) {
            if (sys[i][j].is_zero()) continue;
            const LaurentSeries& s = coeff_series[i][j];
            for (std::size_t idx = 0; idx < s.precision(); ++idx)
                add(s.base() + static_cast<long>(idx) + k, i, -s.window()[idx]);
        }
    }

    // Left-null basis of the window matrix: the obstruction functionals.
    QMatrix functionals_on_window(long v_min, long v_max, long w_min, long w_cut) const {
        const std::size_t nrows = static_cast<std::size_t>(w_cut - w_min + 1) * ncomp;
        const std::size_t ncols = static_cast<std::size_t>(v_max - v_min + 1) * ncomp;
        const std::size_t span = static_cast<std::size_t>(w_cut - w_min + 1) + 4;

        const auto coeff_series = expand_coeffs(span);
        QMatrix m(nrows, ncols);
        std::vector<Rational> col(nrows, Rational(0));
        for (long k = v_min; k <= v_max; ++k) {
            for (std::size_t j = 0; j < ncomp; ++j) {
                std::fill(col.begin(), col.end(), Rational(0));
                write_column(k, j, w_min, w_cut, coeff_series, col);
                const std::size_t cidx = static_cast<std::size_t>(k - v_min) * ncomp + j;
                for (std::size_t r = 0; r < nrows; ++r) m.at(r, cidx) = col[r];
            }
        }
        const auto left = m.left_nullspace();
        QMatrix functionals(left.size(), nrows);
        for (std::size_t i = 0; i < left.size(); ++i)
            for (std::size_t r = 0; r < nrows; ++r) functionals.at(i, r) = left[i][r];
        return functionals;
    }
};

void LocalSolvability::build(const Model& model, long max_rhs_pole_order,
                             const TruncationPolicy& policy) {
    place_ = model.place;
    ncomp_ = model.ncomp;

    long max_root = 0;
    for (long r : model.integer_roots) max_root = std::max(max_root, r);
    const long max_pole = std::max(0L, -model.min_shift);

    // The last summand keeps the cut past every integer root even when the
    // localized coefficients share a positive power of t.
    const long margin = max_root + model.order + max_pole + 4 + policy.extra_margin +
                        std::max(0L, model.min_shift + model.order);
    const long rhs_val = -std::max(0L, max_rhs_pole_order);
    const long v_min =
        rhs_val - model.min_shift - (model.irr_bound + model.order + 2) - policy.extra_depth;
    const long w_min = v_min + model.min_shift;

    const QMatrix f1 = model.functionals_on_window(v_min, margin - model.min_shift, w_min, margin);
    const QMatrix f2 =
        model.functionals_on_window(v_min, 2 * margin - model.min_shift, w_min, 2 * margin);
    if (f1.rows() != f2.rows())
        throw StabilizationFailure("obstruction rank changed between margin " +
                                   std::to_string(margin) + " and " + std::to_string(2 * margin));

    obstruction_.place = place_;
    obstruction_.functionals = f1;
    obstruction_.window_min = w_min;
    obstruction_.window_max = margin;
    obstruction_.components = ncomp_;
    for (long e = w_min; e <= margin; ++e)
        for (std::size_t c = 0; c < ncomp_; ++c) {
            std::string label = "t^" + std::to_string(e);
            if (ncomp_ > 1) label += "[" + std::to_string(c) + "]";
            obstruction_.rhs_basis_labels.push_back(label);
        }
}

LocalSolvability::LocalSolvability(const DiffOp& op, const Place& p, long max_rhs_pole_order,
                                   const TruncationPolicy& policy) {
    build(Model::scalar(op, p), max_rhs_pole_order, policy);
}

LocalSolvability::LocalSolvability(const DiffSystem& system, const Place& p,
                                   long max_rhs_pole_order, const TruncationPolicy& policy) {
    is_system_ = true;
    build(Model::system(system, p), max_rhs_pole_order, policy);
}

std::vector<Rational> LocalSolvability::rhs_vector(const RatFunc& g) const {
    return rhs_vector(std::vector<RatFunc>{g});
}

std::vector<Rational> LocalSolvability::rhs_vector(const std::vector<RatFunc>& g) const {
    if (g.size() != ncomp_) throw InvalidCombination("rhs has wrong number of components");
    const long w_min = obstruction_.window_min;
    const long w_cut = obstruction_.window_max;
    std::vector<Rational> vec(static_cast<std::size_t>(w_cut - w_min + 1) * ncomp_, Rational(0));

    // Scalar operators localize plainly; systems absorb the change of
    // variable into the first-order form, which twists the right-hand side
    // at infinity.
    std::vector<RatFunc> local;
    if (is_system_) {
        local = DiffSystem::localize_rhs(g, place_);
    } else if (place_.is_infinity()) {
        local = {g[0].at_infinity_parameter()};
    } else {
        local = {g[0].shifted(place_.point())};
    }

    for (std::size_t comp = 0; comp < ncomp_; ++comp) {
        const RatFunc& gc = local[comp];
        if (gc.is_zero()) continue;
        const long val = order_or(gc, 0);
        if (val < w_min)
            throw InsufficientPrecision("rhs pole exceeds the declared bound for this local model");
        if (w_cut < val) continue;
        const std::size_t need = static_cast<std::size_t>(w_cut - val + 1);
        const LaurentSeries s = laurent_expand_local(gc, place_, need);
        for (std::size_t idx = 0; idx < s.precision(); ++idx) {
            const long e = s.base() + static_cast<long>(idx);
            if (e < w_min || e > w_cut) continue;
            vec[static_cast<std::size_t>(e - w_min) * ncomp_ + comp] = s.window()[idx];
        }
    }
    return vec;
}

std::vector<Rational> LocalSolvability::evaluate(const std::vector<Rational>& rhs_vec) const {
    return obstruction_.functionals * rhs_vec;
}

bool LocalSolvability::solvable(const RatFunc& g) const {
    return solvable(std::vector<RatFunc>{g});
}

bool LocalSolvability::solvable(const std::vector<RatFunc>& g) const {
    const auto values = evaluate(rhs_vector(g));
    return std::all_of(values.begin(), values.end(),
                       [](const Rational& v) { return v.is_zero(); });
}

SolvabilityResult local_solvable(const DiffOp& op, const RatFunc& g, const Place& p,
                                 const TruncationPolicy& policy) {
    long pole = 0;
    if (!g.is_zero()) {
        const RatFunc local = p.is_infinity() ? g.at_infinity_parameter() : g.shifted(p.point());
        pole = std::max(0L, -order_or(local, 0));
    }
    LocalSolvability model(op, p, pole, policy);
    return {model.solvable(g), model.obstruction()};
}

SolvabilityResult local_solvable(const DiffSystem& system, const std::vector<RatFunc>& g,
                                 const Place& p, const TruncationPolicy& policy) {
    long pole = 0;
    for (const auto& gc : DiffSystem::localize_rhs(g, p))
        if (!gc.is_zero()) pole = std::max(pole, -order_or(gc, 0));
    LocalSolvability model(system, p, pole, policy);
    return {model.solvable(g), model.obstruction()};
}

}  // namespace lgl
