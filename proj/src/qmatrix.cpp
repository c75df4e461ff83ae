#include "lgl/qmatrix.hpp"

#include <algorithm>
#include <sstream>

#include "lgl/errors.hpp"

namespace lgl {

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

QMatrix QMatrix::diagonal(const std::vector<Rational>& d) {
    QMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    QMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    QMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    QMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

QMatrix QMatrix::operator*(const Rational& c) const {
    QMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * c;
    return r;
}

std::vector<Rational> QMatrix::operator*(const std::vector<Rational>& v) const {
    std::vector<Rational> r(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

bool QMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& c) { return c.is_zero(); });
}

QMatrix QMatrix::transposed() const {
    QMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

QMatrix QMatrix::power(std::size_t k) const {
    QMatrix acc = identity(rows_);
    for (std::size_t i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

namespace {

// In-place reduction to row echelon form; returns pivot column indices.
std::vector<std::size_t> echelonize(std::vector<std::vector<Rational>>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        const Rational inv = m[row][col].inverse();
        for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            const Rational f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<Rational>> to_rows(const QMatrix& m) {
    std::vector<std::vector<Rational>> rows(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
    return rows;
}

}  // namespace

std::size_t rank_of_rows(std::vector<std::vector<Rational>> rows) {
    return echelonize(rows).size();
}

std::size_t QMatrix::rank() const {
    auto rows = to_rows(*this);
    return echelonize(rows).size();
}

std::vector<std::vector<Rational>> QMatrix::nullspace() const {
    auto rows = to_rows(*this);
    const std::vector<std::size_t> pivots = echelonize(rows);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols_, Rational(0));
        v[free] = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -rows[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<Rational>> QMatrix::left_nullspace() const {
    return transposed().nullspace();
}

std::optional<QMatrix> QMatrix::inverse() const {
    std::vector<std::vector<Rational>> aug(rows_, std::vector<Rational>(2 * cols_, Rational(0)));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug[i][j] = at(i, j);
        aug[i][cols_ + i] = Rational(1);
    }
    const auto pivots = echelonize(aug);
    if (pivots.size() != cols_) return std::nullopt;
    QMatrix inv(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug[i][cols_ + j];
    return inv;
}

Poly QMatrix::characteristic_polynomial() const {
    // Faddeev-LeVerrier: exact, O(n^4), fine at this scale.
    const std::size_t n = rows_;
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = Rational(1);
    QMatrix mk = identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = *this * mk;
        // c_{n-k} = -tr(mk)/k
        Rational tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += mk.at(i, i);
        const Rational ck = -tr / Rational(static_cast<long>(k));
        c[n - k] = ck;
        for (std::size_t i = 0; i < n; ++i) mk.at(i, i) += ck;
    }
    std::vector<Rational> coeffs(c.begin(), c.end());
    return Poly(std::move(coeffs));
}

bool QMatrix::is_nilpotent() const { return power(rows_).is_zero(); }

bool QMatrix::is_unipotent() const { return (*this - identity(rows_)).is_nilpotent(); }

QMatrix QMatrix::exp_nilpotent() const {
    if (!is_nilpotent()) throw NotNilpotent();
    QMatrix acc = identity(rows_);
    QMatrix term = identity(rows_);
    Rational fact(1);
    for (std::size_t k = 1; k <= rows_; ++k) {
        term = term * *this;
        fact *= Rational(static_cast<long>(k));
        acc = acc + term * fact.inverse();
    }
    return acc;
}

QMatrix QMatrix::stacked(const QMatrix& o) const {
    QMatrix r(rows_ + o.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

std::string QMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).str();
        }
        os << "]";
        if (i + 1 < rows_) os << "\n";
    }
    return os.str();
}

Spectrum rational_spectrum(const QMatrix& m) {
    const Poly chi = m.characteristic_polynomial();
    const RationalRoots roots = rational_roots(chi);
    Spectrum s;
    s.fully_split = roots.fully_split;
    s.eigenvalues = roots.roots;
    return s;
}

std::vector<std::vector<Rational>> generalized_eigenspace(const QMatrix& a, const Rational& lambda) {
    const QMatrix shifted = a - QMatrix::identity(a.rows()) * lambda;
    return shifted.power(a.rows()).nullspace();
}

std::vector<long> integer_pencil_roots(const QMatrix& p, const QMatrix& q, bool* degenerate) {
    const std::size_t n = p.rows();
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = Poly(std::vector<Rational>{q.at(i, j), p.at(i, j)});

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
    std::vector<std::size_t> cols(n);
    for (std::size_t j = 0; j < n; ++j) cols[j] = j;
    const Poly det = Det{m}(0, cols);
    if (degenerate) *degenerate = det.is_zero();
    std::vector<long> roots;
    if (det.is_zero() || det.degree() < 1) return roots;
    for (const auto& [root, mult] : rational_roots(det).roots)
        if (root.is_integer()) roots.push_back(static_cast<long>(root.numerator().get_si()));
    std::sort(roots.begin(), roots.end());
    return roots;
}

JordanDecomposition multiplicative_jordan(const QMatrix& a) {
    const Spectrum spec = rational_spectrum(a);
    if (!spec.fully_split)
        throw NonRationalEigenvalues("characteristic polynomial does not split over Q");
    const std::size_t n = a.rows();

    // Columns of T: generalized eigenspace bases; D: eigenvalues repeated.
    QMatrix t(n, n);
    std::vector<Rational> diag;
    std::size_t col = 0;
    for (const auto& [lambda, mult] : spec.eigenvalues) {
        for (const auto& v : generalized_eigenspace(a, lambda)) {
            for (std::size_t i = 0; i < n; ++i) t.at(i, col) = v[i];
            diag.push_back(lambda);
            ++col;
        }
    }
    if (col != n)
        throw NonRationalEigenvalues("generalized eigenspaces do not fill the space");
    const auto tinv = t.inverse();
    if (!tinv) throw NonRationalEigenvalues("defective eigenbasis");

    JordanDecomposition jd;
    jd.semisimple = t * QMatrix::diagonal(diag) * *tinv;
    const auto ss_inv = jd.semisimple.inverse();
    if (!ss_inv) throw NonRationalEigenvalues("matrix must be invertible for A = A_ss A_u");
    jd.unipotent = *ss_inv * a;
    return jd;
}

}  // namespace lgl
