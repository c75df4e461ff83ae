#pragma once

/// Dense exact linear algebra over Q: rank, nullspace, inverse,
/// characteristic polynomial, and rational spectral data. Everything is
/// exact Gaussian elimination; matrices here are desk-scale.

#include <optional>
#include <vector>

#include "lgl/polynomial.hpp"

namespace lgl {

class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}
    static QMatrix identity(std::size_t n);
    static QMatrix diagonal(const std::vector<Rational>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator*(const Rational& c) const;
    std::vector<Rational> operator*(const std::vector<Rational>& v) const;
    bool operator==(const QMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    bool is_zero() const;
    QMatrix transposed() const;
    QMatrix power(std::size_t k) const;

    std::size_t rank() const;
    std::size_t nullity() const { return cols_ - rank(); }
    // Basis of the right nullspace, one column vector per basis element.
    std::vector<std::vector<Rational>> nullspace() const;
    // Basis of the left nullspace (functionals y with y^T M = 0), as rows.
    std::vector<std::vector<Rational>> left_nullspace() const;

    // Throws NonRationalEigenvalues-free: returns nullopt when singular.
    std::optional<QMatrix> inverse() const;

    // det(xI - M), monic of degree n.
    Poly characteristic_polynomial() const;

    bool is_nilpotent() const;
    bool is_unipotent() const;

    // exp(M) for nilpotent M; exact finite sum.
    QMatrix exp_nilpotent() const;

    // Stacks o below this matrix (same column count).
    QMatrix stacked(const QMatrix& o) const;

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

// Row echelon rank of an arbitrary collection of row vectors.
std::size_t rank_of_rows(std::vector<std::vector<Rational>> rows);

// Rational spectrum of a square matrix: eigenvalues with algebraic
// multiplicities. `fully_split` is false when the characteristic polynomial
// has an irrational factor.
struct Spectrum {
    std::vector<std::pair<Rational, std::size_t>> eigenvalues;
    bool fully_split = false;
};
Spectrum rational_spectrum(const QMatrix& m);

// Multiplicative Jordan decomposition A = A_ss * A_u over Q; requires the
// characteristic polynomial to split over Q and A invertible.
struct JordanDecomposition {
    QMatrix semisimple;
    QMatrix unipotent;
};
JordanDecomposition multiplicative_jordan(const QMatrix& a);

// Basis (as columns) of the generalized eigenspace ker (A - lambda I)^n.
std::vector<std::vector<Rational>> generalized_eigenspace(const QMatrix& a, const Rational& lambda);

// Integer roots of det(s P + Q); empty when the determinant vanishes
// identically or is constant. When `degenerate` is supplied it is set to
// whether the determinant vanishes identically.
std::vector<long> integer_pencil_roots(const QMatrix& p, const QMatrix& q,
                                       bool* degenerate = nullptr);

}  // namespace lgl
