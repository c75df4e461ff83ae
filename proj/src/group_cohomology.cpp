#include "lgl/group_cohomology.hpp"

#include <algorithm>

#include "lgl/errors.hpp"

namespace lgl {

CohomologyDims ga_cohomology(const NilpotentAction& a) {
    if (!a.n.is_nilpotent()) throw NotNilpotent();
    const std::size_t h0 = a.n.nullity();
    const std::size_t h1 = a.n.cols() - a.n.rank();
    // exp route: coker(exp(N) - 1) has the same dimension
    const QMatrix e = a.n.exp_nilpotent() - QMatrix::identity(a.n.rows());
    if (e.nullity() != h0 || (e.cols() - e.rank()) != h1)
        throw InvalidCombination("exp/log cohomology dimensions disagree");
    return {h0, h1};
}

std::size_t cyclic_generator_h1(const QMatrix& a) {
    const QMatrix shifted = a - QMatrix::identity(a.rows());
    const std::size_t h1 = shifted.cols() - shifted.rank();

    // Second route: the unipotent factor on the eigenvalue-1 stratum.
    const JordanDecomposition jd = multiplicative_jordan(a);
    const auto basis = generalized_eigenspace(a, Rational(1));
    // restrict (A_u - I) to the stratum
    if (!basis.empty()) {
        QMatrix strat(a.rows(), basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j)
            for (std::size_t i = 0; i < a.rows(); ++i) strat.at(i, j) = basis[j][i];
        const QMatrix au_minus = jd.unipotent - QMatrix::identity(a.rows());
        const QMatrix image = au_minus * strat;  // columns live in the stratum again
        const std::size_t restricted_corank = basis.size() - image.rank();
        if (restricted_corank != h1)
            throw InvalidCombination("the two one-generator cohomology expressions disagree");
    } else if (h1 != 0) {
        throw InvalidCombination("the two one-generator cohomology expressions disagree");
    }
    return h1;
}

CohomologyDims free_unipotent_cohomology(const GeneratorFamily& fam) {
    const std::size_t d = fam.v_dim;
    for (const auto& g : fam.generators) {
        if (g.rows() != d || g.cols() != d)
            throw InvalidCombination("generator dimension mismatch");
        if (!g.is_unipotent()) throw NotUnipotent();
    }
    if (fam.generators.empty()) throw InvalidCombination("empty generator family");

    QMatrix stacked(0, d);
    for (const auto& g : fam.generators)
        stacked = stacked.stacked(g - QMatrix::identity(d));
    const std::size_t h0 = stacked.nullspace().size();
    const std::size_t rank = stacked.rank();
    const std::size_t h1 = fam.generators.size() * d - rank;
    // rank-nullity identity for the two-term complex
    if (h1 != h0 + (fam.generators.size() - 1) * d)
        throw InvalidCombination("two-term complex rank bookkeeping failed");
    return {h0, h1};
}

ConstantSystemDims constant_system_dims(const QMatrix& b, long precision) {
    const Spectrum spec = rational_spectrum(b);
    if (!spec.fully_split)
        throw NonRationalEigenvalues("matrix must have rational eigenvalues");
    long max_int_abs = 0;
    for (const auto& [lambda, mult] : spec.eigenvalues)
        if (lambda.is_integer())
            max_int_abs = std::max(max_int_abs,
                                   std::abs(static_cast<long>(lambda.numerator().get_si())));
    if (precision <= max_int_abs + 1)
        throw PrecisionTooSmall("precision must exceed the largest integer eigenvalue magnitude + 1");

    const std::size_t n = b.rows();
    ConstantSystemDims out;

    // Eigenvalue route: solutions sum y_k z^k need (k + B) y_k = 0.
    for (const auto& [lambda, mult] : spec.eigenvalues) {
        if (!lambda.is_integer()) continue;
        const long k = -static_cast<long>(lambda.numerator().get_si());
        const QMatrix shifted = b + QMatrix::identity(n) * Rational(k);
        out.ker_dim += shifted.nullity();
        (void)mult;
    }

    // Independent truncated route: the operator on the monomial window
    // [-precision, precision] as one big matrix, row-reduced blindly.
    const long lo = -precision, hi = precision;
    const std::size_t width = static_cast<std::size_t>(hi - lo + 1) * n;
    QMatrix big(width, width);
    for (long k = lo; k <= hi; ++k) {
        // column block for z^k e_j maps to (k I + B) at degree k
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t col = static_cast<std::size_t>(k - lo) * n + j;
            for (std::size_t i = 0; i < n; ++i) {
                Rational v = b.at(i, j);
                if (i == j) v += Rational(k);
                big.at(static_cast<std::size_t>(k - lo) * n + i, col) = v;
            }
        }
    }
    const std::size_t rank = big.rank();
    // Degrees with |k| > max_int_abs are bijective; the truncation windows
    // them off exactly, so corank inside the window is the full cokernel.
    out.coker_dim = width - rank;

    if (out.ker_dim != out.coker_dim)
        throw InvalidCombination("kernel and cokernel dimensions disagree");
    return out;
}

std::size_t formal_irregularity(const SolutionSpaceData& data) {
    std::size_t acc = 0;
    for (const auto& blk : data.blocks) {
        if (blk.q_degree < 0) throw InvalidCombination("q-degree must be nonnegative");
        acc += static_cast<std::size_t>(blk.q_degree) * blk.dim;
    }
    return acc;
}

MalgrangeDims malgrange_check(const RatFunc& f, const Place& p) {
    const PlaceClassification c = classify_rank1_place(f, p);
    MalgrangeDims out;
    switch (c.tag) {
        case PlaceClassification::Tag::Regular:
            out = {1, 1, 0, 1, 1, false};
            break;
        case PlaceClassification::Tag::RegularSingular:
            out = {0, 0, 0, 0, 0, false};
            break;
        case PlaceClassification::Tag::Irregular:
            out = {0, 0, c.irregularity, c.irregularity, 0, false};
            break;
    }
    const long alternating = static_cast<long>(out.ker_analytic) -
                             static_cast<long>(out.ker_formal) +
                             static_cast<long>(out.irregularity) -
                             static_cast<long>(out.coker_analytic) +
                             static_cast<long>(out.coker_formal);
    out.alternating_sum_zero = (alternating == 0);
    if (!out.alternating_sum_zero)
        throw InvalidCombination("five-term alternating sum is nonzero");
    return out;
}

}  // namespace lgl
