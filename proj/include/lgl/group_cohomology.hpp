#pragma once

/// Finite-dimensional linear-algebra realizations of the cohomology
/// computations the dimension theory reduces to: additive-group modules,
/// one-generator groups, families of free unipotent generators, constant
/// systems z d/dz + B, formal irregularity from slope data, and the rank-1
/// five-term dimension check.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lgl/local_analysis.hpp"
#include "lgl/qmatrix.hpp"

namespace lgl {

// Additive-group module given by a nilpotent generator action.
struct NilpotentAction {
    QMatrix n;  // nilpotent
};

struct CohomologyDims {
    std::size_t h0 = 0;
    std::size_t h1 = 0;
    // Degrees >= 2 vanish for every group handled here; reported as a fixed
    // fact rather than computed.
};

// h0 = nullity(N), h1 = corank(N); the same dimensions are recomputed from
// exp(N) - I and asserted equal. Throws NotNilpotent.
CohomologyDims ga_cohomology(const NilpotentAction& a);

// Group topologically generated by one invertible element with rational
// eigenvalues: h1 = corank(A - I), which must match corank(A_u - I) on the
// eigenvalue-1 stratum of the semisimple part (asserted).
std::size_t cyclic_generator_h1(const QMatrix& a);

// Family of unipotent generators with no relations.
struct GeneratorFamily {
    std::size_t v_dim = 0;
    std::vector<QMatrix> generators;  // each unipotent, v_dim x v_dim
};

// Cohomology of 0 -> V -> V^S -> 0 with v |-> (rho(s) v - v)_s:
// h0 = dim of the common fixed space, h1 = |S| dim V - (dim V - h0).
CohomologyDims free_unipotent_cohomology(const GeneratorFamily& fam);

// Kernel and cokernel dimensions of z d/dz + B on formal Laurent series.
// ker_dim from the eigenvalue formula sum_k nullity(B + k I) over integers
// k; coker_dim independently by truncated-series row reduction over degrees
// in [-precision, precision]. The two are asserted equal.
struct ConstantSystemDims {
    std::size_t ker_dim = 0;
    std::size_t coker_dim = 0;
};
ConstantSystemDims constant_system_dims(const QMatrix& b, long precision);

// Slope data of a formal module: blocks (q-degree, multiplicity).
struct SolutionSpaceData {
    struct Block {
        long q_degree = 0;      // >= 0
        std::size_t dim = 1;
    };
    std::vector<Block> blocks;
    std::optional<QMatrix> gamma_u_log;  // nilpotent action on the slope-0 fixed part
};

// sum of q_degree * dim over the blocks.
std::size_t formal_irregularity(const SolutionSpaceData& data);

// Dimensions along the five-term exact sequence for the rank-1 local module
// at p: (ker over convergent, ker over formal, irregularity, cokernel over
// convergent, cokernel over formal); their alternating sum is asserted 0.
struct MalgrangeDims {
    std::size_t ker_analytic = 0;
    std::size_t ker_formal = 0;
    std::size_t irregularity = 0;
    std::size_t coker_analytic = 0;
    std::size_t coker_formal = 0;
    bool alternating_sum_zero = false;
};
MalgrangeDims malgrange_check(const RatFunc& f, const Place& p);

}  // namespace lgl
