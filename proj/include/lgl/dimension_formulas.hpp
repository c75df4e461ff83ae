#pragma once

/// Closed-form dim lgl for every covered class: the rank-1 cases (trivial,
/// multiplicative, finite cyclic), nilpotent single-block systems, and
/// regular-singular connections given by normalized residue matrices, plus
/// genus-parametrized evaluators for curves the library does not compute on.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lgl/local_analysis.hpp"

namespace lgl {

// Differential Galois class of y' = f y over Q(z), decided by logarithmic-
// derivative membership: m*f is a dLog exactly when f has only simple poles,
// no polynomial part, and all m-scaled residues are integers.
struct Rank1Case {
    enum class Tag { Trivial, Gm, Cm };
    Tag tag = Tag::Gm;
    long m = 0;  // minimal multiplier for Cm (>= 2); 1 for Trivial

    std::string str() const {
        switch (tag) {
            case Tag::Trivial: return "trivial";
            case Tag::Gm: return "Gm";
            default: return "C" + std::to_string(m);
        }
    }
};

Rank1Case classify_rank1(const RatFunc& f);

struct LglReport {
    std::optional<long> dimension;  // nullopt when the hypotheses leave it open
    std::string case_tag;
    std::vector<Place> singular_set;
    // Named integer terms; `dimension`, when present, is their exact sum.
    std::map<std::string, long> breakdown;
    std::vector<std::string> hypothesis_flags;
    std::optional<long> chi;  // Euler characteristic, regular-singular case
    std::string method = "formula";
};

// dim lgl of D - f. For genus 0 every term is computed from f; for genus > 0
// the report is a formula evaluation only and is flagged as such.
LglReport lgl_rank1(const RatFunc& f, long genus = 0);

// dim lgl of D - f N with N one nilpotent Jordan block of size n >= 2.
// The singular set is the places where f dz has nonzero residue; an exact
// form f dz (all residues zero) is a typed error, not a silent fallback.
LglReport lgl_ga_nilpotent(const RatFunc& f, long n, long genus = 0);

struct FuchsianInput {
    std::size_t rank = 1;               // m
    std::vector<Place> points;          // distinct, r >= 1
    std::vector<QMatrix> matrices;      // normalized local residue data
};

// Regular-singular connection with normalized residue matrices. When at
// least one local residue matrix is invertible the dimension is
// (r-2)m - sum t0(p_i) = -chi; otherwise the report carries chi and the
// dimension is left unknown.
LglReport lgl_fuchsian(const FuchsianInput& input);

enum class FormulaCase { Trivial, Gm, Cm, Ga, RegularSingular };

struct GenusFormulaArgs {
    long genus = 0;
    long s_count = 0;
    long irr_sum = 0;
    long n = 0;       // nilpotent block size (Ga)
    long m = 0;       // rank (regular-singular)
    long r = 0;       // number of singular points (regular-singular)
    long t0_sum = 0;  // sum of local kernel dimensions (regular-singular)
};

// Pure evaluator of the case formulas; InvalidCombination on arguments that
// are out of range or produce a negative dimension.
long lgl_genus_formula(FormulaCase c, const GenusFormulaArgs& args);

}  // namespace lgl
