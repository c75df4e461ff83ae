#include <doctest.h>

#include <random>

#include "lgl/dimension_formulas.hpp"
#include "lgl/operator_parser.hpp"
#include "lgl/oracle.hpp"

using namespace lgl;

namespace {

Rational rq(long n, long d = 1) { return Rational(n, d); }

RatFunc simple_poles(const std::vector<std::pair<long, Rational>>& poles) {
    RatFunc f(0);
    for (const auto& [p, lam] : poles) f += RatFunc(Poly(lam), Poly::linear_root(rq(p)));
    return f;
}

std::mt19937_64 rng(343434);

}  // namespace

TEST_CASE("classify_rank1: pinned examples") {
    const RatFunc f1 = simple_poles({{0, rq(1, 3)}, {1, rq(2, 3)}});
    const Rank1Case c1 = classify_rank1(f1);
    CHECK(c1.tag == Rank1Case::Tag::Cm);
    CHECK(c1.m == 3);

    CHECK(classify_rank1(RatFunc(Poly::monomial(rq(1), 5))).tag == Rank1Case::Tag::Gm);

    const Rank1Case c3 = classify_rank1(simple_poles({{0, rq(2)}}));
    CHECK(c3.tag == Rank1Case::Tag::Trivial);
    CHECK(c3.m == 1);

    // higher-order pole forces Gm regardless of residues
    const RatFunc f4 = RatFunc(Poly::one(), Poly::linear_root(rq(1)) * Poly::linear_root(rq(1)));
    CHECK(classify_rank1(f4).tag == Rank1Case::Tag::Gm);

    CHECK_THROWS_AS(classify_rank1(RatFunc(Poly::one(), Poly(std::vector<Rational>{rq(1), rq(0), rq(1)}))),
                    NonSplitDenominator);
}

TEST_CASE("lgl_rank1: pinned dimensions") {
    // f = z^5: dimension 5, S = {inf}, irregularity index 5
    const auto r1 = lgl_rank1(RatFunc(Poly::monomial(rq(1), 5)));
    CHECK(*r1.dimension == 5);
    CHECK(r1.singular_set.size() == 1);
    CHECK(r1.breakdown.at("irr_term") == 5);
    CHECK(r1.breakdown.at("s_term") == 1);

    // f = -(1 + z^4/2)/z^5: dimension 4, S = {0, inf}, irr at 0 = 4
    Poly num(std::vector<Rational>{rq(1), rq(0), rq(0), rq(0), rq(1, 2)});
    const RatFunc f2 = RatFunc(0) - RatFunc(num, Poly::monomial(rq(1), 5));
    const auto r2 = lgl_rank1(f2);
    CHECK(*r2.dimension == 4);
    CHECK(r2.singular_set.size() == 2);
    CHECK(r2.breakdown.at("irr_term") == 4);

    // Regular-singular family, r = 3: lambda = 1/3 each (sum 1): r - 2
    const auto r3 = lgl_rank1(simple_poles({{0, rq(1, 3)}, {1, rq(1, 3)}, {2, rq(1, 3)}}));
    CHECK(*r3.dimension == 1);
    CHECK(r3.singular_set.size() == 3);

    // lambda = 1/2 each (sum 3/2): S gains infinity: r - 1
    const auto r4 = lgl_rank1(simple_poles({{0, rq(1, 2)}, {1, rq(1, 2)}, {2, rq(1, 2)}}));
    CHECK(*r4.dimension == 2);
    CHECK(r4.singular_set.size() == 4);

    // trivial case at genus 0
    const auto r5 = lgl_rank1(simple_poles({{0, rq(2)}}));
    CHECK(*r5.dimension == 0);
    CHECK(r5.case_tag == "trivial");
}

TEST_CASE("lgl_rank1: breakdown terms sum to the dimension") {
    std::uniform_int_distribution<long> cnum(-4, 4);
    std::uniform_int_distribution<int> cden(1, 3);
    for (int trial = 0; trial < 40; ++trial) {
        RatFunc f = simple_poles({{0, Rational(cnum(rng), cden(rng))}});
        if (rng() % 2) f += RatFunc(Poly::monomial(rq(cnum(rng)), 1 + rng() % 3));
        if (f.is_zero()) continue;
        const auto rep = lgl_rank1(f);
        long sum = 0;
        for (const auto& [k, v] : rep.breakdown) sum += v;
        CHECK(sum == *rep.dimension);
    }
}

TEST_CASE("lgl_ga_nilpotent: pinned dimensions and errors") {
    const RatFunc f = simple_poles({{0, rq(1)}, {1, rq(1)}, {2, rq(-2)}});
    const auto r2 = lgl_ga_nilpotent(f, 2);
    CHECK(*r2.dimension == 1);
    CHECK(r2.singular_set.size() == 3);
    const auto r3 = lgl_ga_nilpotent(f, 3);
    CHECK(*r3.dimension == 2);

    const RatFunc exact(Poly::one(), Poly::linear_root(rq(1)) * Poly::linear_root(rq(1)));
    CHECK_THROWS_AS(lgl_ga_nilpotent(exact, 2), ExactForm);
    CHECK_THROWS_AS(lgl_ga_nilpotent(f, 1), InvalidCombination);
}

TEST_CASE("lgl_ga_nilpotent: n = 2 identity across random inputs") {
    std::uniform_int_distribution<long> cnum(-3, 3);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<std::pair<long, Rational>> poles;
        Rational sum(0);
        for (long p = 0; p < 2 + static_cast<long>(rng() % 2); ++p) {
            Rational c(cnum(rng));
            if (c.is_zero()) c = rq(1);
            poles.emplace_back(p, c);
            sum += c;
        }
        const RatFunc f = simple_poles(poles);
        long genus = static_cast<long>(rng() % 3);
        const auto rep = lgl_ga_nilpotent(f, 2, genus);
        const long s_count = static_cast<long>(rep.singular_set.size());
        CHECK(*rep.dimension == 4 * genus - 2 + s_count);
    }
}

TEST_CASE("lgl_fuchsian: pinned examples") {
    const QMatrix a = QMatrix::diagonal({rq(1, 3), rq(1, 3)});
    FuchsianInput in{2,
                     {Place::finite(rq(0)), Place::finite(rq(1)), Place::infinity()},
                     {a, a, a}};
    const auto rep = lgl_fuchsian(in);
    CHECK(*rep.dimension == 2);
    CHECK(*rep.chi == -2);

    // rank 1, four points, every local residue invertible: r - 2
    QMatrix half(1, 1);
    half.at(0, 0) = rq(1, 2);
    FuchsianInput in2{1,
                      {Place::finite(rq(0)), Place::finite(rq(1)), Place::finite(rq(2)),
                       Place::infinity()},
                      {half, half, half, half}};
    CHECK(*lgl_fuchsian(in2).dimension == 2);

    // all t0 positive: unknown dimension, chi still reported
    FuchsianInput in3{2,
                      {Place::finite(rq(0)), Place::finite(rq(1))},
                      {QMatrix::diagonal({rq(0), rq(1, 2)}), QMatrix::diagonal({rq(1, 2), rq(0)})}};
    const auto rep3 = lgl_fuchsian(in3);
    CHECK_FALSE(rep3.dimension.has_value());
    CHECK(*rep3.chi == 2);
}

TEST_CASE("lgl_fuchsian: dimension equals minus chi whenever defined") {
    std::uniform_int_distribution<int> mdist(1, 3), rdist(1, 4), num(0, 3);
    for (int trial = 0; trial < 50; ++trial) {
        const int m = mdist(rng), r = rdist(rng);
        FuchsianInput in;
        in.rank = m;
        bool some_invertible = false;
        for (int i = 0; i < r; ++i) {
            in.points.push_back(i + 1 == r ? Place::infinity() : Place::finite(rq(i)));
            std::vector<Rational> d;
            bool invertible = true;
            for (int j = 0; j < m; ++j) {
                const long v = num(rng);
                invertible &= (v != 0);
                d.push_back(rq(v, 4));
            }
            some_invertible |= invertible;
            in.matrices.push_back(QMatrix::diagonal(d));
        }
        try {
            const auto rep = lgl_fuchsian(in);
            if (rep.dimension) {
                CHECK(some_invertible);
                CHECK(*rep.dimension == -*rep.chi);
            } else {
                CHECK_FALSE(some_invertible);
            }
        } catch (const InvalidCombination&) {
            // negative dimension draws (for example r = 1) are rejected
            CHECK((r <= 2));
        }
    }
}

TEST_CASE("rank-1 consistency: m = 1 regular-singular data matches lgl_rank1") {
    std::uniform_int_distribution<long> numdist(1, 5);
    int done = 0;
    for (int trial = 0; trial < 200 && done < 50; ++trial) {
        // random non-integer residues at 2..4 finite points; realizable data
        std::uniform_int_distribution<int> rdist(2, 4);
        const int r = rdist(rng);
        std::vector<std::pair<long, Rational>> poles;
        Rational sum(0);
        for (int i = 0; i < r; ++i) {
            const Rational lam(numdist(rng), 6);
            poles.emplace_back(i, lam);
            sum += lam;
        }
        RatFunc f = simple_poles(poles);
        if (classify_rank1(f).tag == Rank1Case::Tag::Trivial) continue;

        const auto direct = lgl_rank1(RatFunc(0) - f);  // operator D + f

        // the same data as rank-1 normalized residue matrices (t0 = 0 at
        // every singular point since residues are non-integers)
        FuchsianInput in;
        in.rank = 1;
        for (const auto& [p, lam] : poles) {
            in.points.push_back(Place::finite(rq(p)));
            QMatrix a(1, 1);
            a.at(0, 0) = fractional_part(lam);
            in.matrices.push_back(a);
        }
        if (!sum.is_integer()) {
            in.points.push_back(Place::infinity());
            QMatrix a(1, 1);
            a.at(0, 0) = fractional_part(-sum);
            in.matrices.push_back(a);
        }
        const auto via_matrices = lgl_fuchsian(in);
        CHECK(*direct.dimension == *via_matrices.dimension);
        ++done;
    }
    CHECK(done >= 50);
}

TEST_CASE("genus evaluators: pinned values") {
    GenusFormulaArgs a;
    a.genus = 3;
    CHECK(lgl_genus_formula(FormulaCase::Trivial, a) == 6);

    GenusFormulaArgs b;
    b.genus = 0;
    b.s_count = 5;  // r + 1 with r = 4
    b.irr_sum = 0;
    CHECK(lgl_genus_formula(FormulaCase::Gm, b) == 3);

    GenusFormulaArgs c;
    c.genus = 1;
    c.n = 2;
    c.s_count = 2;
    CHECK(lgl_genus_formula(FormulaCase::Ga, c) == 4);

    GenusFormulaArgs d;
    d.m = 2;
    d.r = 3;
    d.t0_sum = 0;
    CHECK(lgl_genus_formula(FormulaCase::RegularSingular, d) == 2);

    GenusFormulaArgs bad;
    bad.genus = 0;
    bad.s_count = 0;
    CHECK_THROWS_AS(lgl_genus_formula(FormulaCase::Cm, bad), InvalidCombination);
}

TEST_CASE("report dimensions agree with the oracle on mixed instances") {
    // one pinned cross-check of each closed-form class against brute force
    const RatFunc gm(Poly::monomial(rq(1), 5));
    CHECK(*lgl_rank1(gm).dimension ==
          static_cast<long>(lgl_oracle(parse_operator("D - z^5")).dimension));

    const RatFunc cm = simple_poles({{0, rq(1, 3)}, {1, rq(1, 3)}, {2, rq(1, 3)}});
    const Poly prod = Poly::linear_root(rq(0)) * Poly::linear_root(rq(1)) * Poly::linear_root(rq(2));
    // operator prod * (D + cm); as D - f this is f = -cm
    const DiffOp cm_op = clear_denominators(DiffOp({cm * RatFunc(prod), RatFunc(prod)}));
    CHECK(*lgl_rank1(RatFunc(0) - cm).dimension ==
          static_cast<long>(lgl_oracle(cm_op).dimension));
}
