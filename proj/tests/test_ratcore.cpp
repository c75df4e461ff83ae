#include <doctest.h>

#include <random>

#include "lgl/laurent_series.hpp"
#include "lgl/partial_fractions.hpp"

using namespace lgl;

namespace {

Rational rq(long n, long d = 1) { return Rational(n, d); }

Poly z_poly(std::vector<long> ascending) {
    std::vector<Rational> cs;
    for (long c : ascending) cs.emplace_back(c);
    return Poly(std::move(cs));
}

std::mt19937_64 rng(20260810);

Rational random_rational(long max_num = 6, long max_den = 4) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(num(rng), den(rng));
}

RatFunc random_simple_pole_function(int npoles, int max_order) {
    // distinct small integer poles with random coefficients
    std::vector<long> poles;
    std::uniform_int_distribution<long> pole_dist(-5, 5);
    while (static_cast<int>(poles.size()) < npoles) {
        const long p = pole_dist(rng);
        bool dup = false;
        for (long q : poles) dup |= (q == p);
        if (!dup) poles.push_back(p);
    }
    RatFunc f(0);
    std::uniform_int_distribution<int> order_dist(1, max_order);
    for (long p : poles) {
        const int order = order_dist(rng);
        for (int k = 1; k <= order; ++k) {
            Rational c = random_rational();
            if (c.is_zero()) c = Rational(1);
            Poly den = Poly::one();
            for (int i = 0; i < k; ++i) den *= Poly::linear_root(Rational(p));
            f += RatFunc(Poly(c), den);
        }
    }
    return f;
}

}  // namespace

TEST_CASE("rational canonical form and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK(Rational::from_string("-3/9") == Rational(-1, 3));
    CHECK(Rational::from_string("42") == Rational(42));
    CHECK(Rational(7, 3).str() == "7/3");
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZeroPolynomial);
    CHECK(fractional_part(Rational(-2, 3)) == Rational(1, 3));
}

TEST_CASE("polynomial division, gcd, rational roots") {
    const Poly p = z_poly({-1, 0, 1});            // z^2 - 1
    const Poly q = z_poly({1, 1});                // z + 1
    const auto div = divide(p, q);
    CHECK(div.quotient == z_poly({-1, 1}));
    CHECK(div.remainder.is_zero());
    CHECK(poly_gcd(p, q) == q.monic());

    const Poly r = z_poly({0, -2, 0, 2});  // 2z^3 - 2z = 2z(z-1)(z+1)
    const auto roots = rational_roots(r);
    CHECK(roots.fully_split);
    REQUIRE(roots.roots.size() == 3);
    CHECK(roots.roots[0].first == rq(-1));
    CHECK(roots.roots[1].first == rq(0));
    CHECK(roots.roots[2].first == rq(1));

    const auto nonsplit = rational_roots(z_poly({1, 0, 1}));  // z^2 + 1
    CHECK_FALSE(nonsplit.fully_split);
}

TEST_CASE("order_at on both kinds of places") {
    // f = (z-1)^3 / z
    const RatFunc f(z_poly({-1, 3, -3, 1}), z_poly({0, 1}));
    CHECK(*order_at(f, Place::finite(rq(1))) == 3);
    CHECK(*order_at(f, Place::infinity()) == -2);
    CHECK(*order_at(RatFunc(5), Place::finite(rq(0))) == 0);
    CHECK_FALSE(order_at(RatFunc(0), Place::infinity()).has_value());
}

TEST_CASE("laurent expansion windows") {
    // 1/(1-z) at 0
    const RatFunc geo(Poly::one(), z_poly({1, -1}));
    const LaurentSeries s = laurent_expand(geo, Place::finite(rq(0)), 4);
    CHECK(s.valuation() == 0);
    for (long k = 0; k < 4; ++k) CHECK(s.coefficient_at(k) == rq(1));

    const RatFunc inv_z(Poly::one(), z_poly({0, 1}));
    const LaurentSeries s2 = laurent_expand(inv_z, Place::finite(rq(0)), 2);
    CHECK(s2.valuation() == -1);
    CHECK(s2.coefficient_at(-1) == rq(1));
    CHECK(s2.coefficient_at(0) == rq(0));

    const RatFunc z2(z_poly({0, 0, 1}));
    const LaurentSeries s3 = laurent_expand(z2, Place::infinity(), 3);
    CHECK(s3.valuation() == -2);
    CHECK(s3.coefficient_at(-2) == rq(1));
    CHECK(s3.coefficient_at(-1) == rq(0));
    CHECK(s3.coefficient_at(0) == rq(0));
}

TEST_CASE("residues: basic values and the residue theorem") {
    const RatFunc f(Poly::one(), z_poly({-2, 1}));  // 1/(z-2)
    CHECK(residue(f, Place::finite(rq(2))) == rq(1));
    CHECK(residue(f, Place::infinity()) == rq(-1));
    const RatFunc f2(Poly::one(), z_poly({-2, 1}) * z_poly({-2, 1}));
    CHECK(residue(f2, Place::finite(rq(2))) == rq(0));

    for (int trial = 0; trial < 25; ++trial) {
        const RatFunc g = random_simple_pole_function(3, 4);
        Rational total(0);
        for (const auto& p : pole_places(g)) total += residue(g, p);
        const auto oi = order_at(g, Place::infinity());
        if (oi && *oi >= 2) total += residue(g, Place::infinity());
        CHECK(total == rq(0));
    }
}

TEST_CASE("partial fractions: pinned examples") {
    // (2z+1)/(z(z-1)) -> -1/z + 3/(z-1)
    const RatFunc f(z_poly({1, 2}), z_poly({0, -1, 1}));
    const PartialFraction pf = partial_fractions(f);
    CHECK(pf.polynomial_part.is_zero());
    REQUIRE(pf.terms.size() == 2);
    CHECK(pf.terms[0].pole == rq(0));
    CHECK(pf.terms[0].order == 1);
    CHECK(pf.terms[0].coefficient == rq(-1));
    CHECK(pf.terms[1].pole == rq(1));
    CHECK(pf.terms[1].order == 1);
    CHECK(pf.terms[1].coefficient == rq(3));

    const PartialFraction pf2 = partial_fractions(RatFunc(z_poly({3, 0, 1})));
    CHECK(pf2.polynomial_part == z_poly({3, 0, 1}));
    CHECK(pf2.terms.empty());

    CHECK_THROWS_AS(partial_fractions(RatFunc(Poly::one(), z_poly({1, 0, 1}))),
                    NonSplitDenominator);
}

TEST_CASE("partial fractions: reassembly is the exact inverse") {
    for (int trial = 0; trial < 30; ++trial) {
        RatFunc f = random_simple_pole_function(2, 4);
        // add a random polynomial part
        f += RatFunc(Poly(std::vector<Rational>{random_rational(), random_rational()}));
        const PartialFraction pf = partial_fractions(f);
        CHECK(pf.reassemble() == f);
        for (const auto& term : pf.terms) CHECK(term.order >= 1);
    }
}

TEST_CASE("expansion respects multiplication") {
    for (int trial = 0; trial < 20; ++trial) {
        const RatFunc f = random_simple_pole_function(2, 3);
        const RatFunc g = random_simple_pole_function(2, 3);
        if (f.is_zero() || g.is_zero()) continue;
        const Place p = (trial % 3 == 0) ? Place::infinity() : Place::finite(rq(trial % 5));
        const LaurentSeries sf = laurent_expand(f, p, 6);
        const LaurentSeries sg = laurent_expand(g, p, 6);
        const LaurentSeries sfg = laurent_expand(f * g, p, 6);
        const LaurentSeries prod = sf * sg;
        for (long e = prod.base(); e < prod.base() + static_cast<long>(prod.precision()); ++e)
            CHECK(prod.coefficient_at(e) == sfg.coefficient_at(e));
    }
}

TEST_CASE("order_at equals expansion valuation") {
    for (int trial = 0; trial < 20; ++trial) {
        const RatFunc f = random_simple_pole_function(2, 3);
        if (f.is_zero()) continue;
        for (const Place& p :
             {Place::finite(rq(0)), Place::finite(rq(2)), Place::infinity()}) {
            const LaurentSeries s = laurent_expand(f, p, 8);
            CHECK(s.valuation() == *order_at(f, p));
        }
    }
}

TEST_CASE("zero series carries the sentinel valuation") {
    const LaurentSeries z = LaurentSeries::zero(Place::finite(rq(0)), 0, 5);
    CHECK(z.is_zero_to_precision());
    CHECK(z.valuation() == 5);
}
