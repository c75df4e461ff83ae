#include <doctest.h>

#include <random>

#include "lgl/operator_parser.hpp"

using namespace lgl;

namespace {

Rational rq(long n, long d = 1) { return Rational(n, d); }

Poly z_poly(std::vector<long> ascending) {
    std::vector<Rational> cs;
    for (long c : ascending) cs.emplace_back(c);
    return Poly(std::move(cs));
}

std::mt19937_64 rng(777);

Poly random_poly(int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> coeff(-4, 4);
    std::vector<Rational> cs;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i) cs.emplace_back(coeff(rng));
    Poly p{std::move(cs)};
    if (p.is_zero()) return Poly::one();
    return p;
}

DiffOp random_poly_operator(int max_order, int max_deg) {
    std::uniform_int_distribution<int> order(1, max_order);
    const int n = order(rng);
    std::vector<RatFunc> cs;
    for (int i = 0; i < n; ++i) cs.emplace_back(random_poly(max_deg));
    cs.emplace_back(random_poly(max_deg));  // leading, nonzero by construction
    return DiffOp(std::move(cs));
}

}  // namespace

TEST_CASE("parser: pinned forms") {
    const DiffOp a = parse_operator("D - z^5");
    CHECK(a.order() == 1);
    CHECK(a.coefficient(1) == RatFunc(1));
    CHECK(a.coefficient(0) == RatFunc(-z_poly({0, 0, 0, 0, 0, 1})));

    // commutation: D*z = z*D + 1
    const DiffOp b = parse_operator("D*z");
    CHECK(b == parse_operator("z*D + 1"));

    const DiffOp c = parse_operator("z^5*D + 1 + (1/2)*z^4");
    CHECK(c.order() == 1);
    CHECK(c.coefficient(1) == RatFunc(z_poly({0, 0, 0, 0, 0, 1})));
    CHECK(c.coefficient(0) ==
          RatFunc(Poly(std::vector<Rational>{rq(1), rq(0), rq(0), rq(0), rq(1, 2)})));
}

TEST_CASE("parser: errors carry positions") {
    CHECK_THROWS_AS(parse_operator("D + "), SyntaxError);
    CHECK_THROWS_AS(parse_operator("q"), SyntaxError);
    CHECK_THROWS_AS(parse_operator("(D"), SyntaxError);
    CHECK_THROWS_AS(parse_operator("1/0"), SyntaxError);
    try {
        parse_operator("D + %");
    } catch (const SyntaxError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("apply on rational functions") {
    const DiffOp l = parse_operator("D - z^5");
    CHECK(apply(l, RatFunc(z_poly({0, 1}))) == RatFunc(z_poly({1, 0, 0, 0, 0, 0, -1})));

    const DiffOp d = parse_operator("D");
    const RatFunc f(Poly::one(), z_poly({-1, 1}));
    CHECK(apply(d, f) == RatFunc(-Poly::one(), z_poly({-1, 1}) * z_poly({-1, 1})));

    const DiffOp zd = parse_operator("z*D");
    CHECK(apply(zd, RatFunc(z_poly({0, 0, 0, 1}))) == RatFunc(z_poly({0, 0, 0, 3})));
}

TEST_CASE("normalization: D*a = a*D + a' on random polynomials") {
    for (int trial = 0; trial < 20; ++trial) {
        const Poly a = random_poly(4);
        const DiffOp lhs = DiffOp::derivation() * DiffOp::multiplication(RatFunc(a));
        const DiffOp rhs = DiffOp::multiplication(RatFunc(a)) * DiffOp::derivation() +
                           DiffOp::multiplication(RatFunc(a.derivative()));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("parse then print round-trips") {
    for (int trial = 0; trial < 25; ++trial) {
        const DiffOp op = random_poly_operator(3, 4);
        const std::string text = print_operator(op);
        CHECK(parse_operator(text) == op);
    }
}

TEST_CASE("clear_denominators: pinned and idempotent") {
    // D + (1 + z^4/2)/z^5  ->  2z^5 D + 2 + z^4
    const Poly num = Poly(std::vector<Rational>{rq(1), rq(0), rq(0), rq(0), rq(1, 2)});
    const Poly den = z_poly({0, 0, 0, 0, 0, 1});
    const DiffOp l = DiffOp({RatFunc(num, den), RatFunc(1)});
    const DiffOp cleared = clear_denominators(l);
    CHECK(cleared.coefficient(1) == RatFunc(z_poly({0, 0, 0, 0, 0, 2})));
    CHECK(cleared.coefficient(0) == RatFunc(z_poly({2, 0, 0, 0, 1})));
    CHECK(clear_denominators(cleared) == cleared);

    // z*D + z^2 -> D + z
    const DiffOp m = parse_operator("z*D + z^2");
    const DiffOp mc = clear_denominators(m);
    CHECK(mc == parse_operator("D + z"));
}

TEST_CASE("clear_denominators scales the operator by a unit") {
    std::uniform_int_distribution<long> pt(2, 6);
    for (int trial = 0; trial < 10; ++trial) {
        const Poly den = z_poly({-pt(rng), 1});
        DiffOp l({RatFunc(random_poly(3), den), RatFunc(random_poly(2))});
        if (l.order() != 1) continue;
        const DiffOp cleared = clear_denominators(l);
        // u = cleared_a1 / a1; check apply agreement against u * L on samples
        const RatFunc u = cleared.coefficient(1) / l.coefficient(1);
        for (int s = 0; s < 5; ++s) {
            const RatFunc f(random_poly(3));
            CHECK(apply(cleared, f) == u * apply(l, f));
        }
    }
}

TEST_CASE("adjoint: pinned rules and involution") {
    CHECK(adjoint(parse_operator("D")) == parse_operator("-D"));
    CHECK(adjoint(parse_operator("z^2 + 1")) == parse_operator("z^2 + 1"));
    // a*D -> -a*D - a'
    const DiffOp a_d = parse_operator("z^3*D");
    CHECK(adjoint(a_d) == parse_operator("-z^3*D - 3*z^2"));

    for (int trial = 0; trial < 15; ++trial) {
        const DiffOp op = random_poly_operator(3, 3);
        CHECK(adjoint(adjoint(op)) == op);
    }
    // anti-homomorphism on order-1 products
    for (int trial = 0; trial < 10; ++trial) {
        const DiffOp p = random_poly_operator(1, 3);
        const DiffOp q = random_poly_operator(1, 3);
        CHECK(adjoint(p * q) == adjoint(q) * adjoint(p));
    }
}

TEST_CASE("apply_series agrees with apply after expansion") {
    std::uniform_int_distribution<long> pts(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        const DiffOp op = random_poly_operator(2, 3);
        const Poly fp = random_poly(3);
        const RatFunc f(fp, z_poly({-pts(rng), 1}));
        const Place p = (trial % 4 == 0) ? Place::infinity() : Place::finite(rq(pts(rng)));
        if (f.is_zero()) continue;
        const LaurentSeries fs = laurent_expand(f, p, 10);
        const LaurentSeries lhs = apply_series(op, fs);
        const RatFunc applied = apply(op, f);
        if (applied.is_zero()) {
            CHECK(lhs.is_zero_to_precision());
            continue;
        }
        const LaurentSeries rhs = laurent_expand(applied, p, lhs.precision());
        for (long e = lhs.base(); e < lhs.base() + static_cast<long>(lhs.precision()); ++e) {
            if (e < rhs.base() + static_cast<long>(rhs.precision()))
                CHECK(lhs.coefficient_at(e) == rhs.coefficient_at(e));
        }
    }
}

TEST_CASE("local delta form: pinned examples") {
    // z^5 D + 1 + (1/2) z^4 at 0: b1 = t^4, b0 = 1 + t^4/2
    const DiffOp l = parse_operator("z^5*D + 1 + (1/2)*z^4");
    const LocalDeltaOp d = to_local_delta_form(l, Place::finite(rq(0)), 6);
    REQUIRE(d.coeffs.size() == 2);
    CHECK(d.coeffs[1].valuation() == 4);
    CHECK(d.coeffs[1].coefficient_at(4) == rq(1));
    CHECK(d.coeffs[0].coefficient_at(0) == rq(1));
    CHECK(d.coeffs[0].coefficient_at(4) == rq(1, 2));

    // D at 0: b1 = t^{-1}, b0 = 0
    const LocalDeltaOp d2 = to_local_delta_form(parse_operator("D"), Place::finite(rq(0)), 4);
    CHECK(d2.coeffs[1].valuation() == -1);
    CHECK(d2.coeffs[1].coefficient_at(-1) == rq(1));
    CHECK(d2.coeffs[0].is_zero_to_precision());
}

TEST_CASE("companion systems act like the scalar operator") {
    const DiffOp l = parse_operator("D^2 - z");
    const DiffSystem sys = DiffSystem::companion(l);
    CHECK(sys.dimension() == 2);
    // (y, y') is annihilated by the system exactly when L y = 0... check the
    // inhomogeneous translation instead on a sample y.
    const RatFunc y(z_poly({1, 2, 0, 1}));
    const RatFunc ly = apply(l, y);
    const auto image = sys.apply({y, y.derivative()});
    CHECK(image[0] == RatFunc(0));
    CHECK(image[1] == ly);
}
