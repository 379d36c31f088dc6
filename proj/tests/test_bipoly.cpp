#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "curvezeta/bipoly.hpp"
#include "curvezeta/errors.hpp"

using namespace curvezeta;

TEST_CASE("parsing") {
    BiPoly p = parse_bipoly("x^3 - y^2");
    CHECK(p.coeff(3, 0) == Rat(1));
    CHECK(p.coeff(0, 2) == Rat(-1));
    CHECK(p.terms().size() == 2);

    BiPoly q = parse_bipoly("y^4 - 2*x^3*y^3 + x^7 - x^6*y");
    CHECK(q.terms().size() == 4);
    CHECK(q.coeff(3, 3) == Rat(-2));

    CHECK(parse_bipoly("x*(x+1) - x^2 - x").is_zero());
    CHECK(parse_bipoly("1/2*x + 1/2*x") == parse_bipoly("x"));
    CHECK(parse_bipoly("(x+y)^3") == parse_bipoly("x^3+3*x^2*y+3*x*y^2+y^3"));
    CHECK_THROWS_AS(parse_bipoly("x +"), ParseError);
    CHECK_THROWS_AS(parse_bipoly("x ^ y"), ParseError);
    CHECK_THROWS_AS(parse_bipoly("(x"), ParseError);

    // round-trip on canonical printing
    std::mt19937 rng(5);
    for (int t = 0; t < 50; ++t) {
        BiPoly r;
        for (int k = 0; k < 5; ++k)
            r = r + BiPoly::monomial(Rat(static_cast<long>(rng() % 9) - 4), rng() % 4, rng() % 4);
        CHECK(parse_bipoly(r.str()) == r);
    }
}

TEST_CASE("calculus and substitutions") {
    BiPoly f = parse_bipoly("y^4 - 2*x^3*y^3 + x^7 - x^6*y");
    CHECK(f.order_origin() == 4);
    CHECK(parse_bipoly("x^3-y^2").order_origin() == 2);
    CHECK(parse_bipoly("3*x^2+2*y").order_origin() == 1);

    CHECK(f.dx() == parse_bipoly("-6*x^2*y^3 + 7*x^6 - 6*x^5*y"));
    CHECK(f.dy() == parse_bipoly("4*y^3 - 6*x^3*y^2 - x^6"));

    // chart substitutions compose with evaluation
    std::mt19937 rng(9);
    for (int t = 0; t < 30; ++t) {
        Rat a(static_cast<long>(rng() % 7) - 3), b(static_cast<long>(rng() % 7) - 3);
        CHECK(f.subst_chart_a().eval(a, b) == f.eval(a, a * b));
        CHECK(f.subst_chart_b().eval(a, b) == f.eval(a * b, b));
        CHECK(f.translate_y(Rat(2)).eval(a, b) == f.eval(a, b + 2));
        CHECK(f.translate_x(Rat(-3)).eval(a, b) == f.eval(a - 3, b));
        CHECK(f.swap_xy().eval(a, b) == f.eval(b, a));
    }

    CHECK(parse_bipoly("x^2*y - x^3*y^2").divide_x(2) == parse_bipoly("y - x*y^2"));
    CHECK_THROWS_AS(parse_bipoly("x + y").divide_x(1), Error);

    CHECK(parse_bipoly("x^3-y^2").at_x0() == UniPoly(std::vector<Rat>{Rat(0), Rat(0), Rat(-1)}));
    CHECK(parse_bipoly("x^3-y^2").at_y0() ==
          UniPoly(std::vector<Rat>{Rat(0), Rat(0), Rat(0), Rat(1)}));
}

TEST_CASE("bivariate gcd") {
    BiPoly a = parse_bipoly("(x^2+y)*(x-y)^2");
    BiPoly b = parse_bipoly("(x^2+y)*(x-y)*(x+1)");
    BiPoly g = bgcd(a, b);
    // gcd is (x^2+y)(x-y) up to a constant
    BiPoly expected = parse_bipoly("(x^2+y)*(x-y)");
    CHECK(bipoly_exact_div(g, expected).is_constant());
    CHECK(bipoly_exact_div(a, g) * g == a);

    CHECK(bgcd(parse_bipoly("x^2"), parse_bipoly("x^3-x^2*y")).total_degree() == 2);
    CHECK(bgcd(parse_bipoly("x+y"), parse_bipoly("x-y")).is_constant());

    std::mt19937 rng(13);
    auto rnd = [&]() {
        BiPoly r;
        for (int k = 0; k < 3; ++k)
            r = r + BiPoly::monomial(Rat(static_cast<long>(rng() % 5) - 2), rng() % 3, rng() % 3);
        return r;
    };
    for (int t = 0; t < 40; ++t) {
        BiPoly p = rnd(), q = rnd(), c = rnd();
        if (p.is_zero() || q.is_zero() || c.is_zero()) continue;
        BiPoly gg = bgcd(p * c, q * c);
        // c divides gcd(pc, qc), and the gcd divides both products
        CHECK(bipoly_exact_div(gg, bgcd(gg, c)).total_degree() >= 0);
        CHECK(bipoly_exact_div(p * c, gg) * gg == p * c);
        CHECK(bipoly_exact_div(q * c, gg) * gg == q * c);
    }
}

TEST_CASE("squarefree structure") {
    CHECK(is_squarefree(parse_bipoly("x^3-y^2")));
    CHECK(is_squarefree(parse_bipoly("y")));
    CHECK(!is_squarefree(parse_bipoly("x^2*y - x^2*x")));
    CHECK(is_squarefree(parse_bipoly("y^4 - 2*x^3*y^3 + x^7 - x^6*y")));

    // layers of x^2 (y+1)^3 (x - y): multiplicities 1, 2, 3
    BiPoly g = parse_bipoly("x^2*(y+1)^3*(x-y)");
    auto layers = squarefree_layers(g);
    REQUIRE(layers.size() == 3);
    CHECK(layers[0].second == 1);
    CHECK(bipoly_exact_div(layers[0].first, parse_bipoly("x-y")).is_constant());
    CHECK(layers[1].second == 2);
    CHECK(bipoly_exact_div(layers[1].first, parse_bipoly("x")).is_constant());
    CHECK(layers[2].second == 3);
    CHECK(bipoly_exact_div(layers[2].first, parse_bipoly("y+1")).is_constant());

    // product of layers^mult reproduces g up to a constant
    BiPoly prod = BiPoly::one();
    for (const auto& [layer, mult] : layers) prod = prod * layer.pow(mult);
    CHECK(bipoly_exact_div(g, prod).is_constant());
}
