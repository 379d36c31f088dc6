#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "curvezeta/contfrac.hpp"
#include "curvezeta/cyclo.hpp"
#include "curvezeta/errors.hpp"
#include "curvezeta/linalg.hpp"
#include "curvezeta/ratfun.hpp"
#include "curvezeta/uniroots.hpp"

using namespace curvezeta;

namespace {

UniPoly upoly(std::vector<long> cs) {
    std::vector<Rat> v;
    for (long c : cs) v.emplace_back(c);
    return UniPoly(v);
}

// independent determinant oracle: cofactor expansion along the first row
Rat det_cofactor(const Mat& m) {
    std::size_t n = m.size();
    if (n == 0) return Rat(1);
    if (n == 1) return m[0][0];
    Rat acc(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        Mat minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Rat> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(row);
        }
        Rat term = m[0][j] * det_cofactor(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

Mat chain_matrix(const std::vector<long>& kappa) {
    std::size_t n = kappa.size();
    Mat m(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = Rat(kappa[i]);
        if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = Rat(-1);
    }
    return m;
}

} // namespace

TEST_CASE("continued fractions") {
    CHECK(continued_fraction(53, 10) == std::vector<long>{5, 3, 3});
    CHECK(continued_fraction(5, 3) == std::vector<long>{1, 1, 2});
    CHECK(continued_fraction(2, 1) == std::vector<long>{2});
    CHECK_THROWS_AS(continued_fraction(4, 2), NonCoprime);

    CHECK(even_normalize({1, 1, 2}) == std::vector<long>{1, 1, 2});
    CHECK(even_normalize({1, 2}) == std::vector<long>{1, 1, 1});
    CHECK(even_normalize({3, 2}) == std::vector<long>{3, 1, 1});

    // reconstruction returns the reduced input, before and after normalising
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        long b = 1 + static_cast<long>(rng() % 60);
        long a = b + 1 + static_cast<long>(rng() % 120);
        if (std::gcd(a, b) != 1) continue;
        std::vector<long> cf = continued_fraction(a, b);
        auto [va, vb] = cf_value(cf);
        CHECK(va == a);
        CHECK(vb == b);
        auto [ea, eb] = cf_value(even_normalize(cf));
        CHECK(ea == a);
        CHECK(eb == b);
        CHECK(even_normalize(cf).size() % 2 == 1); // even last index w
    }
}

TEST_CASE("cyclotomic vectors") {
    CHECK(CycloVector::of_power(1).exponents() == std::map<long, int>{{1, 1}});
    CHECK(CycloVector::of_power(8).exponents() ==
          std::map<long, int>{{1, 1}, {2, 1}, {4, 1}, {8, 1}});
    std::map<long, int> d130;
    for (long k : {1, 2, 5, 10, 13, 26, 65, 130}) d130[k] = 1;
    CHECK(CycloVector::of_power(130).exponents() == d130);

    // Phi_6 = t^2 - t + 1 by root enumeration oracle: (t^6-1)(t-1)(t^2-1)^-1(t^3-1)^-1
    CHECK(cyclotomic_poly(6) == upoly({1, -1, 1}));
    CHECK(CycloVector(std::map<long, int>{}).expand() == RatFun(Rat(1)));

    // (t^8-1)/((t-1)(t^4-1)) == Phi_8 / Phi_1
    CycloVector v(std::map<long, int>{{1, -1}, {8, 1}});
    UniPoly t8m1 = upoly({-1, 0, 0, 0, 0, 0, 0, 0, 1});
    UniPoly tm1 = upoly({-1, 1});
    UniPoly t4m1 = upoly({-1, 0, 0, 0, 1});
    CHECK(v.expand() * RatFun(tm1 * t4m1, UniPoly::one()) == RatFun(t8m1));

    // expanding of_power(N) reproduces t^N - 1 exactly
    for (long N : {1, 2, 3, 6, 12, 30}) {
        std::vector<Rat> c(N + 1, Rat(0));
        c[0] = -1;
        c[N] = 1;
        CHECK(CycloVector::of_power(N).expand() == RatFun(UniPoly(c)));
    }

    CHECK(CycloVector(std::map<long, int>{{14, 1}, {28, 1}, {1, -1}}).str() ==
          "Phi_14 * Phi_28 / Phi_1");
}

TEST_CASE("rational function arithmetic") {
    UniPoly s = UniPoly::x();
    RatFun a(UniPoly::one(), upoly({2, 1}));               // 1/(2+s)
    RatFun b(UniPoly::one(), upoly({2, 1}) * upoly({1, 1})); // 1/((2+s)(1+s))
    CHECK(a + b == RatFun(UniPoly::one(), upoly({1, 1})));   // hand partial fractions
    RatFun f(upoly({1, 7}), upoly({3, 0, 1}));
    CHECK(f + RatFun() == f);
    CHECK(RatFun(UniPoly::one(), upoly({1, 1}) * Rat(2)).eval(Rat(0)) == Rat(1, 2));
    RatFun at_pole(UniPoly::one(), upoly({0, 1})); // 1/s
    CHECK_THROWS_AS(at_pole.eval(Rat(0)), DivisionByZero);

    // commutativity / associativity on random inputs; normalize idempotent
    std::mt19937 rng(11);
    auto rnd = [&]() {
        std::vector<Rat> c;
        int d = 1 + rng() % 3;
        for (int i = 0; i <= d; ++i) c.emplace_back(static_cast<long>(rng() % 7) - 3);
        UniPoly num(c), den = upoly({static_cast<long>(1 + rng() % 4), 1});
        return RatFun(num, den);
    };
    for (int i = 0; i < 100; ++i) {
        RatFun x = rnd(), y = rnd(), z = rnd();
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
    }
}

TEST_CASE("poles with orders") {
    RatFun f(UniPoly::one(), upoly({1, 1}) * Rat(2)); // 1/(2(s+1))
    auto ps = poles_with_orders(f);
    REQUIRE(ps.size() == 1);
    CHECK(ps[0].first == Rat(-1));
    CHECK(ps[0].second == 1);

    RatFun g(UniPoly::one(), upoly({1, 1}).pow(2));
    auto ps2 = poles_with_orders(g);
    REQUIRE(ps2.size() == 1);
    CHECK(ps2[0].first == Rat(-1));
    CHECK(ps2[0].second == 2);

    CHECK(poles_with_orders(RatFun(Rat(3))).empty());
    CHECK_THROWS_AS(poles_with_orders(RatFun(UniPoly::one(), upoly({1, 0, 1}))), NonLinearFactor);
}

TEST_CASE("rational roots and factorisation") {
    // (s - 1/2)^2 (s + 3) (s^2 + 1)
    UniPoly p = upoly({-1, 2}).pow(2) * upoly({3, 1}) * upoly({1, 0, 1});
    auto roots = rational_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == std::pair<Rat, int>{Rat(-3), 1});
    CHECK(roots[1] == std::pair<Rat, int>{Rat(1, 2), 2});
    UniFactors f = factor_rationals(p);
    REQUIRE(f.irreducible.size() == 1);
    CHECK(f.irreducible[0].first == upoly({1, 0, 1}));
    CHECK(f.certified);

    // quartic splitting into two rational quadratics: (s^2+s+1)(s^2-s+2)
    UniPoly q = upoly({1, 1, 1}) * upoly({2, -1, 1});
    UniFactors fq = factor_rationals(q);
    REQUIRE(fq.irreducible.size() == 2);
    CHECK(fq.irreducible[0].first * fq.irreducible[1].first == q);

    // irreducible quartic stays whole
    UniPoly irr = upoly({2, 0, 0, 0, 1}); // s^4 + 2
    UniFactors fi = factor_rationals(irr);
    REQUIRE(fi.irreducible.size() == 1);
    CHECK(fi.irreducible[0].second == 1);
}

TEST_CASE("exact linear algebra") {
    CHECK(exact_det(chain_matrix({2, 2, 2})) == Rat(4));
    Mat id3(3, std::vector<Rat>(3, Rat(0)));
    for (int i = 0; i < 3; ++i) id3[i][i] = Rat(1);
    CHECK(exact_det(id3) == Rat(1));

    // chain determinant recursion vs cofactor oracle
    std::mt19937 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 1 + rng() % 5;
        std::vector<long> kappa;
        for (std::size_t i = 0; i < n; ++i) kappa.push_back(1 + rng() % 5);
        Mat m = chain_matrix(kappa);
        Rat d = exact_det(m);
        CHECK(d == det_cofactor(m));
        // Delta_{1,r} = kappa_1 Delta_{2,r} - Delta_{3,r}
        if (n >= 3) {
            Mat m2 = chain_matrix({kappa.begin() + 1, kappa.end()});
            Mat m3 = chain_matrix({kappa.begin() + 2, kappa.end()});
            CHECK(d == Rat(kappa[0]) * exact_det(m2) - exact_det(m3));
        }
    }

    // solve and substitute back exactly
    std::mt19937 rng2(17);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 1 + rng2() % 4;
        Mat m(n, std::vector<Rat>(n));
        std::vector<Rat> rhs(n);
        for (auto& row : m)
            for (auto& x : row) x = Rat(static_cast<long>(rng2() % 11) - 5);
        for (auto& x : rhs) {
            x = Rat(static_cast<long>(rng2() % 11) - 5, 1 + rng2() % 3);
            x.canonicalize();
        }
        if (exact_det(m) == 0) continue;
        std::vector<Rat> sol = exact_solve(m, rhs);
        for (std::size_t i = 0; i < n; ++i) {
            Rat acc(0);
            for (std::size_t j = 0; j < n; ++j) acc += m[i][j] * sol[j];
            CHECK(acc == rhs[i]);
        }
    }
    Mat sing(2, std::vector<Rat>(2, Rat(1)));
    CHECK_THROWS_AS(exact_solve(sing, {Rat(1), Rat(0)}), SingularMatrix);
}

TEST_CASE("residues") {
    // 35/24 residue reproduction pattern: residue of c/(s - p) terms
    RatFun f = RatFun(UniPoly::one(), upoly({1, 1})) * RatFun(Rat(3)) +
               RatFun(UniPoly::one(), upoly({2, 1}));
    CHECK(residue_at(f, Rat(-1)) == Rat(3));
    CHECK(residue_at(f, Rat(-2)) == Rat(1));
    // residue at a double pole reads the 1/(s-p) coefficient
    RatFun g(upoly({3, 1}), upoly({1, 1}).pow(2)); // (s+3)/(s+1)^2 = 1/(s+1) + 2/(s+1)^2
    CHECK(residue_at(g, Rat(-1)) == Rat(1));
}
