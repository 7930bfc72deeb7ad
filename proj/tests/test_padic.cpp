#include "doctest.h"
#include "monoclass/padic.hpp"

using namespace monoclass;

namespace {

FlatPoly product(const std::vector<FlatPoly>& fs, i64 m) {
    FlatPoly r(m, {1});
    for (auto& f : fs) r = r * f;
    return r;
}

// all monic polynomials of the given degree over F_q
std::vector<FlatPoly> monic_polys(int q, int deg) {
    std::vector<FlatPoly> out;
    int count = 1;
    for (int i = 0; i < deg; ++i) count *= q;
    for (int code = 0; code < count; ++code) {
        std::vector<i64> c(deg + 1, 0);
        int x = code;
        for (int i = 0; i < deg; ++i) c[i] = x % q, x /= q;
        c[deg] = 1;
        out.emplace_back(q, c);
    }
    return out;
}

}  // namespace

TEST_CASE("factorization modulo q") {
    const auto g = factor_f_mod_q(7, 2);
    REQUIRE(g.size() == 2);
    CHECK(g[0] == FlatPoly(2, {1, 1, 0, 1}));
    CHECK(g[1] == FlatPoly(2, {1, 0, 1, 1}));
    const auto g32 = factor_f_mod_q(3, 2);
    REQUIRE(g32.size() == 1);
    CHECK(g32[0] == FlatPoly(2, {1, 1, 1}));
    const auto g52 = factor_f_mod_q(5, 2);
    REQUIRE(g52.size() == 1);
    for (int deg = 1; deg <= 2; ++deg)
        for (auto& h : monic_polys(2, deg)) CHECK(!poly_mod(g52[0], h).is_zero());
    CHECK_THROWS(factor_f_mod_q(7, 7));
}

TEST_CASE("canonical ordering follows g_{r+1} = gcd(g_r(x^u), f)") {
    for (auto [p, q] : std::vector<std::pair<int, int>>{{7, 2}, {11, 3}, {13, 3}, {23, 2}, {31, 2}}) {
        const auto g = factor_f_mod_q(p, q);
        const FlatPoly f = FlatPoly::cyclotomic_f(p, q);
        const int u = primitive_root(p);
        for (std::size_t r = 0; r + 1 < g.size(); ++r)
            CHECK(make_monic(poly_gcd(g[r].compose_power(u), f)) == g[r + 1]);
        CHECK(product(g, q) == f);
    }
}

TEST_CASE("Hensel lifting") {
    const FactorSystem fs = build_factor_system(7, 2, 2);
    REQUIRE(fs.factors.size() == 2);
    CHECK(fs.factors[0] == FlatPoly(4, {3, 1, 2, 1}));
    CHECK(fs.factors[1] == FlatPoly(4, {3, 2, 3, 1}));
    CHECK(fs.cofactors[0] == fs.factors[1]);

    const FactorSystem f11 = build_factor_system(11, 3, 1);
    REQUIRE(f11.factors.size() == 2);
    for (auto& f : f11.factors) CHECK(f.degree() == 5);
    CHECK(product(f11.factors, 3) == FlatPoly::cyclotomic_f(11, 3));
    const FactorSystem f11b = build_factor_system(11, 3, 3);
    CHECK(product(f11b.factors, 27) == FlatPoly::cyclotomic_f(11, 27));
    for (std::size_t r = 0; r < 2; ++r) CHECK(f11b.factors[r].reduce(3) == f11.factors[r]);

    const FactorSystem one = build_factor_system(5, 2, 3);
    REQUIRE(one.factors.size() == 1);
    CHECK(one.cofactors[0] == FlatPoly(8, {1}));
}

TEST_CASE("a Hensel step on an exact factorization changes nothing") {
    const auto g = factor_f_mod_q(7, 2);
    const FactorSystem fs = build_factor_system(7, 2, 3);
    FlatPoly gg, s, t;
    poly_ext_gcd(g[0], g[1], gg, s, t);
    const FlatPoly f = FlatPoly::cyclotomic_f(7, 16);
    const auto [g4, h4] = hensel_step(f, fs.factors[0].lift(16), fs.factors[1].lift(16), s, t, 2, 3);
    CHECK(product({g4, h4}, 16) == f);
    CHECK(g4.reduce(8) == fs.factors[0]);
    const FlatPoly exact = FlatPoly(16, {0, 1}) * FlatPoly(16, {1, 1});
    const auto [a, b] = hensel_step(exact, FlatPoly(16, {0, 1}), FlatPoly(16, {1, 1}), FlatPoly(2, {1}),
                                    FlatPoly(2, {1}), 2, 4);
    CHECK(a == FlatPoly(32, {0, 1}));
    CHECK(b == FlatPoly(32, {1, 1}));
}
