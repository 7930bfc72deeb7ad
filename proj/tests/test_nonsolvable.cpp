#include <numeric>
#include <set>

#include "doctest.h"
#include "monoclass/records.hpp"
#include "monoclass/verifier.hpp"

using namespace monoclass;

TEST_CASE("permutation constants") {
    CHECK(perm_constant(7, NSFamily::V0) == Permutation::from_cycles(7, {{1, 2}, {3, 5}}));
    CHECK(perm_constant(11, NSFamily::P11) == Permutation::from_cycles(11, {{1, 7}, {2, 3}, {4, 8}, {5, 9}}));
    CHECK(perm_constant(11, NSFamily::Q11_0) == Permutation::from_cycles(11, {{1, 3}, {2, 8}, {4, 7}, {5, 6}}));
    for (int p : {3, 5, 7, 13}) CHECK(perm_constant(p, NSFamily::R0) == Permutation::from_cycles(p, {{1, 2}}));
    CHECK(perm_constant(5, NSFamily::U0) == Permutation::from_cycles(5, {{1, 2, 3}}));
    CHECK_THROWS(perm_constant(5, NSFamily::V0));
}

TEST_CASE("twist diagonals") {
    CHECK(twist_c(1) == DiagExponents(3, {0, 1, 2, 2, 1}));
    CHECK(twist_g(2) == DiagExponents(4, {0, 0, 0, 1, 0, 3, 0}));
    CHECK(twist_h(1) == DiagExponents(2, {1, 1, 0, 1, 0, 0, 1}));
    CHECK(twist_d(2) == DiagExponents(4, {1, 3, 3, 0, 3, 1, 0, 1, 0, 0, 0}));
}

TEST_CASE("spot values") {
    const auto u = enumerate_ns(5, 60);
    REQUIRE(u.size() == 1);
    CHECK(u[0].family == NSFamily::U1);
    CHECK(u[0].n == 0);
    const ClosedGroup W = closure(assemble_ns(u[0]));
    CHECK(W.order() == 60);
    CHECK(character_norm(W) == 1);
    CHECK(is_irreducible_fast(W));

    bool found = false;
    for (auto& g : enumerate_ns(7, 168))
        if (g.family == NSFamily::V2 && g.n == 0) {
            found = true;
            const ClosedGroup V = closure(assemble_ns(g));
            CHECK(V.order() == 168);
            CHECK(character_norm(V) == 1);
        }
    CHECK(found);
}

TEST_CASE("twist coherence of the degree-5 family") {
    for (int n = 0; n <= 2; ++n) {
        const MonomialElement s(Permutation::cycle_s(5));
        const MonomialElement wc = MonomialElement(perm_constant(5, NSFamily::U1)) * MonomialElement(twist_c(n + 1));
        const ClosedGroup G = closure({s, wc});
        const auto diag = diagonal_subgroup(G);
        i64 expected = 1;
        for (int i = 0; i < 4 * n; ++i) expected *= 3;
        CHECK(static_cast<i64>(diag.size()) == expected);
        for (auto& d : diag) CHECK(mod(d.diag().sum(), d.modulus()) == 0);
        CHECK(G.order() == 60 * expected);
    }
}

TEST_CASE("R0 and R1 differ in the determinant 2-part") {
    int pairs = 0;
    for (i64 m : {240, 480, 1920})
        for (auto& a : enumerate_ns(5, m)) {
            if (a.family != NSFamily::R0) continue;
            for (auto& b : enumerate_ns(5, m)) {
                if (b.family != NSFamily::R1 || !(b.module == a.module)) continue;
                auto dets = [](const NSLabel& g) {
                    std::multiset<std::pair<i64, i64>> out;
                    const ClosedGroup G = closure(assemble_ns(g));
                    // det = sign * zeta_M^e as an exponent of zeta_2M
                    const i64 M2 = 2 * G.modulus();
                    for (auto& x : G.elements()) {
                        const i64 e = mod(2 * det_exponent(x) + (x.perm().sign() < 0 ? G.modulus() : 0), M2);
                        const i64 g = std::gcd(e, M2);
                        out.insert({e / g, M2 / g});
                    }
                    return out;
                };
                CHECK(dets(a) != dets(b));
                ++pairs;
            }
        }
    CHECK(pairs > 0);
}

TEST_CASE("family membership and order bookkeeping") {
    for (int p : {5, 7, 11})
        for (i64 m = 1; m <= 20000; ++m)
            for (auto& g : enumerate_ns(p, m)) {
                CHECK(is_valid(g));
                CHECK(g.order() == m);
            }
    CHECK(perm_part_order(NSFamily::R0, 5) == 120);
    CHECK(perm_part_order(NSFamily::U0, 7) == 2520);
    CHECK(perm_part_order(NSFamily::V0, 7) == 168);
    CHECK(perm_part_order(NSFamily::P11, 11) == 660);
    CHECK(perm_part_order(NSFamily::Q11_0, 11) == 7920);
    CHECK(perm_part_order(NSFamily::Q23, 23) == 10200960);
}

TEST_CASE("unsupported projective degrees") {
    CHECK(is_projective_degree(13));
    CHECK(is_projective_degree(7));
    CHECK(is_projective_degree(5));
    CHECK(!is_projective_degree(11));
    CHECK_THROWS_AS(enumerate_ns(13, 13 * 12 * 11 * 10), UnsupportedError);
    CHECK_NOTHROW(enumerate_ns(5, 120));
}
