#include <random>

#include "doctest.h"
#include "monoclass/monomial.hpp"

using namespace monoclass;

namespace {

MonomialElement random_element(std::mt19937& rng, int p, int M) {
    std::vector<int> img(p);
    for (int i = 0; i < p; ++i) img[i] = i;
    std::shuffle(img.begin(), img.end(), rng);
    std::vector<i64> e(p);
    for (auto& v : e) v = rng() % M;
    return MonomialElement(DiagExponents(M, e), Permutation(img));
}

}  // namespace

TEST_CASE("group laws") {
    std::mt19937 rng(11);
    for (int rep = 0; rep < 200; ++rep) {
        const int p = 2 + rng() % 6, M = 1 + rng() % 24;
        const auto x = random_element(rng, p, M);
        CHECK((x * mono_inv(x)).is_identity());
        CHECK(mono_pow(x, mono_order(x)).is_identity());
    }
    for (int p : {2, 3, 5, 7, 11}) CHECK(mono_order(MonomialElement(Permutation::cycle_s(p))) == p);
}

TEST_CASE("dense representation is a homomorphism") {
    std::mt19937 rng(3);
    for (int rep = 0; rep < 1000; ++rep) {
        const int p = 2 + rng() % 6, M = 1 + rng() % 24;
        const auto x = random_element(rng, p, M), y = random_element(rng, p, M);
        REQUIRE(to_dense(x * y) == to_dense(x) * to_dense(y));
        CHECK((x * y).perm() == x.perm() * y.perm());
    }
    CHECK(to_dense(MonomialElement::identity(4, 6)) == DenseMatrix::identity(4, 6));
}

TEST_CASE("conjugation by a permutation matches dense conjugation") {
    const Permutation s = Permutation::cycle_s(3);
    const DiagExponents d(3, {1, 2, 0});
    const DenseMatrix P = to_dense(MonomialElement(s));
    const DenseMatrix expected = mat_inv(P) * to_dense(MonomialElement(d)) * P;
    CHECK(to_dense(MonomialElement(act_perm(d, s))) == expected);
    const MonomialElement S(s);
    CHECK((mono_inv(S) * MonomialElement(d) * S).diag() == act_perm(d, s));
    CHECK(act_perm(d, Permutation::identity(3)) == d);
    CHECK(act_perm(DiagExponents::z(3, 3), s) == DiagExponents::z(3, 3));
}

TEST_CASE("gamma and chi") {
    for (int m : {2, 3, 4, 9}) {
        CHECK(chi(DiagExponents::b(3, m), 3).is_identity());
        CHECK(gamma(DiagExponents::z(3, m), 3).is_identity());
    }
    const DiagExponents g2 = gamma(gamma(DiagExponents::b(3, 9), 3), 3);
    CHECK(g2.order() == 3);
    CHECK(mod(g2.sum(), 9) == 0);
    const Permutation s = Permutation::cycle_s(3);
    // equivariance and chi o gamma = gamma o chi = 1, exhaustively on (Z/9)^3
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b)
            for (int c = 0; c < 9; ++c) {
                const DiagExponents d(9, {a, b, c});
                CHECK(gamma(act_perm(d, s), 3) == act_perm(gamma(d, 3), s));
                CHECK(chi(act_perm(d, s), 3) == act_perm(chi(d, 3), s));
                CHECK(chi(gamma(d, 3), 3).is_identity());
                CHECK(gamma(chi(d, 3), 3).is_identity());
            }
}

TEST_CASE("group ring action") {
    const Permutation s = Permutation::cycle_s(7);
    CHECK(apply_group_ring(DiagExponents::b(7, 2), {1, 0, 1, 1}, s) == DiagExponents(2, {1, 1, 1, 0, 1, 0, 0}));
    const DiagExponents d(12, {1, 5, 7, 2, 0});
    const Permutation s5 = Permutation::cycle_s(5);
    CHECK(apply_group_ring(d, {1}, s5) == d);
    CHECK(apply_group_ring(d, {1, 1, 1, 1, 1}, s5) == chi(d, 5));
    std::mt19937 rng(5);
    for (int rep = 0; rep < 100; ++rep) {
        std::vector<i64> f(4), g(3), fg(6, 0);
        for (auto& v : f) v = rng() % 7;
        for (auto& v : g) v = rng() % 7;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 3; ++j) fg[i + j] += f[i] * g[j];
        std::vector<i64> e(5);
        for (auto& v : e) v = rng() % 12;
        const DiagExponents x(12, e);
        CHECK(apply_group_ring(x, fg, s5) == apply_group_ring(apply_group_ring(x, g, s5), f, s5));
    }
}

TEST_CASE("determinant and modulus normalization") {
    for (int m : {2, 3, 4, 6}) {
        const MonomialElement z(DiagExponents::z(5, m, 12));
        CHECK(det_exponent(z) == mod(5 * (12 / m), 12));
    }
    const MonomialElement b4(DiagExponents::b(3, 4, 8));
    const auto n = normalize_modulus({b4});
    CHECK(n[0].modulus() == 4);
    CHECK(to_dense(n[0]).with_modulus(8) == to_dense(b4));
}
