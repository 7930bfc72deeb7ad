#include <random>

#include "doctest.h"
#include "monoclass/cyclotomic.hpp"

using namespace monoclass;
using C = CyclotomicNumber;

namespace {

// x^M - 1 divided by Phi_d for every proper divisor d, by long division
IntPoly phi_by_division(int M) {
    if (M == 1) return {-1, 1};
    IntPoly num(M + 1, 0);
    num[0] = -1;
    num[M] = 1;
    for (int d = 1; d < M; ++d) {
        if (M % d) continue;
        const IntPoly den = phi_by_division(d);
        IntPoly q(num.size() - den.size() + 1, 0);
        IntPoly r = num;
        for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
            q[i] = r[i + den.size() - 1];
            for (std::size_t j = 0; j < den.size(); ++j) r[i + j] -= q[i] * den[j];
        }
        for (auto v : r) REQUIRE(v == 0);
        num = q;
    }
    return num;
}

C random_number(std::mt19937& rng, int M) {
    std::uniform_int_distribution<int> d(-4, 4);
    std::vector<Rational> c;
    for (int i = 0; i < M; ++i) c.emplace_back(d(rng), 1 + std::abs(d(rng)));
    return C::from_coeffs(M, c);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == IntPoly{-1, 1});
    CHECK(cyclotomic_poly(4) == IntPoly{1, 0, 1});
    CHECK(cyclotomic_poly(12) == IntPoly{1, 0, -1, 0, 1});
    for (int M = 1; M <= 40; ++M) CHECK(cyclotomic_poly(M) == phi_by_division(M));
}

TEST_CASE("roots of unity") {
    CHECK(C::zeta(4) * C::zeta(4) == C::rational(-1, 1, 4));
    CHECK(cyc_conj(C::zeta(8)) * C::zeta(8) == C::one(8));
    const C r5 = C::zeta(5) + C::zeta(5, 4) - C::zeta(5, 2) - C::zeta(5, 3);
    CHECK(r5 * r5 == C::rational(5, 1, 5));
    for (int M = 1; M <= 30; ++M)
        for (int k = 0; k < M; ++k) CHECK(cyc_conj(C::zeta(M, k)) * C::zeta(M, k) == C::one(M));
}

TEST_CASE("change of modulus") {
    CHECK(change_modulus(C::rational(-1, 1, 2), 4) == C::rational(-1, 1, 4));
    CHECK(change_modulus(C::zeta(3), 12) == C::zeta(12, 4));
    const C a = C::zeta(3), b = C::zeta(4);
    CHECK(change_modulus(a, 12) * change_modulus(b, 12) == C::zeta(12, 7));
    CHECK_THROWS(change_modulus(C::zeta(5), 12));
}

TEST_CASE("field laws on random elements") {
    std::mt19937 rng(7);
    for (int M : {1, 3, 4, 5, 8, 9, 12, 15, 20, 24, 36, 60}) {
        for (int rep = 0; rep < 6; ++rep) {
            const C x = random_number(rng, M), y = random_number(rng, M), z = random_number(rng, M);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(cyc_conj(x * y) == cyc_conj(x) * cyc_conj(y));
            if (!x.is_zero()) CHECK(x * cyc_inv(x) == C::one(M));
            const int M2 = M * 3;
            CHECK(change_modulus(x * y, M2) == change_modulus(x, M2) * change_modulus(y, M2));
            CHECK(change_modulus(x + y, M2) == change_modulus(x, M2) + change_modulus(y, M2));
        }
    }
    CHECK_THROWS_AS(cyc_inv(C::zero(5)), DivisionByZero);
}

TEST_CASE("dense matrices") {
    const DenseMatrix id = DenseMatrix::identity(3, 7);
    const DenseMatrix a = DenseMatrix::from_rows({{C::zeta(7), C::one(7), C::zero(7)},
                                                  {C::zero(7), C::zeta(7, 3), C::one(7)},
                                                  {C::one(7), C::zero(7), C::zeta(7, 2)}});
    CHECK(id * a == a);
    CHECK(mat_trace(id) == C::rational(3, 1, 7));
    CHECK(a * mat_inv(a) == id);
    const DenseMatrix sing = DenseMatrix::from_rows({{C::one(3), C::one(3)}, {C::one(3), C::one(3)}});
    CHECK_THROWS(mat_inv(sing));
}
