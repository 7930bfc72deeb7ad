#include "monoclass/primitive.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "monoclass/modules.hpp"

namespace monoclass {

namespace {

using C = CyclotomicNumber;

C rat(i64 num, i64 den = 1) { return C::rational(num, den); }
C zeta(int M, i64 k = 1) { return C::zeta(M, k); }

C im() { return zeta(4); }
C half() { return rat(1, 2); }

DenseMatrix monomial_dense(const MonomialElement& x) { return to_dense(x); }

struct FamilyInfo {
    const char* name;
    int degree;
    i64 quotient;
    bool needs_three;  // n = 0 mod 3
    bool solvable;
};

constexpr std::array<FamilyInfo, 16> kFamilies{{
    {"A4_a", 2, 12, false, true},   {"A4_b", 2, 12, false, true},   {"S4_a", 2, 24, false, true},
    {"S4_b", 2, 24, false, true},   {"A5", 2, 60, false, false},    {"C4_1", 3, 36, true, true},
    {"C4_2", 3, 36, true, true},    {"C4_3", 3, 36, true, true},    {"Q8_1", 3, 72, true, true},
    {"Q8_2", 3, 72, true, true},    {"SL23_0", 3, 216, true, true}, {"SL23_1", 3, 216, true, true},
    {"SL23_2", 3, 216, true, true}, {"Alt5", 3, 60, false, false},  {"PSL27", 3, 168, false, false},
    {"Alt6", 3, 360, true, false},
}};

const FamilyInfo* info(int degree, const std::string& f) {
    for (auto& x : kFamilies)
        if (x.degree == degree && f == x.name) return &x;
    return nullptr;
}

ScaledMatrix plain(DenseMatrix m) { return ScaledMatrix{1, 0, std::move(m)}; }
ScaledMatrix scalar(int n, i64 k, DenseMatrix m) { return ScaledMatrix{n, k, std::move(m)}; }

}  // namespace

DenseMatrix ScaledMatrix::to_dense() const {
    return scalar_mul(C::zeta(L, e), core);
}

C sqrt5() { return zeta(5) + zeta(5, 4) - zeta(5, 2) - zeta(5, 3); }

C sqrt_minus7() {
    return zeta(7) + zeta(7, 2) + zeta(7, 4) - zeta(7, 3) - zeta(7, 5) - zeta(7, 6);
}

DenseMatrix prim_a() {
    return DenseMatrix::from_rows({{half() * (im() - rat(1)), half() * (im() - rat(1))},
                                   {half() * (im() + rat(1)), half() * (-im() - rat(1))}});
}

DenseMatrix prim_b() { return DenseMatrix::diagonal({zeta(8), zeta(8, 7)}); }

DenseMatrix prim_c() {
    const C l1 = half() * (rat(1) - sqrt5());
    const C l2 = half() * (rat(1) + sqrt5());
    return DenseMatrix::from_rows({{half() * im(), half() * (l1 - l2 * im())}, {half() * (-l1 - l2 * im()), half() * (-im())}});
}

DenseMatrix prim_u() {
    const C e = zeta(3), e2 = zeta(3, 2);
    const C k = cyc_inv(e - e2);
    const C o = rat(1);
    return scalar_mul(k, DenseMatrix::from_rows({{o, o, o}, {o, e, e2}, {o, e2, e}}));
}

DenseMatrix prim_u_prime() {
    const C e = zeta(3), e2 = zeta(3, 2);
    const C k = cyc_inv(e - e2);
    return scalar_mul(k, DenseMatrix::from_rows({{rat(1), e, e}, {e2, e, e2}, {e2, e2, e}}));
}

DenseMatrix prim_a_prime() {
    const C m1 = half() * (rat(-1) + sqrt5());
    const C m2 = half() * (rat(-1) - sqrt5());
    const C o = rat(-1);
    return scalar_mul(half(), DenseMatrix::from_rows({{o, m2, m1}, {m2, m1, o}, {m1, o, m2}}));
}

DenseMatrix prim_b_prime() {
    const C z = rat(0);
    return DenseMatrix::from_rows({{rat(-1), z, z}, {z, z, -zeta(3, 2)}, {z, -zeta(3), z}});
}

DenseMatrix prim_c_prime() {
    const C k = cyc_inv(sqrt_minus7());
    const std::array<C, 3> r{k * (zeta(7, 4) - zeta(7, 3)), k * (zeta(7, 2) - zeta(7, 5)),
                             k * (zeta(7, 1) - zeta(7, 6))};
    std::vector<std::vector<C>> rows(3, std::vector<C>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) rows[i][j] = r[(i + j) % 3];
    return DenseMatrix::from_rows(rows);
}

i64 prim_quotient_order(int degree, const std::string& family) {
    const FamilyInfo* f = info(degree, family);
    return f ? f->quotient : 0;
}

i64 PrimLabel::order() const { return prim_quotient_order(degree, family) * n; }

bool PrimLabel::solvable() const {
    const FamilyInfo* f = info(degree, family);
    return f && f->solvable;
}

bool is_valid(const PrimLabel& g) {
    const FamilyInfo* f = info(g.degree, g.family);
    if (!f || g.n < 1) return false;
    if (g.degree == 2) return g.n % 2 == 0;
    return !f->needs_three || g.n % 3 == 0;
}

std::vector<PrimLabel> enumerate_prim(int degree, i64 m) {
    std::vector<PrimLabel> out;
    if (degree != 2 && degree != 3) return out;
    std::vector<const FamilyInfo*> fams;
    for (auto& f : kFamilies)
        if (f.degree == degree) fams.push_back(&f);
    std::stable_sort(fams.begin(), fams.end(),
                     [](const FamilyInfo* a, const FamilyInfo* b) { return a->quotient < b->quotient; });
    for (const FamilyInfo* f : fams) {
        if (m % f->quotient != 0) continue;
        PrimLabel g{degree, f->name, static_cast<int>(m / f->quotient)};
        if (is_valid(g)) out.push_back(g);
    }
    return out;
}

std::vector<ScaledMatrix> assemble_prim_scaled(const PrimLabel& g) {
    if (!is_valid(g)) throw std::invalid_argument("assemble_prim: invalid label " + g.family);
    const int n = g.n;
    const std::string& f = g.family;
    std::vector<ScaledMatrix> out;
    if (g.degree == 2) {
        const DenseMatrix x4 = monomial_dense(MonomialElement(DiagExponents::b(2, 4)));
        const DenseMatrix I2 = DenseMatrix::identity(2);
        if (f == "A4_a") out = {plain(prim_a()), plain(x4), scalar(n, 1, I2)};
        else if (f == "A4_b") out = {scalar(3 * n, 1, prim_a()), plain(x4)};
        else if (f == "S4_a") out = {plain(prim_a()), plain(prim_b()), scalar(n, 1, I2)};
        else if (f == "S4_b") out = {plain(prim_a()), scalar(2 * n, 1, prim_b()), scalar(n, 1, I2)};
        else out = {plain(prim_a()), plain(prim_c()), plain(x4), scalar(n, 1, I2)};
        return out;
    }
    const DenseMatrix I3 = DenseMatrix::identity(3);
    const ScaledMatrix zn = scalar(n, 1, I3);
    const ScaledMatrix s = plain(monomial_dense(MonomialElement(Permutation::cycle_s(3))));
    const DenseMatrix u = prim_u();
    if (f.rfind("C4_", 0) == 0) {
        ScaledMatrix x = plain(u);
        if (f == "C4_2") {
            if (n % 2 == 1) x = plain(scalar_mul(rat(-1), u));
            else if (n % 4 == 0) x = scalar(4 * n, 1, u);
            else x = plain(scalar_mul(im(), u));
        } else if (f == "C4_3") {
            if (n % 2 == 1) x = plain(scalar_mul(im(), u));
            else if (n % 4 == 0) x = scalar(4 * n, 2, u);
            else x = plain(scalar_mul(zeta(8), u));
        }
        return {s, x, zn};
    }
    if (f == "Q8_1") return {s, plain(u), plain(prim_u_prime()), zn};
    if (f == "Q8_2") {
        if (n % 2 == 1) return {s, plain(u), plain(scalar_mul(rat(-1), prim_u_prime())), zn};
        return {s, scalar(2 * n, 1, u), plain(prim_u_prime()), zn};
    }
    if (f.rfind("SL23_", 0) == 0) {
        const int i = f.back() - '0';
        const DenseMatrix x27 = monomial_dense(MonomialElement(x_pj_generator(3, 3, 9)));
        return {plain(u), scalar(3 * n, i, x27), zn};
    }
    const ScaledMatrix sign = plain(DenseMatrix::diagonal({rat(1), rat(-1), rat(-1)}));
    if (f == "Alt5") return {s, sign, plain(prim_a_prime()), zn};
    if (f == "Alt6") return {s, sign, plain(prim_a_prime()), plain(prim_b_prime()), zn};
    const ScaledMatrix dw = plain(DenseMatrix::diagonal({zeta(7), zeta(7, 2), zeta(7, 4)}));
    return {dw, plain(scalar_mul(rat(-1), prim_c_prime())), zn};
}

std::vector<DenseMatrix> assemble_prim(const PrimLabel& g) {
    std::vector<DenseMatrix> out;
    for (auto& x : assemble_prim_scaled(g)) out.push_back(x.to_dense());
    return out;
}

}  // namespace monoclass
