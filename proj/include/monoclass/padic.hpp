#pragma once

#include <string>
#include <utility>
#include <vector>

#include "monoclass/numtheory.hpp"

namespace monoclass {

// Polynomial over Z/mZ with coefficients in {0..m-1}, low to high, no trailing zeros.
class FlatPoly {
public:
    FlatPoly() = default;
    FlatPoly(i64 modulus, std::vector<i64> coeffs);

    static FlatPoly monomial(i64 modulus, int deg, i64 c = 1);
    // 1 + x + ... + x^(p-1)
    static FlatPoly cyclotomic_f(int p, i64 modulus);

    i64 modulus() const { return m_; }
    const std::vector<i64>& coeffs() const { return c_; }
    i64 operator[](int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : 0; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    FlatPoly reduce(i64 m2) const;
    FlatPoly lift(i64 m2) const;
    FlatPoly scaled(i64 k) const;
    // p(x^e)
    FlatPoly compose_power(int e) const;

    friend FlatPoly operator+(const FlatPoly& a, const FlatPoly& b);
    friend FlatPoly operator-(const FlatPoly& a, const FlatPoly& b);
    friend FlatPoly operator*(const FlatPoly& a, const FlatPoly& b);
    friend bool operator==(const FlatPoly& a, const FlatPoly& b) { return a.m_ == b.m_ && a.c_ == b.c_; }
    friend bool operator!=(const FlatPoly& a, const FlatPoly& b) { return !(a == b); }

    std::string to_string() const;

private:
    void trim();
    i64 m_ = 1;
    std::vector<i64> c_;
};

// a = quot*b + rem, b monic (or any unit leading coefficient when the modulus is prime)
void poly_divmod(const FlatPoly& a, const FlatPoly& b, FlatPoly& quot, FlatPoly& rem);
FlatPoly poly_mod(const FlatPoly& a, const FlatPoly& b);
// over the prime field F_q
FlatPoly poly_gcd(FlatPoly a, FlatPoly b);
FlatPoly make_monic(const FlatPoly& a);
// returns (g, s, t) with s*a + t*b = g monic
void poly_ext_gcd(const FlatPoly& a, const FlatPoly& b, FlatPoly& g, FlatPoly& s, FlatPoly& t);

struct FactorSystem {
    int p = 0, q = 0, d = 0, v = 0, n = 0;
    std::vector<FlatPoly> factors;
    std::vector<FlatPoly> cofactors;
};

std::vector<FlatPoly> factor_f_mod_q(int p, int q);
std::pair<FlatPoly, FlatPoly> hensel_step(const FlatPoly& f, const FlatPoly& g, const FlatPoly& h, const FlatPoly& a,
                                          const FlatPoly& b, int q, int n);
FactorSystem build_factor_system(int p, int q, int n);
// memoized build_factor_system
const FactorSystem& factor_system(int p, int q, int n);

}  // namespace monoclass
