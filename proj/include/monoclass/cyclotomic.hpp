#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "monoclass/numtheory.hpp"

namespace monoclass {

using Rational = mpq_class;
// coefficient of x^i at index i
using IntPoly = std::vector<i64>;

class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

IntPoly cyclotomic_poly(int M);

// Element of Q(zeta_M) in the power basis 1, zeta, ..., zeta^(phi(M)-1),
// stored as integer numerators over one positive common denominator.
class CyclotomicNumber {
public:
    CyclotomicNumber() : CyclotomicNumber(1) {}
    explicit CyclotomicNumber(int modulus);
    CyclotomicNumber(const Rational& r, int modulus);

    static CyclotomicNumber zero(int M) { return CyclotomicNumber(M); }
    static CyclotomicNumber one(int M) { return CyclotomicNumber(Rational(1), M); }
    static CyclotomicNumber rational(i64 num, i64 den = 1, int M = 1);
    static CyclotomicNumber zeta(int M, i64 k = 1);
    // reduces an arbitrary-length coefficient vector modulo Phi_M
    static CyclotomicNumber from_coeffs(int M, const std::vector<Rational>& c);

    int modulus() const { return M_; }
    int dimension() const { return static_cast<int>(num_.size()); }
    Rational coeff(int i) const;
    std::vector<Rational> coeffs() const;
    const std::vector<mpz_class>& numerators() const { return num_; }
    const mpz_class& denominator() const { return den_; }

    bool is_zero() const;
    bool is_rational() const;
    bool is_integral() const { return den_ == 1; }

    CyclotomicNumber operator-() const;
    CyclotomicNumber& operator+=(const CyclotomicNumber& o);
    CyclotomicNumber& operator-=(const CyclotomicNumber& o);
    CyclotomicNumber& operator*=(const CyclotomicNumber& o);

    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }

    std::size_t hash() const;
    std::string to_string() const;

private:
    friend CyclotomicNumber change_modulus(const CyclotomicNumber&, int);
    friend CyclotomicNumber cyc_conj(const CyclotomicNumber&);
    friend CyclotomicNumber cyc_inv(const CyclotomicNumber&);

    void normalize();
    static CyclotomicNumber reduce_poly(int M, std::vector<mpz_class> poly, const mpz_class& den);

    int M_;
    std::vector<mpz_class> num_;
    mpz_class den_;
};

CyclotomicNumber cyc_add(const CyclotomicNumber& x, const CyclotomicNumber& y);
CyclotomicNumber cyc_mul(const CyclotomicNumber& x, const CyclotomicNumber& y);
CyclotomicNumber cyc_inv(const CyclotomicNumber& x);
CyclotomicNumber cyc_conj(const CyclotomicNumber& x);
CyclotomicNumber change_modulus(const CyclotomicNumber& x, int M2);
// sum of zeta_M^e over the given exponents, in the power basis (integer coefficients)
std::vector<i64> root_sum(const std::vector<i64>& exps, int M);
// reduces sum_k counts[k] zeta_M^k (k < counts.size()) to the power basis
std::vector<mpz_class> reduce_group_ring(const std::vector<mpz_class>& counts, int M);

// n x n matrix over Q(zeta_M); every entry carries the same modulus
class DenseMatrix {
public:
    DenseMatrix() : DenseMatrix(1, 1) {}
    DenseMatrix(int degree, int modulus);

    static DenseMatrix identity(int n, int M = 1);
    static DenseMatrix diagonal(const std::vector<CyclotomicNumber>& d);
    static DenseMatrix from_rows(const std::vector<std::vector<CyclotomicNumber>>& rows);

    int degree() const { return n_; }
    int modulus() const { return M_; }
    const CyclotomicNumber& operator()(int i, int j) const { return a_[i * n_ + j]; }
    void set(int i, int j, const CyclotomicNumber& x);
    DenseMatrix with_modulus(int M2) const;
    bool is_scalar() const;

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b);
    friend bool operator!=(const DenseMatrix& a, const DenseMatrix& b) { return !(a == b); }

    std::size_t hash() const;

private:
    int n_, M_;
    std::vector<CyclotomicNumber> a_;
};

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix mat_inv(const DenseMatrix& a);
CyclotomicNumber mat_trace(const DenseMatrix& a);
DenseMatrix scalar_mul(const CyclotomicNumber& c, const DenseMatrix& a);

}  // namespace monoclass

template <>
struct std::hash<monoclass::CyclotomicNumber> {
    std::size_t operator()(const monoclass::CyclotomicNumber& x) const { return x.hash(); }
};
template <>
struct std::hash<monoclass::DenseMatrix> {
    std::size_t operator()(const monoclass::DenseMatrix& x) const { return x.hash(); }
};
