#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "monoclass/cyclotomic.hpp"
#include "monoclass/numtheory.hpp"

namespace monoclass {

// Permutation of {1..p}; stored 0-based, image(i) is i*sigma.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images0);

    static Permutation identity(int p);
    static Permutation from_images(const std::vector<int>& images1);
    static Permutation from_cycles(int p, const std::vector<std::vector<int>>& cycles1);
    static Permutation cycle_s(int p);
    // i -> i*u mod p on residues, p fixed
    static Permutation t_perm(int p);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator[](int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }
    std::vector<int> images1() const;

    bool is_identity() const;
    Permutation inverse() const;
    int order() const;
    int sign() const;
    Permutation pow(i64 k) const;

    // apply *this, then o
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

    std::string cycle_string() const;

private:
    std::vector<int> img_;
};

// diag(zeta_M^e_1, ..., zeta_M^e_p)
class DiagExponents {
public:
    DiagExponents() = default;
    DiagExponents(int modulus, std::vector<i64> exps);

    static DiagExponents zero(int p, int M = 1);
    // b_m = diag(zeta_m, zeta_m^-1, 1, ..., 1)
    static DiagExponents b(int p, int m, int M = 0);
    // z_m = zeta_m * I
    static DiagExponents z(int p, int m, int M = 0);

    int modulus() const { return M_; }
    int degree() const { return static_cast<int>(e_.size()); }
    i64 operator[](int i) const { return e_[i]; }
    const std::vector<i64>& exps() const { return e_; }

    DiagExponents with_modulus(int M2) const;
    bool is_identity() const;
    bool is_scalar() const;
    int order() const;
    i64 sum() const;

    friend DiagExponents operator+(const DiagExponents& a, const DiagExponents& b);
    friend DiagExponents operator-(const DiagExponents& a, const DiagExponents& b);
    DiagExponents operator-() const;
    DiagExponents scaled(i64 c) const;
    friend bool operator==(const DiagExponents& a, const DiagExponents& b);
    friend bool operator!=(const DiagExponents& a, const DiagExponents& b) { return !(a == b); }

private:
    int M_ = 1;
    std::vector<i64> e_;
};

class MonomialElement {
public:
    MonomialElement() = default;
    MonomialElement(DiagExponents d, Permutation perm);
    explicit MonomialElement(const Permutation& perm);
    explicit MonomialElement(const DiagExponents& d);

    static MonomialElement identity(int p, int M = 1);

    const DiagExponents& diag() const { return d_; }
    const Permutation& perm() const { return perm_; }
    int degree() const { return perm_.degree(); }
    int modulus() const { return d_.modulus(); }
    bool is_identity() const { return d_.is_identity() && perm_.is_identity(); }
    bool is_diagonal() const { return perm_.is_identity(); }

    MonomialElement with_modulus(int M2) const;

    friend MonomialElement operator*(const MonomialElement& a, const MonomialElement& b);
    friend bool operator==(const MonomialElement& a, const MonomialElement& b);
    friend bool operator!=(const MonomialElement& a, const MonomialElement& b) { return !(a == b); }

    std::size_t hash() const;

private:
    DiagExponents d_;
    Permutation perm_;
};

MonomialElement mono_mul(const MonomialElement& x, const MonomialElement& y);
MonomialElement mono_inv(const MonomialElement& x);
MonomialElement mono_identity(int p, int M = 1);
i64 mono_order(const MonomialElement& x);
MonomialElement mono_pow(const MonomialElement& x, i64 k);

// conjugate P(sigma)^-1 D(d) P(sigma): entry i moves to position i*sigma
DiagExponents act_perm(const DiagExponents& d, const Permutation& sigma);
DiagExponents gamma(const DiagExponents& d, int p);
DiagExponents chi(const DiagExponents& d, int p);
// f given low to high: sum_i f_i * d^(sigma^i)
DiagExponents apply_group_ring(const DiagExponents& d, const std::vector<i64>& f, const Permutation& sigma);

DenseMatrix to_dense(const MonomialElement& x);
// det = sign(perm) * zeta_M^e
i64 det_exponent(const MonomialElement& x);
int minimal_modulus(const MonomialElement& x);
std::vector<MonomialElement> normalize_modulus(const std::vector<MonomialElement>& xs);
// trace in the power basis of Q(zeta_M) with M = x.modulus()
std::vector<i64> mono_trace(const MonomialElement& x);

}  // namespace monoclass

template <>
struct std::hash<monoclass::MonomialElement> {
    std::size_t operator()(const monoclass::MonomialElement& x) const { return x.hash(); }
};
