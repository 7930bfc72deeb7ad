#include "monoclass/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace monoclass {

Permutation::Permutation(std::vector<int> images0) : img_(std::move(images0)) {
    std::vector<char> seen(img_.size(), 0);
    for (int x : img_) {
        if (x < 0 || x >= degree() || seen[x]) throw std::invalid_argument("Permutation: not a bijection");
        seen[x] = 1;
    }
}

Permutation Permutation::identity(int p) {
    std::vector<int> v(p);
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
}

Permutation Permutation::from_images(const std::vector<int>& images1) {
    std::vector<int> v;
    for (int x : images1) v.push_back(x - 1);
    return Permutation(std::move(v));
}

Permutation Permutation::from_cycles(int p, const std::vector<std::vector<int>>& cycles1) {
    std::vector<int> v(p);
    std::iota(v.begin(), v.end(), 0);
    for (auto& c : cycles1)
        for (std::size_t i = 0; i < c.size(); ++i) {
            int a = c[i], b = c[(i + 1) % c.size()];
            if (a < 1 || a > p || b < 1 || b > p) throw std::invalid_argument("from_cycles: point out of range");
            v[a - 1] = b - 1;
        }
    return Permutation(std::move(v));
}

Permutation Permutation::cycle_s(int p) {
    std::vector<int> v(p);
    for (int i = 0; i < p; ++i) v[i] = (i + 1) % p;
    return Permutation(std::move(v));
}

Permutation Permutation::t_perm(int p) {
    const int u = primitive_root(p);
    std::vector<int> v(p);
    for (int i = 1; i <= p; ++i) {
        int img = static_cast<int>((static_cast<i64>(i) * u) % p);
        v[i - 1] = (img == 0 ? p : img) - 1;
    }
    return Permutation(std::move(v));
}

std::vector<int> Permutation::images1() const {
    std::vector<int> v;
    for (int x : img_) v.push_back(x + 1);
    return v;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> v(img_.size());
    for (int i = 0; i < degree(); ++i) v[img_[i]] = i;
    return Permutation(std::move(v));
}

int Permutation::order() const {
    int o = 1;
    std::vector<char> seen(img_.size(), 0);
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = img_[j]) seen[j] = 1, ++len;
        o = std::lcm(o, len);
    }
    return o;
}

int Permutation::sign() const {
    int s = 1;
    std::vector<char> seen(img_.size(), 0);
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = img_[j]) seen[j] = 1, ++len;
        if (len % 2 == 0) s = -s;
    }
    return s;
}

Permutation Permutation::pow(i64 k) const {
    k = mod(k, order());
    Permutation r = identity(degree());
    for (i64 i = 0; i < k; ++i) r = r * *this;
    return r;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("Permutation: degree mismatch");
    std::vector<int> v(a.img_.size());
    for (int i = 0; i < a.degree(); ++i) v[i] = b.img_[a.img_[i]];
    Permutation r;
    r.img_ = std::move(v);
    return r;
}

std::string Permutation::cycle_string() const {
    std::ostringstream os;
    std::vector<char> seen(img_.size(), 0);
    for (int i = 0; i < degree(); ++i) {
        if (seen[i] || img_[i] == i) continue;
        os << "(";
        for (int j = i; !seen[j]; j = img_[j]) {
            seen[j] = 1;
            os << j + 1 << (seen[img_[j]] ? "" : ",");
        }
        os << ")";
    }
    std::string s = os.str();
    return s.empty() ? "()" : s;
}

DiagExponents::DiagExponents(int modulus, std::vector<i64> exps) : M_(modulus), e_(std::move(exps)) {
    if (modulus < 1) throw std::invalid_argument("DiagExponents: modulus must be positive");
    for (auto& x : e_) x = mod(x, M_);
}

DiagExponents DiagExponents::zero(int p, int M) { return DiagExponents(M, std::vector<i64>(p, 0)); }

DiagExponents DiagExponents::b(int p, int m, int M) {
    if (M == 0) M = m;
    if (M % m != 0) throw std::invalid_argument("b_m: modulus too small");
    std::vector<i64> e(p, 0);
    e[0] += M / m;
    e[1 % p] -= M / m;
    return DiagExponents(M, std::move(e));
}

DiagExponents DiagExponents::z(int p, int m, int M) {
    if (M == 0) M = m;
    if (M % m != 0) throw std::invalid_argument("z_m: modulus too small");
    return DiagExponents(M, std::vector<i64>(p, M / m));
}

DiagExponents DiagExponents::with_modulus(int M2) const {
    if (M2 == M_) return *this;
    if (M2 % M_ != 0) throw std::invalid_argument("DiagExponents: modulus does not divide target");
    std::vector<i64> e(e_);
    for (auto& x : e) x *= M2 / M_;
    return DiagExponents(M2, std::move(e));
}

bool DiagExponents::is_identity() const {
    return std::all_of(e_.begin(), e_.end(), [](i64 x) { return x == 0; });
}

bool DiagExponents::is_scalar() const {
    return std::all_of(e_.begin(), e_.end(), [this](i64 x) { return x == e_[0]; });
}

int DiagExponents::order() const {
    i64 g = M_;
    for (i64 x : e_) g = std::gcd(g, x);
    return static_cast<int>(M_ / g);
}

i64 DiagExponents::sum() const {
    i64 s = 0;
    for (i64 x : e_) s += x;
    return mod(s, M_);
}

DiagExponents operator+(const DiagExponents& a, const DiagExponents& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("DiagExponents: degree mismatch");
    if (a.M_ != b.M_) {
        int L = std::lcm(a.M_, b.M_);
        return a.with_modulus(L) + b.with_modulus(L);
    }
    std::vector<i64> e(a.e_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.e_[i];
    return DiagExponents(a.M_, std::move(e));
}

DiagExponents DiagExponents::operator-() const { return scaled(-1); }
DiagExponents operator-(const DiagExponents& a, const DiagExponents& b) { return a + (-b); }

DiagExponents DiagExponents::scaled(i64 c) const {
    std::vector<i64> e(e_);
    for (auto& x : e) x = mod(x * mod(c, M_), M_);
    return DiagExponents(M_, std::move(e));
}

bool operator==(const DiagExponents& a, const DiagExponents& b) {
    if (a.M_ != b.M_) {
        int L = std::lcm(a.M_, b.M_);
        return a.with_modulus(L).e_ == b.with_modulus(L).e_;
    }
    return a.e_ == b.e_;
}

MonomialElement::MonomialElement(DiagExponents d, Permutation perm) : d_(std::move(d)), perm_(std::move(perm)) {
    if (d_.degree() != perm_.degree()) throw std::invalid_argument("MonomialElement: degree mismatch");
}

MonomialElement::MonomialElement(const Permutation& perm) : MonomialElement(DiagExponents::zero(perm.degree()), perm) {}

MonomialElement::MonomialElement(const DiagExponents& d) : MonomialElement(d, Permutation::identity(d.degree())) {}

MonomialElement MonomialElement::identity(int p, int M) {
    return MonomialElement(DiagExponents::zero(p, M), Permutation::identity(p));
}

MonomialElement MonomialElement::with_modulus(int M2) const { return MonomialElement(d_.with_modulus(M2), perm_); }

MonomialElement operator*(const MonomialElement& a, const MonomialElement& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("mono_mul: degree mismatch");
    if (a.modulus() != b.modulus()) {
        int L = std::lcm(a.modulus(), b.modulus());
        return a.with_modulus(L) * b.with_modulus(L);
    }
    const int p = a.degree();
    std::vector<i64> e(p);
    for (int i = 0; i < p; ++i) e[i] = a.d_[i] + b.d_[a.perm_[i]];
    return MonomialElement(DiagExponents(a.modulus(), std::move(e)), a.perm_ * b.perm_);
}

bool operator==(const MonomialElement& a, const MonomialElement& b) { return a.perm_ == b.perm_ && a.d_ == b.d_; }

std::size_t MonomialElement::hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (int i = 0; i < degree(); ++i) {
        h = (h ^ static_cast<std::size_t>(perm_[i])) * 1099511628211ULL;
        h = (h ^ static_cast<std::size_t>(d_[i])) * 1099511628211ULL;
    }
    return h;
}

MonomialElement mono_mul(const MonomialElement& x, const MonomialElement& y) { return x * y; }

MonomialElement mono_inv(const MonomialElement& x) {
    // (a, s)^-1 = (-a o s^-1, s^-1)
    const Permutation si = x.perm().inverse();
    const int p = x.degree();
    std::vector<i64> e(p);
    for (int i = 0; i < p; ++i) e[i] = -x.diag()[si[i]];
    return MonomialElement(DiagExponents(x.modulus(), std::move(e)), si);
}

MonomialElement mono_identity(int p, int M) { return MonomialElement::identity(p, M); }

i64 mono_order(const MonomialElement& x) {
    // x^k = (a + a^s + ... , s^k); with k = ord(s) the diagonal part is fixed
    const i64 k = x.perm().order();
    MonomialElement y = mono_pow(x, k);
    return k * y.diag().order();
}

MonomialElement mono_pow(const MonomialElement& x, i64 k) {
    MonomialElement base = k < 0 ? mono_inv(x) : x;
    if (k < 0) k = -k;
    MonomialElement r = MonomialElement::identity(x.degree(), x.modulus());
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

DiagExponents act_perm(const DiagExponents& d, const Permutation& sigma) {
    if (d.degree() != sigma.degree()) throw std::invalid_argument("act_perm: degree mismatch");
    std::vector<i64> e(d.degree());
    for (int i = 0; i < d.degree(); ++i) e[sigma[i]] = d[i];
    return DiagExponents(d.modulus(), std::move(e));
}

DiagExponents gamma(const DiagExponents& d, int p) {
    if (d.degree() != p) throw std::invalid_argument("gamma: degree mismatch");
    return d - act_perm(d, Permutation::cycle_s(p));
}

DiagExponents chi(const DiagExponents& d, int p) {
    if (d.degree() != p) throw std::invalid_argument("chi: degree mismatch");
    return DiagExponents(d.modulus(), std::vector<i64>(p, d.sum()));
}

DiagExponents apply_group_ring(const DiagExponents& d, const std::vector<i64>& f, const Permutation& sigma) {
    DiagExponents acc = DiagExponents::zero(d.degree(), d.modulus());
    DiagExponents cur = d;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] != 0) acc = acc + cur.scaled(f[i]);
        cur = act_perm(cur, sigma);
    }
    return acc;
}

DenseMatrix to_dense(const MonomialElement& x) {
    const int p = x.degree();
    const int M = x.modulus();
    DenseMatrix A(p, M);
    for (int i = 0; i < p; ++i) A.set(i, x.perm()[i], CyclotomicNumber::zeta(M, x.diag()[i]));
    return A;
}

i64 det_exponent(const MonomialElement& x) { return x.diag().sum(); }

int minimal_modulus(const MonomialElement& x) {
    i64 g = x.modulus();
    for (i64 e : x.diag().exps()) g = std::gcd(g, e);
    return static_cast<int>(x.modulus() / g);
}

std::vector<MonomialElement> normalize_modulus(const std::vector<MonomialElement>& xs) {
    int L = 1, big = 1;
    for (auto& x : xs) L = std::lcm(L, minimal_modulus(x)), big = std::lcm(big, x.modulus());
    std::vector<MonomialElement> out;
    for (auto& x : xs) {
        std::vector<i64> e(x.diag().with_modulus(big).exps());
        for (auto& v : e) v /= big / L;
        out.emplace_back(DiagExponents(L, std::move(e)), x.perm());
    }
    return out;
}

std::vector<i64> mono_trace(const MonomialElement& x) {
    std::vector<i64> fixed;
    for (int i = 0; i < x.degree(); ++i)
        if (x.perm()[i] == i) fixed.push_back(x.diag()[i]);
    return root_sum(fixed, x.modulus());
}

}  // namespace monoclass
