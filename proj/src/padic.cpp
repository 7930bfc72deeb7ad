#include "monoclass/padic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace monoclass {

namespace {

i64 mulmod(i64 a, i64 b, i64 m) { return static_cast<i64>(static_cast<__int128>(a) * b % m); }

i64 inv_mod(i64 a, i64 m) {
    i64 g = m, x = 0, x1 = 1, r = mod(a, m);
    while (r != 0) {
        i64 qt = g / r;
        std::tie(g, r) = std::make_pair(r, g - qt * r);
        std::tie(x, x1) = std::make_pair(x1, x - qt * x1);
    }
    if (g != 1) throw std::domain_error("inv_mod: not invertible");
    return mod(x, m);
}

}  // namespace

FlatPoly::FlatPoly(i64 modulus, std::vector<i64> coeffs) : m_(modulus), c_(std::move(coeffs)) {
    if (modulus < 1) throw std::invalid_argument("FlatPoly: modulus must be positive");
    for (auto& x : c_) x = mod(x, m_);
    trim();
}

void FlatPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FlatPoly FlatPoly::monomial(i64 modulus, int deg, i64 c) {
    std::vector<i64> v(deg + 1, 0);
    v[deg] = c;
    return FlatPoly(modulus, std::move(v));
}

FlatPoly FlatPoly::cyclotomic_f(int p, i64 modulus) { return FlatPoly(modulus, std::vector<i64>(p, 1)); }

FlatPoly FlatPoly::reduce(i64 m2) const {
    if (m_ % m2 != 0) throw std::invalid_argument("FlatPoly::reduce: modulus mismatch");
    return FlatPoly(m2, c_);
}

FlatPoly FlatPoly::lift(i64 m2) const { return FlatPoly(m2, c_); }

FlatPoly FlatPoly::scaled(i64 k) const {
    std::vector<i64> v(c_);
    for (auto& x : v) x = mulmod(x, mod(k, m_), m_);
    return FlatPoly(m_, std::move(v));
}

FlatPoly FlatPoly::compose_power(int e) const {
    if (c_.empty()) return *this;
    std::vector<i64> v(static_cast<std::size_t>(degree()) * e + 1, 0);
    for (int i = 0; i <= degree(); ++i) v[static_cast<std::size_t>(i) * e] = c_[i];
    return FlatPoly(m_, std::move(v));
}

FlatPoly operator+(const FlatPoly& a, const FlatPoly& b) {
    if (a.m_ != b.m_) throw std::invalid_argument("FlatPoly: modulus mismatch");
    std::vector<i64> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = (a[static_cast<int>(i)] + b[static_cast<int>(i)]) % a.m_;
    return FlatPoly(a.m_, std::move(v));
}

FlatPoly operator-(const FlatPoly& a, const FlatPoly& b) {
    if (a.m_ != b.m_) throw std::invalid_argument("FlatPoly: modulus mismatch");
    std::vector<i64> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[static_cast<int>(i)] - b[static_cast<int>(i)];
    return FlatPoly(a.m_, std::move(v));
}

FlatPoly operator*(const FlatPoly& a, const FlatPoly& b) {
    if (a.m_ != b.m_) throw std::invalid_argument("FlatPoly: modulus mismatch");
    if (a.is_zero() || b.is_zero()) return FlatPoly(a.m_, {});
    std::vector<i64> v(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = (v[i + j] + mulmod(a.c_[i], b.c_[j], a.m_)) % a.m_;
    return FlatPoly(a.m_, std::move(v));
}

std::string FlatPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0 || c_[i] != 1) os << c_[i];
        if (i > 0) os << "x" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    return os.str();
}

void poly_divmod(const FlatPoly& a, const FlatPoly& b, FlatPoly& quot, FlatPoly& rem) {
    if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
    const i64 m = a.modulus();
    const i64 lead_inv = inv_mod(b.coeffs().back(), m);
    std::vector<i64> r(a.coeffs());
    const int db = b.degree();
    std::vector<i64> qv(std::max(0, a.degree() - db + 1), 0);
    for (int k = a.degree(); k >= db; --k) {
        i64 c = mulmod(r[k], lead_inv, m);
        if (c == 0) continue;
        qv[k - db] = c;
        for (int i = 0; i <= db; ++i) r[k - db + i] = mod(r[k - db + i] - mulmod(c, b[i], m), m);
    }
    quot = FlatPoly(m, std::move(qv));
    r.resize(std::max(0, std::min(static_cast<int>(r.size()), db)));
    rem = FlatPoly(m, std::move(r));
}

FlatPoly poly_mod(const FlatPoly& a, const FlatPoly& b) {
    FlatPoly q, r;
    poly_divmod(a, b, q, r);
    return r;
}

FlatPoly make_monic(const FlatPoly& a) {
    if (a.is_zero()) return a;
    return a.scaled(inv_mod(a.coeffs().back(), a.modulus()));
}

FlatPoly poly_gcd(FlatPoly a, FlatPoly b) {
    while (!b.is_zero()) {
        FlatPoly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

void poly_ext_gcd(const FlatPoly& a, const FlatPoly& b, FlatPoly& g, FlatPoly& s, FlatPoly& t) {
    const i64 m = a.modulus();
    FlatPoly r0 = a, r1 = b, s0(m, {1}), s1(m, {}), t0(m, {}), t1(m, {1});
    while (!r1.is_zero()) {
        FlatPoly qt, r;
        poly_divmod(r0, r1, qt, r);
        FlatPoly s2 = s0 - qt * s1, t2 = t0 - qt * t1;
        r0 = std::move(r1), r1 = std::move(r);
        s0 = std::move(s1), s1 = std::move(s2);
        t0 = std::move(t1), t1 = std::move(t2);
    }
    i64 k = inv_mod(r0.coeffs().back(), m);
    g = r0.scaled(k);
    s = s0.scaled(k);
    t = t0.scaled(k);
}

namespace {

FlatPoly powmod_poly(FlatPoly base, i64 e, const FlatPoly& f) {
    FlatPoly r(f.modulus(), {1});
    base = poly_mod(base, f);
    while (e > 0) {
        if (e & 1) r = poly_mod(r * base, f);
        base = poly_mod(base * base, f);
        e >>= 1;
    }
    return r;
}

// h^(q^i) for the Frobenius orbit
FlatPoly frobenius(const FlatPoly& h, int q, const FlatPoly& f) { return powmod_poly(h, q, f); }

// splits a squarefree product of degree-d irreducibles over F_q
void equal_degree_split(const FlatPoly& F, int d, int q, std::vector<FlatPoly>& out) {
    if (F.degree() == d) {
        out.push_back(make_monic(F));
        return;
    }
    if (F.degree() < d || F.degree() % d != 0) throw std::logic_error("equal_degree_split: bad degree");
    for (i64 k = q;; ++k) {
        std::vector<i64> hv;
        for (i64 x = k; x > 0; x /= q) hv.push_back(x % q);
        if (static_cast<int>(hv.size()) > F.degree()) throw std::logic_error("equal_degree_split: no splitting element");
        FlatPoly h(q, hv);
        FlatPoly w(q, {});
        if (q == 2) {
            FlatPoly cur = poly_mod(h, F);
            w = cur;
            for (int i = 1; i < d; ++i) {
                cur = frobenius(cur, q, F);
                w = w + cur;
            }
        } else {
            FlatPoly norm = poly_mod(h, F), cur = norm;
            for (int i = 1; i < d; ++i) {
                cur = frobenius(cur, q, F);
                norm = poly_mod(norm * cur, F);
            }
            w = powmod_poly(norm, (q - 1) / 2, F) - FlatPoly(q, {1});
        }
        FlatPoly g = poly_gcd(F, w);
        if (g.degree() > 0 && g.degree() < F.degree()) {
            FlatPoly qt, r;
            poly_divmod(F, g, qt, r);
            equal_degree_split(g, d, q, out);
            equal_degree_split(qt, d, q, out);
            return;
        }
    }
}

bool high_first_less(const FlatPoly& a, const FlatPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

}  // namespace

std::vector<FlatPoly> factor_f_mod_q(int p, int q) {
    if (!is_prime(p) || !is_prime(q)) throw std::invalid_argument("factor_f_mod_q: p and q must be prime");
    if (p == q) throw std::invalid_argument("factor_f_mod_q: q must differ from p");
    const int d = mult_order(q, p);
    const int v = (p - 1) / d;
    const FlatPoly fbar = FlatPoly::cyclotomic_f(p, q);
    if (v == 1) return {fbar};
    std::vector<FlatPoly> parts;
    equal_degree_split(fbar, d, q, parts);
    const FlatPoly g1 = *std::min_element(parts.begin(), parts.end(), high_first_less);
    const int u = primitive_root(p);
    std::vector<FlatPoly> out{g1};
    for (int r = 1; r < v; ++r) out.push_back(poly_gcd(out.back().compose_power(u), fbar));
    for (auto& g : out)
        if (g.degree() != d) throw std::logic_error("factor_f_mod_q: canonical ordering failed");
    return out;
}

std::pair<FlatPoly, FlatPoly> hensel_step(const FlatPoly& f, const FlatPoly& g, const FlatPoly& h, const FlatPoly& a,
                                          const FlatPoly& b, int q, int n) {
    const i64 qn = ipow(q, n);
    const i64 qn1 = qn * q;
    if (!g.is_monic() || !h.is_monic()) throw std::invalid_argument("hensel_step: factors must be monic");
    if ((g * h).reduce(qn) != f.reduce(qn)) throw std::invalid_argument("hensel_step: f != g*h mod q^n");
    if ((a.reduce(q) * g.reduce(q) + b.reduce(q) * h.reduce(q)) != FlatPoly(q, {1}))
        throw std::invalid_argument("hensel_step: a*g + b*h != 1 mod q");
    // c_n = (f - g h) / q^n over the integers
    const FlatPoly G = g.lift(qn1), H = h.lift(qn1);
    const FlatPoly diff = f.lift(qn1) - G * H;
    std::vector<i64> cv;
    for (i64 x : diff.coeffs()) cv.push_back(x / qn);
    const FlatPoly c(q, cv);
    if (c.is_zero()) return {g.lift(qn1), h.lift(qn1)};
    FlatPoly w, vq;
    poly_divmod(b.reduce(q) * c, g.reduce(q), w, vq);
    const FlatPoly u = a.reduce(q) * c + w * h.reduce(q);
    FlatPoly g2 = G + vq.lift(qn1).scaled(qn);
    FlatPoly h2 = H + u.lift(qn1).scaled(qn);
    return {g2, h2};
}

FactorSystem build_factor_system(int p, int q, int n) {
    if (n < 1) throw std::invalid_argument("build_factor_system: precision must be positive");
    FactorSystem fs;
    fs.p = p, fs.q = q, fs.n = n;
    fs.d = mult_order(q, p);
    fs.v = (p - 1) / fs.d;
    const auto gs = factor_f_mod_q(p, q);
    const i64 qn = ipow(q, n);
    for (int r = 0; r < fs.v; ++r) {
        if (fs.v == 1) {
            fs.factors.push_back(FlatPoly::cyclotomic_f(p, qn));
            break;
        }
        FlatPoly g = gs[r], h(q, {1});
        for (int j = 0; j < fs.v; ++j)
            if (j != r) h = h * gs[j];
        FlatPoly one, a, b;
        poly_ext_gcd(g, h, one, a, b);
        for (int k = 1; k < n; ++k) std::tie(g, h) = hensel_step(FlatPoly::cyclotomic_f(p, ipow(q, k + 1)), g, h, a, b, q, k);
        fs.factors.push_back(g.reduce(qn));
    }
    for (int r = 0; r < fs.v; ++r) {
        FlatPoly c(qn, {1});
        for (int j = 0; j < fs.v; ++j)
            if (j != r) c = c * fs.factors[j];
        fs.cofactors.push_back(c);
    }
    return fs;
}

const FactorSystem& factor_system(int p, int q, int n) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::unique_ptr<FactorSystem>> cache;
    {
        std::lock_guard lk(mu);
        auto it = cache.find({p, q, n});
        if (it != cache.end()) return *it->second;
    }
    auto fs = std::make_unique<FactorSystem>(build_factor_system(p, q, n));
    std::lock_guard lk(mu);
    auto [it, inserted] = cache.emplace(std::make_tuple(p, q, n), std::move(fs));
    return *it->second;
}

}  // namespace monoclass
