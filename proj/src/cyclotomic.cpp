#include "monoclass/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace monoclass {

namespace {

IntPoly exact_divide(IntPoly a, const IntPoly& b) {
    // b monic
    int db = static_cast<int>(b.size()) - 1;
    int da = static_cast<int>(a.size()) - 1;
    IntPoly q(da - db + 1, 0);
    for (int d = da; d >= db; --d) {
        i64 c = a[d];
        if (c == 0) continue;
        q[d - db] = c;
        for (int i = 0; i <= db; ++i) a[d - db + i] -= c * b[i];
    }
    for (int i = 0; i < db; ++i)
        if (a[i] != 0) throw std::logic_error("cyclotomic_poly: inexact division");
    return q;
}

std::mutex poly_mutex;
std::map<int, IntPoly> poly_cache;

using QPoly = std::vector<mpq_class>;

void trim(QPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a = q*b + r over Q
void qdivmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    r = a;
    trim(r);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
    while (r.size() >= b.size() && !r.empty()) {
        std::size_t shift = r.size() - b.size();
        mpq_class c = r.back() / b.back();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
        r.pop_back();
        trim(r);
    }
}

QPoly qsub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
    QPoly out(std::max(a.size(), q.size() + b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
    trim(out);
    return out;
}

}  // namespace

IntPoly cyclotomic_poly(int M) {
    if (M < 1) throw std::invalid_argument("cyclotomic_poly: M must be positive");
    {
        std::lock_guard lk(poly_mutex);
        auto it = poly_cache.find(M);
        if (it != poly_cache.end()) return it->second;
    }
    IntPoly f(M + 1, 0);
    f[0] = -1;
    f[M] = 1;
    for (i64 d : divisors(M))
        if (d < M) f = exact_divide(f, cyclotomic_poly(static_cast<int>(d)));
    std::lock_guard lk(poly_mutex);
    poly_cache.emplace(M, f);
    return f;
}

CyclotomicNumber::CyclotomicNumber(int modulus) : M_(modulus), num_(euler_phi(modulus)), den_(1) {
    if (modulus < 1) throw std::invalid_argument("CyclotomicNumber: modulus must be positive");
}

CyclotomicNumber::CyclotomicNumber(const Rational& r, int modulus) : CyclotomicNumber(modulus) {
    num_[0] = r.get_num();
    den_ = r.get_den();
}

CyclotomicNumber CyclotomicNumber::rational(i64 num, i64 den, int M) {
    if (den == 0) throw DivisionByZero("zero denominator");
    Rational r(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
    r.canonicalize();
    return CyclotomicNumber(r, M);
}

CyclotomicNumber CyclotomicNumber::zeta(int M, i64 k) {
    std::vector<mpz_class> poly(M, 0);
    poly[mod(k, M)] = 1;
    return reduce_poly(M, std::move(poly), 1);
}

CyclotomicNumber CyclotomicNumber::from_coeffs(int M, const std::vector<Rational>& c) {
    mpz_class den = 1;
    for (auto& x : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> poly(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) poly[i] = c[i].get_num() * (den / c[i].get_den());
    return reduce_poly(M, std::move(poly), den);
}

CyclotomicNumber CyclotomicNumber::reduce_poly(int M, std::vector<mpz_class> poly, const mpz_class& den) {
    CyclotomicNumber out(M);
    out.num_ = reduce_group_ring(poly, M);
    out.den_ = den;
    out.normalize();
    return out;
}

std::vector<mpz_class> reduce_group_ring(const std::vector<mpz_class>& counts, int M) {
    const IntPoly phi = cyclotomic_poly(M);
    const int d = static_cast<int>(phi.size()) - 1;
    std::vector<mpz_class> a = counts;
    if (static_cast<int>(a.size()) < d) a.resize(d, 0);
    for (int k = static_cast<int>(a.size()) - 1; k >= d; --k) {
        if (a[k] == 0) continue;
        mpz_class c = a[k];
        for (int i = 0; i <= d; ++i)
            if (phi[i] != 0) a[k - d + i] -= c * static_cast<long>(phi[i]);
    }
    a.resize(d);
    return a;
}

std::vector<i64> root_sum(const std::vector<i64>& exps, int M) {
    std::vector<mpz_class> counts(M, 0);
    for (i64 e : exps) counts[mod(e, M)] += 1;
    auto red = reduce_group_ring(counts, M);
    std::vector<i64> out(red.size());
    for (std::size_t i = 0; i < red.size(); ++i) out[i] = red[i].get_si();
    return out;
}

void CyclotomicNumber::normalize() {
    if (den_ < 0) {
        den_ = -den_;
        for (auto& x : num_) x = -x;
    }
    mpz_class g = den_;
    for (auto& x : num_) {
        if (g == 1) break;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    if (g != 1) {
        for (auto& x : num_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

Rational CyclotomicNumber::coeff(int i) const {
    Rational r(num_.at(i), den_);
    r.canonicalize();
    return r;
}

std::vector<Rational> CyclotomicNumber::coeffs() const {
    std::vector<Rational> out;
    for (int i = 0; i < dimension(); ++i) out.push_back(coeff(i));
    return out;
}

bool CyclotomicNumber::is_zero() const {
    for (auto& x : num_)
        if (x != 0) return false;
    return true;
}

bool CyclotomicNumber::is_rational() const {
    for (int i = 1; i < dimension(); ++i)
        if (num_[i] != 0) return false;
    return true;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber r = *this;
    for (auto& x : r.num_) x = -x;
    return r;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
    if (o.M_ != M_) {
        int L = std::lcm(M_, o.M_);
        *this = change_modulus(*this, L);
        return *this += change_modulus(o, L);
    }
    if (den_ == o.den_) {
        for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += o.num_[i];
    } else {
        for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * o.den_ + o.num_[i] * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) { return *this += -o; }

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
    if (o.M_ != M_) {
        int L = std::lcm(M_, o.M_);
        *this = change_modulus(*this, L);
        return *this *= change_modulus(o, L);
    }
    const int d = dimension();
    if (o.is_rational()) {
        for (auto& x : num_) x *= o.num_[0];
        den_ *= o.den_;
        normalize();
        return *this;
    }
    std::vector<mpz_class> prod(2 * d - 1, 0);
    for (int i = 0; i < d; ++i) {
        if (num_[i] == 0) continue;
        for (int j = 0; j < d; ++j)
            if (o.num_[j] != 0) mpz_addmul(prod[i + j].get_mpz_t(), num_[i].get_mpz_t(), o.num_[j].get_mpz_t());
    }
    *this = reduce_poly(M_, std::move(prod), den_ * o.den_);
    return *this;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.M_ != b.M_) {
        int L = std::lcm(a.M_, b.M_);
        return change_modulus(a, L) == change_modulus(b, L);
    }
    return a.den_ == b.den_ && a.num_ == b.num_;
}

std::size_t CyclotomicNumber::hash() const {
    std::size_t h = static_cast<std::size_t>(M_) * 0x9e3779b97f4a7c15ULL;
    auto mix = [&h](long v) { h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    for (auto& x : num_) mix(mpz_get_si(x.get_mpz_t()));
    mix(mpz_get_si(den_.get_mpz_t()));
    return h;
}

std::string CyclotomicNumber::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < dimension(); ++i) {
        if (num_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << coeff(i).get_str();
        if (i > 0) os << "*z" << M_ << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

CyclotomicNumber cyc_add(const CyclotomicNumber& x, const CyclotomicNumber& y) { return x + y; }
CyclotomicNumber cyc_mul(const CyclotomicNumber& x, const CyclotomicNumber& y) { return x * y; }

CyclotomicNumber change_modulus(const CyclotomicNumber& x, int M2) {
    if (M2 % x.M_ != 0) throw std::invalid_argument("change_modulus: M does not divide M'");
    if (M2 == x.M_) return x;
    const int r = M2 / x.M_;
    std::vector<mpz_class> poly(static_cast<std::size_t>(r) * x.dimension(), 0);
    for (int i = 0; i < x.dimension(); ++i) poly[static_cast<std::size_t>(r) * i] = x.num_[i];
    return CyclotomicNumber::reduce_poly(M2, std::move(poly), x.den_);
}

CyclotomicNumber cyc_conj(const CyclotomicNumber& x) {
    std::vector<mpz_class> poly(x.M_, 0);
    for (int i = 0; i < x.dimension(); ++i) poly[mod(-i, x.M_)] += x.num_[i];
    return CyclotomicNumber::reduce_poly(x.M_, std::move(poly), x.den_);
}

CyclotomicNumber cyc_inv(const CyclotomicNumber& x) {
    if (x.is_zero()) throw DivisionByZero("cyc_inv: zero has no inverse");
    const int M = x.M_;
    IntPoly phi = cyclotomic_poly(M);
    QPoly f, a;
    for (i64 c : phi) f.emplace_back(static_cast<long>(c));
    for (auto& c : x.num_) a.emplace_back(c);
    trim(a);
    // extended Euclid: s*a + t*f = g, track s only
    QPoly r0 = f, r1 = a, s0, s1{1};
    while (!r1.empty() && r1.size() > 1) {
        QPoly q, r;
        qdivmod(r0, r1, q, r);
        QPoly s2 = qsub_mul(s0, q, s1);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) throw std::logic_error("cyc_inv: non-invertible element in a field");
    // s1 * a == r1[0] mod f; the stored value is a/den
    mpq_class scale = mpq_class(x.den_) / r1[0];
    std::vector<Rational> c(s1.size());
    for (std::size_t i = 0; i < s1.size(); ++i) c[i] = s1[i] * scale;
    return CyclotomicNumber::from_coeffs(M, c);
}

DenseMatrix::DenseMatrix(int degree, int modulus)
    : n_(degree), M_(modulus), a_(static_cast<std::size_t>(degree) * degree, CyclotomicNumber(modulus)) {
    if (degree < 1) throw std::invalid_argument("DenseMatrix: degree must be positive");
}

DenseMatrix DenseMatrix::identity(int n, int M) {
    DenseMatrix I(n, M);
    for (int i = 0; i < n; ++i) I.a_[i * n + i] = CyclotomicNumber::one(M);
    return I;
}

DenseMatrix DenseMatrix::diagonal(const std::vector<CyclotomicNumber>& d) {
    int M = 1;
    for (auto& x : d) M = std::lcm(M, x.modulus());
    DenseMatrix D(static_cast<int>(d.size()), M);
    for (std::size_t i = 0; i < d.size(); ++i) D.set(static_cast<int>(i), static_cast<int>(i), d[i]);
    return D;
}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<CyclotomicNumber>>& rows) {
    const int n = static_cast<int>(rows.size());
    int M = 1;
    for (auto& r : rows) {
        if (static_cast<int>(r.size()) != n) throw std::invalid_argument("DenseMatrix: not square");
        for (auto& x : r) M = std::lcm(M, x.modulus());
    }
    DenseMatrix A(n, M);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A.set(i, j, rows[i][j]);
    return A;
}

void DenseMatrix::set(int i, int j, const CyclotomicNumber& x) {
    if (M_ % x.modulus() != 0) *this = with_modulus(std::lcm(M_, x.modulus()));
    a_[i * n_ + j] = change_modulus(x, M_);
}

DenseMatrix DenseMatrix::with_modulus(int M2) const {
    DenseMatrix B(n_, M2);
    for (std::size_t k = 0; k < a_.size(); ++k) B.a_[k] = change_modulus(a_[k], M2);
    return B;
}

bool DenseMatrix::is_scalar() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (i != j && !(*this)(i, j).is_zero()) return false;
            if (i == j && (*this)(i, i) != (*this)(0, 0)) return false;
        }
    return true;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("mat_mul: degree mismatch");
    if (a.M_ != b.M_) {
        int L = std::lcm(a.M_, b.M_);
        return a.with_modulus(L) * b.with_modulus(L);
    }
    const int n = a.n_;
    DenseMatrix c(n, a.M_);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            CyclotomicNumber s(a.M_);
            for (int k = 0; k < n; ++k) {
                const auto& x = a(i, k);
                const auto& y = b(k, j);
                if (x.is_zero() || y.is_zero()) continue;
                s += x * y;
            }
            c.a_[i * n + j] = std::move(s);
        }
    return c;
}

bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.n_ != b.n_) return false;
    if (a.M_ != b.M_) {
        int L = std::lcm(a.M_, b.M_);
        return a.with_modulus(L).a_ == b.with_modulus(L).a_;
    }
    return a.a_ == b.a_;
}

std::size_t DenseMatrix::hash() const {
    std::size_t h = static_cast<std::size_t>(n_);
    for (auto& x : a_) h = h * 1000003u ^ x.hash();
    return h;
}

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b) { return a * b; }

DenseMatrix mat_inv(const DenseMatrix& a) {
    const int n = a.degree();
    const int M = a.modulus();
    std::vector<std::vector<CyclotomicNumber>> m(n, std::vector<CyclotomicNumber>(2 * n, CyclotomicNumber(M)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = a(i, j);
        m[i][n + i] = CyclotomicNumber::one(M);
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!m[r][col].is_zero()) { piv = r; break; }
        if (piv < 0) throw DivisionByZero("mat_inv: singular matrix");
        std::swap(m[piv], m[col]);
        CyclotomicNumber inv = cyc_inv(m[col][col]);
        for (auto& x : m[col]) x = x * inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            CyclotomicNumber f = m[r][col];
            for (int j = 0; j < 2 * n; ++j)
                if (!m[col][j].is_zero()) m[r][j] -= f * m[col][j];
        }
    }
    DenseMatrix out(n, M);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.set(i, j, m[i][n + j]);
    return out;
}

CyclotomicNumber mat_trace(const DenseMatrix& a) {
    CyclotomicNumber s(a.modulus());
    for (int i = 0; i < a.degree(); ++i) s += a(i, i);
    return s;
}

DenseMatrix scalar_mul(const CyclotomicNumber& c, const DenseMatrix& a) {
    const int L = std::lcm(c.modulus(), a.modulus());
    DenseMatrix b = a.with_modulus(L);
    CyclotomicNumber cc = change_modulus(c, L);
    DenseMatrix out(a.degree(), L);
    for (int i = 0; i < a.degree(); ++i)
        for (int j = 0; j < a.degree(); ++j) out.set(i, j, cc * b(i, j));
    return out;
}

}  // namespace monoclass
