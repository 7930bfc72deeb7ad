#include "monoclass/numtheory.hpp"

#include <numeric>
#include <stdexcept>

namespace monoclass {

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<i64, int>> out;
    for (i64 d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        int e = 0;
        while (n % d == 0) n /= d, ++e;
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

i64 ipow(i64 b, int e) {
    i64 r = 1;
    while (e-- > 0) r *= b;
    return r;
}

i64 powmod(i64 b, i64 e, i64 m) {
    __int128 r = 1 % m, x = ((b % m) + m) % m;
    while (e > 0) {
        if (e & 1) r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return static_cast<i64>(r);
}

int valuation(i64 n, i64 p) {
    int v = 0;
    while (n != 0 && n % p == 0) n /= p, ++v;
    return v;
}

int euler_phi(int n) {
    int r = n;
    for (auto [q, e] : factorize(n)) r = r / static_cast<int>(q) * static_cast<int>(q - 1);
    return r;
}

int primitive_root(int p) {
    if (!is_prime(p)) throw std::invalid_argument("primitive_root: p must be prime");
    if (p == 2) return 1;
    auto fs = factorize(p - 1);
    for (int u = 2; u < p; ++u) {
        bool ok = true;
        for (auto [q, e] : fs)
            if (powmod(u, (p - 1) / q, p) == 1) { ok = false; break; }
        if (ok) return u;
    }
    throw std::logic_error("primitive_root: none found");
}

int mult_order(i64 q, int p) {
    if (std::gcd(q, static_cast<i64>(p)) != 1) throw std::invalid_argument("mult_order: not a unit");
    int d = 1;
    i64 x = q % p;
    while (x != 1 % p) x = x * q % p, ++d;
    return d;
}

std::vector<i64> divisors(i64 n) {
    std::vector<i64> lo, hi;
    for (i64 d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        lo.push_back(d);
        if (d != n / d) hi.push_back(n / d);
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

i64 factorial(int n) {
    i64 r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

i64 mod(i64 a, i64 m) {
    a %= m;
    return a < 0 ? a + m : a;
}

}  // namespace monoclass
