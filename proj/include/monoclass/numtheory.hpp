#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace monoclass {

using i64 = long long;

bool is_prime(i64 n);
std::vector<std::pair<i64, int>> factorize(i64 n);
i64 ipow(i64 b, int e);
i64 powmod(i64 b, i64 e, i64 m);
int valuation(i64 n, i64 p);
int euler_phi(int n);
// least primitive root mod p; 1 for p = 2
int primitive_root(int p);
int mult_order(i64 q, int p);
std::vector<i64> divisors(i64 n);
i64 factorial(int n);
// non-negative residue
i64 mod(i64 a, i64 m);

}  // namespace monoclass
