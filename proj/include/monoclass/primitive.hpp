#pragma once

#include <string>
#include <vector>

#include "monoclass/cyclotomic.hpp"

namespace monoclass {

// zeta_L^e * core
struct ScaledMatrix {
    int L = 1;
    i64 e = 0;
    DenseMatrix core;

    DenseMatrix to_dense() const;
};

struct PrimLabel {
    int degree = 2;
    std::string family;  // A4_a A4_b S4_a S4_b A5 | C4_1..3 Q8_1..2 SL23_0..2 Alt5 Alt6 PSL27
    int n = 2;           // center order

    i64 order() const;
    bool solvable() const;
    friend bool operator==(const PrimLabel&, const PrimLabel&) = default;
};

// |G/Z(G)| for a family name, 0 if unknown
i64 prim_quotient_order(int degree, const std::string& family);
bool is_valid(const PrimLabel& g);
std::vector<PrimLabel> enumerate_prim(int degree, i64 m);
std::vector<ScaledMatrix> assemble_prim_scaled(const PrimLabel& g);
std::vector<DenseMatrix> assemble_prim(const PrimLabel& g);

// named matrices of the degree-2 and degree-3 lists
DenseMatrix prim_a();
DenseMatrix prim_b();
DenseMatrix prim_c();
DenseMatrix prim_u();
DenseMatrix prim_u_prime();
DenseMatrix prim_a_prime();
DenseMatrix prim_b_prime();
DenseMatrix prim_c_prime();
CyclotomicNumber sqrt5();
CyclotomicNumber sqrt_minus7();

}  // namespace monoclass
