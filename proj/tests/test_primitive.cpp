#include "doctest.h"
#include "monoclass/records.hpp"
#include "monoclass/verifier.hpp"

using namespace monoclass;
using C = CyclotomicNumber;

TEST_CASE("named matrices") {
    DenseMatrix a = prim_a();
    DenseMatrix x = a;
    int k = 1;
    while (!x.is_scalar() && k < 100) x = x * a, ++k;
    CHECK(x.is_scalar());
    CHECK(k == 3);
    CHECK(sqrt5() * sqrt5() == C::rational(5, 1, 5));
    CHECK(sqrt_minus7() * sqrt_minus7() == C::rational(-7, 1, 7));
    const DenseMatrix c = prim_c_prime();
    CHECK(c * c == DenseMatrix::identity(3, c.modulus()));
}

TEST_CASE("enumeration bookkeeping") {
    auto fams = [](int d, i64 m) {
        std::vector<std::string> out;
        for (auto& g : enumerate_prim(d, m)) out.push_back(g.family + ";" + std::to_string(g.n));
        return out;
    };
    CHECK(fams(2, 24) == std::vector<std::string>{"A4_a;2", "A4_b;2"});
    CHECK(fams(2, 8).empty());
    CHECK(fams(3, 108) == std::vector<std::string>{"C4_1;3", "C4_2;3", "C4_3;3"});
    CHECK(fams(3, 1080) ==
          std::vector<std::string>{"C4_1;30", "C4_2;30", "C4_3;30", "Alt5;18", "Q8_1;15", "Q8_2;15", "Alt6;3"});
    CHECK(fams(3, 60) == std::vector<std::string>{"Alt5;1"});
    CHECK(fams(3, 168) == std::vector<std::string>{"PSL27;1"});
}

TEST_CASE("closures, centers and irreducibility for n up to 6") {
    for (int d : {2, 3})
        for (i64 m = 1; m <= 360 * 6; ++m)
            for (auto& g : enumerate_prim(d, m)) {
                if (g.n > 6) continue;
                const ClosedGroup G = closure_dense(assemble_prim_scaled(g));
                CHECK(G.order() == g.order());
                CHECK(center_order(G) == g.n);
                CHECK(character_norm(G) == 1);
                if (g.solvable()) CHECK(!has_noncentral_abelian_normal(G));
            }
}

TEST_CASE("monomial solvable groups have a non-central abelian normal subgroup") {
    for (auto& g : classify(3, 108))
        if (is_monomial(g)) CHECK(has_noncentral_abelian_normal(closure_of(g)));
}

TEST_CASE("scaled and plain generators agree") {
    const PrimLabel g{3, "C4_3", 6};
    const auto scaled = assemble_prim_scaled(g);
    const auto plain = assemble_prim(g);
    REQUIRE(scaled.size() == plain.size());
    for (std::size_t i = 0; i < plain.size(); ++i) CHECK(scaled[i].to_dense() == plain[i]);
}
