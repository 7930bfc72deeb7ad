#include <set>

#include "doctest.h"
#include "monoclass/records.hpp"
#include "monoclass/verifier.hpp"

using namespace monoclass;

namespace {

std::vector<std::string> names(const std::vector<SolvableLabel>& ls) {
    std::vector<std::string> out;
    for (auto& l : ls) out.push_back(label_string(l));
    return out;
}

}  // namespace

TEST_CASE("L lists at small orders") {
    CHECK(names(enumerate_Lstar(3, 27)) == std::vector<std::string>{"L1;i=0;p=3;Y=1,1,0", "L1;i=1;p=3;Y=1,1,0"});
    CHECK(enumerate_Lstar(3, 6).empty());
    CHECK(enumerate_Lstar(3, 10).empty());
    const auto l2 = enumerate_Lstar(2, 8);
    CHECK(l2.size() == 2);
}

TEST_CASE("the two order-27 groups are not isomorphic") {
    const auto ls = enumerate_Lstar(3, 27);
    REQUIRE(ls.size() == 2);
    const ClosedGroup G = closure(assemble_solvable(ls[0])), H = closure(assemble_solvable(ls[1]));
    auto exponent_three = [](const ClosedGroup& X) {
        int n = 0;
        for (int x = 0; x < X.order(); ++x) n += X.group().elem_order(x) <= 3;
        return n;
    };
    CHECK(exponent_three(G) != exponent_three(H));
    CHECK(center_order(G) == 3);
    CHECK(center_order(H) == 3);
}

TEST_CASE("M lists") {
    CHECK(enumerate_Mstar(3, 18).empty());
    const auto m54 = enumerate_Mstar(3, 54);
    CHECK(names(m54) == std::vector<std::string>{"M1;a=1;c=0;p=3;Y=1,1,0", "M1;a=1;c=1;p=3;Y=1,1,0"});
    for (i64 m = 1; m < 200; m += 2) CHECK(enumerate_Mstar(3, m).empty());
    for (auto& g : enumerate_Mstar(5, 100)) CHECK(g.order() == 100);
}

TEST_CASE("assembled closures") {
    SolvableLabel l3;
    l3.p = 3;
    l3.family = SolvableFamily::L3;
    l3.module = parse_module_label("p=3;Y=0,1,0;W[2]=1,0");
    REQUIRE(is_valid(l3));
    CHECK(closure(assemble_solvable(l3)).order() == 36);

    const auto m1 = enumerate_Mstar(3, 54)[0];
    const auto gens = assemble_solvable(m1);
    CHECK(closure(gens).order() == 54);

    SolvableLabel l1 = enumerate_Lstar(3, 27)[1];
    const ClosedGroup G = closure(assemble_solvable(l1));
    CHECK(G.order() == 27);
    CHECK(diagonal_subgroup(G).size() == 9);
}

TEST_CASE("every listed label is valid, distinct and non-scalar") {
    for (int p : {2, 3, 5, 7})
        for (i64 m = 1; m <= 600; ++m) {
            auto L = enumerate_Lstar(p, m);
            auto M = p == 2 ? std::vector<SolvableLabel>{} : enumerate_Mstar(p, m);
            L.insert(L.end(), M.begin(), M.end());
            std::set<std::string> seen;
            for (auto& g : L) {
                CHECK(is_valid(g));
                CHECK(g.order() == m);
                CHECK(!is_scalar(g.module));
                CHECK(seen.insert(label_string(g)).second);
            }
        }
}
