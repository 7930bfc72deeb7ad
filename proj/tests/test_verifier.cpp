#include <cstdlib>

#include "doctest.h"
#include "monoclass/audit.hpp"

using namespace monoclass;

namespace {

MonomialElement S(int p) { return MonomialElement(Permutation::cycle_s(p)); }

std::vector<MonomialElement> with_s(int p, const std::vector<DiagExponents>& ds) {
    std::vector<MonomialElement> g{S(p)};
    for (auto& d : ds) g.emplace_back(d);
    return g;
}

ModuleLabel module(const std::string& s) { return parse_module_label(s); }

}  // namespace

TEST_CASE("closure basics") {
    CHECK(closure({S(5)}).order() == 5);
    CHECK_THROWS_AS(closure({S(7)}, 3), BudgetExceeded);
    setenv("MONOCLASS_BUDGET", "7", 1);
    CHECK(closure_budget(false) == 7);
    CHECK(closure_budget(true) == 7);
    unsetenv("MONOCLASS_BUDGET");
    CHECK(closure_budget(false) == 1000000);
    CHECK(closure_budget(true) == 10000);
}

TEST_CASE("diagonal subgroup and permutation part") {
    const ClosedGroup W = closure({S(5), MonomialElement(perm_constant(5, NSFamily::U1)) * MonomialElement(twist_c(2))});
    CHECK(diagonal_subgroup(W).size() == 81);
    CHECK(permutation_part(W).size() == 60);

    const ClosedGroup Z = closure({MonomialElement(DiagExponents::z(2, 4))});
    CHECK(diagonal_subgroup(Z).size() == 4);
    CHECK(permutation_part(Z).size() == 1);
    CHECK(character_norm(Z) == 4);

    const ClosedGroup L = closure_of(enumerate_Lstar(3, 27)[0]);
    CHECK(diagonal_subgroup(L).size() == 9);
    CHECK(permutation_part(L).size() == 3);
}

TEST_CASE("character norms") {
    const ClosedGroup A5 = closure({S(5), MonomialElement(Permutation::from_cycles(5, {{1, 2, 3}}))});
    CHECK(A5.order() == 60);
    CHECK(character_norm(A5) == 2);
    const ClosedGroup U = closure_of(enumerate_ns(5, 60)[0]);
    CHECK(character_norm(U) == 1);
    CHECK(is_irreducible_fast(U));
}

TEST_CASE("irreducibility predicate") {
    const ClosedGroup stz = closure({S(3), MonomialElement(Permutation::t_perm(3)), MonomialElement(DiagExponents::z(3, 4))});
    CHECK(!is_irreducible_fast(stz));
    CHECK(character_norm(stz) > 1);
    for (i64 m = 3; m <= 300; m += 3)
        for (auto& g : classify(3, m)) {
            if (!is_monomial(g)) continue;
            const ClosedGroup G = closure_of(g);
            CHECK(is_irreducible_fast(G));
            CHECK(character_norm(G) == 1);
            CHECK(static_cast<i64>(diagonal_subgroup(G).size() * permutation_part(G).size()) == G.order());
        }
    // reducible solvable samples: scalar diagonal with cyclic or metacyclic permutation part
    for (int k = 1; k <= 4; ++k) {
        const ClosedGroup G = closure({S(5), MonomialElement(DiagExponents::z(5, k))});
        CHECK(!is_irreducible_fast(G));
        CHECK(character_norm(G) != 1);
    }
}

TEST_CASE("conjugacy search") {
    const auto L = enumerate_Lstar(3, 27);
    const ClosedGroup G = closure_of(L[0]), H = closure_of(L[1]);
    auto c = conjugacy_search(G, G);
    REQUIRE(c.has_value());
    CHECK(!conjugacy_search(G, H).has_value());
    CHECK(!gl_equivalent(G, H));
    CHECK(gl_equivalent(G, G));

    const ClosedGroup A = closure(with_s(5, module_generators(module("p=5;Y=1,1,1"))));
    const ClosedGroup B = closure(with_s(5, module_generators(module("p=5;Y=1,1,2"))));
    const auto w = conjugacy_search(A, B, 25);
    REQUIRE(w.has_value());
    const Permutation t = Permutation::t_perm(5);
    bool affine_t = false;
    for (int k = 0; k < 5; ++k) affine_t = affine_t || w->perm() == t * Permutation::cycle_s(5).pow(k);
    CHECK(affine_t);
    const MonomialElement wi = mono_inv(*w);
    for (auto& g : A.generators()) CHECK(B.index_of(wi * g.with_modulus(w->modulus()) * *w) >= 0);

    CHECK_THROWS_AS(conjugacy_search(A, B, 0, 10), BudgetExceeded);
}

TEST_CASE("fingerprints") {
    const auto L = enumerate_Lstar(3, 27);
    const ClosedGroup G = closure_of(L[0]), H = closure_of(L[1]);
    CHECK(fingerprint(G, 9) == fingerprint(G, 9));
    CHECK(fingerprint(G, 9) != fingerprint(H, 9));
}

TEST_CASE("oracle at tiny moduli") {
    const auto two = oracle_enumerate(2, 2);
    REQUIRE(two.size() == 1);
    CHECK(two[0].order() == 8);
    for (auto [p, M] : std::vector<std::pair<int, int>>{{2, 4}, {3, 3}, {3, 6}}) {
        const OracleComparison r = oracle_compare(p, M);
        CHECK(r.ok());
        for (auto& [m, c] : r.counts) CHECK(c.first == c.second);
    }
    CHECK_THROWS_AS(oracle_enumerate(5, 12), BudgetExceeded);
}

TEST_CASE("audit") {
    AuditOptions fast;
    fast.closures = false;
    fast.pairs = false;
    CHECK(audit(3, 2000, fast).total == 2229);
    CHECK(audit(5, 2000, fast).total == 373);
    const AuditReport r = audit(5, 360);
    CHECK(r.ok());
    const auto j = to_json(r);
    CHECK(j["ok"] == true);
    CHECK(j["orders"][0].contains("family_counts"));
}
