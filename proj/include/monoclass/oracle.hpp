#pragma once

#include <map>
#include <string>
#include <vector>

#include "monoclass/records.hpp"
#include "monoclass/verifier.hpp"

namespace monoclass {

// One representative per GL(p,C)-class of irreducible subgroups of D_M x| Sym(p).
// Requires M^p * p! within closure_budget(false).
std::vector<ClosedGroup> oracle_enumerate(int p, int M);

struct OracleComparison {
    int p = 0, M = 0;
    // order -> (oracle classes, listed classes realizable with entries in mu_M:
    // printed on a modulus dividing M, or conjugate to an oracle class)
    std::map<i64, std::pair<int, int>> counts;
    std::vector<std::string> discrepancies;
    bool ok() const { return discrepancies.empty(); }
};

// listed monomial classes whose generators have entries in mu_M
std::vector<GroupLabel> listed_within(int p, int M);
OracleComparison oracle_compare(int p, int M);

}  // namespace monoclass
