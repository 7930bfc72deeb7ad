#pragma once

#include <string>
#include <vector>

#include "monoclass/modules.hpp"

namespace monoclass {

enum class SolvableFamily { L1, L2, L3, L4, M1, M2, M3 };

std::string family_name(SolvableFamily f);

struct SolvableLabel {
    int p = 0;
    SolvableFamily family = SolvableFamily::L1;
    int i = 0;  // L families
    int a = 0;  // M families: proper divisor of p-1
    int c = 0;  // M families: 0 <= c < p-1/a
    ModuleLabel module;

    i64 order() const;
    friend bool operator==(const SolvableLabel&, const SolvableLabel&) = default;
};

std::vector<SolvableLabel> enumerate_Lstar(int p, i64 m);
std::vector<SolvableLabel> enumerate_Mstar(int p, i64 m);
// label-level membership test of the defining clauses
bool is_valid(const SolvableLabel& g);
std::vector<MonomialElement> assemble_solvable(const SolvableLabel& g);

}  // namespace monoclass
