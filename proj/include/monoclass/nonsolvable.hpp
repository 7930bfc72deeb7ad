#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "monoclass/modules.hpp"

namespace monoclass {

class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class NSFamily { R0, R1, U0, U1, V0, V1, V2, P11, Q11_0, Q11_1, Q23 };

std::string family_name(NSFamily f);
// |phi(G)| for the family
i64 perm_part_order(NSFamily f, int p);

struct NSLabel {
    int p = 0;
    NSFamily family = NSFamily::R0;
    int n = 0;  // twist index, derived from the module
    ModuleLabel module;

    i64 order() const { return perm_part_order(family, p) * module.order(); }
    friend bool operator==(const NSLabel&, const NSLabel&) = default;
};

// p = (q^d - 1)/(q - 1) for a prime power q and d >= 2
bool is_projective_degree(int p);
// throws UnsupportedError when the non-compulsory part of degree p is not implemented
void require_supported(int p);

Permutation perm_constant(int p, NSFamily f);
DiagExponents twist_c(int n);
DiagExponents twist_g(int n);
DiagExponents twist_h(int n);
DiagExponents twist_d(int n);

// twist index of the module for families that carry one, or -1 when the module does not fit
int twist_index(NSFamily f, const ModuleLabel& m);
bool is_valid(const NSLabel& g);
std::vector<NSLabel> enumerate_ns(int p, i64 m);
std::vector<MonomialElement> assemble_ns(const NSLabel& g);

}  // namespace monoclass
