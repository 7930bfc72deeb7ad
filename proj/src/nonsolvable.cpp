#include "monoclass/nonsolvable.hpp"

namespace monoclass {

std::string family_name(NSFamily f) {
    switch (f) {
        case NSFamily::R0: return "R0";
        case NSFamily::R1: return "R1";
        case NSFamily::U0: return "U0";
        case NSFamily::U1: return "U1";
        case NSFamily::V0: return "V0";
        case NSFamily::V1: return "V1";
        case NSFamily::V2: return "V2";
        case NSFamily::P11: return "P11";
        case NSFamily::Q11_0: return "Q11_0";
        case NSFamily::Q11_1: return "Q11_1";
        case NSFamily::Q23: return "Q23";
    }
    return "?";
}

i64 perm_part_order(NSFamily f, int p) {
    switch (f) {
        case NSFamily::R0:
        case NSFamily::R1: return p <= 20 ? factorial(p) : -1;
        case NSFamily::U0:
        case NSFamily::U1: return p <= 20 ? factorial(p) / 2 : -1;
        case NSFamily::V0:
        case NSFamily::V1:
        case NSFamily::V2: return 168;
        case NSFamily::P11: return 660;
        case NSFamily::Q11_0:
        case NSFamily::Q11_1: return 7920;
        case NSFamily::Q23: return 10200960;
    }
    return -1;
}

bool is_projective_degree(int p) {
    for (i64 q = 2; q < p; ++q) {
        auto f = factorize(q);
        if (f.size() != 1) continue;
        i64 s = 1 + q;
        for (int d = 2; s <= p; ++d) {
            if (s == p) return true;
            s = s * q + 1;
        }
    }
    return false;
}

void require_supported(int p) {
    if (p > 11 && p != 23 && is_projective_degree(p))
        throw UnsupportedError("non-solvable classification for projective degree " + std::to_string(p) +
                               " is not implemented");
}

Permutation perm_constant(int p, NSFamily f) {
    switch (f) {
        case NSFamily::R0:
        case NSFamily::R1:
            if (p < 2) break;
            return Permutation::from_cycles(p, {{1, 2}});
        case NSFamily::U0:
        case NSFamily::U1:
            if (p < 5 || (f == NSFamily::U1 && p != 5)) break;
            return Permutation::from_cycles(p, {{1, 2, 3}});
        case NSFamily::V0:
        case NSFamily::V1:
        case NSFamily::V2:
            if (p != 7) break;
            return Permutation::from_cycles(7, {{1, 2}, {3, 5}});
        case NSFamily::P11:
            if (p != 11) break;
            return Permutation::from_cycles(11, {{1, 7}, {2, 3}, {4, 8}, {5, 9}});
        case NSFamily::Q11_0:
        case NSFamily::Q11_1:
            if (p != 11) break;
            return Permutation::from_cycles(11, {{1, 3}, {2, 8}, {4, 7}, {5, 6}});
        case NSFamily::Q23:
            if (p != 23) break;
            return Permutation::from_cycles(
                23, {{1, 3}, {4, 19}, {5, 17}, {6, 9}, {7, 8}, {10, 16}, {12, 15}, {13, 18}});
    }
    throw std::invalid_argument("perm_constant: family " + family_name(f) + " is not defined in degree " +
                                std::to_string(p));
}

namespace {

DiagExponents twist(int base, int n, std::vector<i64> e) {
    if (n < 1) throw std::invalid_argument("twist diagonal index must be positive");
    return DiagExponents(static_cast<int>(ipow(base, n)), std::move(e));
}

}  // namespace

DiagExponents twist_c(int n) { return twist(3, n, {0, 1, -1, -1, 1}); }
DiagExponents twist_g(int n) { return twist(2, n, {0, 0, 0, 1, 0, -1, 0}); }
DiagExponents twist_h(int n) { return twist(2, n, {1, 1, 0, -1, 0, 0, -1}); }
DiagExponents twist_d(int n) { return twist(2, n, {1, -1, -1, 0, -1, 1, 0, 1, 0, 0, 0}); }

namespace {

bool nonscalar(const ModuleLabel& m) { return !is_scalar(m); }

std::vector<int> tuple_of(const ModuleLabel& m, int q) {
    const WLabel* w = m.w(q);
    if (w) return w->ns;
    const int v = (m.p - 1) / mult_order(q, m.p);
    return std::vector<int>(v, 0);
}

}  // namespace

int twist_index(NSFamily f, const ModuleLabel& m) {
    switch (f) {
        case NSFamily::R1: {
            const WLabel* w = m.w(2);
            return w ? w->c : 0;
        }
        case NSFamily::U1: return tuple_of(m, 3)[0];
        case NSFamily::V1: {
            auto t = tuple_of(m, 2);
            return t[0] >= 1 && t[1] == t[0] - 1 ? t[0] : -1;
        }
        case NSFamily::V2: {
            auto t = tuple_of(m, 2);
            return t[0] == t[1] ? t[0] : -1;
        }
        case NSFamily::Q11_1: return tuple_of(m, 2)[0];
        default: return 0;
    }
}

bool is_valid(const NSLabel& g) {
    const ModuleLabel& m = g.module;
    if (m.p != g.p || !m.y.valid(g.p)) return false;
    try {
        perm_constant(g.p, g.family);
    } catch (const std::invalid_argument&) {
        return false;
    }
    if (g.n != twist_index(g.family, m)) return false;
    switch (g.family) {
        case NSFamily::R0:
        case NSFamily::R1:
        case NSFamily::U0: return in_A_S(m) && nonscalar(m);
        case NSFamily::U1: return in_A_S(m);
        case NSFamily::V0: return in_A_V(m) && nonscalar(m);
        case NSFamily::V1: return in_A_V(m) && !in_A_S(m);
        case NSFamily::V2: return in_A_S(m);
        case NSFamily::P11: return in_A_P(m) && nonscalar(m);
        case NSFamily::Q11_0: return in_A_S(m) && nonscalar(m);
        case NSFamily::Q11_1: return in_A_S(m);
        case NSFamily::Q23: return in_A_Q(m) && nonscalar(m);
    }
    return false;
}

std::vector<NSLabel> enumerate_ns(int p, i64 m) {
    std::vector<NSLabel> out;
    if (p < 5) return out;
    require_supported(p);
    std::vector<NSFamily> fams{NSFamily::R0, NSFamily::R1, NSFamily::U0};
    if (p == 5) fams.push_back(NSFamily::U1);
    if (p == 7) fams.insert(fams.end(), {NSFamily::V0, NSFamily::V1, NSFamily::V2});
    if (p == 11) fams.insert(fams.end(), {NSFamily::P11, NSFamily::Q11_0, NSFamily::Q11_1});
    if (p == 23) fams.push_back(NSFamily::Q23);
    for (NSFamily f : fams) {
        const i64 po = perm_part_order(f, p);
        if (po <= 0 || m % po != 0) continue;
        for (ModuleLabel& mod : enumerate_modules(p, m / po)) {
            NSLabel g{p, f, twist_index(f, mod), mod};
            if (g.n >= 0 && is_valid(g)) out.push_back(std::move(g));
        }
    }
    return out;
}

std::vector<MonomialElement> assemble_ns(const NSLabel& g) {
    if (!is_valid(g)) throw std::invalid_argument("assemble_ns: label violates its family conditions");
    const int p = g.p;
    const MonomialElement perm(perm_constant(p, g.family));
    std::vector<MonomialElement> gens{MonomialElement(Permutation::cycle_s(p))};
    switch (g.family) {
        case NSFamily::R1:
            gens.push_back(perm * MonomialElement(DiagExponents::z(p, static_cast<int>(ipow(2, g.n + 1)))));
            break;
        case NSFamily::U1: gens.push_back(perm * MonomialElement(twist_c(g.n + 1))); break;
        case NSFamily::V1: gens.push_back(perm * MonomialElement(twist_g(g.n))); break;
        case NSFamily::V2: gens.push_back(perm * MonomialElement(twist_h(g.n + 1))); break;
        case NSFamily::Q11_1: gens.push_back(perm * MonomialElement(twist_d(g.n + 1))); break;
        default: gens.push_back(perm); break;
    }
    for (const DiagExponents& d : module_generators(g.module)) gens.emplace_back(d);
    return normalize_modulus(gens);
}

}  // namespace monoclass
