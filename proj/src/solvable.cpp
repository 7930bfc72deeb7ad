#include "monoclass/solvable.hpp"

#include <numeric>
#include <stdexcept>

namespace monoclass {

std::string family_name(SolvableFamily f) {
    switch (f) {
        case SolvableFamily::L1: return "L1";
        case SolvableFamily::L2: return "L2";
        case SolvableFamily::L3: return "L3";
        case SolvableFamily::L4: return "L4";
        case SolvableFamily::M1: return "M1";
        case SolvableFamily::M2: return "M2";
        case SolvableFamily::M3: return "M3";
    }
    return "?";
}

namespace {

bool is_L(SolvableFamily f) { return f <= SolvableFamily::L4; }

bool l_allowed(int p, int j, int l) {
    const int jp = std::gcd(j, p - 1);
    const int u = primitive_root(p);
    for (int e = 1; e <= jp; ++e)
        if (powmod(u, e, p) == l % p) return true;
    return false;
}

int l4_step(int p, int j) { return (p - 1) / std::gcd(j, p - 1); }

bool nontrivial_x(const ModuleLabel& m) { return m.y.j >= 2 || has_nonscalar_w(m); }

i64 pprime_scalar_order(const ModuleLabel& m) {
    i64 r = 1;
    for (auto& w : m.ws) r *= ipow(w.q, w.c);
    return r;
}

}  // namespace

i64 SolvableLabel::order() const {
    const i64 base = p * module.order();
    return is_L(family) ? base : base * ((p - 1) / a);
}

bool is_valid(const SolvableLabel& g) {
    const ModuleLabel& m = g.module;
    const int p = g.p;
    const auto& y = m.y;
    if (!y.valid(p)) return false;
    const NArray n = narray(m);
    switch (g.family) {
        case SolvableFamily::L1:
            return (g.i == 0 || g.i == 1) && y.j == 1 && y.l == 0 && y.k >= 1 && !has_nonscalar_w(m);
        case SolvableFamily::L2:
            return g.i == 1 && y.l == 0 && nontrivial_x(m) && (y.j != 0 || y.k != 0 || is_shift_minimal(n, 1));
        case SolvableFamily::L3:
            return g.i == 0 && y.l == 0 && y.k >= 1 && nontrivial_x(m) && is_shift_minimal(n, 1);
        case SolvableFamily::L4:
            return g.i == 0 && y.l >= 1 && y.j >= 1 && y.k >= 1 && nontrivial_x(m) && l_allowed(p, y.j, y.l) &&
                   is_shift_minimal(n, l4_step(p, y.j));
        default: break;
    }
    if (p == 2 || g.a < 1 || g.a >= p - 1 || (p - 1) % g.a != 0) return false;
    const int ah = (p - 1) / g.a;
    if (!in_A_a(m, g.a) || g.c < 0 || g.c >= ah) return false;
    switch (g.family) {
        case SolvableFamily::M1: return y.l == 0 && 2 * g.c <= ah && y.j == 1 && n.is_zero();
        case SolvableFamily::M2: return y.l == 0 && (y.j >= 2 || !n.is_zero()) && is_shift_minimal(n, 1);
        case SolvableFamily::M3:
            return y.j >= 2 && y.j % ah == 0 && y.l != 0 && l_allowed(p, y.j, y.l) &&
                   is_shift_minimal(n, l4_step(p, y.j));
        default: return false;
    }
}

std::vector<SolvableLabel> enumerate_Lstar(int p, i64 m) {
    std::vector<SolvableLabel> out;
    if (m % p != 0) return out;
    for (ModuleLabel& mod : enumerate_modules(p, m / p)) {
        const YLabel y = mod.y;
        auto push = [&](SolvableFamily f, int i) { out.push_back(SolvableLabel{p, f, i, 0, 0, mod}); };
        if (y.j == 1 && y.l == 0 && y.k >= 1 && !has_nonscalar_w(mod)) {
            push(SolvableFamily::L1, 0);
            push(SolvableFamily::L1, 1);
            continue;
        }
        if (!nontrivial_x(mod)) continue;
        const NArray n = narray(mod);
        if (y.l == 0) {
            const bool minimal = is_shift_minimal(n, 1);
            if (y.j != 0 || y.k != 0 || minimal) push(SolvableFamily::L2, 1);
            if (y.k >= 1 && minimal) push(SolvableFamily::L3, 0);
        } else if (l_allowed(p, y.j, y.l) && is_shift_minimal(n, l4_step(p, y.j))) {
            push(SolvableFamily::L4, 0);
        }
    }
    return out;
}

std::vector<SolvableLabel> enumerate_Mstar(int p, i64 m) {
    std::vector<SolvableLabel> out;
    if (p == 2) return out;
    for (int a = 1; a < p - 1; ++a) {
        if ((p - 1) % a != 0) continue;
        const int ah = (p - 1) / a;
        if (m % (static_cast<i64>(p) * ah) != 0) continue;
        for (ModuleLabel& mod : enumerate_modules(p, m / (static_cast<i64>(p) * ah))) {
            if (!in_A_a(mod, a)) continue;
            const YLabel y = mod.y;
            const NArray n = narray(mod);
            auto push_range = [&](SolvableFamily f, int cmax) {
                for (int c = 0; c <= cmax; ++c) out.push_back(SolvableLabel{p, f, 0, a, c, mod});
            };
            if (y.l == 0) {
                if (y.j == 1 && n.is_zero()) push_range(SolvableFamily::M1, ah / 2);
                else if ((y.j >= 2 || !n.is_zero()) && is_shift_minimal(n, 1)) push_range(SolvableFamily::M2, ah - 1);
            } else if (y.j >= 2 && y.j % ah == 0 && l_allowed(p, y.j, y.l) && is_shift_minimal(n, l4_step(p, y.j))) {
                push_range(SolvableFamily::M3, ah - 1);
            }
        }
    }
    return out;
}

std::vector<MonomialElement> assemble_solvable(const SolvableLabel& g) {
    if (!is_valid(g)) throw std::invalid_argument("assemble_solvable: label violates its family conditions");
    const int p = g.p;
    std::vector<MonomialElement> gens;
    const Permutation s = Permutation::cycle_s(p);
    if (is_L(g.family)) {
        const int pk = static_cast<int>(ipow(p, g.module.y.k + 1));
        gens.emplace_back(DiagExponents::z(p, pk).scaled(g.i), s);
    } else {
        gens.emplace_back(s);
        const int ah = (p - 1) / g.a;
        const int mah = static_cast<int>(pprime_scalar_order(g.module) * ah);
        gens.emplace_back(DiagExponents::z(p, mah).scaled(g.c), Permutation::t_perm(p).pow(g.a));
    }
    for (const DiagExponents& d : module_generators(g.module)) gens.emplace_back(d);
    return normalize_modulus(gens);
}

}  // namespace monoclass
