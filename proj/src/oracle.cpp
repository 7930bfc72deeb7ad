#include "monoclass/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace monoclass {

namespace {

// (Z/M)^p with elements encoded base M
struct Lattice {
    int p, M, size;

    std::vector<i64> vec(int x) const {
        std::vector<i64> v(p);
        for (int i = 0; i < p; ++i) v[i] = x % M, x /= M;
        return v;
    }
    int code(const std::vector<i64>& v) const {
        int x = 0;
        for (int i = p - 1; i >= 0; --i) x = x * M + static_cast<int>(mod(v[i], M));
        return x;
    }
    int add(int a, int b) const {
        int x = 0, w = 1;
        for (int i = 0; i < p; ++i, a /= M, b /= M, w *= M) x += ((a % M + b % M) % M) * w;
        return x;
    }
    int act(int a, const Permutation& s) const { return code(act_perm(DiagExponents(M, vec(a)), s).exps()); }

    // subgroup generated by gens, closed under the permutations
    std::vector<char> span(const std::vector<int>& gens, const std::vector<Permutation>& perms) const {
        std::vector<char> in(size, 0);
        std::vector<int> basis;
        std::vector<int> todo(gens);
        std::vector<int> elems{0};
        in[0] = 1;
        while (!todo.empty()) {
            const int g = todo.back();
            todo.pop_back();
            if (in[g]) continue;
            basis.push_back(g);
            for (auto& s : perms) todo.push_back(act(g, s));
            for (std::size_t i = 0; i < elems.size(); ++i) {
                const int y = add(elems[i], g);
                if (!in[y]) in[y] = 1, elems.push_back(y);
            }
        }
        return in;
    }
};

std::vector<std::vector<Permutation>> transitive_with_s(int p) {
    std::vector<int> v(p);
    std::iota(v.begin(), v.end(), 0);
    const Permutation s = Permutation::cycle_s(p);
    std::set<std::vector<Permutation>> seen;
    std::vector<std::vector<Permutation>> out;
    do {
        const Permutation x(v);
        std::vector<Permutation> elems{Permutation::identity(p)};
        std::set<Permutation> in(elems.begin(), elems.end());
        for (std::size_t i = 0; i < elems.size(); ++i)
            for (auto& g : {s, x}) {
                const Permutation y = elems[i] * g;
                if (in.insert(y).second) elems.push_back(y);
            }
        std::sort(elems.begin(), elems.end());
        if (seen.insert(elems).second) out.push_back(x == s || x.is_identity() ? std::vector<Permutation>{s}
                                                                               : std::vector<Permutation>{s, x});
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::vector<int> coset_reps(const std::vector<char>& H, const Lattice& D) {
    std::vector<int> members;
    for (int x = 0; x < D.size; ++x)
        if (H[x]) members.push_back(x);
    std::vector<char> covered(D.size, 0);
    std::vector<int> reps;
    for (int x = 0; x < D.size; ++x) {
        if (covered[x]) continue;
        reps.push_back(x);
        for (int h : members) covered[D.add(x, h)] = 1;
    }
    return reps;
}

// diagonal part of y^-1 (0, sigma) y for diagonal y
int twist(const Lattice& D, int y, const Permutation& sigma) {
    const MonomialElement Y(DiagExponents(D.M, D.vec(y)));
    return D.code((mono_inv(Y) * MonomialElement(DiagExponents::zero(D.p, D.M), sigma) * Y).diag().exps());
}

// closure that gives up as soon as a diagonal element outside A appears
bool diagonal_part_is(const std::vector<MonomialElement>& gens, const std::vector<char>& A, const Lattice& D,
                      std::size_t budget) {
    std::vector<MonomialElement> elems{MonomialElement::identity(D.p, D.M)};
    std::unordered_map<MonomialElement, int> index{{elems[0], 0}};
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (auto& g : gens) {
            MonomialElement y = elems[i] * g;
            if (y.is_diagonal() && !A[D.code(y.diag().exps())]) return false;
            if (index.emplace(y, static_cast<int>(elems.size())).second) {
                if (elems.size() >= budget) throw BudgetExceeded("oracle closure exceeded the budget");
                elems.push_back(std::move(y));
            }
        }
    return true;
}

}  // namespace

std::vector<ClosedGroup> oracle_enumerate(int p, int M) {
    if (!is_prime(p) || M < 1) throw std::invalid_argument("oracle_enumerate: need a prime degree and M >= 1");
    const std::size_t budget = closure_budget(false);
    i64 ambient = 1;
    for (int i = 0; i < p; ++i) ambient *= M;
    for (int i = 2; i <= p; ++i) ambient *= i;
    if (static_cast<std::size_t>(ambient) > budget)
        throw BudgetExceeded("oracle_enumerate: ambient group order " + std::to_string(ambient) +
                             " exceeds the budget");
    Lattice D{p, M, 1};
    for (int i = 0; i < p; ++i) D.size *= M;
    const Permutation s = Permutation::cycle_s(p);

    // all <s>-submodules
    std::vector<std::vector<char>> modules;
    std::vector<std::vector<int>> module_gens;
    std::set<std::vector<char>> seen;
    {
        std::vector<char> zero(D.size, 0);
        zero[0] = 1;
        modules.push_back(zero);
        module_gens.push_back({});
        seen.insert(zero);
        for (std::size_t i = 0; i < modules.size(); ++i) {
            for (int v : coset_reps(modules[i], D)) {
                if (v == 0) continue;
                std::vector<int> g = module_gens[i];
                g.push_back(v);
                auto A = D.span(g, {s});
                if (seen.insert(A).second) {
                    modules.push_back(std::move(A));
                    module_gens.push_back(std::move(g));
                }
            }
        }
    }

    std::vector<ClosedGroup> found;
    std::map<std::pair<i64, std::vector<std::string>>, std::vector<std::size_t>> buckets;
    auto consider = [&](const std::vector<MonomialElement>& gens) {
        ClosedGroup G = closure(gens, budget);
        if (character_norm(G) != 1) return;
        const Fingerprint f = fingerprint(G, M);
        auto& bucket = buckets[{f.order, f.classes}];
        for (std::size_t k : bucket)
            if (gl_equivalent(found[k], G)) return;
        bucket.push_back(found.size());
        found.push_back(std::move(G));
    };

    for (auto& T : transitive_with_s(p)) {
        for (std::size_t mi = 0; mi < modules.size(); ++mi) {
            const auto& A = modules[mi];
            bool invariant = true;
            for (int a = 0; a < D.size && invariant; ++a)
                if (A[a])
                    for (auto& x : T) invariant = invariant && A[D.act(a, x)];
            if (!invariant) continue;
            std::vector<MonomialElement> base;
            for (int a : module_gens[mi]) base.emplace_back(DiagExponents(M, D.vec(a)));

            std::vector<int> b1, stab;
            for (int y = 0; y < D.size; ++y) {
                const int w = twist(D, y, s);
                b1.push_back(w);
                if (A[w]) stab.push_back(y);
            }
            std::vector<int> g1 = module_gens[mi];
            g1.insert(g1.end(), b1.begin(), b1.end());
            for (int d1 : coset_reps(D.span(g1, {}), D)) {
                const MonomialElement lift1(DiagExponents(M, D.vec(d1)), s);
                if (T.size() == 1) {
                    auto gens = base;
                    gens.push_back(lift1);
                    if (diagonal_part_is(gens, A, D, budget)) consider(gens);
                    continue;
                }
                const Permutation& x = T[1];
                std::vector<int> g2 = module_gens[mi];
                for (int y : stab) g2.push_back(twist(D, y, x));
                for (int d2 : coset_reps(D.span(g2, {}), D)) {
                    auto gens = base;
                    gens.push_back(lift1);
                    gens.emplace_back(DiagExponents(M, D.vec(d2)), x);
                    if (diagonal_part_is(gens, A, D, budget)) consider(gens);
                }
            }
        }
    }
    std::stable_sort(found.begin(), found.end(),
                     [](const ClosedGroup& a, const ClosedGroup& b) { return a.order() < b.order(); });
    return found;
}

std::vector<GroupLabel> listed_within(int p, int M) {
    i64 ambient = 1;
    for (int i = 0; i < p; ++i) ambient *= M;
    for (int i = 2; i <= p; ++i) ambient *= i;
    std::vector<GroupLabel> out;
    for (i64 m = 1; m <= ambient; ++m) {
        if (ambient % m) continue;
        for (auto& g : classify(p, m)) {
            if (!is_monomial(g)) continue;
            int L = 1;
            for (auto& x : monomial_generators(g)) L = std::lcm(L, x.modulus());
            if (M % L == 0) out.push_back(g);
        }
    }
    return out;
}

OracleComparison oracle_compare(int p, int M) {
    OracleComparison r;
    r.p = p;
    r.M = M;
    const auto oracle = oracle_enumerate(p, M);
    auto listed = listed_within(p, M);
    const std::size_t direct = listed.size();
    std::vector<ClosedGroup> closed;
    std::map<std::pair<i64, std::vector<std::string>>, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < direct; ++i) {
        closed.push_back(closure_of(listed[i]));
        const Fingerprint f = fingerprint(closed.back(), M);
        buckets[{f.order, f.classes}].push_back(i);
    }
    // listed classes whose printed generators need a larger modulus, by order
    std::map<i64, std::vector<std::size_t>> wider;
    auto wider_of = [&](i64 m) -> const std::vector<std::size_t>& {
        auto it = wider.find(m);
        if (it != wider.end()) return it->second;
        std::vector<std::size_t> ids;
        for (auto& g : classify(p, m)) {
            if (!is_monomial(g) || std::find(listed.begin(), listed.begin() + direct, g) != listed.begin() + direct)
                continue;
            ids.push_back(listed.size());
            listed.push_back(g);
            closed.push_back(closure_of(g));
        }
        return wider.emplace(m, std::move(ids)).first->second;
    };
    std::vector<int> hits;
    for (const ClosedGroup& G : oracle) {
        ++r.counts[G.order()].first;
        const Fingerprint f = fingerprint(G, M);
        std::vector<std::size_t> matches;
        auto it = buckets.find({f.order, f.classes});
        if (it != buckets.end())
            for (std::size_t i : it->second)
                if (gl_equivalent(G, closed[i])) matches.push_back(i);
        if (matches.empty())
            for (std::size_t i : wider_of(G.order()))
                if (gl_equivalent(G, closed[i])) matches.push_back(i);
        hits.resize(listed.size(), 0);
        if (matches.empty())
            r.discrepancies.push_back("order " + std::to_string(G.order()) + ": oracle class with no listed match");
        if (matches.size() > 1)
            r.discrepancies.push_back("order " + std::to_string(G.order()) + ": oracle class matches " +
                                      std::to_string(matches.size()) + " listed classes");
        for (std::size_t i : matches) ++hits[i];
    }
    hits.resize(listed.size(), 0);
    for (std::size_t i = 0; i < listed.size(); ++i) {
        if (i < direct || hits[i] > 0) ++r.counts[order_of(listed[i])].second;
        if ((i < direct && hits[i] != 1) || hits[i] > 1)
            r.discrepancies.push_back(label_string(listed[i]) + ": matched by " + std::to_string(hits[i]) +
                                      " oracle classes");
    }
    return r;
}

}  // namespace monoclass
