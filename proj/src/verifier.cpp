#include "monoclass/verifier.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace monoclass {

std::size_t closure_budget(bool dense) {
    if (const char* env = std::getenv("MONOCLASS_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return dense ? 10000 : 1000000;
}

struct DElem {
    i64 e;
    int c;
    friend bool operator==(const DElem&, const DElem&) = default;
};

struct DElemHash {
    std::size_t operator()(const DElem& x) const {
        return std::hash<i64>()(x.e) * 1000003u ^ std::hash<int>()(x.c);
    }
};

struct DenseStore {
    int L = 1, M1 = 2, degree = 0;
    i64 step = 1;  // L / M1
    std::vector<DenseMatrix> cores;
    std::unordered_map<DenseMatrix, int> core_index;
    std::unordered_map<i64, int> prod_memo;
    std::vector<int> zeta_memo;
    std::vector<DElem> elems;
    std::unordered_map<DElem, int, DElemHash> index;

    int intern(DenseMatrix m) {
        auto [it, fresh] = core_index.emplace(std::move(m), static_cast<int>(cores.size()));
        if (fresh) {
            cores.push_back(it->first);
            zeta_memo.push_back(-1);
        }
        return it->second;
    }
    int core_mul(int a, int b) {
        const i64 key = static_cast<i64>(a) << 32 | static_cast<unsigned>(b);
        auto it = prod_memo.find(key);
        if (it != prod_memo.end()) return it->second;
        const int r = intern(cores[a] * cores[b]);
        prod_memo.emplace(key, r);
        return r;
    }
    int zeta_mul(int a) {
        if (zeta_memo[a] < 0) {
            const int r = intern(scalar_mul(CyclotomicNumber::zeta(M1), cores[a]));
            zeta_memo[a] = r;
        }
        return zeta_memo[a];
    }
    DElem mul(const DElem& x, const DElem& y) {
        i64 s = x.e + y.e;
        int c = core_mul(x.c, y.c);
        if (s >= step) s -= step, c = zeta_mul(c);
        return DElem{s, c};
    }
};

int ClosedGroup::index_of(const MonomialElement& x) const {
    if (!index_) return -1;
    if (x.modulus() != modulus_) {
        if (modulus_ % x.modulus() != 0) {
            const int m = minimal_modulus(x);
            if (modulus_ % m != 0) return -1;
            auto n = normalize_modulus({x})[0].with_modulus(modulus_);
            auto it = index_->find(n);
            return it == index_->end() ? -1 : it->second;
        }
        auto it = index_->find(x.with_modulus(modulus_));
        return it == index_->end() ? -1 : it->second;
    }
    auto it = index_->find(x);
    return it == index_->end() ? -1 : it->second;
}

DenseMatrix ClosedGroup::dense_element(int x) const {
    if (!dense_) return to_dense(element(x));
    const DElem& d = dense_->elems[x];
    return scalar_mul(CyclotomicNumber::zeta(dense_->L, d.e), dense_->cores[d.c].with_modulus(dense_->L));
}

void ClosedGroup::intern_traces() const {
    if (!elems_ || !trace_id_.empty()) return;
    // distinct fixed-point multisets first, exact values once per multiset
    std::map<std::vector<i64>, int> by_fixed, by_value;
    std::vector<int> value_of;
    trace_id_.reserve(elems_->size());
    std::vector<i64> fixed;
    for (const MonomialElement& x : *elems_) {
        fixed.clear();
        for (int i = 0; i < degree_; ++i)
            if (x.perm()[i] == i) fixed.push_back(x.diag()[i]);
        std::sort(fixed.begin(), fixed.end());
        auto [it, fresh] = by_fixed.emplace(fixed, static_cast<int>(value_of.size()));
        if (fresh) {
            auto key = root_sum(fixed, modulus_);
            auto [vt, vfresh] = by_value.emplace(key, static_cast<int>(trace_values_.size()));
            if (vfresh) {
                std::vector<Rational> c;
                for (i64 v : key) c.emplace_back(static_cast<long>(v));
                trace_values_.push_back(CyclotomicNumber::from_coeffs(modulus_, c));
            }
            value_of.push_back(vt->second);
        }
        trace_id_.push_back(value_of[it->second]);
    }
}

ClosedGroup closure(const std::vector<MonomialElement>& gens, std::size_t budget) {
    if (gens.empty()) throw std::invalid_argument("closure: no generators");
    if (budget == 0) budget = closure_budget(false);
    int L = 1;
    for (auto& g : gens) L = std::lcm(L, g.modulus());
    const int p = gens[0].degree();
    ClosedGroup G;
    G.degree_ = p;
    G.modulus_ = L;
    for (auto& g : gens) G.gens_.push_back(g.with_modulus(L));
    G.elems_ = std::make_shared<std::vector<MonomialElement>>();
    G.index_ = std::make_shared<std::unordered_map<MonomialElement, int>>();
    G.group_ = build_group(
        G.gens_, MonomialElement::identity(p, L),
        [](const MonomialElement& a, const MonomialElement& b) { return a * b; }, budget, *G.elems_, *G.index_);
    auto elems = G.elems_;
    auto index = G.index_;
    G.group_.set_mul([elems, index](int x, int y) { return index->at((*elems)[x] * (*elems)[y]); });
    return G;
}

ClosedGroup closure_dense(const std::vector<ScaledMatrix>& gens, std::size_t budget) {
    if (gens.empty()) throw std::invalid_argument("closure_dense: no generators");
    if (budget == 0) budget = closure_budget(true);
    auto st = std::make_shared<DenseStore>();
    st->degree = gens[0].core.degree();
    int M1 = 2, L = 1;
    for (auto& g : gens) M1 = std::lcm(M1, g.core.modulus()), L = std::lcm(L, g.L);
    L = std::lcm(L, M1);
    st->L = L;
    st->M1 = M1;
    st->step = L / M1;
    std::vector<DElem> dg;
    for (auto& g : gens) {
        const i64 E = mod(g.e * (L / g.L), L);
        DenseMatrix core = g.core.with_modulus(M1);
        if (E / st->step) core = scalar_mul(CyclotomicNumber::zeta(M1, E / st->step), core);
        dg.push_back(DElem{E % st->step, st->intern(std::move(core))});
    }
    const DElem id{0, st->intern(DenseMatrix::identity(st->degree, M1))};
    ClosedGroup G;
    G.degree_ = st->degree;
    G.modulus_ = L;
    G.dense_ = st;
    DenseStore* raw = st.get();
    G.group_ = build_group(
        dg, id, [raw](const DElem& a, const DElem& b) { return raw->mul(a, b); }, budget, st->elems, st->index);
    G.group_.set_mul([st](int x, int y) { return st->index.at(st->mul(st->elems[x], st->elems[y])); });
    return G;
}

ClosedGroup closure_of(const GroupLabel& g, std::size_t budget) {
    if (auto* x = std::get_if<PrimLabel>(&g)) return closure_dense(assemble_prim_scaled(*x), budget);
    return closure(monomial_generators(g), budget);
}

std::vector<MonomialElement> diagonal_subgroup(const ClosedGroup& G) {
    if (!G.monomial()) throw std::invalid_argument("diagonal_subgroup: dense group");
    std::vector<MonomialElement> out;
    for (auto& x : G.elements())
        if (x.is_diagonal()) out.push_back(x);
    return out;
}

std::vector<Permutation> permutation_part(const ClosedGroup& G) {
    if (!G.monomial()) throw std::invalid_argument("permutation_part: dense group");
    std::set<Permutation> s;
    for (auto& x : G.elements()) s.insert(x.perm());
    return {s.begin(), s.end()};
}

i64 character_norm(const ClosedGroup& G) {
    mpz_class total = 0;
    if (G.monomial()) {
        const int M = G.modulus();
        std::vector<i64> cnt(M, 0);
        std::vector<i64> fixed;
        for (auto& x : G.elements()) {
            fixed.clear();
            for (int i = 0; i < x.degree(); ++i)
                if (x.perm()[i] == i) fixed.push_back(x.diag()[i]);
            for (i64 a : fixed)
                for (i64 b : fixed) ++cnt[mod(a - b, M)];
        }
        std::vector<mpz_class> counts;
        for (i64 v : cnt) counts.emplace_back(static_cast<long>(v));
        auto red = reduce_group_ring(counts, M);
        for (std::size_t i = 1; i < red.size(); ++i)
            if (red[i] != 0) throw std::logic_error("character_norm: irrational character sum");
        total = red[0];
    } else {
        const DenseStore& st = *G.dense_;
        std::vector<i64> mult(st.cores.size(), 0);
        for (auto& e : st.elems) ++mult[e.c];
        CyclotomicNumber acc(st.M1);
        for (std::size_t c = 0; c < mult.size(); ++c) {
            if (!mult[c]) continue;
            const CyclotomicNumber t = mat_trace(st.cores[c]);
            acc += CyclotomicNumber::rational(mult[c], 1, st.M1) * t * cyc_conj(t);
        }
        if (!acc.is_rational() || !acc.is_integral()) throw std::logic_error("character_norm: non-integral sum");
        total = acc.numerators()[0];
    }
    const mpz_class order(static_cast<long>(G.order()));
    if (total % order != 0) throw std::logic_error("character_norm: sum not divisible by the group order");
    mpz_class q = total / order;
    return q.get_si();
}

bool is_irreducible_fast(const ClosedGroup& G) {
    bool nonscalar = false;
    for (auto& x : G.elements())
        if (x.is_diagonal() && !x.diag().is_scalar()) { nonscalar = true; break; }
    if (nonscalar) return true;
    const i64 p = G.degree();
    const i64 phi = static_cast<i64>(permutation_part(G).size());
    if ((p * (p - 1)) % phi == 0) return false;
    return character_norm(G) == 1;
}

i64 center_order(const ClosedGroup& G) { return static_cast<i64>(G.group().center().size()); }

bool has_noncentral_abelian_normal(const ClosedGroup& G) {
    const FiniteGroup& g = G.group();
    const auto& cls = g.class_of();
    std::vector<std::vector<int>> members(g.class_count());
    for (int x = 0; x < g.order(); ++x) members[cls[x]].push_back(x);
    for (auto& c : members) {
        if (c.size() < 2) continue;
        bool ok = true;
        for (std::size_t a = 0; a < c.size() && ok; ++a)
            for (std::size_t b = a + 1; b < c.size() && ok; ++b) ok = g.commute(c[a], c[b]);
        if (ok) return true;
    }
    return false;
}

namespace {

std::vector<std::string> global_traces(const ClosedGroup& G, int L) {
    std::vector<std::string> out;
    for (auto& t : G.trace_values()) out.push_back(change_modulus(t, L).to_string());
    return out;
}

}  // namespace

Fingerprint fingerprint(const ClosedGroup& G, int L) {
    Fingerprint f;
    f.order = G.order();
    f.center = center_order(G);
    const FiniteGroup& g = G.group();
    std::vector<std::string> tr;
    if (G.monomial()) tr = global_traces(G, L);
    for (int c = 0; c < g.class_count(); ++c) {
        const int x = g.class_reps()[c];
        std::string s = std::to_string(g.elem_order(x)) + "|" + std::to_string(g.class_size(c));
        if (G.monomial()) s += "|" + tr[G.trace_id(x)];
        f.classes.push_back(std::move(s));
    }
    std::sort(f.classes.begin(), f.classes.end());
    return f;
}

namespace {

std::vector<Permutation> all_perms(int p) {
    std::vector<int> v(p);
    std::iota(v.begin(), v.end(), 0);
    std::vector<Permutation> out;
    do out.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::vector<Permutation> affine_perms(int p) {
    std::vector<Permutation> out;
    for (int a = 1; a < p; ++a)
        for (int b = 0; b < p; ++b) {
            std::vector<int> v(p);
            for (int i = 0; i < p; ++i) v[i] = static_cast<int>(mod(static_cast<i64>(a) * (i + 1) + b - 1, p));
            out.emplace_back(v);
        }
    return out;
}

}  // namespace

std::optional<MonomialElement> conjugacy_search(const ClosedGroup& G, const ClosedGroup& H, int modulus_bound,
                                                i64 budget) {
    if (!G.monomial() || !H.monomial()) throw std::invalid_argument("conjugacy_search: monomial groups only");
    if (G.degree() != H.degree() || G.order() != H.order()) return std::nullopt;
    const int p = G.degree();
    const int Mp = modulus_bound ? modulus_bound : std::lcm(G.modulus(), H.modulus()) * p;
    if (Mp % H.modulus() != 0 || Mp % G.modulus() != 0)
        throw std::invalid_argument("conjugacy_search: modulus bound must be a multiple of both moduli");
    auto PG = permutation_part(G), PH = permutation_part(H);
    if (PG.size() != PH.size()) return std::nullopt;
    std::vector<Permutation> sigmas;
    for (auto& s : p <= 7 ? all_perms(p) : affine_perms(p)) {
        std::vector<Permutation> img;
        const Permutation si = s.inverse();
        for (auto& x : PG) img.push_back(si * x * s);
        std::sort(img.begin(), img.end());
        if (img == PH) sigmas.push_back(s);
    }
    i64 space = static_cast<i64>(sigmas.size());
    for (int i = 1; i < p; ++i) {
        space *= Mp;
        if (space > budget)
            throw BudgetExceeded("conjugacy_search: search space exceeds " + std::to_string(budget) + " candidates");
    }
    std::vector<MonomialElement> gens;
    for (auto& g : G.generators()) gens.push_back(g.with_modulus(Mp));
    std::stable_sort(gens.begin(), gens.end(),
                     [](const MonomialElement& a, const MonomialElement& b) { return a.is_diagonal() > b.is_diagonal(); });
    const int ratio = Mp / H.modulus();
    auto in_H = [&](const MonomialElement& y) {
        std::vector<i64> e(y.diag().exps());
        for (auto& v : e) {
            if (v % ratio) return false;
            v /= ratio;
        }
        return H.index_of(MonomialElement(DiagExponents(H.modulus(), std::move(e)), y.perm())) >= 0;
    };
    for (auto& s : sigmas) {
        std::vector<i64> d(p, 0);
        while (true) {
            const MonomialElement c(DiagExponents(Mp, d), s);
            const MonomialElement ci = mono_inv(c);
            bool ok = true;
            for (auto& g : gens)
                if (!in_H(ci * g * c)) { ok = false; break; }
            if (ok) return c;
            int i = 1;
            while (i < p && ++d[i] == Mp) d[i++] = 0;
            if (i == p) break;
        }
    }
    return std::nullopt;
}

bool gl_equivalent(const ClosedGroup& G, const ClosedGroup& H) {
    if (!G.monomial() || !H.monomial()) throw std::invalid_argument("gl_equivalent: monomial groups only");
    if (G.degree() != H.degree() || G.order() != H.order()) return false;
    const FiniteGroup& g = G.group();
    const FiniteGroup& h = H.group();
    const int n = g.order();
    const int L = std::lcm(G.modulus(), H.modulus());
    std::map<std::string, int> tids;
    auto intern_all = [&](const ClosedGroup& X) {
        std::vector<int> ids;
        for (auto& s : global_traces(X, L)) ids.push_back(tids.emplace(s, static_cast<int>(tids.size())).first->second);
        return ids;
    };
    const auto gt = intern_all(G), ht = intern_all(H);
    std::map<std::tuple<int, int, int>, int> sig_ids;
    auto sigs = [&](const ClosedGroup& X, const FiniteGroup& f, const std::vector<int>& t) {
        std::vector<int> s(f.order());
        for (int x = 0; x < f.order(); ++x) {
            auto key = std::make_tuple(f.elem_order(x), t[X.trace_id(x)], f.class_size(f.class_of()[x]));
            s[x] = sig_ids.emplace(key, static_cast<int>(sig_ids.size())).first->second;
        }
        return s;
    };
    const auto sg = sigs(G, g, gt), sh = sigs(H, h, ht);
    std::vector<int> cg(sig_ids.size(), 0), ch(sig_ids.size(), 0);
    for (int x = 0; x < n; ++x) ++cg[sg[x]], ++ch[sh[x]];
    if (cg != ch) return false;
    if (n == 1) return true;

    std::vector<int> cand(n);
    std::iota(cand.begin(), cand.end(), 0);
    std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) { return ch[sg[a]] < ch[sg[b]]; });
    std::vector<int> gens;
    std::vector<char> in = g.subgroup({});
    for (int x : cand) {
        if (in[x]) continue;
        gens.push_back(x);
        in = g.subgroup(gens);
        if (std::all_of(in.begin(), in.end(), [](char c) { return c != 0; })) break;
    }
    // the first image may be taken up to H-conjugacy
    if (!gens.empty()) {
        const int first = gens[0];
        for (int x : g.class_reps())
            if (g.class_of()[x] == g.class_of()[first]) gens[0] = x;
    }
    std::vector<std::vector<int>> options(gens.size());
    for (int y = 0; y < n; ++y)
        if (sh[y] == sg[gens[0]] && h.class_reps()[h.class_of()[y]] == y) options[0].push_back(y);
    for (std::size_t i = 1; i < gens.size(); ++i)
        for (int y = 0; y < n; ++y)
            if (sh[y] == sg[gens[i]]) options[i].push_back(y);

    std::vector<int> images(gens.size());
    std::vector<int> phi(n), used(n), queue;
    auto consistent = [&](std::size_t level) {
        std::fill(phi.begin(), phi.end(), -1);
        std::fill(used.begin(), used.end(), 0);
        phi[0] = 0;
        used[0] = 1;
        queue.assign(1, 0);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const int x = queue[qi];
            for (std::size_t j = 0; j <= level; ++j) {
                const int y = g.mul(x, gens[j]);
                const int hy = h.mul(phi[x], images[j]);
                if (phi[y] < 0) {
                    if (used[hy] || sg[y] != sh[hy]) return false;
                    phi[y] = hy;
                    used[hy] = 1;
                    queue.push_back(y);
                } else if (phi[y] != hy) {
                    return false;
                }
            }
        }
        return true;
    };
    std::function<bool(std::size_t)> dfs = [&](std::size_t level) {
        if (level == gens.size()) return true;
        for (int y : options[level]) {
            images[level] = y;
            if (consistent(level) && dfs(level + 1)) return true;
        }
        return false;
    };
    return dfs(0);
}

}  // namespace monoclass
