#include "monoclass/audit.hpp"

#include <numeric>

namespace monoclass {

bool AuditReport::ok() const {
    if (!failures.empty()) return false;
    for (auto& o : orders)
        if (!o.failures.empty()) return false;
    for (auto& c : oracle)
        if (!c.ok()) return false;
    return true;
}

int check_group(const GroupLabel& g, std::vector<std::string>& failures) {
    const std::string name = label_string(g);
    int passed = 0;
    auto expect = [&](bool ok, const std::string& what) {
        if (ok) ++passed;
        else failures.push_back(name + ": " + what);
    };
    try {
        const ClosedGroup G = closure_of(g);
        expect(G.order() == order_of(g),
               "closure order " + std::to_string(G.order()) + " != " + std::to_string(order_of(g)));
        expect(character_norm(G) == 1, "character norm is not 1");
        if (G.monomial()) {
            const i64 diag = static_cast<i64>(diagonal_subgroup(G).size());
            expect(diag == diagonal_order(g),
                   "diagonal subgroup order " + std::to_string(diag) + " != " + std::to_string(diagonal_order(g)));
            expect(diag * static_cast<i64>(permutation_part(G).size()) == G.order(),
                   "order is not |G^D| * |phi(G)|");
            expect(is_irreducible_fast(G), "irreducibility predicate disagrees with the character norm");
        } else {
            expect(center_order(G) == diagonal_order(g), "center order " + std::to_string(center_order(G)));
            if (is_solvable(g)) expect(!has_noncentral_abelian_normal(G), "non-central abelian normal subgroup");
        }
    } catch (const BudgetExceeded& e) {
        failures.push_back(name + ": " + e.what());
    }
    return passed;
}

int check_pair(const GroupLabel& a, const GroupLabel& b, std::vector<std::string>& failures) {
    const std::string name = label_string(a) + " vs " + label_string(b);
    try {
        const ClosedGroup G = closure_of(a), H = closure_of(b);
        if (G.monomial() != H.monomial()) return 1;
        if (!G.monomial()) {
            if (fingerprint(G, 1) != fingerprint(H, 1)) return 1;
            // the dense character multisets separate the primitive pairs of equal order
            std::map<std::string, int> ca, cb;
            for (int x = 0; x < G.order(); ++x) ++ca[mat_trace(G.dense_element(x)).to_string()];
            for (int x = 0; x < H.order(); ++x) ++cb[mat_trace(H.dense_element(x)).to_string()];
            if (ca != cb) return 1;
            failures.push_back(name + ": equal character multisets");
            return 0;
        }
        const int L = std::lcm(G.modulus(), H.modulus());
        if (fingerprint(G, L) != fingerprint(H, L)) return 1;
        try {
            if (conjugacy_search(G, H)) {
                failures.push_back(name + ": monomially conjugate");
                return 0;
            }
        } catch (const BudgetExceeded&) {
        }
        if (gl_equivalent(G, H)) {
            failures.push_back(name + ": character-preserving isomorphism found");
            return 0;
        }
        return 1;
    } catch (const BudgetExceeded& e) {
        failures.push_back(name + ": " + e.what());
        return 0;
    }
}

AuditReport audit(int p, i64 max_order, const AuditOptions& opt) {
    AuditReport r;
    r.degree = p;
    r.max_order = max_order;
    for (i64 m = 1; m <= max_order; ++m) {
        const auto labels = classify(p, m);
        if (labels.empty()) continue;
        OrderReport o;
        o.order = m;
        for (auto& g : labels) {
            ++o.family_counts[family_of(g)];
            ++(is_monomial(g) ? r.total : r.primitive);
        }
        if (opt.closures) {
            const std::size_t n = opt.sample ? std::min(opt.sample, labels.size()) : labels.size();
            for (std::size_t i = 0; i < n; ++i) {
                // spread the sample across the families
                const std::size_t k = opt.sample ? i * labels.size() / n : i;
                o.checks_passed += check_group(labels[k], o.failures);
            }
        }
        if (opt.pairs && (opt.pair_max_order == 0 || m <= opt.pair_max_order))
            for (std::size_t i = 0; i < labels.size(); ++i)
                for (std::size_t j = i + 1; j < labels.size(); ++j)
                    o.checks_passed += check_pair(labels[i], labels[j], o.failures);
        r.orders.push_back(std::move(o));
    }
    if (opt.deep) {
        const std::size_t budget = closure_budget(false);
        for (int M = p; M <= max_order; M *= p == 2 ? 2 : p) {
            i64 ambient = 1;
            for (int i = 0; i < p; ++i) ambient *= M;
            for (int i = 2; i <= p; ++i) ambient *= i;
            if (static_cast<std::size_t>(ambient) > budget) break;
            try {
                r.oracle.push_back(oracle_compare(p, M));
            } catch (const BudgetExceeded& e) {
                r.failures.push_back("oracle M=" + std::to_string(M) + ": " + e.what());
            }
        }
    }
    return r;
}

nlohmann::ordered_json to_json(const AuditReport& r) {
    nlohmann::ordered_json j;
    j["degree"] = r.degree;
    j["max_order"] = r.max_order;
    j["total"] = r.total;
    j["primitive"] = r.primitive;
    j["ok"] = r.ok();
    j["orders"] = nlohmann::ordered_json::array();
    for (auto& o : r.orders) {
        nlohmann::ordered_json e;
        e["order"] = o.order;
        e["family_counts"] = o.family_counts;
        e["checks_passed"] = o.checks_passed;
        e["failures"] = o.failures;
        j["orders"].push_back(std::move(e));
    }
    if (!r.oracle.empty()) {
        j["oracle"] = nlohmann::ordered_json::array();
        for (auto& c : r.oracle) {
            nlohmann::ordered_json e;
            e["modulus"] = c.M;
            nlohmann::ordered_json counts = nlohmann::ordered_json::array();
            for (auto& [m, v] : c.counts) counts.push_back({{"order", m}, {"oracle", v.first}, {"listed", v.second}});
            e["counts"] = std::move(counts);
            e["discrepancies"] = c.discrepancies;
            j["oracle"].push_back(std::move(e));
        }
    }
    j["failures"] = r.failures;
    return j;
}

namespace {

void settle(AggregateCount& c) {
    c.matches = "none";
    if (c.aggregate == c.expected) {
        c.matches = "aggregate";
        return;
    }
    for (auto& [p, n] : c.per_degree)
        if (n == c.expected) {
            c.matches = "degree " + std::to_string(p);
            return;
        }
}

}  // namespace

AggregateCount solvable_class_count(i64 m, i64 expected) {
    AggregateCount c;
    c.order = m;
    c.expected = expected;
    for (auto [q, e] : factorize(m)) {
        (void)e;
        i64 n = 0;
        for (auto& g : classify(static_cast<int>(q), m))
            if (is_monomial(g) && is_solvable(g)) ++n;
        c.per_degree[static_cast<int>(q)] = n;
        c.aggregate += n;
    }
    settle(c);
    return c;
}

AggregateCount nonsolvable_class_count(i64 m, const std::vector<int>& degrees, i64 expected) {
    AggregateCount c;
    c.order = m;
    c.expected = expected;
    for (int p : degrees) {
        i64 n = 0;
        if (m % p == 0)
            for (auto& g : classify(p, m))
                if (is_monomial(g) && !is_solvable(g)) ++n;
        c.per_degree[p] = n;
        c.aggregate += n;
    }
    settle(c);
    return c;
}

nlohmann::ordered_json to_json(const AggregateCount& c) {
    nlohmann::ordered_json j;
    j["order"] = c.order;
    nlohmann::ordered_json per = nlohmann::ordered_json::object();
    for (auto& [p, n] : c.per_degree) per[std::to_string(p)] = n;
    j["per_degree"] = std::move(per);
    j["aggregate"] = c.aggregate;
    j["expected"] = c.expected;
    j["matches"] = c.matches;
    return j;
}

}  // namespace monoclass
