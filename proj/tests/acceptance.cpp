#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>

#include "monoclass/audit.hpp"
#include "monoclass/padic.hpp"

using namespace monoclass;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

i64 monomial_count(int p, i64 m) {
    i64 n = 0;
    for (auto& g : classify(p, m)) n += is_monomial(g);
    return n;
}

Outcome cumulative_counts(int p, const std::vector<i64>& expected) {
    const auto t0 = Clock::now();
    const std::vector<i64> marks{2000, 4000, 6000, 8000, 10000};
    std::vector<i64> got;
    i64 total = 0;
    for (i64 m = 1, k = 0; k < 5; ++m) {
        total += monomial_count(p, m);
        if (m == marks[k]) got.push_back(total), ++k;
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < got.size(); ++i) os << (i ? "/" : "") << got[i];
    os << " in " << static_cast<int>(seconds_since(t0)) << "s";
    return {got == expected, os.str()};
}

Outcome hensel_data() {
    const auto fs = build_factor_system(7, 2, 2);
    const auto g = factor_f_mod_q(7, 2);
    const bool ok = fs.factors.size() == 2 && fs.factors[0] == FlatPoly(4, {3, 1, 2, 1}) &&
                    fs.factors[1] == FlatPoly(4, {3, 2, 3, 1}) && g.size() == 2 && g[0] == FlatPoly(2, {1, 1, 0, 1}) &&
                    g[1] == FlatPoly(2, {1, 0, 1, 1});
    std::string d;
    for (auto& f : fs.factors) d += f.to_string() + "; ";
    for (auto& f : g) d += f.to_string() + "; ";
    return {ok, d};
}

Outcome generator_data() {
    const auto a = w_generators(WLabel{2, {1, 0}, 0}, 7);
    const auto b = w_generators(WLabel{2, {2, 0}, 0}, 7);
    const bool ok = a.size() == 1 && b.size() == 1 && a[0] == DiagExponents(2, {1, 1, 1, 0, 1, 0, 0}) &&
                    b[0] == DiagExponents(4, {3, 3, 1, 2, 3, 0, 0});
    return {ok, "exponent vectors mod 2 and mod 4"};
}

Outcome oracle() {
    const auto t0 = Clock::now();
    bool ok = true;
    std::ostringstream os;
    for (auto [p, M] : std::vector<std::pair<int, int>>{{2, 4}, {2, 8}, {3, 3}, {3, 9}}) {
        const OracleComparison r = oracle_compare(p, M);
        int classes = 0;
        for (auto& [m, c] : r.counts) {
            classes += c.first;
            ok = ok && c.first == c.second;
        }
        ok = ok && r.ok();
        os << "(" << p << "," << M << "): " << classes << " classes, " << r.discrepancies.size()
           << " discrepancies; ";
        for (auto& d : r.discrepancies) std::cerr << "  oracle " << p << "," << M << ": " << d << '\n';
    }
    os << static_cast<int>(seconds_since(t0)) << "s";
    return {ok, os.str()};
}

Outcome property_suite() {
    const auto t0 = Clock::now();
    std::vector<std::string> failures;
    i64 groups = 0;
    for (int p : {2, 3, 5})
        for (i64 m = 1; m <= 2000; ++m)
            for (auto& g : classify(p, m)) {
                ++groups;
                check_group(g, failures);
            }
    std::vector<GroupLabel> seven;
    for (i64 m = 1; m <= 20000; ++m)
        for (auto& g : classify(7, m)) seven.push_back(g);
    const std::size_t n = std::min<std::size_t>(200, seven.size());
    for (std::size_t i = 0; i < n; ++i) {
        ++groups;
        check_group(seven[i * seven.size() / n], failures);
    }
    for (std::size_t i = 0; i < failures.size() && i < 20; ++i) std::cerr << "  " << failures[i] << '\n';
    std::ostringstream os;
    os << groups << " groups (" << n << " of " << seven.size() << " in degree 7), " << failures.size()
       << " failures, " << static_cast<int>(seconds_since(t0)) << "s";
    return {failures.empty(), os.str()};
}

Outcome non_conjugacy() {
    const auto t0 = Clock::now();
    std::vector<std::string> failures;
    int pairs = 0, certified = 0;
    for (i64 m = 1; m <= 200; ++m) {
        const auto ls = classify(3, m);
        for (std::size_t i = 0; i < ls.size(); ++i)
            for (std::size_t j = i + 1; j < ls.size(); ++j) {
                ++pairs;
                certified += check_pair(ls[i], ls[j], failures);
            }
    }
    for (auto& f : failures) std::cerr << "  " << f << '\n';
    std::ostringstream os;
    os << certified << "/" << pairs << " same-order pairs certified, " << static_cast<int>(seconds_since(t0)) << "s";
    return {failures.empty() && certified == pairs, os.str()};
}

Outcome primitive_suite() {
    bool ok = true;
    std::ostringstream os;
    int groups = 0;
    for (int d : {2, 3}) {
        // (quotient order, n) -> classes
        std::map<std::pair<i64, int>, int> mult;
        for (i64 m = 1; m <= 360 * 6; ++m)
            for (auto& g : enumerate_prim(d, m)) {
                if (g.n > 6) continue;
                ++mult[{prim_quotient_order(d, g.family), g.n}];
                ++groups;
                const ClosedGroup G = closure_dense(assemble_prim_scaled(g));
                const bool good = G.order() == g.order() && center_order(G) == g.n && character_norm(G) == 1 &&
                                  (!g.solvable() || !has_noncentral_abelian_normal(G));
                if (!good) std::cerr << "  " << label_string(g) << " order " << G.order() << '\n';
                ok = ok && good;
            }
        for (int n = 1; n <= 6; ++n) {
            std::map<i64, int> want;
            if (d == 2 && n % 2 == 0) want = {{12, 2}, {24, 2}, {60, 1}};
            if (d == 3) {
                want = {{60, 1}, {168, 1}};
                if (n % 3 == 0) want.insert({{36, 3}, {72, 2}, {216, 3}, {360, 1}});
            }
            for (auto [q, k] : want)
                if (mult[{q, n}] != k) {
                    ok = false;
                    std::cerr << "  degree " << d << " n=" << n << " quotient " << q << ": " << mult[{q, n}]
                              << " classes, expected " << k << '\n';
                }
            int listed = 0;
            for (auto& [key, k] : mult)
                if (key.second == n) listed += k;
            int wanted = 0;
            for (auto& [q, k] : want) wanted += k;
            ok = ok && listed == wanted;
        }
    }
    os << groups << " primitive groups with n <= 6";
    return {ok, os.str()};
}

Outcome spot_values() {
    const auto t0 = Clock::now();
    const MonomialElement s5(Permutation::cycle_s(5));
    const ClosedGroup W = closure({s5, MonomialElement(perm_constant(5, NSFamily::U1)) * MonomialElement(twist_c(1))});
    const MonomialElement s7(Permutation::cycle_s(7));
    const ClosedGroup V = closure({s7, MonomialElement(perm_constant(7, NSFamily::V2)) * MonomialElement(twist_h(1))});
    const MonomialElement s11(Permutation::cycle_s(11));
    const ClosedGroup Q = closure({s11, MonomialElement(perm_constant(11, NSFamily::Q11_1)) * MonomialElement(twist_d(1))});
    std::ostringstream os;
    const i64 nw = character_norm(W), nv = character_norm(V), nq = character_norm(Q);
    os << "orders " << W.order() << "/" << V.order() << "/" << Q.order() << ", norms " << nw << "/" << nv << "/"
       << nq << ", " << static_cast<int>(seconds_since(t0)) << "s";
    return {W.order() == 60 && nw == 1 && V.order() == 168 && nv == 1 && Q.order() == 7920, os.str()};
}

Outcome table3() {
    const AggregateCount sol = solvable_class_count(2LL * 2 * 2 * 2 * 2 * 2 * 81 * 25 * 7, 684);
    const AggregateCount ns = nonsolvable_class_count(16LL * 3 * 15625, {5}, 25);
    std::ostringstream os;
    os << "solvable: aggregate " << sol.aggregate << ", per degree";
    for (auto& [p, n] : sol.per_degree) os << " " << p << ":" << n;
    os << " -> 684 matches " << sol.matches << "; non-solvable p=5: " << ns.aggregate << " -> 25 matches "
       << ns.matches;
    return {sol.matches != "none" && ns.matches != "none", os.str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"degree-3 cumulative class counts",
         [] { return cumulative_counts(3, {2229, 4994, 7943, 10993, 14131}); }},
        {"degree-5 cumulative class counts", [] { return cumulative_counts(5, {373, 850, 1328, 1892, 2445}); }},
        {"Hensel factor data", hensel_data},
        {"q-part generator data", generator_data},
        {"oracle completeness and irredundancy", oracle},
        {"closure and irreducibility sweep", property_suite},
        {"degree-3 pairwise non-conjugacy", non_conjugacy},
        {"degree-2/3 primitive suite", primitive_suite},
        {"non-solvable spot values", spot_values},
        {"class counts at the largest orders", table3},
    };
    int failed = 0, k = 0;
    for (auto& [name, run] : criteria) {
        ++k;
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << k << ": " << name << " -- " << o.detail
                  << std::endl;
    }
    return failed ? 1 : 0;
}
