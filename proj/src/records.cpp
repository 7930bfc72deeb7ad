#include "monoclass/records.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace monoclass {

namespace {

const std::vector<std::string> kSolvableFamilies{"L1", "L2", "L3", "L4", "M1", "M2", "M3"};
const std::vector<std::string> kNSFamilies{"R0", "R1", "U0", "U1", "V0", "V1", "V2", "P11", "Q11_0", "Q11_1", "Q23"};
const std::vector<std::string> kPrimFamilies{"A4_a", "A4_b", "S4_a", "S4_b", "A5",     "C4_1",  "C4_2", "C4_3",
                                             "Q8_1", "Q8_2", "SL23_0", "SL23_1", "SL23_2", "Alt5", "PSL27", "Alt6"};

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool token_matches(const std::string& token, const std::string& fam) {
    if (token == fam) return true;
    if (fam.size() <= token.size() || fam.compare(0, token.size(), token) != 0) return false;
    const char next = fam[token.size()];
    return next == '_' || (next >= '0' && next <= '9');
}

bool selected(const FamilyFilter& filter, const std::string& fam) {
    if (filter.empty()) return true;
    return std::any_of(filter.begin(), filter.end(), [&](const std::string& t) { return token_matches(t, fam); });
}

bool any_selected(const FamilyFilter& filter, const std::vector<std::string>& fams) {
    return std::any_of(fams.begin(), fams.end(), [&](const std::string& f) { return selected(filter, f); });
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) out.push_back(cur), cur.clear();
        else cur += ch;
    }
    out.push_back(cur);
    return out;
}

int parse_param(const std::string& tok, const std::string& key) {
    const std::string v = tok.substr(key.size() + 1);
    if (v.empty() || v.size() > 9 || !std::all_of(v.begin(), v.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw LabelError("malformed label token '" + tok + "'");
    return std::stoi(v);
}

std::string key_of(const std::string& tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw LabelError("malformed label token '" + tok + "'");
    return tok.substr(0, eq);
}

GroupLabel resolve_module(const ModuleLabel& mod, const std::string& text) {
    const int p = mod.p;
    const i64 o = mod.order();
    for (auto& g : enumerate_Lstar(p, p * o))
        if (g.module == mod) return g;
    if (p > 2) {
        for (int a = 1; a < p - 1; ++a) {
            if ((p - 1) % a != 0) continue;
            const i64 m = static_cast<i64>(p) * ((p - 1) / a) * o;
            for (auto& g : enumerate_Mstar(p, m))
                if (g.a == a && g.module == mod) return g;
        }
    }
    if (p >= 5) {
        require_supported(p);
        std::vector<i64> orders;
        for (const std::string& f : kNSFamilies) {
            for (NSFamily nf : {NSFamily::R0, NSFamily::R1, NSFamily::U0, NSFamily::U1, NSFamily::V0, NSFamily::V1,
                                NSFamily::V2, NSFamily::P11, NSFamily::Q11_0, NSFamily::Q11_1, NSFamily::Q23}) {
                if (family_name(nf) != f) continue;
                const i64 po = perm_part_order(nf, p);
                if (po > 0 && std::find(orders.begin(), orders.end(), po) == orders.end()) orders.push_back(po);
            }
        }
        for (i64 po : orders)
            for (auto& g : enumerate_ns(p, po * o))
                if (g.module == mod) return g;
    }
    throw LabelError("module label '" + text + "' names no listed group");
}

}  // namespace

bool is_known_family(const std::string& token) {
    for (auto* fams : {&kSolvableFamilies, &kNSFamilies, &kPrimFamilies})
        for (auto& f : *fams)
            if (token_matches(token, f)) return true;
    return false;
}

bool is_solvable_family(const std::string& token) {
    for (auto& f : kSolvableFamilies)
        if (token_matches(token, f)) return true;
    return false;
}

std::string family_of(const GroupLabel& g) {
    return std::visit(overloaded{[](const SolvableLabel& x) { return family_name(x.family); },
                                 [](const NSLabel& x) { return family_name(x.family); },
                                 [](const PrimLabel& x) { return x.family; }},
                      g);
}

int degree_of(const GroupLabel& g) {
    return std::visit(overloaded{[](const SolvableLabel& x) { return x.p; }, [](const NSLabel& x) { return x.p; },
                                 [](const PrimLabel& x) { return x.degree; }},
                      g);
}

i64 order_of(const GroupLabel& g) {
    return std::visit([](const auto& x) { return x.order(); }, g);
}

bool is_monomial(const GroupLabel& g) { return !std::holds_alternative<PrimLabel>(g); }

bool is_solvable(const GroupLabel& g) {
    if (std::holds_alternative<SolvableLabel>(g)) return true;
    if (auto* x = std::get_if<PrimLabel>(&g)) return x->solvable();
    return false;
}

i64 diagonal_order(const GroupLabel& g) {
    return std::visit(overloaded{[](const SolvableLabel& x) { return x.module.order(); },
                                 [](const NSLabel& x) { return x.module.order(); },
                                 [](const PrimLabel& x) { return static_cast<i64>(x.n); }},
                      g);
}

std::string label_string(const GroupLabel& g) {
    std::ostringstream os;
    std::visit(overloaded{[&](const SolvableLabel& x) {
                              os << family_name(x.family) << ";";
                              if (x.family == SolvableFamily::L1) os << "i=" << x.i << ";";
                              if (x.family >= SolvableFamily::M1) os << "a=" << x.a << ";c=" << x.c << ";";
                              os << to_string(x.module);
                          },
                          [&](const NSLabel& x) { os << family_name(x.family) << ";" << to_string(x.module); },
                          [&](const PrimLabel& x) { os << x.family << ";deg=" << x.degree << ";n=" << x.n; }},
               g);
    return os.str();
}

GroupLabel parse_group_label(const std::string& s) {
    if (s.empty()) throw LabelError("empty label");
    auto tokens = split(s, ';');
    if (tokens[0].find('=') != std::string::npos) return resolve_module(parse_module_tokens(tokens), s);
    const std::string fam = tokens[0];
    std::vector<std::string> rest(tokens.begin() + 1, tokens.end());

    auto sf = std::find(kSolvableFamilies.begin(), kSolvableFamilies.end(), fam);
    if (sf != kSolvableFamilies.end()) {
        SolvableLabel g;
        g.family = static_cast<SolvableFamily>(sf - kSolvableFamilies.begin());
        g.i = g.family == SolvableFamily::L2 ? 1 : 0;
        std::vector<std::string> mod;
        for (auto& t : rest) {
            const std::string k = key_of(t);
            if (k == "i" && g.family == SolvableFamily::L1) g.i = parse_param(t, k);
            else if ((k == "a" || k == "c") && g.family >= SolvableFamily::M1)
                (k == "a" ? g.a : g.c) = parse_param(t, k);
            else if (k == "i" || k == "a" || k == "c") throw LabelError("unexpected label token '" + t + "'");
            else mod.push_back(t);
        }
        g.module = parse_module_tokens(mod);
        g.p = g.module.p;
        if (!is_valid(g)) throw LabelError("label '" + s + "' violates the conditions of family '" + fam + "'");
        return g;
    }
    auto nf = std::find(kNSFamilies.begin(), kNSFamilies.end(), fam);
    if (nf != kNSFamilies.end()) {
        NSLabel g;
        g.family = static_cast<NSFamily>(nf - kNSFamilies.begin());
        g.module = parse_module_tokens(rest);
        g.p = g.module.p;
        require_supported(g.p);
        g.n = twist_index(g.family, g.module);
        if (!is_valid(g)) throw LabelError("label '" + s + "' violates the conditions of family '" + fam + "'");
        return g;
    }
    if (std::find(kPrimFamilies.begin(), kPrimFamilies.end(), fam) != kPrimFamilies.end()) {
        PrimLabel g{0, fam, 0};
        for (auto& t : rest) {
            const std::string k = key_of(t);
            if (k == "deg") g.degree = parse_param(t, k);
            else if (k == "n") g.n = parse_param(t, k);
            else throw LabelError("unknown label token '" + t + "'");
        }
        if (!is_valid(g)) throw LabelError("label '" + s + "' violates the conditions of family '" + fam + "'");
        return g;
    }
    throw LabelError("unknown family token '" + fam + "'");
}

std::vector<GroupLabel> classify(int p, i64 m, const FamilyFilter& filter) {
    if (!is_prime(p)) throw std::invalid_argument("degree must be prime");
    std::vector<GroupLabel> out;
    if (m < 1) return out;
    auto take = [&](auto&& labels) {
        for (auto& g : labels)
            if (selected(filter, family_of(g))) out.push_back(std::move(g));
    };
    if (any_selected(filter, {"L1", "L2", "L3", "L4"})) take(enumerate_Lstar(p, m));
    if (any_selected(filter, {"M1", "M2", "M3"})) take(enumerate_Mstar(p, m));
    if (any_selected(filter, kNSFamilies)) take(enumerate_ns(p, m));
    if (p <= 3 && any_selected(filter, kPrimFamilies)) take(enumerate_prim(p, m));
    return out;
}

i64 count_classes(int p, i64 m, const FamilyFilter& filter) {
    return static_cast<i64>(classify(p, m, filter).size());
}

std::vector<MonomialElement> monomial_generators(const GroupLabel& g) {
    if (auto* x = std::get_if<SolvableLabel>(&g)) return assemble_solvable(*x);
    if (auto* x = std::get_if<NSLabel>(&g)) return assemble_ns(*x);
    throw std::invalid_argument("monomial_generators: primitive label");
}

GroupRecord make_record(const GroupLabel& g) {
    GroupRecord r;
    r.degree = degree_of(g);
    r.order = order_of(g);
    r.kind = is_monomial(g) ? "monomial" : "primitive";
    r.family = family_of(g);
    r.label = label_string(g);
    if (is_monomial(g)) {
        r.mono = monomial_generators(g);
        r.modulus = r.mono.empty() ? 1 : r.mono[0].modulus();
    } else {
        r.dense = assemble_prim(std::get<PrimLabel>(g));
        int L = 1;
        for (auto& d : r.dense) L = std::lcm(L, d.modulus());
        for (auto& d : r.dense) d = d.with_modulus(L);
        r.modulus = L;
    }
    return r;
}

nlohmann::ordered_json cyclotomic_to_json(const CyclotomicNumber& x) {
    nlohmann::ordered_json j;
    j["modulus"] = x.modulus();
    auto coeffs = nlohmann::ordered_json::array();
    for (const Rational& c : x.coeffs()) coeffs.push_back(c.get_num().get_str() + "/" + c.get_den().get_str());
    j["coeffs"] = coeffs;
    return j;
}

CyclotomicNumber cyclotomic_from_json(const nlohmann::ordered_json& j) {
    const int M = j.at("modulus").get<int>();
    std::vector<Rational> c;
    for (auto& s : j.at("coeffs")) {
        Rational r;
        if (r.set_str(s.get<std::string>(), 10) != 0) throw std::invalid_argument("bad rational " + s.dump());
        r.canonicalize();
        c.push_back(r);
    }
    if (static_cast<int>(c.size()) != euler_phi(M)) throw std::invalid_argument("coefficient count differs from phi(M)");
    return CyclotomicNumber::from_coeffs(M, c);
}

nlohmann::ordered_json dense_to_json(const DenseMatrix& a) {
    nlohmann::ordered_json j;
    j["degree"] = a.degree();
    j["modulus"] = a.modulus();
    auto rows = nlohmann::ordered_json::array();
    for (int i = 0; i < a.degree(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (int k = 0; k < a.degree(); ++k) row.push_back(cyclotomic_to_json(a(i, k)));
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j;
}

DenseMatrix dense_from_json(const nlohmann::ordered_json& j) {
    std::vector<std::vector<CyclotomicNumber>> rows;
    for (auto& r : j.at("rows")) {
        rows.emplace_back();
        for (auto& x : r) rows.back().push_back(cyclotomic_from_json(x));
    }
    DenseMatrix a = DenseMatrix::from_rows(rows);
    const int M = j.at("modulus").get<int>();
    if (M % a.modulus() != 0) throw std::invalid_argument("dense matrix modulus too small");
    return a.with_modulus(M);
}

nlohmann::ordered_json to_json(const GroupRecord& r) {
    nlohmann::ordered_json j;
    j["degree"] = r.degree;
    j["order"] = r.order;
    j["kind"] = r.kind;
    j["family"] = r.family;
    j["label"] = r.label;
    j["modulus"] = r.modulus;
    auto gens = nlohmann::ordered_json::array();
    for (auto& x : r.mono) {
        nlohmann::ordered_json g;
        g["perm"] = x.perm().images1();
        g["diag"] = x.diag().exps();
        gens.push_back(g);
    }
    for (auto& d : r.dense) gens.push_back(nlohmann::ordered_json{{"dense", dense_to_json(d)}});
    j["generators"] = gens;
    return j;
}

GroupRecord record_from_json(const nlohmann::ordered_json& j) {
    GroupRecord r;
    r.degree = j.at("degree").get<int>();
    r.order = j.at("order").get<i64>();
    r.kind = j.at("kind").get<std::string>();
    r.family = j.at("family").get<std::string>();
    r.label = j.at("label").get<std::string>();
    r.modulus = j.at("modulus").get<int>();
    for (auto& g : j.at("generators")) {
        if (g.contains("dense")) {
            r.dense.push_back(dense_from_json(g.at("dense")));
        } else {
            auto perm = Permutation::from_images(g.at("perm").get<std::vector<int>>());
            DiagExponents d(r.modulus, g.at("diag").get<std::vector<i64>>());
            r.mono.emplace_back(d, perm);
        }
    }
    return r;
}

}  // namespace monoclass
