#include "monoclass/modules.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "monoclass/padic.hpp"

namespace monoclass {

bool YLabel::valid(int p) const {
    if (j == 0 && l == 0 && k >= 0) return true;
    return j >= 1 && k >= 1 && l >= 0 && l <= p - 1;
}

bool WLabel::trivial() const { return c == 0 && scalar(); }

bool WLabel::scalar() const {
    return std::all_of(ns.begin(), ns.end(), [](int n) { return n == 0; });
}

const WLabel* ModuleLabel::w(int q) const {
    for (auto& x : ws)
        if (x.q == q) return &x;
    return nullptr;
}

i64 ModuleLabel::order() const {
    i64 o = ipow(p, y.j + y.k);
    for (auto& w : ws) {
        const int d = mult_order(w.q, p);
        o *= ipow(w.q, d * std::accumulate(w.ns.begin(), w.ns.end(), 0) + w.c);
    }
    return o;
}

i64 ModuleLabel::scalar_part_order(int q) const {
    if (q == p) return ipow(p, y.k);
    const WLabel* x = w(q);
    return x ? ipow(q, x->c) : 1;
}

std::vector<int> NArray::flatten() const {
    std::vector<int> out;
    for (auto& [q, row] : rows) out.insert(out.end(), row.begin(), row.end());
    return out;
}

NArray NArray::shifted(int k) const {
    NArray out;
    for (auto& [q, row] : rows) {
        const int n = static_cast<int>(row.size());
        std::vector<int> r(n);
        for (int c = 0; c < n; ++c) r[c] = row[mod(c - k, n)];
        out.rows[q] = std::move(r);
    }
    return out;
}

bool NArray::is_zero() const {
    for (auto& [q, row] : rows)
        for (int x : row)
            if (x) return false;
    return true;
}

DiagExponents x_pj_generator(int p, int j, int M) {
    if (j < 1) throw std::invalid_argument("x_pj_generator: j must be positive");
    const int n = (j + p - 2) / (p - 1);
    const int m = n * (p - 1) - j;
    const i64 pn = ipow(p, n);
    if (M % pn != 0) throw std::invalid_argument("x_pj_generator: modulus too small");
    DiagExponents x = DiagExponents::b(p, static_cast<int>(pn), M);
    for (int i = 0; i < m; ++i) x = gamma(x, p);
    return x;
}

namespace {

int y_modulus(const YLabel& y, int p) {
    if (y.j == 0) return static_cast<int>(ipow(p, y.k));
    const int n = (y.j + 1 + p - 2) / (p - 1);
    return static_cast<int>(ipow(p, std::max(n, y.l ? y.k + 1 : y.k)));
}

std::vector<DiagExponents> normalized(const std::vector<DiagExponents>& ds, int p) {
    std::vector<MonomialElement> xs;
    for (auto& d : ds) xs.emplace_back(d);
    auto ys = normalize_modulus(xs);
    std::vector<DiagExponents> out;
    for (auto& y : ys) out.push_back(y.diag());
    (void)p;
    return out;
}

}  // namespace

std::vector<DiagExponents> y_generators(const YLabel& y, int p) {
    if (!y.valid(p)) throw LabelError("invalid Y label");
    std::vector<DiagExponents> out;
    const int M = y_modulus(y, p);
    if (y.j == 0) {
        if (y.k > 0) out.push_back(DiagExponents::z(p, M, M));
        return out;
    }
    DiagExponents g = x_pj_generator(p, y.j + 1, M);
    if (y.l) g = g + DiagExponents::z(p, static_cast<int>(ipow(p, y.k + 1)), M).scaled(y.l);
    out.push_back(g);
    out.push_back(DiagExponents::z(p, static_cast<int>(ipow(p, y.k)), M));
    return normalized(out, p);
}

std::vector<DiagExponents> w_generators(const WLabel& w, int p) {
    std::vector<DiagExponents> out;
    int nmax = w.c;
    for (int n : w.ns) nmax = std::max(nmax, n);
    if (nmax == 0) return out;
    const int M = static_cast<int>(ipow(w.q, nmax));
    const Permutation s = Permutation::cycle_s(p);
    for (std::size_t r = 0; r < w.ns.size(); ++r) {
        const int n = w.ns[r];
        if (n == 0) continue;
        const FactorSystem& fs = factor_system(p, w.q, n);
        if (static_cast<int>(w.ns.size()) != fs.v) throw LabelError("W tuple length differs from v");
        const i64 qn = ipow(w.q, n);
        DiagExponents b = DiagExponents::b(p, static_cast<int>(qn), M);
        out.push_back(apply_group_ring(b, fs.cofactors[r].coeffs(), s));
    }
    if (w.c > 0) out.push_back(DiagExponents::z(p, static_cast<int>(ipow(w.q, w.c)), M));
    return normalized(out, p);
}

std::vector<DiagExponents> module_generators(const ModuleLabel& m) {
    std::vector<DiagExponents> all = y_generators(m.y, m.p);
    for (auto& w : m.ws) {
        auto g = w_generators(w, m.p);
        all.insert(all.end(), g.begin(), g.end());
    }
    if (all.empty()) return all;
    return normalized(all, m.p);
}

std::vector<YLabel> y_options(int p, int a) {
    if (a == 0) return {YLabel{0, 0, 0}};
    std::vector<YLabel> out{YLabel{0, a, 0}};
    for (int j = 1; j < a; ++j)
        for (int l = 0; l < p; ++l) out.push_back(YLabel{j, a - j, l});
    return out;
}

namespace {

void compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (parts == 0) {
        if (total == 0) out.push_back(cur);
        return;
    }
    for (int first = 0; first <= total; ++first) {
        cur.push_back(first);
        compositions(total - first, parts - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<WLabel> w_options(int p, int q, int e) {
    const int d = mult_order(q, p);
    const int v = (p - 1) / d;
    std::vector<WLabel> out;
    for (int s = 0; s * d <= e; ++s) {
        std::vector<std::vector<int>> comps;
        std::vector<int> cur;
        compositions(s, v, cur, comps);
        for (auto& ns : comps) out.push_back(WLabel{q, ns, e - d * s});
    }
    std::sort(out.begin(), out.end(), [](const WLabel& a, const WLabel& b) {
        if (a.ns != b.ns) return a.ns < b.ns;
        return a.c < b.c;
    });
    return out;
}

std::vector<ModuleLabel> enumerate_modules(int p, i64 o) {
    if (o < 1) return {};
    int a = 0;
    std::vector<std::vector<WLabel>> per_prime;
    for (auto [q, e] : factorize(o)) {
        if (q == p) a = e;
        else per_prime.push_back(w_options(p, static_cast<int>(q), e));
    }
    std::vector<ModuleLabel> out;
    for (const YLabel& y : y_options(p, a)) {
        std::vector<std::size_t> idx(per_prime.size(), 0);
        while (true) {
            ModuleLabel m{p, y, {}};
            for (std::size_t i = 0; i < per_prime.size(); ++i) m.ws.push_back(per_prime[i][idx[i]]);
            out.push_back(std::move(m));
            std::size_t i = per_prime.size();
            while (i > 0) {
                --i;
                if (++idx[i] < per_prime[i].size()) break;
                idx[i] = 0;
                if (i == 0) { i = per_prime.size() + 1; break; }
            }
            if (per_prime.empty() || i == per_prime.size() + 1) break;
        }
    }
    return out;
}

ModuleLabel t_act(const ModuleLabel& m) {
    ModuleLabel r = m;
    const int u = primitive_root(m.p);
    r.y.l = static_cast<int>(mod(static_cast<i64>(m.y.l) * powmod(u, m.y.j, m.p), m.p));
    for (auto& w : r.ws)
        if (!w.ns.empty()) std::rotate(w.ns.rbegin(), w.ns.rbegin() + 1, w.ns.rend());
    return r;
}

NArray narray(const ModuleLabel& m) {
    NArray n;
    for (auto& w : m.ws) {
        const int v = static_cast<int>(w.ns.size());
        std::vector<int> row(m.p - 1);
        for (int c = 0; c < m.p - 1; ++c) row[c] = w.ns[c % v];
        n.rows[w.q] = std::move(row);
    }
    return n;
}

bool is_shift_minimal(const NArray& n, int step) {
    if (n.rows.empty()) return true;
    const int cols = static_cast<int>(n.rows.begin()->second.size());
    const auto f0 = n.flatten();
    for (int k = step; k < cols; k += step)
        if (n.shifted(k).flatten() < f0) return false;
    return true;
}

bool is_shift_fixed(const NArray& n, int step) { return n.shifted(step) == n; }

bool in_A_a(const ModuleLabel& m, int a) {
    if (a < 1 || (m.p - 1) % a != 0) throw std::invalid_argument("in_A_a: a must divide p-1");
    if (!is_shift_fixed(narray(m), a)) return false;
    return m.y.l == 0 || (static_cast<i64>(a) * m.y.j) % (m.p - 1) == 0;
}

namespace {

bool y_s_shape(const ModuleLabel& m) {
    const int pm = m.p - 1;
    return m.y.j % pm == 0 || (m.y.l == 0 && (m.y.j + 1) % pm == 0);
}

}  // namespace

bool in_A_S(const ModuleLabel& m) { return y_s_shape(m) && is_shift_fixed(narray(m), 1); }

bool is_zigzag(const ModuleLabel& m, int q, bool first_bigger) {
    if (!y_s_shape(m)) return false;
    const WLabel* w = m.w(q);
    if (!w || w->ns.size() != 2) return false;
    const int a = w->ns[0], b = w->ns[1];
    if (first_bigger ? a != b + 1 : b != a + 1) return false;
    for (auto& x : m.ws) {
        if (x.q == q) continue;
        ModuleLabel one{m.p, {}, {x}};
        if (!is_shift_fixed(narray(one), 1)) return false;
    }
    return true;
}

bool in_A_V(const ModuleLabel& m) { return m.p == 7 && (in_A_S(m) || is_zigzag(m, 2, true)); }
bool in_A_P(const ModuleLabel& m) { return m.p == 11 && (in_A_S(m) || is_zigzag(m, 3, false)); }
bool in_A_Q(const ModuleLabel& m) { return m.p == 23 && (in_A_S(m) || is_zigzag(m, 2, true)); }

bool has_nonscalar_w(const ModuleLabel& m) {
    return std::any_of(m.ws.begin(), m.ws.end(), [](const WLabel& w) { return !w.scalar(); });
}

bool is_scalar(const ModuleLabel& m) { return m.y.j == 0 && m.y.l == 0 && !has_nonscalar_w(m); }

std::string to_string(const ModuleLabel& m) {
    std::ostringstream os;
    os << "p=" << m.p << ";Y=" << m.y.j << "," << m.y.k << "," << m.y.l;
    for (auto& w : m.ws) {
        if (w.trivial()) continue;
        os << ";W[" << w.q << "]=";
        for (int n : w.ns) os << n << ",";
        os << w.c;
    }
    return os.str();
}

namespace {

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

int parse_int(const std::string& s, const std::string& token) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw LabelError("malformed label token '" + token + "'");
    try {
        return std::stoi(s);
    } catch (const std::exception&) {
        throw LabelError("malformed label token '" + token + "'");
    }
}

}  // namespace

ModuleLabel parse_module_tokens(const std::vector<std::string>& tokens) {
    ModuleLabel m;
    bool have_p = false, have_y = false;
    for (const std::string& t : tokens) {
        auto eq = t.find('=');
        if (eq == std::string::npos) throw LabelError("malformed label token '" + t + "'");
        const std::string key = t.substr(0, eq), val = t.substr(eq + 1);
        if (key == "p") {
            m.p = parse_int(val, t);
            if (!is_prime(m.p)) throw LabelError("label token '" + t + "' is not a prime degree");
            have_p = true;
        } else if (key == "Y") {
            if (!have_p) throw LabelError("label token '" + t + "' precedes p=");
            auto parts = split(val, ',');
            if (parts.size() != 3) throw LabelError("malformed label token '" + t + "'");
            m.y = YLabel{parse_int(parts[0], t), parse_int(parts[1], t), parse_int(parts[2], t)};
            if (!m.y.valid(m.p)) throw LabelError("invalid Y parameters in token '" + t + "'");
            have_y = true;
        } else if (key.size() > 3 && key.rfind("W[", 0) == 0 && key.back() == ']') {
            if (!have_p) throw LabelError("label token '" + t + "' precedes p=");
            WLabel w;
            w.q = parse_int(key.substr(2, key.size() - 3), t);
            if (!is_prime(w.q) || w.q == m.p) throw LabelError("invalid prime in token '" + t + "'");
            if (!m.ws.empty() && m.ws.back().q >= w.q) throw LabelError("W blocks out of order at token '" + t + "'");
            auto parts = split(val, ',');
            const int v = (m.p - 1) / mult_order(w.q, m.p);
            if (static_cast<int>(parts.size()) != v + 1) throw LabelError("wrong tuple length in token '" + t + "'");
            for (int i = 0; i < v; ++i) w.ns.push_back(parse_int(parts[i], t));
            w.c = parse_int(parts[v], t);
            if (!w.trivial()) m.ws.push_back(std::move(w));
        } else {
            throw LabelError("unknown label token '" + t + "'");
        }
    }
    if (!have_p) throw LabelError("label lacks p=");
    if (!have_y) throw LabelError("label lacks Y=");
    return m;
}

ModuleLabel parse_module_label(const std::string& s) { return parse_module_tokens(split(s, ';')); }

}  // namespace monoclass
