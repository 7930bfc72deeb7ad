#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "monoclass/audit.hpp"

using namespace monoclass;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kUnsupported = 3 };

struct Selection {
    int degree = 0;
    std::string kind;
    std::vector<std::string> families;

    FamilyFilter filter() const {
        FamilyFilter f;
        for (auto& item : families) {
            std::stringstream ss(item);
            std::string tok;
            while (std::getline(ss, tok, ','))
                if (!tok.empty()) {
                    if (!is_known_family(tok)) throw LabelError("unknown family token '" + tok + "'");
                    f.insert(tok);
                }
        }
        return f;
    }
    std::vector<GroupLabel> labels(i64 m, const FamilyFilter& f) const {
        std::vector<GroupLabel> out;
        for (auto& g : classify(degree, m, f)) {
            if (kind == "monomial" && !is_monomial(g)) continue;
            if (kind == "primitive" && is_monomial(g)) continue;
            out.push_back(std::move(g));
        }
        return out;
    }
};

void add_selection(CLI::App* cmd, Selection& sel, const std::string& default_kind) {
    sel.kind = default_kind;
    cmd->add_option("--degree,-p", sel.degree, "prime degree")->required();
    cmd->add_option("--family,-f", sel.families, "family tags (repeatable or comma separated)");
    cmd->add_option("--kind", sel.kind, "all, monomial or primitive")
        ->check(CLI::IsMember({"all", "monomial", "primitive"}))
        ->capture_default_str();
}

void require_prime(int p) {
    if (!is_prime(p)) throw std::invalid_argument("degree " + std::to_string(p) + " is not prime");
}

int run_enumerate(const Selection& sel, i64 order, i64 max_order, const std::string& format) {
    require_prime(sel.degree);
    const FamilyFilter f = sel.filter();
    i64 lo = order, hi = order;
    if (order == 0) lo = 1, hi = max_order;
    else if (max_order != 0) hi = max_order;
    if (lo < 1 || hi < lo) throw std::invalid_argument("need --order and/or --max-order with 1 <= order <= max-order");
    if (order != 0 && max_order == 0 && order % sel.degree != 0)
        std::cerr << "warning: " << sel.degree << " does not divide " << order << "; no groups of this order\n";
    for (i64 m = lo; m <= hi; ++m)
        for (auto& g : sel.labels(m, f)) {
            if (format == "labels") std::cout << label_string(g) << '\n';
            else std::cout << to_json(make_record(g)).dump() << '\n';
        }
    return kOk;
}

int run_count(const Selection& sel, i64 max_order, bool per_order) {
    require_prime(sel.degree);
    const FamilyFilter f = sel.filter();
    i64 total = 0;
    for (i64 m = 1; m <= max_order; ++m) {
        const i64 c = static_cast<i64>(sel.labels(m, f).size());
        if (per_order && c > 0) std::cout << m << ' ' << c << '\n';
        total += c;
    }
    if (per_order) std::cout << "total " << total << '\n';
    else std::cout << total << '\n';
    return kOk;
}

int run_verify(int degree, i64 max_order, const AuditOptions& opt) {
    require_prime(degree);
    const AuditReport r = audit(degree, max_order, opt);
    std::cout << to_json(r).dump(2) << '\n';
    if (r.ok()) return kOk;
    std::size_t shown = 0;
    auto show = [&](const std::string& s) {
        if (shown++ < 20) std::cerr << "failure: " << s << '\n';
    };
    for (auto& s : r.failures) show(s);
    for (auto& o : r.orders)
        for (auto& s : o.failures) show(s);
    for (auto& c : r.oracle)
        for (auto& s : c.discrepancies) show("oracle M=" + std::to_string(c.M) + ": " + s);
    return kCheckFailed;
}

int run_export(const std::string& input, const std::string& out) {
    std::ifstream fin;
    if (input != "-") {
        fin.open(input);
        if (!fin) throw std::invalid_argument("cannot read " + input);
    }
    std::istream& in = input == "-" ? std::cin : fin;
    std::ostringstream buf;
    std::string line;
    while (std::getline(in, line)) {
        const auto a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos || line[a] == '#') continue;
        const auto b = line.find_last_not_of(" \t\r");
        const GroupRecord rec = make_record(parse_group_label(line.substr(a, b - a + 1)));
        const std::string text = to_json(rec).dump();
        if (!(record_from_json(nlohmann::ordered_json::parse(text)) == rec))
            throw std::logic_error("export round trip failed for " + rec.label);
        buf << text << '\n';
    }
    if (out == "-") {
        std::cout << buf.str();
    } else {
        std::ofstream fout(out, std::ios::binary);
        if (!fout) throw std::invalid_argument("cannot write " + out);
        fout << buf.str();
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite irreducible monomial and small-degree primitive subgroups of GL(p,C)"};
    app.require_subcommand(1);

    Selection esel, csel;
    i64 e_order = 0, e_max = 0, c_max = 0, v_max = 0;
    std::string e_format = "json";
    bool per_order = false;
    int v_degree = 0;
    AuditOptions vopt;
    bool no_pairs = false;
    std::string x_in, x_out = "-";

    auto* en = app.add_subcommand("enumerate", "list class representatives");
    add_selection(en, esel, "all");
    en->add_option("--order,-m", e_order, "group order");
    en->add_option("--max-order,-M", e_max, "largest order");
    en->add_option("--format", e_format, "json or labels")
        ->check(CLI::IsMember({"json", "labels"}))
        ->capture_default_str();

    auto* co = app.add_subcommand("count", "count classes of order at most M");
    add_selection(co, csel, "monomial");
    co->add_option("--max-order,-M", c_max, "largest order")->required();
    co->add_flag("--per-order", per_order, "one line per order");

    auto* ve = app.add_subcommand("verify", "audit the lists");
    ve->add_option("--degree,-p", v_degree, "prime degree")->required();
    ve->add_option("--max-order,-M", v_max, "largest order")->required();
    ve->add_flag("--deep", vopt.deep, "cross-check against the exhaustive oracle at small moduli");
    ve->add_option("--sample", vopt.sample, "closures per order (0 = all)");
    ve->add_flag("--no-pairs", no_pairs, "skip pairwise non-conjugacy checks");
    ve->add_option("--pair-max-order", vopt.pair_max_order, "pairwise checks only up to this order (0 = all)");

    auto* ex = app.add_subcommand("export", "write JSON records for a file of labels");
    ex->add_option("--input,-i", x_in, "label file, one per line ('-' for stdin)")->required();
    ex->add_option("--out,-o", x_out, "output file ('-' for stdout)")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    vopt.pairs = !no_pairs;

    try {
        if (*en) return run_enumerate(esel, e_order, e_max, e_format);
        if (*co) return run_count(csel, c_max, per_order);
        if (*ve) return run_verify(v_degree, v_max, vopt);
        if (*ex) return run_export(x_in, x_out);
    } catch (const UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return kUnsupported;
    } catch (const LabelError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kCheckFailed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCheckFailed;
    }
    return kUsage;
}
