#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "monoclass/monomial.hpp"

namespace monoclass {

class LabelError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct YLabel {
    int j = 0, k = 0, l = 0;
    bool valid(int p) const;
    bool trivial() const { return j == 0 && k == 0 && l == 0; }
    friend auto operator<=>(const YLabel&, const YLabel&) = default;
};

struct WLabel {
    int q = 0;
    std::vector<int> ns;
    int c = 0;
    bool trivial() const;
    bool scalar() const;
    friend auto operator<=>(const WLabel&, const WLabel&) = default;
};

struct ModuleLabel {
    int p = 0;
    YLabel y;
    std::vector<WLabel> ws;  // ascending q, non-trivial blocks only
    friend auto operator<=>(const ModuleLabel&, const ModuleLabel&) = default;

    const WLabel* w(int q) const;
    i64 order() const;
    i64 scalar_part_order(int q) const;
};

// columns 0..p-2 per prime, rows keyed by ascending q
struct NArray {
    std::map<int, std::vector<int>> rows;
    std::vector<int> flatten() const;
    NArray shifted(int k) const;
    bool is_zero() const;
    friend bool operator==(const NArray&, const NArray&) = default;
};

DiagExponents x_pj_generator(int p, int j, int M);
std::vector<DiagExponents> y_generators(const YLabel& y, int p);
std::vector<DiagExponents> w_generators(const WLabel& w, int p);
// all generators on one minimal common modulus
std::vector<DiagExponents> module_generators(const ModuleLabel& m);

std::vector<ModuleLabel> enumerate_modules(int p, i64 o);
// the (n_1..n_v, c) options of a q^e block, lexicographic
std::vector<WLabel> w_options(int p, int q, int e);
std::vector<YLabel> y_options(int p, int a);

ModuleLabel t_act(const ModuleLabel& m);
NArray narray(const ModuleLabel& m);
bool is_shift_minimal(const NArray& n, int step);
bool is_shift_fixed(const NArray& n, int step);

bool in_A_a(const ModuleLabel& m, int a);
bool in_A_S(const ModuleLabel& m);
bool in_A_V(const ModuleLabel& m);
bool in_A_P(const ModuleLabel& m);
bool in_A_Q(const ModuleLabel& m);
// Y part in the S shape and the q-row equal to a zig-zag pair (first entry larger if first_bigger)
bool is_zigzag(const ModuleLabel& m, int q, bool first_bigger);
bool is_scalar(const ModuleLabel& m);
bool has_nonscalar_w(const ModuleLabel& m);

std::string to_string(const ModuleLabel& m);
ModuleLabel parse_module_label(const std::string& s);
// parses the module tokens (p=, Y=, W[q]=) from a pre-split token list
ModuleLabel parse_module_tokens(const std::vector<std::string>& tokens);

}  // namespace monoclass
