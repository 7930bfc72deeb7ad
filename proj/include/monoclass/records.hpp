#pragma once

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "monoclass/nonsolvable.hpp"
#include "monoclass/primitive.hpp"
#include "monoclass/solvable.hpp"

namespace monoclass {

using GroupLabel = std::variant<SolvableLabel, NSLabel, PrimLabel>;

std::string family_of(const GroupLabel& g);
int degree_of(const GroupLabel& g);
i64 order_of(const GroupLabel& g);
bool is_monomial(const GroupLabel& g);
bool is_solvable(const GroupLabel& g);
// the diagonal subgroup order of a monomial label; the center order of a primitive one
i64 diagonal_order(const GroupLabel& g);

std::string label_string(const GroupLabel& g);
// accepts full group labels and bare module labels (first matching class in enumeration order)
GroupLabel parse_group_label(const std::string& s);

// empty filter means every family
using FamilyFilter = std::set<std::string>;
bool is_known_family(const std::string& token);
bool is_solvable_family(const std::string& token);

// all classes of irreducible subgroups of GL(p, C) of order m covered by the lists:
// monomial for every prime p, plus primitive for p <= 3
std::vector<GroupLabel> classify(int p, i64 m, const FamilyFilter& filter = {});
i64 count_classes(int p, i64 m, const FamilyFilter& filter = {});

struct GroupRecord {
    int degree = 0;
    i64 order = 0;
    std::string kind;  // monomial | primitive
    std::string family;
    std::string label;
    int modulus = 1;
    std::vector<MonomialElement> mono;
    std::vector<DenseMatrix> dense;

    friend bool operator==(const GroupRecord&, const GroupRecord&) = default;
};

std::vector<MonomialElement> monomial_generators(const GroupLabel& g);
GroupRecord make_record(const GroupLabel& g);

nlohmann::ordered_json cyclotomic_to_json(const CyclotomicNumber& x);
CyclotomicNumber cyclotomic_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json dense_to_json(const DenseMatrix& a);
DenseMatrix dense_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json to_json(const GroupRecord& r);
GroupRecord record_from_json(const nlohmann::ordered_json& j);

}  // namespace monoclass
