#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "monoclass/oracle.hpp"
#include "monoclass/records.hpp"

namespace monoclass {

struct AuditOptions {
    bool closures = true;
    // groups closed per order; 0 means all
    std::size_t sample = 0;
    bool pairs = true;
    // pairwise checks only up to this order; 0 means no limit
    i64 pair_max_order = 0;
    // oracle cross-checks at the small moduli within budget
    bool deep = false;
};

struct OrderReport {
    i64 order = 0;
    std::map<std::string, int> family_counts;
    int checks_passed = 0;
    std::vector<std::string> failures;
};

struct AuditReport {
    int degree = 0;
    i64 max_order = 0;
    // monomial classes; primitive classes are counted separately
    i64 total = 0;
    i64 primitive = 0;
    std::vector<OrderReport> orders;
    std::vector<OracleComparison> oracle;
    std::vector<std::string> failures;

    bool ok() const;
};

// checks one listed class; failures are appended, returns the number of checks passed
int check_group(const GroupLabel& g, std::vector<std::string>& failures);
// 1 when certified non-conjugate, failures appended otherwise
int check_pair(const GroupLabel& a, const GroupLabel& b, std::vector<std::string>& failures);

AuditReport audit(int p, i64 max_order, const AuditOptions& opt = {});
nlohmann::ordered_json to_json(const AuditReport& r);

struct AggregateCount {
    i64 order = 0;
    std::map<int, i64> per_degree;
    i64 aggregate = 0;
    i64 expected = 0;
    // "aggregate", "degree <p>", or "none"
    std::string matches;
};

// solvable monomial classes of order m over every prime p | m
AggregateCount solvable_class_count(i64 m, i64 expected);
// non-solvable monomial classes of order m over the given degrees
AggregateCount nonsolvable_class_count(i64 m, const std::vector<int>& degrees, i64 expected);
nlohmann::ordered_json to_json(const AggregateCount& c);

}  // namespace monoclass
