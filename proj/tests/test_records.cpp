#include "doctest.h"
#include "monoclass/records.hpp"
#include "monoclass/verifier.hpp"

using namespace monoclass;

TEST_CASE("label strings round trip") {
    for (int p : {2, 3, 5, 7})
        for (i64 m = 1; m <= 400; ++m)
            for (auto& g : classify(p, m)) {
                const std::string s = label_string(g);
                CHECK(label_string(parse_group_label(s)) == s);
                CHECK(parse_group_label(s) == g);
            }
}

TEST_CASE("bare module labels") {
    const GroupLabel g = parse_group_label("p=3;Y=1,1,0");
    CHECK(family_of(g) == "L1");
    CHECK(order_of(g) == 27);
    CHECK(closure_of(g).order() == 27);
    CHECK_THROWS_AS(parse_group_label("p=3;Y=0,1,0"), LabelError);
}

TEST_CASE("malformed labels name the offending token") {
    CHECK_THROWS_WITH_AS(parse_group_label("p=3;Q=7"), doctest::Contains("Q=7"), LabelError);
    CHECK_THROWS_WITH_AS(parse_group_label("X9;p=3;Y=1,1,0"), doctest::Contains("X9"), LabelError);
    CHECK_THROWS_WITH_AS(parse_group_label("A4_a;deg=2;n=3"), doctest::Contains("A4_a"), LabelError);
}

TEST_CASE("JSON records") {
    const GroupRecord r = make_record(parse_group_label("L1;i=1;p=3;Y=1,1,0"));
    const auto j = to_json(r);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"degree", "order", "kind", "family", "label", "modulus", "generators"});
    CHECK(j["kind"] == "monomial");
    CHECK(j["generators"][0].contains("perm"));
    CHECK(j["generators"][0]["perm"] == nlohmann::ordered_json::array({2, 3, 1}));

    for (const std::string s : {"A5;deg=2;n=2", "PSL27;deg=3;n=2", "U1;p=5;Y=0,0,0", "M2;a=2;c=1;p=5;Y=0,0,0;W[2]=2"}) {
        GroupLabel g;
        try {
            g = parse_group_label(s);
        } catch (const LabelError&) {
            continue;
        }
        const GroupRecord x = make_record(g);
        const std::string text = to_json(x).dump();
        CHECK(to_json(make_record(g)).dump() == text);
        const GroupRecord y = record_from_json(nlohmann::ordered_json::parse(text));
        CHECK(y == x);
        CHECK(to_json(y).dump() == text);
    }
}

TEST_CASE("record generators regenerate the closure order") {
    for (int p : {2, 3, 5})
        for (i64 m = 1; m <= 240; ++m)
            for (auto& g : classify(p, m)) {
                const GroupRecord r = make_record(g);
                const auto back = record_from_json(to_json(r));
                if (back.kind == "monomial") {
                    CHECK(closure(back.mono).order() == r.order);
                } else {
                    std::vector<ScaledMatrix> gens;
                    for (auto& d : back.dense) gens.push_back(ScaledMatrix{1, 0, d});
                    CHECK(closure_dense(gens).order() == r.order);
                }
            }
}

TEST_CASE("family filters") {
    CHECK(is_known_family("L"));
    CHECK(is_known_family("L1"));
    CHECK(is_known_family("C4"));
    CHECK(is_known_family("Q11"));
    CHECK(!is_known_family("X9"));
    CHECK(!is_known_family("L12"));
    const auto a = classify(3, 108, {"C4"});
    CHECK(a.size() == 3);
    i64 total = 0;
    for (i64 m = 1; m <= 500; ++m) total += count_classes(3, m, {"M"});
    i64 direct = 0;
    for (i64 m = 1; m <= 500; ++m) direct += static_cast<i64>(enumerate_Mstar(3, m).size());
    CHECK(total == direct);
}
