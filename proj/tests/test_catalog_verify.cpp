#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <fstream>

#include "json.hpp"
#include "sext/verify.hpp"

using namespace sext;

static nlohmann::json golden() {
  static nlohmann::json j = [] {
    std::ifstream in(std::string(SEXT_GOLDEN_DIR) + "/derived_values.json");
    REQUIRE(in);
    nlohmann::json v;
    in >> v;
    return v;
  }();
  return j;
}

TEST_CASE("exhaustive enumeration sizes match the frozen counts") {
  std::vector<std::int64_t> classes = golden()["semigroup_iso_class_counts"]["value"];
  std::vector<std::int64_t> tables = golden()["associative_table_counts"]["value"];
  for (int n = 1; n <= 3; ++n) {
    ExhaustiveLevel level = enumerate_semigroups_of_order(n);
    CHECK(level.reps.size() == static_cast<std::size_t>(classes[n - 1]));
    CHECK(level.associative_tables == tables[n - 1]);
  }
  CHECK_THROWS_AS(enumerate_semigroups_of_order(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_semigroups_of_order(4), std::invalid_argument);
}

TEST_CASE("order-2 representatives cover the known classes exactly once") {
  ExhaustiveLevel level = enumerate_semigroups_of_order(2);
  REQUIRE(level.reps.size() == 5);
  std::vector<FiniteSemigroup> known = {make_null(2), make_linear_semilattice(2),
                                        make_left_zero(2), make_right_zero(2),
                                        make_cyclic(2)};
  for (const auto& k : known) {
    int hits = 0;
    for (const auto& r : level.reps)
      if (is_isomorphic(k, r)) ++hits;
    CHECK(hits == 1);
  }
}

TEST_CASE("catalog construction") {
  Catalog ex = exhaustive_catalog(3);
  CHECK(ex.entries.size() == 30);  // 1 + 5 + 24
  CHECK(ex.entries.front().name == "S1_01");
  CHECK(ex.provenance.find("exhaustive") != std::string::npos);

  Catalog cur = curated_catalog(4);
  CHECK(cur.entries.size() == 19);
  for (const auto& e : cur.entries) {
    CHECK(e.sg.order() <= 4);
    CHECK(e.sg.same_table(parse_semigroup_expr(e.name)));
  }
  CHECK(curated_catalog(8).entries.size() == 21);
  CHECK_THROWS_AS(exhaustive_catalog(4), std::invalid_argument);
}

TEST_CASE("catalog selectors") {
  CHECK(parse_catalog_selector("exhaustive").entries.size() == 30);
  CHECK(parse_catalog_selector("exhaustive:2").entries.size() == 6);
  CHECK(parse_catalog_selector("curated:3").entries.size() == 9);
  Catalog dflt = parse_catalog_selector("default");
  CHECK(dflt.entries.size() == 40);  // 30 exhaustive + 10 curated of order 4
  for (std::size_t i = 30; i < dflt.entries.size(); ++i)
    CHECK(dflt.entries[i].sg.order() == 4);
  CHECK_THROWS_AS(parse_catalog_selector("bogus"), std::invalid_argument);
  CHECK_THROWS_AS(parse_catalog_selector("default:2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_catalog_selector("exhaustive:x"), std::invalid_argument);
}

TEST_CASE("theorem specs") {
  CHECK(theorem_spec("t1l").cls == ExtensionClass::lambda);
  CHECK(theorem_spec("t1u").semilattice_form);
  CHECK_FALSE(theorem_spec("t1n").regular_in_n2);
  CHECK(theorem_spec("t1f").regular_in_n2);
  CHECK_THROWS_AS(theorem_spec("t9x"), std::invalid_argument);
}

TEST_CASE("linked-family theorem over the order-2 catalog") {
  TheoremReport rep = verify_theorem("t1n", exhaustive_catalog(2));
  CHECK(rep.all_equivalent);
  CHECK(rep.satisfier_entries.size() == 3);  // trivial, two-chain, C2
  CHECK(rep.satisfier_families ==
        std::vector<std::string>{"C2", "L1", "L2"});
  for (const auto& e : rep.entries) {
    CHECK_FALSE(e.skipped);
    CHECK(e.equivalent);
  }
}

TEST_CASE("full-family theorem over the order-2 catalog") {
  TheoremReport rep = verify_theorem("t1u", exhaustive_catalog(2));
  CHECK(rep.all_equivalent);
  CHECK(rep.satisfier_families == std::vector<std::string>{"L1", "L2"});
}

TEST_CASE("non-members fail all four conditions together") {
  Catalog two;
  two.provenance = "ad hoc";
  two.entries.push_back({"N2", make_null(2)});
  two.entries.push_back({"LZ2", make_left_zero(2)});
  for (const char* id : {"t1l", "t1f", "t1n", "t1u"}) {
    TheoremReport rep = verify_theorem(id, two);
    CHECK(rep.all_equivalent);
    CHECK(rep.satisfier_entries.empty());
    for (const auto& e : rep.entries) {
      CHECK_FALSE(e.conds.c1);
      CHECK_FALSE(e.conds.c4);
    }
  }
}

TEST_CASE("caps make oversized entries skip, not fail") {
  Caps tiny;
  tiny.n2 = 2;
  TheoremReport rep = verify_theorem("t1n", exhaustive_catalog(3), tiny);
  CHECK(rep.all_equivalent);
  bool saw_skip = false;
  for (const auto& e : rep.entries) {
    if (e.order == 3) {
      CHECK(e.skipped);
      CHECK(e.skip_reason.find("cap") != std::string::npos);
      saw_skip = true;
    } else {
      CHECK_FALSE(e.skipped);
    }
  }
  CHECK(saw_skip);

  // the lambda theorem needs the linked extension too, so the smaller of the
  // two caps decides
  Caps lop;
  lop.n2 = 2;
  TheoremReport lrep = verify_theorem("t1l", exhaustive_catalog(3), lop);
  for (const auto& e : lrep.entries)
    CHECK(e.skipped == (e.order > 2));
}

TEST_CASE("theorem report serialization is stable") {
  TheoremReport rep = verify_theorem("t1n", exhaustive_catalog(2));
  std::string a = to_json(rep).dump(2);
  std::string b = to_json(verify_theorem("t1n", exhaustive_catalog(2))).dump(2);
  CHECK(a == b);
  ordered_json j = to_json(rep);
  CHECK(j["theorem"] == "t1n");
  CHECK(j["all_equivalent"] == true);
  CHECK(j["entries"].size() == rep.entries.size());
  CHECK(j["entries"][0].contains("conditions"));
  CHECK(j["satisfiers"]["families"].size() == 3);

  std::string text = to_text(rep);
  CHECK(text.find("satisfier") != std::string::npos);
  CHECK(text.find("DISAGREE") == std::string::npos);
}

TEST_CASE("skip entries serialize with their reason") {
  Caps tiny;
  tiny.upsilon = 1;
  TheoremReport rep = verify_theorem("t1u", exhaustive_catalog(2), tiny);
  ordered_json j = to_json(rep);
  bool saw = false;
  for (const auto& je : j["entries"])
    if (je.contains("skipped")) {
      CHECK(je["skip_reason"].get<std::string>().find("cap") !=
            std::string::npos);
      saw = true;
    }
  CHECK(saw);
  CHECK(to_text(rep).find("skipped") != std::string::npos);
}

TEST_CASE("property report serialization") {
  FiniteSemigroup c2 = make_cyclic(2);
  ordered_json j = property_report_json(c2, classify(c2));
  CHECK(j["order"] == 2);
  CHECK(j["properties"]["commutative"] == true);
  CHECK(j["properties"]["linear"] == false);
  CHECK(j["idempotents"] == std::vector<int>{0});
  CHECK(j["witnesses"]["linear"]["indices"] == std::vector<int>{1, 1});
  CHECK(j["witnesses"]["linear"]["labels"][0] == "g");
}

TEST_CASE("fixed product identities all hold") {
  auto items = spotcheck_claims();
  REQUIRE(items.size() == 7);
  std::string ids;
  for (const auto& it : items) {
    INFO(it.id << ": " << it.title << " -- " << it.detail);
    CHECK(it.pass);
    ids += it.id;
  }
  CHECK(ids == "abcdefg");

  ordered_json j = to_json(items);
  CHECK(j["all_pass"] == true);
  CHECK(j["items"].size() == 7);
  CHECK(to_json(items).dump() == j.dump());
  CHECK(to_text(items).find("all spot checks pass") != std::string::npos);
}
