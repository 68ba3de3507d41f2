#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>

#include "json.hpp"
#include "sext/enumerate.hpp"

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

TEST_CASE("class parsing") {
  CHECK(parse_extension_class("beta") == ExtensionClass::beta);
  CHECK(parse_extension_class("ultrafilter") == ExtensionClass::beta);
  CHECK(parse_extension_class("phi") == ExtensionClass::phi);
  CHECK(parse_extension_class("filter") == ExtensionClass::phi);
  CHECK(parse_extension_class("n2") == ExtensionClass::n2);
  CHECK(parse_extension_class("N2") == ExtensionClass::n2);
  CHECK(parse_extension_class("linked") == ExtensionClass::n2);
  CHECK(parse_extension_class("lambda") == ExtensionClass::lambda);
  CHECK(parse_extension_class("maximal-linked") == ExtensionClass::lambda);
  CHECK(parse_extension_class("upsilon") == ExtensionClass::upsilon);
  CHECK(parse_extension_class("upfamily") == ExtensionClass::upsilon);
  CHECK_THROWS_AS(parse_extension_class("gamma"), std::invalid_argument);
}

TEST_CASE("listing sizes match the frozen counts") {
  std::vector<std::int64_t> lambda_counts =
      golden()["maximal_linked_counts"]["value"];
  for (std::size_t i = 0; i < lambda_counts.size(); ++i)
    CHECK(enumerate_class(static_cast<int>(i) + 1, ExtensionClass::lambda)
              .size() == static_cast<std::size_t>(lambda_counts[i]));

  std::vector<std::int64_t> upsilon_counts = golden()["upfamily_counts"]["value"];
  for (std::size_t i = 0; i < upsilon_counts.size(); ++i)
    CHECK(enumerate_class(static_cast<int>(i) + 1, ExtensionClass::upsilon)
              .size() == static_cast<std::size_t>(upsilon_counts[i]));

  std::vector<std::int64_t> filter_counts = golden()["filter_counts"]["value"];
  for (std::size_t i = 0; i < filter_counts.size(); ++i)
    CHECK(enumerate_class(static_cast<int>(i) + 1, ExtensionClass::phi).size() ==
          static_cast<std::size_t>(filter_counts[i]));

  for (int n = 1; n <= 8; ++n)
    CHECK(enumerate_class(n, ExtensionClass::beta).size() ==
          static_cast<std::size_t>(n));

  for (auto c : {ExtensionClass::beta, ExtensionClass::phi, ExtensionClass::n2,
                 ExtensionClass::lambda, ExtensionClass::upsilon})
    CHECK(enumerate_class(0, c).empty());
}

TEST_CASE("five-point family count matches the antichain count") {
  // 7581 antichains on five points, minus the empty family and the one
  // generated by the empty set.
  CHECK(enumerate_class(5, ExtensionClass::upsilon).size() == 7579);
}

TEST_CASE("maximal linked families on three points") {
  auto out = enumerate_class(3, ExtensionClass::lambda);
  std::vector<Upfamily> expect = {
      Upfamily::principal_ultra(3, 0), Upfamily::principal_ultra(3, 1),
      Upfamily::principal_ultra(3, 2), Upfamily(3, {0b011, 0b101, 0b110})};
  std::sort(expect.begin(), expect.end());
  CHECK(out == expect);
}

TEST_CASE("maximal linked families on four points") {
  auto out = enumerate_class(4, ExtensionClass::lambda);
  REQUIRE(out.size() == 12);
  std::vector<Upfamily> expect;
  for (int x = 0; x < 4; ++x) expect.push_back(Upfamily::principal_ultra(4, x));
  for (int skip = 0; skip < 4; ++skip) {
    // all two-point subsets of the three points other than `skip`
    std::vector<mask_t> gens;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (i != skip && j != skip)
          gens.push_back((mask_t{1} << i) | (mask_t{1} << j));
    expect.push_back(Upfamily(4, gens));
  }
  for (int x = 0; x < 4; ++x) {
    // pairs through x, plus the complement of x
    std::vector<mask_t> gens;
    for (int i = 0; i < 4; ++i)
      if (i != x) gens.push_back((mask_t{1} << x) | (mask_t{1} << i));
    gens.push_back(~(mask_t{1} << x) & full_mask(4));
    expect.push_back(Upfamily(4, gens));
  }
  std::sort(expect.begin(), expect.end());
  CHECK(out == expect);
}

TEST_CASE("each class is the advertised slice of all families") {
  for (int n = 1; n <= 4; ++n) {
    auto all = enumerate_class(n, ExtensionClass::upsilon);
    for (auto c : {ExtensionClass::beta, ExtensionClass::phi,
                   ExtensionClass::n2, ExtensionClass::lambda}) {
      std::vector<Upfamily> expect;
      for (const auto& u : all)
        if (class_contains(c, u)) expect.push_back(u);
      CHECK(enumerate_class(n, c) == expect);
    }
  }
}

TEST_CASE("listings are strictly increasing in canonical order") {
  for (int n = 1; n <= 4; ++n)
    for (auto c : {ExtensionClass::beta, ExtensionClass::phi,
                   ExtensionClass::n2, ExtensionClass::lambda,
                   ExtensionClass::upsilon}) {
      auto out = enumerate_class(n, c);
      for (std::size_t i = 1; i < out.size(); ++i)
        CHECK(out[i - 1] < out[i]);
    }
}

TEST_CASE("caps") {
  Caps caps;
  CHECK(caps.build_cap(ExtensionClass::beta) > 1000);
  CHECK(caps.build_cap(ExtensionClass::upsilon) == 4);
  CHECK(caps.build_cap(ExtensionClass::lambda) == 6);
  CHECK(caps.enum_cap(ExtensionClass::upsilon) == caps.enum_dense);
  CHECK(caps.enum_cap(ExtensionClass::lambda) == caps.enum_sparse);

  CHECK(enumerate_class_capped(4, ExtensionClass::upsilon, caps).size() == 166);
  CHECK_THROWS_AS(enumerate_class_capped(5, ExtensionClass::upsilon, caps),
                  CapExceeded);
  CHECK_THROWS_AS(enumerate_class_capped(7, ExtensionClass::lambda, caps),
                  CapExceeded);
  CHECK_NOTHROW(enumerate_class_capped(6, ExtensionClass::beta, caps));
}
