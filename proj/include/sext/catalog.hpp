#pragma once

#include <string>
#include <vector>

#include "sext/expr.hpp"
#include "sext/iso.hpp"
#include "sext/semigroup.hpp"

namespace sext {

struct CatalogEntry {
  std::string name;
  FiniteSemigroup sg;
};

struct Catalog {
  std::string provenance;
  std::vector<CatalogEntry> entries;
};

// All semigroups of one order, one representative per isomorphism class, in
// the order discovered by lexicographic table enumeration. Also reports the
// raw number of associative tables seen. n <= 3 only: order 4 means 4^16
// candidate tables.
struct ExhaustiveLevel {
  std::vector<FiniteSemigroup> reps;
  long long associative_tables = 0;
};

inline ExhaustiveLevel enumerate_semigroups_of_order(int n) {
  if (n < 1 || n > 3)
    throw std::invalid_argument(
        "exhaustive enumeration supported for orders 1..3");
  ExhaustiveLevel level;
  std::vector<int> t(n * n, 0);
  while (true) {
    bool assoc = true;
    for (int i = 0; i < n && assoc; ++i)
      for (int j = 0; j < n && assoc; ++j)
        for (int k = 0; k < n; ++k)
          if (t[t[i * n + j] * n + k] != t[i * n + t[j * n + k]]) {
            assoc = false;
            break;
          }
    if (assoc) {
      ++level.associative_tables;
      FiniteSemigroup s(n, t);
      bool fresh = true;
      for (const auto& r : level.reps)
        if (is_isomorphic(s, r)) { fresh = false; break; }
      if (fresh) level.reps.push_back(std::move(s));
    }
    int pos = n * n - 1;
    while (pos >= 0 && t[pos] == n - 1) t[pos--] = 0;
    if (pos < 0) break;
    ++t[pos];
  }
  return level;
}

inline Catalog exhaustive_catalog(int max_order) {
  if (max_order < 1 || max_order > 3)
    throw std::invalid_argument(
        "exhaustive catalog supported for max order 1..3");
  Catalog cat;
  cat.provenance = "exhaustive order <= " + std::to_string(max_order) +
                   ", deduplicated up to isomorphism";
  for (int n = 1; n <= max_order; ++n) {
    ExhaustiveLevel level = enumerate_semigroups_of_order(n);
    int idx = 0;
    for (auto& s : level.reps) {
      ++idx;
      std::string num = std::to_string(idx);
      if (num.size() < 2) num = "0" + num;
      cat.entries.push_back({"S" + std::to_string(n) + "_" + num, std::move(s)});
    }
  }
  return cat;
}

// Named families plus the documented counterexample semigroups, filtered to
// the requested maximum order. Names are constructor expressions.
inline Catalog curated_catalog(int max_order) {
  static const char* names[] = {
      "L1",
      "C2", "L2",
      "C3", "L3", "L1+C2", "C2+L1", "V", "N3",
      "C4", "C2xC2", "L2xC2", "L4", "C2+L2", "L2+C2", "C2+C2", "L2xL2",
      "V+L1", "N4",
      "D6",
      "C2xC2xC2",
  };
  Catalog cat;
  cat.provenance = "curated, order <= " + std::to_string(max_order);
  for (const char* name : names) {
    FiniteSemigroup s = parse_semigroup_expr(name);
    if (s.order() <= max_order) cat.entries.push_back({name, std::move(s)});
  }
  return cat;
}

// Selectors: "exhaustive[:k]" (k <= 3), "curated[:k]", or "default" for the
// exhaustive order-3 catalog plus the order-4 curated entries.
inline Catalog parse_catalog_selector(const std::string& sel) {
  auto split = [](const std::string& s, int dflt) -> std::pair<std::string, int> {
    std::size_t colon = s.find(':');
    if (colon == std::string::npos) return {s, dflt};
    try {
      std::size_t used = 0;
      int k = std::stoi(s.substr(colon + 1), &used);
      if (used != s.size() - colon - 1) throw std::invalid_argument("");
      return {s.substr(0, colon), k};
    } catch (...) {
      throw std::invalid_argument("bad catalog selector: " + s);
    }
  };
  auto [kind, k] = split(sel, -1);
  if (kind == "exhaustive") return exhaustive_catalog(k == -1 ? 3 : k);
  if (kind == "curated") return curated_catalog(k == -1 ? 4 : k);
  if (kind == "default" && k == -1) {
    Catalog cat = exhaustive_catalog(3);
    Catalog extra = curated_catalog(4);
    for (auto& e : extra.entries)
      if (e.sg.order() == 4) cat.entries.push_back(std::move(e));
    cat.provenance = "exhaustive order <= 3 plus curated order-4 entries";
    return cat;
  }
  throw std::invalid_argument("bad catalog selector: " + sel);
}

}  // namespace sext
