#pragma once

#include <climits>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "sext/upfamily.hpp"

namespace sext {

enum class ExtensionClass { beta, phi, n2, lambda, upsilon };

inline const char* class_name(ExtensionClass c) {
  switch (c) {
    case ExtensionClass::beta: return "beta";
    case ExtensionClass::phi: return "phi";
    case ExtensionClass::n2: return "n2";
    case ExtensionClass::lambda: return "lambda";
    case ExtensionClass::upsilon: return "upsilon";
  }
  throw std::logic_error("unreachable");
}

// Accepts both the extension names (beta, phi, n2, lambda, upsilon) and the
// upfamily-class words (ultrafilter, filter, linked, maximal-linked, upfamily).
inline ExtensionClass parse_extension_class(const std::string& s) {
  if (s == "beta" || s == "ultrafilter") return ExtensionClass::beta;
  if (s == "phi" || s == "filter") return ExtensionClass::phi;
  if (s == "n2" || s == "N2" || s == "linked") return ExtensionClass::n2;
  if (s == "lambda" || s == "maximal-linked") return ExtensionClass::lambda;
  if (s == "upsilon" || s == "upfamily") return ExtensionClass::upsilon;
  throw std::invalid_argument("unknown extension class: " + s);
}

inline bool class_contains(ExtensionClass c, const Upfamily& u) {
  if (c == ExtensionClass::upsilon) return true;
  UpfamilyKind k = kind(u);
  switch (c) {
    case ExtensionClass::beta: return k.ultrafilter;
    case ExtensionClass::phi: return k.filter;
    case ExtensionClass::n2: return k.linked;
    case ExtensionClass::lambda: return k.maximal_linked;
    default: return true;
  }
}

// Ground-size limits for building extension tables and for raw listings.
// Values come from the environment where present (SEXT_CAP_<NAME>), else
// defaults sized so that everything finishes interactively.
struct Caps {
  int upsilon = 4;
  int lambda = 6;
  int phi = 10;
  int n2 = 5;
  int enum_dense = 4;
  int enum_sparse = 6;

  int build_cap(ExtensionClass c) const {
    switch (c) {
      case ExtensionClass::beta: return INT_MAX;
      case ExtensionClass::phi: return phi;
      case ExtensionClass::n2: return n2;
      case ExtensionClass::lambda: return lambda;
      case ExtensionClass::upsilon: return upsilon;
    }
    throw std::logic_error("unreachable");
  }

  // Listing limit: the dense classes blow up fastest.
  int enum_cap(ExtensionClass c) const {
    return c == ExtensionClass::n2 || c == ExtensionClass::upsilon
               ? enum_dense
               : enum_sparse;
  }

  static Caps from_env() {
    Caps caps;
    auto read = [](const char* name, int& slot) {
      const char* v = std::getenv(name);
      if (!v) return;
      try {
        std::size_t used = 0;
        int parsed = std::stoi(v, &used);
        if (used != std::string(v).size() || parsed < 0)
          throw std::invalid_argument("");
        slot = parsed;
      } catch (...) {
        throw std::invalid_argument(std::string("bad value for ") + name +
                                    ": " + v);
      }
    };
    read("SEXT_CAP_UPSILON", caps.upsilon);
    read("SEXT_CAP_LAMBDA", caps.lambda);
    read("SEXT_CAP_PHI", caps.phi);
    read("SEXT_CAP_N2", caps.n2);
    read("SEXT_CAP_ENUM_DENSE", caps.enum_dense);
    read("SEXT_CAP_ENUM_SPARSE", caps.enum_sparse);
    return caps;
  }
};

struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// All antichains of non-empty subsets, grown in canonical mask order; with
// `linked` set, a new set must meet every chosen one. Pre-order emission is
// exactly ascending canonical order of the resulting families.
inline void antichain_dfs(int n, const std::vector<mask_t>& masks,
                          std::size_t from, std::vector<mask_t>& chosen,
                          bool linked, std::vector<Upfamily>& out) {
  for (std::size_t i = from; i < masks.size(); ++i) {
    mask_t m = masks[i];
    bool ok = true;
    for (mask_t h : chosen) {
      if (mask_subset(h, m) || (linked && (h & m) == 0)) { ok = false; break; }
    }
    if (!ok) continue;
    chosen.push_back(m);
    out.push_back(Upfamily(n, chosen));
    antichain_dfs(n, masks, i + 1, chosen, linked, out);
    chosen.pop_back();
  }
}

// Maximal linked families via the complement dichotomy: a linked family is
// maximal exactly when it holds one side of every complementary pair {A, ~A}.
// Pairs already decided by the chosen generators are skipped; otherwise both
// sides stay open and the search branches.
inline void dichotomy_dfs(int n, const std::vector<mask_t>& reps,
                          std::size_t at, std::vector<mask_t>& gens,
                          std::vector<Upfamily>& out) {
  const mask_t full = full_mask(n);
  if (at == reps.size()) {
    out.push_back(gens.empty() ? Upfamily(n, {full}) : Upfamily(n, gens));
    return;
  }
  mask_t sides[2] = {reps[at], static_cast<mask_t>(~reps[at] & full)};
  for (mask_t s : sides) {
    bool implied = false;
    for (mask_t g : gens)
      if (mask_subset(g, s)) { implied = true; break; }
    if (implied) {
      dichotomy_dfs(n, reps, at + 1, gens, out);
      return;
    }
  }
  for (mask_t s : sides) {
    bool meets = true;
    for (mask_t g : gens)
      if ((g & s) == 0) { meets = false; break; }
    if (!meets) continue;
    gens.push_back(s);
    dichotomy_dfs(n, reps, at + 1, gens, out);
    gens.pop_back();
  }
}

}  // namespace detail

// Canonically ordered listing of a class over ground size n. Unbounded by
// caps; callers that promise interactive latency apply Caps themselves.
inline std::vector<Upfamily> enumerate_class(int n, ExtensionClass c) {
  std::vector<Upfamily> out;
  if (n == 0) return out;
  if (n < 0 || n > kMaxGround)
    throw std::invalid_argument("ground size must be in [0, 20]");
  const mask_t full = full_mask(n);
  switch (c) {
    case ExtensionClass::beta:
      for (int x = 0; x < n; ++x) out.push_back(Upfamily::principal_ultra(n, x));
      break;
    case ExtensionClass::phi:
      for (mask_t m = 1; m <= full; ++m) out.push_back(Upfamily::principal(n, m));
      std::sort(out.begin(), out.end());
      break;
    case ExtensionClass::n2:
    case ExtensionClass::upsilon: {
      std::vector<mask_t> masks;
      for (mask_t m = 1; m <= full; ++m) masks.push_back(m);
      std::sort(masks.begin(), masks.end(), mask_less);
      std::vector<mask_t> chosen;
      detail::antichain_dfs(n, masks, 0, chosen,
                            c == ExtensionClass::n2, out);
      break;
    }
    case ExtensionClass::lambda: {
      std::vector<mask_t> reps;
      for (mask_t m = 1; m < full; ++m) {
        mask_t comp = ~m & full;
        if (mask_less(m, comp)) reps.push_back(m);
      }
      std::sort(reps.begin(), reps.end(), mask_less);
      std::vector<mask_t> gens;
      detail::dichotomy_dfs(n, reps, 0, gens, out);
      std::sort(out.begin(), out.end());
      break;
    }
  }
  return out;
}

// The listing guarded by the configured size limits.
inline std::vector<Upfamily> enumerate_class_capped(int n, ExtensionClass c,
                                                    const Caps& caps) {
  if (n > caps.enum_cap(c))
    throw CapExceeded("ground size " + std::to_string(n) +
                      " exceeds the enumeration cap " +
                      std::to_string(caps.enum_cap(c)) + " for class " +
                      class_name(c));
  return enumerate_class(n, c);
}

}  // namespace sext
