#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sext/expr.hpp"
#include "sext/semigroup.hpp"

namespace sext {

struct IsoOptions {
  bool use_refinement = true;  // false: plain backtracking, for cross-testing
  bool anti = false;           // look for an anti-isomorphism instead
};

inline bool verify_isomorphism(const FiniteSemigroup& x,
                               const FiniteSemigroup& y,
                               const std::vector<int>& f, bool anti = false) {
  const int n = x.order();
  if (y.order() != n || static_cast<int>(f.size()) != n) return false;
  std::vector<char> hit(n, 0);
  for (int v : f) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = 1;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int img = anti ? y.mul(f[b], f[a]) : y.mul(f[a], f[b]);
      if (f[x.mul(a, b)] != img) return false;
    }
  return true;
}

namespace detail {

// Invariant colors for both semigroups at once, drawn from a shared
// dictionary so equal colors mean equal invariants across the two. Seeded
// with cyclic profiles, then refined by the multiset of
// (color(y), color(x*y), color(y*x)) until both partitions stop splitting.
inline std::pair<std::vector<int>, std::vector<int>> joint_colors(
    const FiniteSemigroup& x, const FiniteSemigroup& y) {
  std::vector<int> cx(x.order()), cy(y.order());
  {
    std::map<std::pair<int, int>, int> dict;
    auto seed = [&dict](const FiniteSemigroup& s, std::vector<int>& c) {
      for (int e = 0; e < s.order(); ++e) {
        CyclicProfile p = cyclic_profile(s, e);
        auto [it, ins] = dict.emplace(std::pair{p.index, p.period},
                                      static_cast<int>(dict.size()));
        (void)ins;
        c[e] = it->second;
      }
    };
    seed(x, cx);
    seed(y, cy);
  }
  int classes = -1;
  while (true) {
    std::map<std::vector<int>, int> dict;
    auto refine = [&dict](const FiniteSemigroup& s, const std::vector<int>& c) {
      std::vector<int> next(s.order());
      for (int e = 0; e < s.order(); ++e) {
        std::vector<std::array<int, 3>> sig;
        for (int f = 0; f < s.order(); ++f)
          sig.push_back({c[f], c[s.mul(e, f)], c[s.mul(f, e)]});
        std::sort(sig.begin(), sig.end());
        std::vector<int> key{c[e]};
        for (auto& t : sig) key.insert(key.end(), t.begin(), t.end());
        auto [it, ins] = dict.emplace(std::move(key),
                                      static_cast<int>(dict.size()));
        (void)ins;
        next[e] = it->second;
      }
      return next;
    };
    cx = refine(x, cx);
    cy = refine(y, cy);
    int now = static_cast<int>(dict.size());
    if (now == classes) break;
    classes = now;
  }
  return {cx, cy};
}

struct IsoSearch {
  const FiniteSemigroup& x;
  const FiniteSemigroup& y;
  std::vector<int> cx, cy;    // element colors (all zero without refinement)
  std::vector<int> fwd, bwd;  // partial map and inverse, -1 = unset
  std::vector<int> mapped;    // domain elements assigned so far
  std::vector<int> order;     // branching order

  // Assigns a |-> b plus everything forced through products with mapped
  // elements; appends assignments to `trail` so the caller can undo them.
  bool assign(int a, int b, std::vector<int>& trail) {
    std::vector<std::pair<int, int>> todo{{a, b}};
    while (!todo.empty()) {
      auto [p, q] = todo.back();
      todo.pop_back();
      if (fwd[p] != -1) {
        if (fwd[p] != q) return false;
        continue;
      }
      if (bwd[q] != -1 || cx[p] != cy[q]) return false;
      fwd[p] = q;
      bwd[q] = p;
      mapped.push_back(p);
      trail.push_back(p);
      for (std::size_t k = 0; k < mapped.size(); ++k) {
        int c = mapped[k];
        todo.push_back({x.mul(p, c), y.mul(q, fwd[c])});
        todo.push_back({x.mul(c, p), y.mul(fwd[c], q)});
      }
    }
    return true;
  }

  void undo(const std::vector<int>& trail) {
    for (int p : trail) {
      bwd[fwd[p]] = -1;
      fwd[p] = -1;
    }
    mapped.resize(mapped.size() - trail.size());
  }

  bool search(std::size_t at) {
    while (at < order.size() && fwd[order[at]] != -1) ++at;
    if (at == order.size()) return true;
    int a = order[at];
    for (int b = 0; b < y.order(); ++b) {
      if (bwd[b] != -1 || cy[b] != cx[a]) continue;
      std::vector<int> trail;
      if (assign(a, b, trail) && search(at + 1)) return true;
      undo(trail);
    }
    return false;
  }
};

}  // namespace detail

// Finds a bijection f with f(ab) = f(a)f(b), or f(ab) = f(b)f(a) when an
// anti-isomorphism is requested. Every witness returned has been re-verified
// over all pairs; nullopt means no such map exists.
inline std::optional<std::vector<int>> find_isomorphism(
    const FiniteSemigroup& x, const FiniteSemigroup& y,
    const IsoOptions& opts = {}) {
  const int n = x.order();
  if (y.order() != n) return std::nullopt;
  if (n == 0) return std::vector<int>{};
  const FiniteSemigroup yy = opts.anti ? transpose(y) : y;

  detail::IsoSearch srch{x, yy, {}, {}, {}, {}, {}, {}};
  if (opts.use_refinement) {
    auto [cx, cy] = detail::joint_colors(x, yy);
    srch.cx = std::move(cx);
    srch.cy = std::move(cy);
    std::map<int, int> count_x, count_y;
    for (int c : srch.cx) ++count_x[c];
    for (int c : srch.cy) ++count_y[c];
    if (count_x != count_y) return std::nullopt;
  } else {
    srch.cx.assign(n, 0);
    srch.cy.assign(n, 0);
  }

  srch.fwd.assign(n, -1);
  srch.bwd.assign(n, -1);
  srch.order.resize(n);
  for (int i = 0; i < n; ++i) srch.order[i] = i;
  std::vector<int> class_size(n, 0);
  {
    std::map<int, int> cnt;
    for (int c : srch.cx) ++cnt[c];
    for (int i = 0; i < n; ++i) class_size[i] = cnt[srch.cx[i]];
  }
  std::sort(srch.order.begin(), srch.order.end(), [&](int a, int b) {
    return class_size[a] != class_size[b] ? class_size[a] < class_size[b]
                                          : a < b;
  });

  if (!srch.search(0)) return std::nullopt;
  std::vector<int> f = srch.fwd;
  if (!verify_isomorphism(x, y, f, opts.anti))
    throw std::logic_error("isomorphism search produced a bad witness");
  return f;
}

inline bool is_isomorphic(const FiniteSemigroup& x, const FiniteSemigroup& y,
                          const IsoOptions& opts = {}) {
  return find_isomorphism(x, y, opts).has_value();
}

// Instantiates a family descriptor at a given order. Descriptors are either
// fixed expressions ("C4", "L1+C2") accepted when the order matches, or the
// parametric patterns "Ln", "C2+Ln", "Ln+C2" with n solved from the order.
// The returned name is the concrete expression (e.g. "C2+L2").
inline std::optional<std::pair<std::string, FiniteSemigroup>>
instantiate_family(const std::string& descriptor, int order) {
  std::size_t at = descriptor.find("Ln");
  if (at != std::string::npos) {
    auto concrete = [&](int k) {
      return descriptor.substr(0, at) + "L" + std::to_string(k) +
             descriptor.substr(at + 2);
    };
    int fixed = parse_semigroup_expr(concrete(0)).order();
    int n = order - fixed;
    if (n < 0) return std::nullopt;
    std::string name = concrete(n);
    return std::pair{name, parse_semigroup_expr(name)};
  }
  FiniteSemigroup s = parse_semigroup_expr(descriptor);
  if (s.order() != order) return std::nullopt;
  return std::pair{descriptor, s};
}

// All family descriptors matching X up to isomorphism, in list order. The
// same semigroup can match twice (C2 is also L0+C2); callers that need one
// answer take the first.
inline std::vector<std::string> family_matches(
    const FiniteSemigroup& x, const std::vector<std::string>& family) {
  std::vector<std::string> out;
  for (const auto& d : family) {
    auto inst = instantiate_family(d, x.order());
    if (inst && is_isomorphic(x, inst->second)) out.push_back(inst->first);
  }
  return out;
}

inline std::optional<std::string> is_isomorphic_to_family(
    const FiniteSemigroup& x, const std::vector<std::string>& family) {
  std::vector<std::string> m = family_matches(x, family);
  if (m.empty()) return std::nullopt;
  return m.front();
}

}  // namespace sext
