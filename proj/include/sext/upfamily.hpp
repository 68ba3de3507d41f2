#pragma once

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sext/semigroup.hpp"

namespace sext {

// Subsets of a ground set of at most 20 elements, as bitmasks.
using mask_t = std::uint32_t;
inline constexpr int kMaxGround = 20;

inline int mask_size(mask_t m) { return std::popcount(m); }
inline bool mask_subset(mask_t a, mask_t b) { return (a & ~b) == 0; }
inline mask_t full_mask(int n) { return (mask_t{1} << n) - 1; }

// Canonical order: by cardinality, then numerically.
inline bool mask_less(mask_t a, mask_t b) {
  int pa = std::popcount(a), pb = std::popcount(b);
  return pa != pb ? pa < pb : a < b;
}

inline std::vector<int> mask_elements(mask_t m) {
  std::vector<int> out;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1) out.push_back(i);
  return out;
}

inline std::string mask_to_string(mask_t m) {
  std::string s = "{";
  bool first = true;
  for (int e : mask_elements(m)) {
    if (!first) s += ",";
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

// An up-closed family of non-empty subsets of {0, ..., n-1}, stored as the
// antichain of its minimal sets in canonical order. The family must be
// non-empty, so construction demands at least one generator.
class Upfamily {
 public:
  Upfamily(int ground_size, std::vector<mask_t> generators)
      : ground_(ground_size) {
    if (ground_ < 1 || ground_ > kMaxGround)
      throw std::invalid_argument("ground size must be in [1, 20]");
    if (generators.empty())
      throw std::invalid_argument("upfamily needs at least one generator");
    const mask_t full = full_mask(ground_);
    for (mask_t g : generators) {
      if (g == 0) throw std::invalid_argument("empty set cannot generate");
      if (!mask_subset(g, full))
        throw std::invalid_argument("generator outside ground set");
    }
    std::sort(generators.begin(), generators.end(), mask_less);
    generators.erase(std::unique(generators.begin(), generators.end()),
                     generators.end());
    for (mask_t g : generators) {
      bool minimal = true;
      for (mask_t h : minimal_)
        if (mask_subset(h, g)) { minimal = false; break; }
      if (minimal) minimal_.push_back(g);  // sorted order makes this correct
    }
  }

  static Upfamily principal(int ground_size, mask_t set) {
    return Upfamily(ground_size, {set});
  }

  static Upfamily principal_ultra(int ground_size, int point) {
    if (point < 0 || point >= ground_size)
      throw std::invalid_argument("point outside ground set");
    return Upfamily(ground_size, {mask_t{1} << point});
  }

  int ground_size() const { return ground_; }
  const std::vector<mask_t>& minimal_sets() const { return minimal_; }

  bool member(mask_t a) const {
    for (mask_t m : minimal_)
      if (mask_subset(m, a)) return true;
    return false;
  }

  bool operator==(const Upfamily& o) const {
    return ground_ == o.ground_ && minimal_ == o.minimal_;
  }
  bool operator!=(const Upfamily& o) const { return !(*this == o); }

  // Total order used everywhere a deterministic listing is needed.
  bool operator<(const Upfamily& o) const {
    if (ground_ != o.ground_) return ground_ < o.ground_;
    return std::lexicographical_compare(minimal_.begin(), minimal_.end(),
                                        o.minimal_.begin(), o.minimal_.end(),
                                        mask_less);
  }

 private:
  int ground_ = 0;
  std::vector<mask_t> minimal_;
};

inline Upfamily generate(int ground_size, const std::vector<mask_t>& gens) {
  return Upfamily(ground_size, gens);
}

inline bool member(const Upfamily& u, mask_t a) { return u.member(a); }

struct UpfamilyKind {
  bool linked = false;          // every two members intersect
  bool maximal_linked = false;  // linked, and no member can be added
  bool filter = false;          // closed under intersection
  bool ultrafilter = false;     // filter that decides every subset
};

// All four predicates are evaluated from their definitions on the minimal
// sets; maximal linkedness scans every candidate subset of the ground set.
inline UpfamilyKind kind(const Upfamily& u) {
  UpfamilyKind k;
  const auto& ms = u.minimal_sets();
  k.linked = true;
  for (std::size_t i = 0; i < ms.size() && k.linked; ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if ((ms[i] & ms[j]) == 0) { k.linked = false; break; }
  // A finite filter is principal, generated by the intersection of its
  // members, so its antichain of minimal sets is a single set.
  k.filter = ms.size() == 1;
  k.ultrafilter = k.filter && mask_size(ms[0]) == 1;
  k.maximal_linked = k.linked;
  if (k.maximal_linked) {
    const mask_t full = full_mask(u.ground_size());
    for (mask_t a = 1; a <= full; ++a) {
      bool meets_all = true;
      for (mask_t m : ms)
        if ((a & m) == 0) { meets_all = false; break; }
      if (meets_all && !u.member(a)) { k.maximal_linked = false; break; }
    }
  }
  return k;
}

// Memoized left action of semigroup elements on subsets: a, M -> {a*x : x in M}.
class GroundAction {
 public:
  explicit GroundAction(const FiniteSemigroup& s) : n_(s.order()) {
    if (n_ < 1 || n_ > kMaxGround)
      throw std::invalid_argument("ground size must be in [1, 20]");
    const mask_t full = full_mask(n_);
    table_.resize(static_cast<std::size_t>(n_) << n_);
    for (int a = 0; a < n_; ++a) {
      table_[idx(a, 0)] = 0;
      for (mask_t m = 1; m <= full; ++m) {
        int low = std::countr_zero(m);
        table_[idx(a, m)] =
            table_[idx(a, m & (m - 1))] | (mask_t{1} << s.mul(a, low));
      }
    }
  }

  int ground_size() const { return n_; }
  mask_t apply(int a, mask_t m) const { return table_[idx(a, m)]; }

 private:
  std::size_t idx(int a, mask_t m) const {
    return (static_cast<std::size_t>(a) << n_) | m;
  }
  int n_ = 0;
  std::vector<mask_t> table_;
};

// Reusable buffers for the product; avoids per-call allocation in bulk builds.
struct ProductScratch {
  std::vector<mask_t> frontier;
  std::vector<mask_t> next;
  std::vector<char> seen;
  std::vector<mask_t> gens;
};

// Extension product: the result is generated by the unions  U_{a in A} a*B_a
// where A ranges over minimal sets of `left` and each B_a over minimal sets
// of `right`. Partial unions are deduplicated level by level, and a partial
// union that already covers the ground set absorbs everything after it.
inline Upfamily product(const GroundAction& act, const Upfamily& left,
                        const Upfamily& right, ProductScratch& scratch) {
  const int n = act.ground_size();
  if (left.ground_size() != n || right.ground_size() != n)
    throw std::invalid_argument("product operands over different ground sets");
  const mask_t full = full_mask(n);
  scratch.gens.clear();
  scratch.seen.assign(std::size_t{1} << n, 0);
  for (mask_t a_set : left.minimal_sets()) {
    scratch.frontier.clear();
    scratch.frontier.push_back(0);
    for (int a : mask_elements(a_set)) {
      scratch.next.clear();
      for (mask_t p : scratch.frontier) {
        if (p == full) {
          if (!scratch.seen[full]) {
            scratch.seen[full] = 1;
            scratch.next.push_back(full);
          }
          continue;
        }
        for (mask_t b_set : right.minimal_sets()) {
          mask_t u = p | act.apply(a, b_set);
          if (!scratch.seen[u]) {
            scratch.seen[u] = 1;
            scratch.next.push_back(u);
          }
        }
      }
      scratch.frontier.swap(scratch.next);
      for (mask_t p : scratch.frontier) scratch.seen[p] = 0;
    }
    for (mask_t p : scratch.frontier)
      scratch.gens.push_back(p);
  }
  return Upfamily(n, scratch.gens);
}

inline Upfamily product(const FiniteSemigroup& s, const Upfamily& left,
                        const Upfamily& right) {
  GroundAction act(s);
  ProductScratch scratch;
  return product(act, left, right, scratch);
}

// Pushforward along f: the image family { A : f^-1(A) is a member }, which is
// generated by the images of the minimal sets.
inline Upfamily induced_map(const std::vector<int>& f, int ground_out,
                            const Upfamily& u) {
  if (static_cast<int>(f.size()) != u.ground_size())
    throw std::invalid_argument("map domain does not match ground set");
  for (int v : f)
    if (v < 0 || v >= ground_out)
      throw std::invalid_argument("map value outside codomain");
  std::vector<mask_t> gens;
  for (mask_t m : u.minimal_sets()) {
    mask_t img = 0;
    for (int e : mask_elements(m)) img |= mask_t{1} << f[e];
    gens.push_back(img);
  }
  return Upfamily(ground_out, gens);
}

// True when x*U = U for every x, with x*U generated by the element-wise
// shifts of the minimal sets of U.
inline bool is_left_invariant(const FiniteSemigroup& g, const Upfamily& u) {
  if (g.order() != u.ground_size())
    throw std::invalid_argument("semigroup order does not match ground set");
  GroundAction act(g);
  for (int x = 0; x < g.order(); ++x) {
    std::vector<mask_t> gens;
    for (mask_t m : u.minimal_sets()) gens.push_back(act.apply(x, m));
    if (Upfamily(u.ground_size(), gens) != u) return false;
  }
  return true;
}

inline std::string format_upfamily(const Upfamily& u) {
  std::string s = "{";
  bool first = true;
  for (mask_t m : u.minimal_sets()) {
    if (!first) s += ",";
    s += mask_to_string(m);
    first = false;
  }
  return s + "}";
}

// Parses literals like "{{0,1},{0,2}}" over a ground set of the given size.
inline Upfamily parse_upfamily(const std::string& text, int ground_size) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw std::invalid_argument(std::string("expected '") + c +
                                  "' in upfamily literal: " + text);
    ++pos;
  };
  auto parse_int = [&]() -> int {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start)
      throw std::invalid_argument("expected element index in upfamily literal: " +
                                  text);
    return std::stoi(text.substr(start, pos - start));
  };
  expect('{');
  std::vector<mask_t> gens;
  while (true) {
    expect('{');
    mask_t m = 0;
    skip_ws();
    while (pos < text.size() && text[pos] != '}') {
      int e = parse_int();
      if (e < 0 || e >= ground_size)
        throw std::invalid_argument("element outside ground set: " +
                                    std::to_string(e));
      m |= mask_t{1} << e;
      skip_ws();
      if (pos < text.size() && text[pos] == ',') { ++pos; skip_ws(); }
    }
    expect('}');
    if (m == 0) throw std::invalid_argument("empty set in upfamily literal");
    gens.push_back(m);
    skip_ws();
    if (pos < text.size() && text[pos] == ',') { ++pos; continue; }
    break;
  }
  expect('}');
  skip_ws();
  if (pos != text.size())
    throw std::invalid_argument("trailing content in upfamily literal: " + text);
  return Upfamily(ground_size, gens);
}

}  // namespace sext
