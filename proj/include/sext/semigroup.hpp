#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sext {

// Triple (i, j, k) with (i*j)*k != i*(j*k).
struct AssocWitness {
  int i = 0;
  int j = 0;
  int k = 0;
};

// Validates that `rows` is a square table over {0, ..., n-1} and returns the
// first associativity violation in lexicographic (i, j, k) order, or nullopt
// if the table is associative.
inline std::optional<AssocWitness> check_associative(
    const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("cayley table is not square");
    for (int v : row)
      if (v < 0 || v >= n)
        throw std::invalid_argument("cayley table entry out of range");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (rows[rows[i][j]][k] != rows[i][rows[j][k]])
          return AssocWitness{i, j, k};
  return std::nullopt;
}

// A finite semigroup as an immutable Cayley table. Order 0 (the empty
// semigroup) is legal. Construction rejects malformed or non-associative
// tables, so every instance is a genuine semigroup.
class FiniteSemigroup {
 public:
  FiniteSemigroup() = default;

  FiniteSemigroup(int order, std::vector<int> table,
                  std::vector<std::string> labels = {})
      : order_(order), table_(std::move(table)), labels_(std::move(labels)) {
    if (order_ < 0) throw std::invalid_argument("negative order");
    if (static_cast<std::size_t>(order_) * order_ != table_.size())
      throw std::invalid_argument("cayley table size does not match order");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != order_)
      throw std::invalid_argument("label count does not match order");
    std::vector<std::vector<int>> rows(order_, std::vector<int>(order_));
    for (int i = 0; i < order_; ++i)
      for (int j = 0; j < order_; ++j) rows[i][j] = table_[i * order_ + j];
    if (auto w = check_associative(rows))
      throw std::invalid_argument(
          "table is not associative: witness (" + std::to_string(w->i) + "," +
          std::to_string(w->j) + "," + std::to_string(w->k) + ")");
  }

  int order() const { return order_; }

  int mul(int i, int j) const {
    if (i < 0 || i >= order_ || j < 0 || j >= order_)
      throw std::invalid_argument("element index out of range");
    return table_[i * order_ + j];
  }

  const std::vector<int>& table() const { return table_; }
  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::string label(int i) const {
    if (i < 0 || i >= order_)
      throw std::invalid_argument("element index out of range");
    return labels_.empty() ? std::to_string(i) : labels_[i];
  }

  bool same_table(const FiniteSemigroup& other) const {
    return order_ == other.order_ && table_ == other.table_;
  }

 private:
  int order_ = 0;
  std::vector<int> table_;
  std::vector<std::string> labels_;
};

// x^k for k >= 1.
inline int pow_element(const FiniteSemigroup& s, int x, int k) {
  if (k < 1) throw std::invalid_argument("exponent must be positive");
  int r = x;
  for (int i = 1; i < k; ++i) r = s.mul(r, x);
  return r;
}

// Smallest (index, period) with x^(index+period) = x^index.
struct CyclicProfile {
  int index = 0;
  int period = 0;
};

inline CyclicProfile cyclic_profile(const FiniteSemigroup& s, int x) {
  std::vector<int> first_seen(s.order(), 0);  // exponent of first visit, 0 = unseen
  int v = x;
  for (int e = 1;; ++e) {
    if (first_seen[v] != 0)
      return CyclicProfile{first_seen[v], e - first_seen[v]};
    first_seen[v] = e;
    v = s.mul(v, x);
  }
}

inline FiniteSemigroup make_cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group needs order >= 1");
  std::vector<int> t(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i * n + j] = (i + j) % n;
  std::vector<std::string> labels(n);
  labels[0] = "e";
  for (int i = 1; i < n; ++i) labels[i] = i == 1 ? "g" : "g" + std::to_string(i);
  return FiniteSemigroup(n, std::move(t), std::move(labels));
}

// Chain 0 < 1 < ... < n-1 under min. Order 0 is the empty semigroup.
inline FiniteSemigroup make_linear_semilattice(int n) {
  if (n < 0) throw std::invalid_argument("negative order");
  std::vector<int> t(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i * n + j] = std::min(i, j);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return FiniteSemigroup(n, std::move(t), std::move(labels));
}

// Every product equals element 0.
inline FiniteSemigroup make_null(int n) {
  if (n < 0) throw std::invalid_argument("negative order");
  return FiniteSemigroup(n, std::vector<int>(n * n, 0));
}

inline FiniteSemigroup make_left_zero(int n) {
  std::vector<int> t(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i * n + j] = i;
  return FiniteSemigroup(n, std::move(t));
}

inline FiniteSemigroup make_right_zero(int n) {
  std::vector<int> t(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i * n + j] = j;
  return FiniteSemigroup(n, std::move(t));
}

// Free semilattice on two generators: x, y, xy with x*y = xy.
inline FiniteSemigroup make_v_semilattice() {
  return FiniteSemigroup(3, {0, 2, 2, 2, 1, 2, 2, 2, 2}, {"x", "y", "xy"});
}

// Dihedral group of order 2m: elements a^k b^eps, index = eps*m + k.
inline FiniteSemigroup make_dihedral(int m) {
  if (m < 1) throw std::invalid_argument("dihedral parameter must be >= 1");
  const int n = 2 * m;
  std::vector<int> t(n * n);
  auto idx = [m](int k, int eps) { return eps * m + k; };
  for (int eps = 0; eps < 2; ++eps)
    for (int k = 0; k < m; ++k)
      for (int del = 0; del < 2; ++del)
        for (int l = 0; l < m; ++l) {
          int nk = eps == 0 ? (k + l) % m : (k - l + m) % m;
          t[idx(k, eps) * n + idx(l, del)] = idx(nk, eps ^ del);
        }
  std::vector<std::string> labels(n);
  for (int eps = 0; eps < 2; ++eps)
    for (int k = 0; k < m; ++k) {
      std::string a = k == 0 ? "" : k == 1 ? "a" : "a" + std::to_string(k);
      std::string b = eps ? "b" : "";
      labels[idx(k, eps)] = a + b == "" ? "e" : a + b;
    }
  return FiniteSemigroup(n, std::move(t), std::move(labels));
}

// Ordered disjoint union: X indexed first, then Y, and every mixed product
// collapses to its X-side factor. Makes X an ideal of the union.
inline FiniteSemigroup disjoint_ordered_union(const FiniteSemigroup& x,
                                              const FiniteSemigroup& y) {
  const int nx = x.order(), ny = y.order(), n = nx + ny;
  std::vector<int> t(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int v;
      if (i < nx && j < nx) v = x.mul(i, j);
      else if (i >= nx && j >= nx) v = nx + y.mul(i - nx, j - nx);
      else v = i < nx ? i : j;  // the X-side factor
      t[i * n + j] = v;
    }
  std::vector<std::string> labels(n);
  for (int i = 0; i < nx; ++i) labels[i] = x.label(i);
  for (int j = 0; j < ny; ++j) labels[nx + j] = y.label(j);
  return FiniteSemigroup(n, std::move(t), std::move(labels));
}

// Direct product, row-major: (i, j) -> i*|Y| + j.
inline FiniteSemigroup direct_product(const FiniteSemigroup& x,
                                      const FiniteSemigroup& y) {
  const int nx = x.order(), ny = y.order(), n = nx * ny;
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < nx; ++a)
    for (int b = 0; b < ny; ++b)
      for (int c = 0; c < nx; ++c)
        for (int d = 0; d < ny; ++d)
          t[(a * ny + b) * n + (c * ny + d)] = x.mul(a, c) * ny + y.mul(b, d);
  std::vector<std::string> labels(n);
  for (int a = 0; a < nx; ++a)
    for (int b = 0; b < ny; ++b)
      labels[a * ny + b] = "(" + x.label(a) + "," + y.label(b) + ")";
  return FiniteSemigroup(n, std::move(t), std::move(labels));
}

// I must be non-empty and closed under multiplication by anything.
inline bool is_ideal(const FiniteSemigroup& s, const std::vector<int>& ideal) {
  if (ideal.empty()) return false;
  std::vector<char> in(s.order(), 0);
  for (int i : ideal) {
    if (i < 0 || i >= s.order())
      throw std::invalid_argument("ideal element out of range");
    in[i] = 1;
  }
  for (int i : ideal)
    for (int x = 0; x < s.order(); ++x)
      if (!in[s.mul(i, x)] || !in[s.mul(x, i)]) return false;
  return true;
}

// X x_I Y for an ideal I of X: elements are I followed by (X \ I) x Y in
// row-major order. Products land in I whenever either X-component does.
inline FiniteSemigroup reduced_product(const FiniteSemigroup& x,
                                       const std::vector<int>& ideal,
                                       const FiniteSemigroup& y) {
  if (!is_ideal(x, ideal))
    throw std::invalid_argument("reduced product needs a non-empty ideal of X");
  std::vector<char> in_i(x.order(), 0);
  for (int i : ideal) in_i[i] = 1;
  std::vector<int> i_sorted, rest;
  for (int i = 0; i < x.order(); ++i) (in_i[i] ? i_sorted : rest).push_back(i);
  const int ni = static_cast<int>(i_sorted.size());
  const int ny = y.order();
  const int n = ni + static_cast<int>(rest.size()) * ny;

  // local index of i in I, or of the pair (x, y)
  std::vector<int> i_local(x.order(), -1), rest_pos(x.order(), -1);
  for (int k = 0; k < ni; ++k) i_local[i_sorted[k]] = k;
  for (int k = 0; k < static_cast<int>(rest.size()); ++k) rest_pos[rest[k]] = k;
  auto pair_idx = [&](int xe, int ye) { return ni + rest_pos[xe] * ny + ye; };

  // first component in X, second in Y (second meaningful only off the ideal)
  std::vector<int> cx(n), cy(n, -1);
  for (int k = 0; k < ni; ++k) cx[k] = i_sorted[k];
  for (int k = 0; k < static_cast<int>(rest.size()); ++k)
    for (int ye = 0; ye < ny; ++ye) {
      cx[ni + k * ny + ye] = rest[k];
      cy[ni + k * ny + ye] = ye;
    }

  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      int px = x.mul(cx[p], cx[q]);
      int v;
      if (in_i[px]) v = i_local[px];
      else v = pair_idx(px, y.mul(cy[p], cy[q]));  // both factors off the ideal
      t[p * n + q] = v;
    }
  std::vector<std::string> labels(n);
  for (int k = 0; k < ni; ++k) labels[k] = x.label(i_sorted[k]);
  for (int k = 0; k < static_cast<int>(rest.size()); ++k)
    for (int ye = 0; ye < ny; ++ye)
      labels[ni + k * ny + ye] = "(" + x.label(rest[k]) + "," + y.label(ye) + ")";
  return FiniteSemigroup(n, std::move(t), std::move(labels));
}

// Re-indexed table on `elems` (sorted, duplicate-free); fails if not closed.
inline FiniteSemigroup sub_semigroup(const FiniteSemigroup& s,
                                     const std::vector<int>& elems) {
  std::vector<int> local(s.order(), -1);
  for (std::size_t k = 0; k < elems.size(); ++k) {
    int e = elems[k];
    if (e < 0 || e >= s.order())
      throw std::invalid_argument("subsemigroup element out of range");
    if (local[e] != -1) throw std::invalid_argument("duplicate element");
    if (k > 0 && elems[k] < elems[k - 1])
      throw std::invalid_argument("subsemigroup elements must be sorted");
    local[e] = static_cast<int>(k);
  }
  const int n = static_cast<int>(elems.size());
  std::vector<int> t(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int p = s.mul(elems[a], elems[b]);
      if (local[p] == -1)
        throw std::invalid_argument(
            "set is not closed: " + std::to_string(elems[a]) + "*" +
            std::to_string(elems[b]) + " = " + std::to_string(p));
      t[a * n + b] = local[p];
    }
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) labels[a] = s.label(elems[a]);
  return FiniteSemigroup(n, std::move(t), std::move(labels));
}

// Opposite semigroup: x *' y = y * x.
inline FiniteSemigroup transpose(const FiniteSemigroup& s) {
  const int n = s.order();
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i * n + j] = s.mul(j, i);
  return FiniteSemigroup(n, std::move(t),
                         s.has_labels() ? s.labels() : std::vector<std::string>{});
}

struct IdempotentInfo {
  std::vector<int> elements;
  bool linear = false;        // ef = fe in {e, f} for all idempotents e, f
  std::vector<int> chain;     // ascending: chain[i]*chain[j] = chain[min(i,j)]
};

inline IdempotentInfo idempotents(const FiniteSemigroup& s) {
  IdempotentInfo info;
  for (int e = 0; e < s.order(); ++e)
    if (s.mul(e, e) == e) info.elements.push_back(e);
  info.linear = true;
  for (int e : info.elements)
    for (int f : info.elements) {
      int p = s.mul(e, f);
      if (p != s.mul(f, e) || (p != e && p != f)) info.linear = false;
    }
  if (info.linear) {
    info.chain = info.elements;
    std::sort(info.chain.begin(), info.chain.end(),
              [&s](int e, int f) { return e != f && s.mul(e, f) == e; });
  }
  return info;
}

inline bool is_regular_element(const FiniteSemigroup& s, int x) {
  if (x < 0 || x >= s.order())
    throw std::invalid_argument("element index out of range");
  for (int y = 0; y < s.order(); ++y)
    if (s.mul(s.mul(x, y), x) == x) return true;
  return false;
}

// Group of units of e*S*e; the largest subgroup with identity e.
inline std::vector<int> maximal_subgroup(const FiniteSemigroup& s, int e) {
  if (e < 0 || e >= s.order())
    throw std::invalid_argument("element index out of range");
  if (s.mul(e, e) != e)
    throw std::invalid_argument("maximal_subgroup needs an idempotent");
  std::vector<int> local;
  for (int x = 0; x < s.order(); ++x)
    if (s.mul(e, x) == x && s.mul(x, e) == x) local.push_back(x);
  std::vector<int> out;
  for (int x : local) {
    bool unit = false;
    for (int y : local)
      if (s.mul(x, y) == e && s.mul(y, x) == e) { unit = true; break; }
    if (unit) out.push_back(x);
  }
  return out;
}

// One flag per classified property; false flags carry a witness (indices whose
// meaning depends on the flag, e.g. a non-commuting pair). The vacuous empty
// semigroup satisfies everything.
struct PropertyReport {
  bool commutative = true;
  bool idempotents_commute = true;
  bool regular = true;
  bool inverse = true;
  bool clifford = true;
  bool sub_clifford = true;
  bool boolean = true;
  bool linear = true;
  bool semilattice = true;
  std::vector<int> idempotent_set;
  std::map<std::string, std::vector<int>> witnesses;
};

// Classifies by direct definition, then cross-checks `inverse` against
// inverse-uniqueness and `clifford` against maximal-subgroup membership;
// disagreement is an internal error, not a report.
inline PropertyReport classify(const FiniteSemigroup& s) {
  PropertyReport r;
  const int n = s.order();

  for (int i = 0; i < n && r.commutative; ++i)
    for (int j = i + 1; j < n; ++j)
      if (s.mul(i, j) != s.mul(j, i)) {
        r.commutative = false;
        r.witnesses["commutative"] = {i, j};
        break;
      }

  for (int e = 0; e < n; ++e)
    if (s.mul(e, e) == e) r.idempotent_set.push_back(e);

  for (std::size_t a = 0; a < r.idempotent_set.size() && r.idempotents_commute;
       ++a)
    for (std::size_t b = a + 1; b < r.idempotent_set.size(); ++b) {
      int e = r.idempotent_set[a], f = r.idempotent_set[b];
      if (s.mul(e, f) != s.mul(f, e)) {
        r.idempotents_commute = false;
        r.witnesses["idempotents_commute"] = {e, f};
        break;
      }
    }

  for (int x = 0; x < n; ++x)
    if (!is_regular_element(s, x)) {
      r.regular = false;
      r.witnesses["regular"] = {x};
      break;
    }

  // x' is an inverse of x when xx'x = x and x'xx' = x'.
  bool unique_inverses = true;
  for (int x = 0; x < n; ++x) {
    int count = 0;
    for (int y = 0; y < n; ++y)
      if (s.mul(s.mul(x, y), x) == x && s.mul(s.mul(y, x), y) == y) ++count;
    if (count != 1) { unique_inverses = false; break; }
  }
  r.inverse = r.regular && r.idempotents_commute;
  if (r.inverse != unique_inverses)
    throw std::logic_error("inverse-semigroup cross-check disagreement");
  if (!r.inverse)
    r.witnesses["inverse"] = r.regular ? r.witnesses["idempotents_commute"]
                                       : r.witnesses["regular"];

  // Clifford via powers: some x^m = x with m >= 2, i.e. x lies in a subgroup.
  for (int x = 0; x < n; ++x) {
    bool returns = false;
    int p = x;
    for (int m = 2; m <= n + 1; ++m) {
      p = s.mul(p, x);
      if (p == x) { returns = true; break; }
    }
    if (!returns) {
      r.clifford = false;
      r.witnesses["clifford"] = {x};
      break;
    }
  }
  {
    std::vector<char> in_group(n, 0);
    for (int e : r.idempotent_set)
      for (int x : maximal_subgroup(s, e)) in_group[x] = 1;
    bool all = true;
    for (int x = 0; x < n; ++x) all = all && in_group[x];
    if (all != r.clifford)
      throw std::logic_error("clifford cross-check disagreement");
  }

  // x^(a+1) = x^(b+1) must force x^a = x^b (1 <= a < b <= 2n).
  for (int x = 0; x < n && r.sub_clifford; ++x) {
    std::vector<int> pw(2 * n + 2);
    pw[1] = x;
    for (int k = 2; k <= 2 * n + 1; ++k) pw[k] = s.mul(pw[k - 1], x);
    for (int a = 1; a <= 2 * n && r.sub_clifford; ++a)
      for (int b = a + 1; b <= 2 * n; ++b)
        if (pw[a + 1] == pw[b + 1] && pw[a] != pw[b]) {
          r.sub_clifford = false;
          r.witnesses["sub_clifford"] = {x, a, b};
          break;
        }
  }

  for (int x = 0; x < n; ++x)
    if (pow_element(s, x, 3) != x) {
      r.boolean = false;
      r.witnesses["boolean"] = {x};
      break;
    }

  for (int i = 0; i < n && r.linear; ++i)
    for (int j = 0; j < n; ++j) {
      int p = s.mul(i, j);
      if (p != i && p != j) {
        r.linear = false;
        r.witnesses["linear"] = {i, j};
        break;
      }
    }

  r.semilattice = r.commutative;
  for (int x = 0; x < n && r.semilattice; ++x)
    if (s.mul(x, x) != x) {
      r.semilattice = false;
      r.witnesses["semilattice"] = {x};
      break;
    }
  if (!r.commutative && !r.semilattice &&
      r.witnesses.find("semilattice") == r.witnesses.end())
    r.witnesses["semilattice"] = r.witnesses["commutative"];

  return r;
}

}  // namespace sext
