#pragma once

#include <string>
#include <vector>

#include "sext/enumerate.hpp"
#include "sext/semigroup.hpp"
#include "sext/upfamily.hpp"

namespace sext {

// An extension class over a base semigroup, materialized as a Cayley table.
// elements[i] is the upfamily behind table index i, in canonical order;
// embed_index maps a base element x to the index of its principal ultrafilter.
struct LabeledExtension {
  FiniteSemigroup semigroup;
  std::vector<Upfamily> elements;
  FiniteSemigroup base;
  ExtensionClass cls = ExtensionClass::upsilon;
  std::vector<int> embed_index;

  int index_of(const Upfamily& u) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), u);
    if (it == elements.end() || !(*it == u)) return -1;
    return static_cast<int>(it - elements.begin());
  }
};

// Enumerates the class over X and fills in the product table. A product
// falling outside the class would silently corrupt the table, so it aborts
// instead; the caps keep the dense classes at interactive sizes.
inline LabeledExtension build_extension(const FiniteSemigroup& x,
                                        ExtensionClass cls,
                                        const Caps& caps = Caps{}) {
  const int n = x.order();
  if (n > caps.build_cap(cls))
    throw CapExceeded("order " + std::to_string(n) + " exceeds " +
                      class_name(cls) + " cap " +
                      std::to_string(caps.build_cap(cls)));
  LabeledExtension ext;
  ext.base = x;
  ext.cls = cls;
  if (n == 0) return ext;

  ext.elements = enumerate_class(n, cls);
  const int m = static_cast<int>(ext.elements.size());
  GroundAction act(x);
  ProductScratch scratch;
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Upfamily p = product(act, ext.elements[i], ext.elements[j], scratch);
      int k = ext.index_of(p);
      if (k < 0)
        throw std::logic_error("closure violation: " +
                               format_upfamily(ext.elements[i]) + " * " +
                               format_upfamily(ext.elements[j]) + " = " +
                               format_upfamily(p) + " is outside " +
                               class_name(cls));
      table[static_cast<std::size_t>(i) * m + j] = k;
    }
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) labels[i] = format_upfamily(ext.elements[i]);
  ext.semigroup = FiniteSemigroup(m, std::move(table), std::move(labels));
  ext.embed_index.resize(n);
  for (int e = 0; e < n; ++e) {
    int k = ext.index_of(Upfamily::principal_ultra(n, e));
    if (k < 0) throw std::logic_error("principal ultrafilter missing");
    ext.embed_index[e] = k;
  }
  return ext;
}

inline int embed(const LabeledExtension& ext, int x) {
  if (x < 0 || x >= ext.base.order())
    throw std::invalid_argument("base element out of range");
  return ext.embed_index[x];
}

// True when sub.elements[i] has a von Neumann inverse-like witness inside the
// ambient extension: some u with s*u*s = s, products taken over the base.
inline bool regular_in(const LabeledExtension& sub,
                       const LabeledExtension& ambient, int i) {
  if (!sub.base.same_table(ambient.base))
    throw std::invalid_argument("extensions over different bases");
  if (i < 0 || i >= static_cast<int>(sub.elements.size()))
    throw std::invalid_argument("element index out of range");
  if (sub.base.order() == 0) return true;
  const Upfamily& s = sub.elements[i];
  GroundAction act(sub.base);
  ProductScratch scratch;
  for (const Upfamily& u : ambient.elements) {
    Upfamily su = product(act, s, u, scratch);
    if (product(act, su, s, scratch) == s) return true;
  }
  return false;
}

// Members of B lying inside Z, re-indexed to Z's local elements. Z must be a
// closed subset of X, and at least one member of B must fit inside Z.
inline Upfamily restrict_to_subsemigroup(const FiniteSemigroup& x,
                                         const Upfamily& b,
                                         const std::vector<int>& z) {
  if (b.ground_size() != x.order())
    throw std::invalid_argument("upfamily ground does not match semigroup");
  sub_semigroup(x, z);  // validates sortedness and closure
  mask_t zmask = 0;
  for (int e : z) zmask |= mask_t{1} << e;
  std::vector<int> local(x.order(), -1);
  for (std::size_t k = 0; k < z.size(); ++k) local[z[k]] = static_cast<int>(k);
  std::vector<mask_t> gens;
  for (mask_t m : b.minimal_sets())
    if (mask_subset(m, zmask)) {
      mask_t g = 0;
      for (int e : mask_elements(m)) g |= mask_t{1} << local[e];
      gens.push_back(g);
    }
  if (gens.empty())
    throw std::invalid_argument("no member of the upfamily lies inside Z");
  return Upfamily(static_cast<int>(z.size()), gens);
}

}  // namespace sext
