// zs: partial multiplications, Zappa-Szep products, and rewriting at desk scale.
// SPDX-License-Identifier: Apache-2.0
//
// The stock-example registry: the permutation-group decompositions (S4 over
// S3 with a cyclic or Klein complement, the rigidity triple in S3 x Z2),
// small cyclic and pathological magmas, conjugation actions, generator
// actions for the standard two-letter systems, and the groupoid bundles.

#ifndef ZS_EXAMPLES_HPP_
#define ZS_EXAMPLES_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "actions.hpp"
#include "category.hpp"
#include "core.hpp"
#include "magma.hpp"
#include "presentation.hpp"
#include "product.hpp"

namespace zs {

// -- small builders -----------------------------------------------------------

using permutation = std::vector<element_id>;  // one-line notation

inline permutation perm_compose(const permutation& a, const permutation& b) {
  permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];  // apply b first
  return out;
}

inline std::string perm_display(const permutation& p) {
  std::string s;
  for (auto v : p) s += std::to_string(v);
  return s;
}

inline magma magma_of_permutations(const std::vector<permutation>& ps) {
  std::map<permutation, element_id> index;
  std::vector<std::string> names;
  for (element_id i = 0; i < ps.size(); ++i) {
    index[ps[i]] = i;
    names.push_back(perm_display(ps[i]));
  }
  std::vector<std::vector<element_id>> rows(ps.size(), std::vector<element_id>(ps.size()));
  for (element_id i = 0; i < ps.size(); ++i)
    for (element_id j = 0; j < ps.size(); ++j) {
      auto it = index.find(perm_compose(ps[i], ps[j]));
      if (it == index.end())
        throw error(error_code::not_closed, "permutations not closed");
      rows[i][j] = it->second;
    }
  return build_full_magma(ps.size(), rows, names);
}

inline magma make_symmetric_group(std::size_t n) {
  permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::vector<permutation> all;
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return magma_of_permutations(all);
}

inline magma make_cyclic_group(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::vector<element_id>> rows(n, std::vector<element_id>(n));
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(i == 0 ? "e" : "g" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = (i + j) % n;
  }
  return build_full_magma(n, rows, names);
}

inline magma make_klein_group() {
  // {e, a, b, c} with every square trivial
  return build_full_magma(4,
                          {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}},
                          {"e", "a", "b", "c"});
}

/// Direct product of two magmas (full multiplications only).
inline magma direct_product(const magma& a, const magma& b, const std::string& sep = "|") {
  std::vector<std::string> names;
  std::size_t n = a.size() * b.size();
  std::vector<std::vector<element_id>> rows(n, std::vector<element_id>(n));
  auto id = [&](element_id i, element_id j) { return i * b.size() + j; };
  for (element_id i = 0; i < a.size(); ++i)
    for (element_id j = 0; j < b.size(); ++j) names.push_back(a.name(i) + sep + b.name(j));
  for (element_id i1 = 0; i1 < a.size(); ++i1)
    for (element_id j1 = 0; j1 < b.size(); ++j1)
      for (element_id i2 = 0; i2 < a.size(); ++i2)
        for (element_id j2 = 0; j2 < b.size(); ++j2)
          rows[id(i1, j1)][id(i2, j2)] = id(a.product(i1, i2), b.product(j1, j2));
  return build_full_magma(n, rows, names);
}

/// Trivial mutual actions between two magmas (the direct-product data).
inline finite_actions trivial_actions(const magma& u, const magma& a) {
  finite_actions fa;
  fa.U = u;
  fa.A = a;
  fa.h_full = true;
  for (element_id ai = 0; ai < a.size(); ++ai)
    for (element_id ui = 0; ui < u.size(); ++ui) {
      fa.dot[{ai, ui}] = ui;
      fa.exp[{ai, ui}] = ai;
    }
  return fa;
}

/// The free monoid on {x, y} and C2 acting by the letter swap, exp constant.
inline product_domain<word_domain, finite_domain> swap_product() {
  product_domain<word_domain, finite_domain> pd;
  pd.ap.A = finite_domain{make_cyclic_group(2)};
  pd.ap.U = word_domain::free_monoid({"x", "y"});
  pd.ap.h_full = true;
  pd.ap.dot_fn = [](element_id a, const word& w) {
    if (a == 0) return w;
    word out = w;
    for (auto& l : out) l = l == 0 ? 1 : 0;
    return out;
  };
  pd.ap.exp_fn = [](element_id a, const word&) { return a; };
  return pd;
}

// -- the registry -------------------------------------------------------------

struct example_bundle {
  std::string name;
  std::string description;
  std::optional<magma> m;
  std::map<std::string, std::vector<element_id>> subsets;
  std::optional<finite_actions> actions;
  std::optional<gen_actions> gen_acts;
  std::optional<presentation> pres_u, pres_a;
  std::optional<groupoid_bundle> bundle;
  std::vector<element_id> category_a;  // the A subcategory, for bundles
};

namespace detail {

inline std::vector<permutation> s4_elements() {
  permutation p = {0, 1, 2, 3};
  std::vector<permutation> all;
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return all;
}

inline std::vector<element_id> perm_subset(const magma& m,
                                           const std::vector<permutation>& ps) {
  std::vector<element_id> out;
  for (const auto& p : ps) out.push_back(*m.index_of(perm_display(p)));
  return out;
}

inline finite_category pair_groupoid_times(const magma& label_group) {
  // objects p, q; morphisms (tgt, src) x label
  finite_category c;
  c.objects = {"p", "q"};
  struct key {
    element_id tgt, src, lab;
  };
  std::vector<key> keys;
  for (element_id t = 0; t < 2; ++t)
    for (element_id s = 0; s < 2; ++s)
      for (element_id l = 0; l < label_group.size(); ++l) {
        keys.push_back({t, s, l});
        c.morphisms.push_back({c.objects[t] + c.objects[s] + label_group.name(l), s, t});
      }
  auto index = [&](element_id t, element_id s, element_id l) {
    return element_id((t * 2 + s) * label_group.size() + l);
  };
  c.identity = {index(0, 0, *global_identity(label_group)),
                index(1, 1, *global_identity(label_group))};
  for (element_id i = 0; i < keys.size(); ++i)
    for (element_id j = 0; j < keys.size(); ++j)
      if (keys[i].src == keys[j].tgt)
        c.compose[{i, j}] =
            index(keys[i].tgt, keys[j].src, label_group.product(keys[i].lab, keys[j].lab));
  return c;
}

}  // namespace detail

inline std::vector<std::string> stock_example_names() {
  return {"trivial",      "c2",          "c3",          "c4",
          "c6",           "v4",          "s3",          "s4",
          "left-zero-2",  "right-zero-id-3", "idem2",   "s3xz2",
          "s4-s3-c4",     "s4-s3-klein", "s3xz2-jkl",   "c6-c2-c3",
          "s4-c2-c3-c4",  "s4-v4-c3-c2", "c3-c2-conj",  "c2-c3-trivial",
          "c3c2-named",   "c3c2-gen",
          "yx-xyy",       "yx-x",        "yx-xy",       "pairgpd2-c2",
          "gpd-s3-c3-c2"};
}

inline example_bundle stock_example(const std::string& name) {
  example_bundle out;
  out.name = name;
  if (name == "trivial") {
    out.description = "the one-element monoid";
    out.m = build_full_magma(1, {{0}}, {"e"});
  } else if (name == "c2" || name == "c3" || name == "c4" || name == "c6") {
    std::size_t n = name[1] - '0';
    out.description = "cyclic group of order " + std::to_string(n);
    out.m = make_cyclic_group(n);
  } else if (name == "v4") {
    out.description = "Klein four group";
    out.m = make_klein_group();
  } else if (name == "s3" || name == "s4") {
    std::size_t n = name[1] - '0';
    out.description = "symmetric group on " + std::to_string(n) + " points";
    out.m = make_symmetric_group(n);
  } else if (name == "left-zero-2") {
    out.description = "left zero semigroup {x, y} with ab = a";
    out.m = build_full_magma(2, {{0, 0}, {1, 1}}, {"x", "y"});
  } else if (name == "right-zero-id-3") {
    out.description = "right zero semigroup with an identity adjoined";
    out.m = build_full_magma(3, {{0, 1, 2}, {1, 1, 2}, {2, 1, 2}}, {"1", "a", "b"});
  } else if (name == "idem2") {
    out.description = "two-element monoid {1, a} with aa = a";
    out.m = build_full_magma(2, {{0, 1}, {1, 1}}, {"1", "a"});
  } else if (name == "s3xz2") {
    out.description = "S3 x Z2";
    out.m = direct_product(make_symmetric_group(3), make_cyclic_group(2));
  } else if (name == "s4-s3-c4" || name == "s4-s3-klein") {
    out.m = make_symmetric_group(4);
    std::vector<permutation> s3;
    for (const auto& p : detail::s4_elements())
      if (p[3] == 3) s3.push_back(p);
    out.subsets["U"] = detail::perm_subset(*out.m, s3);
    if (name == "s4-s3-c4") {
      out.description = "S4 = S3 |x| C4, the cyclic complement";
      permutation c = {1, 2, 3, 0};
      std::vector<permutation> c4 = {{0, 1, 2, 3}, c, perm_compose(c, c),
                                     perm_compose(c, perm_compose(c, c))};
      out.subsets["A"] = detail::perm_subset(*out.m, c4);
    } else {
      out.description = "S4 = S3 |x| V, the Klein complement";
      std::vector<permutation> v = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
      out.subsets["A"] = detail::perm_subset(*out.m, v);
    }
  } else if (name == "s3xz2-jkl") {
    out.description = "isomorphic complements J, L of K in S3 x Z2 with no "
                      "automorphism carrying one to the other";
    auto h = direct_product(make_symmetric_group(3), make_cyclic_group(2));
    out.m = h;
    auto idx = [&](const std::string& n) { return *h.index_of(n); };
    std::vector<element_id> k;
    for (element_id i = 0; i < h.size(); ++i)
      if (h.name(i).size() >= 2 && h.name(i).substr(h.name(i).size() - 2) == "|e")
        k.push_back(i);
    out.subsets["K"] = k;
    out.subsets["J"] = {idx("012|e"), idx("102|g1")};  // <((0 1), y)>
    out.subsets["L"] = {idx("012|e"), idx("012|g1")};  // <(1, y)>
  } else if (name == "c6-c2-c3") {
    out.description = "C6 = C2 |x| C3 with commuting factors";
    out.m = make_cyclic_group(6);
    out.subsets["U"] = {0, 3};
    out.subsets["A"] = {0, 2, 4};
  } else if (name == "s4-c2-c3-c4") {
    out.description = "S4 = C2 C3 C4 as sets; the middle spans are not closed";
    out.m = make_symmetric_group(4);
    out.subsets["F1"] = detail::perm_subset(*out.m, {{0, 1, 2, 3}, {1, 0, 2, 3}});
    out.subsets["F2"] =
        detail::perm_subset(*out.m, {{0, 1, 2, 3}, {1, 2, 0, 3}, {2, 0, 1, 3}});
    permutation c = {1, 2, 3, 0};
    out.subsets["F3"] = detail::perm_subset(
        *out.m, {{0, 1, 2, 3}, c, perm_compose(c, c), perm_compose(c, perm_compose(c, c))});
  } else if (name == "s4-v4-c3-c2") {
    out.description = "S4 = V4 C3 C2, a three-factor decomposition with closed spans";
    out.m = make_symmetric_group(4);
    out.subsets["F1"] = detail::perm_subset(
        *out.m, {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
    out.subsets["F2"] =
        detail::perm_subset(*out.m, {{0, 1, 2, 3}, {1, 2, 0, 3}, {2, 0, 1, 3}});
    out.subsets["F3"] = detail::perm_subset(*out.m, {{0, 1, 2, 3}, {1, 0, 2, 3}});
  } else if (name == "c3-c2-conj") {
    out.description = "C3 with C2 acting by inversion (the S3 data)";
    finite_actions fa;
    fa.U = make_cyclic_group(3);
    fa.A = make_cyclic_group(2);
    fa.h_full = true;
    for (element_id a = 0; a < 2; ++a)
      for (element_id u = 0; u < 3; ++u) {
        fa.dot[{a, u}] = a == 0 ? u : (3 - u) % 3;  // conjugation inverts
        fa.exp[{a, u}] = a;
      }
    out.actions = fa;
  } else if (name == "c2-c3-trivial") {
    out.description = "trivial actions between C2 and C3 (direct product C6)";
    out.actions = trivial_actions(make_cyclic_group(2), make_cyclic_group(3));
  } else if (name == "c3c2-named") {
    out.description = "the conjugation actions with carriers named to match "
                      "the presentations <r, s | ...> and <f | ff>";
    finite_actions fa;
    fa.U = renamed(make_cyclic_group(3), {"1", "r", "s"});
    fa.A = renamed(make_cyclic_group(2), {"1", "f"});
    fa.h_full = true;
    for (element_id a = 0; a < 2; ++a)
      for (element_id u = 0; u < 3; ++u) {
        fa.dot[{a, u}] = a == 0 ? u : (3 - u) % 3;
        fa.exp[{a, u}] = a;
      }
    out.actions = fa;
  } else if (name == "c3c2-gen") {
    out.description = "generator data for C3 |x| C2: X = {r, s}, Y = {f}";
    gen_actions ga;
    ga.x_alphabet = {"r", "s"};
    ga.y_alphabet = {"f"};
    ga.dot[{0, 0}] = 1;  // f.r = s
    ga.dot[{0, 1}] = 0;  // f.s = r
    ga.exp[{0, 0}] = {0};
    ga.exp[{0, 1}] = {0};
    out.gen_acts = ga;
    rule_set ru;
    ru.alphabet = {"r", "s"};
    ru.kind = pres_kind::monoid;
    ru.rules = {{{0, 0}, {1}}, {{1, 1}, {0}}, {{0, 1}, {}}, {{1, 0}, {}}};
    out.pres_u = presentation::plain(ru);
    rule_set ra;
    ra.alphabet = {"f"};
    ra.kind = pres_kind::monoid;
    ra.rules = {{{0, 0}, {}}};
    out.pres_a = presentation::plain(ra);
  } else if (name == "yx-xyy" || name == "yx-x" || name == "yx-xy") {
    gen_actions ga;
    ga.x_alphabet = {"x"};
    ga.y_alphabet = {"y"};
    ga.dot[{0, 0}] = 0;
    if (name == "yx-xyy") {
      out.description = "y x -> x y y, the doubling action";
      ga.exp[{0, 0}] = {0, 0};
    } else if (name == "yx-x") {
      out.description = "y x -> x, the absorbing action";
      ga.exp[{0, 0}] = {};
    } else {
      out.description = "y x -> x y, the free abelian monoid on two generators";
      ga.exp[{0, 0}] = {0};
    }
    out.gen_acts = ga;
  } else if (name == "pairgpd2-c2") {
    out.description = "pair groupoid on two objects times C2, with U = C2";
    groupoid_bundle b;
    b.g = detail::pair_groupoid_times(make_cyclic_group(2));
    b.u = make_cyclic_group(2);
    b.phi.resize(2);
    for (element_id x = 0; x < 2; ++x)
      for (element_id u = 0; u < 2; ++u)
        b.phi[x].push_back(*b.g.morphism_index(
            b.g.objects[x] + b.g.objects[x] + b.u.name(u)));
    out.bundle = b;
    for (element_id i = 0; i < b.g.morphisms.size(); ++i)
      if (b.g.morphisms[i].name.back() == 'e') out.category_a.push_back(i);
  } else if (name == "gpd-s3-c3-c2") {
    out.description =
        "connected groupoid with vertex groups S3, A with vertex groups C3, "
        "U = C2 embedded differently at the two objects";
    auto s3 = make_symmetric_group(3);
    finite_category c;
    c.objects = {"p", "q"};
    std::vector<std::array<element_id, 3>> keys;  // (tgt, src, g)
    for (element_id t = 0; t < 2; ++t)
      for (element_id s = 0; s < 2; ++s)
        for (element_id g = 0; g < s3.size(); ++g) {
          keys.push_back({t, s, g});
          c.morphisms.push_back({s3.name(g) + ":" + c.objects[t] + c.objects[s], s, t});
        }
    auto index = [&](element_id t, element_id s, element_id g) {
      return element_id((t * 2 + s) * s3.size() + g);
    };
    c.identity = {index(0, 0, 0), index(1, 1, 0)};
    for (element_id i = 0; i < keys.size(); ++i)
      for (element_id j = 0; j < keys.size(); ++j)
        if (keys[i][1] == keys[j][0])
          c.compose[{i, j}] =
              index(keys[i][0], keys[j][1], s3.product(keys[i][2], keys[j][2]));
    groupoid_bundle b;
    b.g = c;
    b.u = make_cyclic_group(2);
    element_id t01 = *s3.index_of("102");  // the transposition (0 1)
    element_id t02 = *s3.index_of("210");  // the transposition (0 2)
    b.phi = {{index(0, 0, 0), index(0, 0, t01)},
             {index(1, 1, 0), index(1, 1, t02)}};
    out.bundle = b;
    // A: the connected subgroupoid with vertex groups C3 = <(0 1 2)>
    element_id r = *s3.index_of("120");
    std::vector<element_id> c3 = {0, r, s3.product(r, r)};
    for (element_id t = 0; t < 2; ++t)
      for (element_id s = 0; s < 2; ++s)
        for (auto g : c3) out.category_a.push_back(index(t, s, g));
    std::sort(out.category_a.begin(), out.category_a.end());
  } else {
    throw error(error_code::unknown_example, "no stock example named '" + name + "'");
  }
  return out;
}

}  // namespace zs

#endif  // ZS_EXAMPLES_HPP_
