// zs: partial multiplications, Zappa-Szep products, and rewriting at desk scale.
// SPDX-License-Identifier: Apache-2.0
//
// Mutual actions between two multiplication domains: deriving them from an
// internal unique factorization, the axiom catalog P1-P8 (with directional
// variants of the four mixed-associativity identities), and the one-parameter
// family properties.

#ifndef ZS_ACTIONS_HPP_
#define ZS_ACTIONS_HPP_

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "domain.hpp"
#include "magma.hpp"

namespace zs {

/// Mutual actions dot : H -> U and exp : H -> A on H, a subset of A x U.
/// H is either all of A x U or an explicit pair set.
template <mul_domain DA, mul_domain DU>
struct action_pair {
  using a_elem = typename DA::element_type;
  using u_elem = typename DU::element_type;

  DA A;
  DU U;
  bool h_full = true;
  std::set<std::pair<a_elem, u_elem>> h_pairs;  // used when !h_full
  std::function<u_elem(const a_elem&, const u_elem&)> dot_fn;
  std::function<a_elem(const a_elem&, const u_elem&)> exp_fn;

  bool in_h(const a_elem& a, const u_elem& u) const {
    return h_full || h_pairs.count({a, u}) != 0;
  }
  u_elem dot(const a_elem& a, const u_elem& u) const { return dot_fn(a, u); }
  a_elem exp(const a_elem& a, const u_elem& u) const { return exp_fn(a, u); }
};

/// E, a subset of U x A, the carrier of a product.
template <typename UElem, typename AElem>
struct product_set {
  bool full = true;
  std::set<std::pair<UElem, AElem>> pairs;

  bool contains(const UElem& u, const AElem& a) const {
    return full || pairs.count({u, a}) != 0;
  }
  static product_set all() { return product_set{}; }
  static product_set of(std::set<std::pair<UElem, AElem>> p) {
    return product_set{false, std::move(p)};
  }
};

/// Explicit finite mutual actions: two magmas plus dot/exp tables on H.
/// The serializable (and fuzzable) form; `view()` adapts it to the generic
/// machinery.
struct finite_actions {
  magma A, U;
  bool h_full = false;
  std::vector<std::pair<element_id, element_id>> h;  // sorted (a, u) pairs
  std::map<std::pair<element_id, element_id>, element_id> dot;
  std::map<std::pair<element_id, element_id>, element_id> exp;

  bool in_h(element_id a, element_id u) const {
    if (h_full) return true;
    return std::binary_search(h.begin(), h.end(), std::make_pair(a, u));
  }

  std::vector<std::pair<element_id, element_id>> h_enumerated() const {
    if (!h_full) return h;
    std::vector<std::pair<element_id, element_id>> out;
    for (element_id a = 0; a < A.size(); ++a)
      for (element_id u = 0; u < U.size(); ++u) out.push_back({a, u});
    return out;
  }

  action_pair<finite_domain, finite_domain> view() const {
    action_pair<finite_domain, finite_domain> ap;
    ap.A = finite_domain{A};
    ap.U = finite_domain{U};
    ap.h_full = h_full;
    if (!h_full) ap.h_pairs.insert(h.begin(), h.end());
    auto dot_copy = dot;
    auto exp_copy = exp;
    ap.dot_fn = [dot_copy](element_id a, element_id u) { return dot_copy.at({a, u}); };
    ap.exp_fn = [exp_copy](element_id a, element_id u) { return exp_copy.at({a, u}); };
    return ap;
  }

  bool operator==(const finite_actions& o) const {
    return A == o.A && U == o.U && h_full == o.h_full && h == o.h && dot == o.dot &&
           exp == o.exp;
  }
};

/// Records each element's unique factorization x = u a with u from the
/// U-subset and a from the A-subset (parent element ids).
struct factorization_table {
  std::vector<std::pair<element_id, element_id>> parts;  // x -> (u, a)
};

/// Result of reading actions off an internal unique factorization.
struct derived_actions {
  finite_actions actions;            // over the reindexed sub-magmas
  std::vector<element_id> u_embed;   // sub U index -> parent index
  std::vector<element_id> a_embed;   // sub A index -> parent index
  factorization_table factorization;
};

/// Verifies that U_subset and A_subset are closed and that every element of m
/// factors uniquely as u a; returns the mutual actions defined by the
/// multiplication on H = (A x U) n D, together with the factorization table.
inline derived_actions derive_internal_actions(const magma& m,
                                               const std::vector<element_id>& u_subset,
                                               const std::vector<element_id>& a_subset) {
  sub_magma su = restrict_to(m, u_subset);   // throws NotClosed
  sub_magma sa = restrict_to(m, a_subset);

  std::set<element_id> uset(su.embed.begin(), su.embed.end());
  std::set<element_id> aset(sa.embed.begin(), sa.embed.end());

  factorization_table table;
  table.parts.assign(m.size(), {0, 0});
  for (element_id x = 0; x < m.size(); ++x) {
    std::optional<std::pair<element_id, element_id>> found;
    for (auto u : su.embed)
      for (auto a : sa.embed) {
        if (!m.defined(u, a) || m.product(u, a) != x) continue;
        if (found)
          throw error(error_code::factorization_ambiguous,
                      m.name(x) + " = " + m.name(found->first) + "*" +
                          m.name(found->second) + " = " + m.name(u) + "*" + m.name(a));
        found = {u, a};
      }
    if (!found)
      throw error(error_code::factorization_missing,
                  m.name(x) + " is not a product u*a");
    table.parts[x] = *found;
  }

  std::map<element_id, element_id> u_back, a_back;
  for (element_id i = 0; i < su.embed.size(); ++i) u_back[su.embed[i]] = i;
  for (element_id i = 0; i < sa.embed.size(); ++i) a_back[sa.embed[i]] = i;

  finite_actions acts;
  acts.A = sa.m;
  acts.U = su.m;
  acts.h_full = false;
  for (element_id ai = 0; ai < sa.embed.size(); ++ai)
    for (element_id ui = 0; ui < su.embed.size(); ++ui) {
      element_id a = sa.embed[ai], u = su.embed[ui];
      if (!m.defined(a, u)) continue;
      auto [u2, a2] = table.parts[m.product(a, u)];
      acts.h.push_back({ai, ui});
      acts.dot[{ai, ui}] = u_back.at(u2);
      acts.exp[{ai, ui}] = a_back.at(a2);
    }
  std::sort(acts.h.begin(), acts.h.end());
  return derived_actions{std::move(acts), su.embed, sa.embed, std::move(table)};
}

enum class axiom {
  p1a, p1b, p1c,
  p2a_fwd, p2a_bwd, p2b_fwd, p2b_bwd, p2c_fwd, p2c_bwd, p2d_fwd, p2d_bwd,
  p3a, p3b,
  p4a, p4b,
  p5a, p5b,
  p6,
  p7a, p7b, p7c, p7d, p7e, p7f, p7g, p7h,
  p8
};

inline const char* to_string(axiom t) {
  switch (t) {
    case axiom::p1a: return "P1a";
    case axiom::p1b: return "P1b";
    case axiom::p1c: return "P1c";
    case axiom::p2a_fwd: return "P2a=>";
    case axiom::p2a_bwd: return "P2a<=";
    case axiom::p2b_fwd: return "P2b=>";
    case axiom::p2b_bwd: return "P2b<=";
    case axiom::p2c_fwd: return "P2c=>";
    case axiom::p2c_bwd: return "P2c<=";
    case axiom::p2d_fwd: return "P2d=>";
    case axiom::p2d_bwd: return "P2d<=";
    case axiom::p3a: return "P3a";
    case axiom::p3b: return "P3b";
    case axiom::p4a: return "P4a";
    case axiom::p4b: return "P4b";
    case axiom::p5a: return "P5a";
    case axiom::p5b: return "P5b";
    case axiom::p6: return "P6";
    case axiom::p7a: return "P7a";
    case axiom::p7b: return "P7b";
    case axiom::p7c: return "P7c";
    case axiom::p7d: return "P7d";
    case axiom::p7e: return "P7e";
    case axiom::p7f: return "P7f";
    case axiom::p7g: return "P7g";
    case axiom::p7h: return "P7h";
    case axiom::p8: return "P8";
  }
  return "?";
}

inline std::vector<axiom> all_axioms() {
  std::vector<axiom> out;
  for (int i = 0; i <= static_cast<int>(axiom::p8); ++i)
    out.push_back(static_cast<axiom>(i));
  return out;
}

/// Both directions of one of the P2 identities, or a single tag.
inline std::vector<axiom> axioms_from_string(const std::string& s) {
  if (s == "P2a") return {axiom::p2a_fwd, axiom::p2a_bwd};
  if (s == "P2b") return {axiom::p2b_fwd, axiom::p2b_bwd};
  if (s == "P2c") return {axiom::p2c_fwd, axiom::p2c_bwd};
  if (s == "P2d") return {axiom::p2d_fwd, axiom::p2d_bwd};
  for (auto t : all_axioms())
    if (s == to_string(t)) return {t};
  return {};
}

/// Result of checking one axiom.  For non-exhaustive (word) domains a clean
/// sweep is reported as inconclusive with note "pass-up-to-fuel": the
/// quantifier was only enumerated, never decided.  `recheck()` re-evaluates
/// the violated instance and is present exactly on fail.
struct axiom_report {
  std::string axiom_name;
  verdict result = verdict::pass;
  std::vector<std::string> witness;
  std::string note;
  std::function<bool()> recheck;  // true = the witness still violates

  bool failed() const { return result == verdict::fail; }
  bool clean() const { return result != verdict::fail; }
};

namespace detail {

template <typename... Ts>
std::vector<std::string> display_tuple(Ts&&... parts) {
  return {std::forward<Ts>(parts)...};
}

}  // namespace detail

/// Checks one axiom of the catalog over all tuples enumerated from the two
/// domains (exhaustive when both are finite).  E is only consulted by P1a-c.
template <mul_domain DA, mul_domain DU>
axiom_report check_axiom_impl(
    const action_pair<DA, DU>& ap,
    const product_set<typename DU::element_type, typename DA::element_type>& e,
    axiom tag, std::size_t fuel) {
  using a_el = typename DA::element_type;
  using u_el = typename DU::element_type;

  const bool total = ap.A.exhaustive() && ap.U.exhaustive();
  auto as = ap.A.elements(fuel);
  auto us = ap.U.elements(fuel);

  axiom_report rep;
  rep.axiom_name = to_string(tag);
  rep.result = total ? verdict::pass : verdict::inconclusive;
  if (!total) rep.note = "pass-up-to-fuel";

  auto fail = [&](std::vector<std::string> w, std::function<bool()> again) {
    rep.result = verdict::fail;
    rep.witness = std::move(w);
    rep.note.clear();
    rep.recheck = std::move(again);
    return rep;
  };
  // an existential that could not be settled inside the enumeration
  bool search_exhausted = false;

  auto da = [&](const a_el& x, const a_el& y) { return ap.A.defined(x, y); };
  auto du = [&](const u_el& x, const u_el& y) { return ap.U.defined(x, y); };

  switch (tag) {
    case axiom::p1a: {
      for (const auto& a : as)
        for (const auto& u : us) {
          if (!ap.in_h(a, u)) continue;
          if (!e.contains(ap.dot(a, u), ap.exp(a, u)))
            return fail(detail::display_tuple(ap.A.display(a), ap.U.display(u)),
                        [=] { return !e.contains(ap.dot(a, u), ap.exp(a, u)); });
        }
      break;
    }
    case axiom::p1b: {
      for (const auto& u : us)
        for (const auto& a : as) {
          if (!e.contains(u, a)) continue;
          for (const auto& v : us)
            if (du(v, u) && !e.contains(ap.U.product(v, u), a))
              return fail(detail::display_tuple(ap.U.display(u), ap.A.display(a),
                                                ap.U.display(v)),
                          [=] { return !e.contains(ap.U.product(v, u), a); });
        }
      break;
    }
    case axiom::p1c: {
      for (const auto& u : us)
        for (const auto& a : as) {
          if (!e.contains(u, a)) continue;
          for (const auto& b : as)
            if (da(a, b) && !e.contains(u, ap.A.product(a, b)))
              return fail(detail::display_tuple(ap.U.display(u), ap.A.display(a),
                                                ap.A.display(b)),
                          [=] { return !e.contains(u, ap.A.product(a, b)); });
        }
      break;
    }

    case axiom::p2a_fwd:
    case axiom::p2a_bwd:
    case axiom::p2b_fwd:
    case axiom::p2b_bwd: {
      for (const auto& a : as)
        for (const auto& b : as)
          for (const auto& u : us) {
            // left side of (a)/(b): (ab) acting on u, intermediates: ab
            bool lhs_def = da(a, b) && ap.in_h(ap.A.product(a, b), u);
            // right side: per identity
            bool rhs_base = ap.in_h(b, u) && ap.in_h(a, ap.dot(b, u));
            bool rhs_def = rhs_base;
            if (tag == axiom::p2b_fwd || tag == axiom::p2b_bwd)
              rhs_def = rhs_base && da(ap.exp(a, ap.dot(b, u)), ap.exp(b, u));

            bool fwd = tag == axiom::p2a_fwd || tag == axiom::p2b_fwd;
            bool dot_identity = tag == axiom::p2a_fwd || tag == axiom::p2a_bwd;

            auto violates = [=]() -> bool {
              bool l = ap.A.defined(a, b) && ap.in_h(ap.A.product(a, b), u);
              bool rbase = ap.in_h(b, u) && ap.in_h(a, ap.dot(b, u));
              bool r = rbase;
              if (!dot_identity)
                r = rbase && ap.A.defined(ap.exp(a, ap.dot(b, u)), ap.exp(b, u));
              if (fwd ? !l : !r) return false;
              if (fwd ? !r : !l) return true;
              if (dot_identity)
                return !(ap.dot(ap.A.product(a, b), u) == ap.dot(a, ap.dot(b, u)));
              return !(ap.exp(ap.A.product(a, b), u) ==
                       ap.A.product(ap.exp(a, ap.dot(b, u)), ap.exp(b, u)));
            };
            if ((fwd && lhs_def) || (!fwd && rhs_def)) {
              if (violates())
                return fail(detail::display_tuple(ap.A.display(a), ap.A.display(b),
                                                  ap.U.display(u)),
                            violates);
            }
          }
      break;
    }

    case axiom::p2c_fwd:
    case axiom::p2c_bwd:
    case axiom::p2d_fwd:
    case axiom::p2d_bwd: {
      for (const auto& a : as)
        for (const auto& u : us)
          for (const auto& v : us) {
            bool lhs_def = du(u, v) && ap.in_h(a, ap.U.product(u, v));
            bool rhs_base = ap.in_h(a, u) && ap.in_h(ap.exp(a, u), v);
            bool is_c = tag == axiom::p2c_fwd || tag == axiom::p2c_bwd;
            bool rhs_def = rhs_base;
            if (is_c)
              rhs_def = rhs_base && du(ap.dot(a, u), ap.dot(ap.exp(a, u), v));
            bool fwd = tag == axiom::p2c_fwd || tag == axiom::p2d_fwd;

            auto violates = [=]() -> bool {
              bool l = ap.U.defined(u, v) && ap.in_h(a, ap.U.product(u, v));
              bool rbase = ap.in_h(a, u) && ap.in_h(ap.exp(a, u), v);
              bool r = rbase;
              if (is_c)
                r = rbase && ap.U.defined(ap.dot(a, u), ap.dot(ap.exp(a, u), v));
              if (fwd ? !l : !r) return false;
              if (fwd ? !r : !l) return true;
              if (is_c)
                return !(ap.dot(a, ap.U.product(u, v)) ==
                         ap.U.product(ap.dot(a, u), ap.dot(ap.exp(a, u), v)));
              return !(ap.exp(a, ap.U.product(u, v)) == ap.exp(ap.exp(a, u), v));
            };
            if ((fwd && lhs_def) || (!fwd && rhs_def)) {
              if (violates())
                return fail(detail::display_tuple(ap.A.display(a), ap.U.display(u),
                                                  ap.U.display(v)),
                            violates);
            }
          }
      break;
    }

    case axiom::p3a: {
      for (const auto& a : as)
        for (const auto& b : as)
          for (const auto& u : us)
            if (da(a, b) && ap.in_h(b, u) && !ap.in_h(ap.A.product(a, b), u))
              return fail(detail::display_tuple(ap.A.display(a), ap.A.display(b),
                                                ap.U.display(u)),
                          [=] { return !ap.in_h(ap.A.product(a, b), u); });
      break;
    }
    case axiom::p3b: {
      for (const auto& a : as)
        for (const auto& u : us)
          for (const auto& v : us)
            if (du(u, v) && ap.in_h(a, u) && !ap.in_h(a, ap.U.product(u, v)))
              return fail(detail::display_tuple(ap.A.display(a), ap.U.display(u),
                                                ap.U.display(v)),
                          [=] { return !ap.in_h(a, ap.U.product(u, v)); });
      break;
    }

    case axiom::p4a: {
      for (const auto& a : as)
        for (const auto& b : as)
          for (const auto& u : us)
            if (!(a == b) && ap.in_h(a, u) && ap.in_h(b, u) &&
                ap.exp(a, u) == ap.exp(b, u))
              return fail(detail::display_tuple(ap.A.display(a), ap.A.display(b),
                                                ap.U.display(u)),
                          [=] { return ap.exp(a, u) == ap.exp(b, u); });
      break;
    }
    case axiom::p4b: {
      for (const auto& a : as)
        for (const auto& u : us)
          for (const auto& v : us)
            if (!(u == v) && ap.in_h(a, u) && ap.in_h(a, v) &&
                ap.dot(a, u) == ap.dot(a, v))
              return fail(detail::display_tuple(ap.A.display(a), ap.U.display(u),
                                                ap.U.display(v)),
                          [=] { return ap.dot(a, u) == ap.dot(a, v); });
      break;
    }

    case axiom::p5a: {  // dot is a surjective family: each v is a value of a.(-)
      for (const auto& a : as)
        for (const auto& v : us) {
          bool found = false;
          for (const auto& u : us)
            if (ap.in_h(a, u) && ap.dot(a, u) == v) {
              found = true;
              break;
            }
          if (!found) {
            if (!total) {
              search_exhausted = true;
              continue;
            }
            return fail(detail::display_tuple(ap.A.display(a), ap.U.display(v)),
                        [=] {
                          for (const auto& u : us)
                            if (ap.in_h(a, u) && ap.dot(a, u) == v) return false;
                          return true;
                        });
          }
        }
      break;
    }
    case axiom::p5b: {
      for (const auto& u : us)
        for (const auto& b : as) {
          bool found = false;
          for (const auto& a : as)
            if (ap.in_h(a, u) && ap.exp(a, u) == b) {
              found = true;
              break;
            }
          if (!found) {
            if (!total) {
              search_exhausted = true;
              continue;
            }
            return fail(detail::display_tuple(ap.U.display(u), ap.A.display(b)),
                        [=] {
                          for (const auto& a : as)
                            if (ap.in_h(a, u) && ap.exp(a, u) == b) return false;
                          return true;
                        });
          }
        }
      break;
    }

    case axiom::p6: {
      if (ap.h_full) break;
      for (const auto& a : as)
        for (const auto& u : us)
          if (!ap.in_h(a, u))
            return fail(detail::display_tuple(ap.A.display(a), ap.U.display(u)),
                        [=] { return !ap.in_h(a, u); });
      break;
    }

    case axiom::p7a:
    case axiom::p7b: {
      auto ids = tag == axiom::p7a ? right_identities(ap.U, fuel)
                                   : left_identities(ap.U, fuel);
      for (const auto& a : as)
        for (const auto& u : ids)
          if (ap.in_h(a, u) && !(ap.exp(a, u) == a))
            return fail(detail::display_tuple(ap.A.display(a), ap.U.display(u)),
                        [=] { return !(ap.exp(a, u) == a); });
      break;
    }
    case axiom::p7c:
    case axiom::p7d: {
      auto ids = tag == axiom::p7c ? right_identities(ap.A, fuel)
                                   : left_identities(ap.A, fuel);
      for (const auto& a : ids)
        for (const auto& u : us)
          if (ap.in_h(a, u) && !(ap.dot(a, u) == u))
            return fail(detail::display_tuple(ap.A.display(a), ap.U.display(u)),
                        [=] { return !(ap.dot(a, u) == u); });
      break;
    }
    case axiom::p7e: {
      auto ids = right_identities(ap.U, fuel);
      std::set<u_el> idset(ids.begin(), ids.end());
      for (const auto& u : ids)
        for (const auto& a : as)
          if (!ap.in_h(a, u) || !idset.count(ap.dot(a, u)))
            return fail(detail::display_tuple(ap.A.display(a), ap.U.display(u)),
                        [=] {
                          return !ap.in_h(a, u) ||
                                 !(ap.dot(a, u) == u ||
                                   // recompute identity status exactly
                                   right_identities(ap.U, fuel).end() !=
                                       std::find(right_identities(ap.U, fuel).begin(),
                                                 right_identities(ap.U, fuel).end(),
                                                 ap.dot(a, u)));
                        });
      break;
    }
    case axiom::p7f: {
      auto ids = left_identities(ap.A, fuel);
      std::set<a_el> idset(ids.begin(), ids.end());
      for (const auto& a : ids)
        for (const auto& u : us)
          if (!ap.in_h(a, u) || !idset.count(ap.exp(a, u)))
            return fail(detail::display_tuple(ap.A.display(a), ap.U.display(u)),
                        [=] {
                          auto again = left_identities(ap.A, fuel);
                          return !ap.in_h(a, u) ||
                                 std::find(again.begin(), again.end(),
                                           ap.exp(a, u)) == again.end();
                        });
      break;
    }
    case axiom::p7g: {
      auto ids = right_identities(ap.U, fuel);
      std::set<u_el> idset(ids.begin(), ids.end());
      for (const auto& a : as)
        for (const auto& u : us)
          if (ap.in_h(a, u) && idset.count(ap.dot(a, u)) && !idset.count(u))
            return fail(detail::display_tuple(ap.A.display(a), ap.U.display(u)),
                        [=] {
                          auto again = right_identities(ap.U, fuel);
                          std::set<u_el> s(again.begin(), again.end());
                          return s.count(ap.dot(a, u)) && !s.count(u);
                        });
      break;
    }
    case axiom::p7h: {
      auto ids = left_identities(ap.A, fuel);
      std::set<a_el> idset(ids.begin(), ids.end());
      for (const auto& a : as)
        for (const auto& u : us)
          if (ap.in_h(a, u) && idset.count(ap.exp(a, u)) && !idset.count(a))
            return fail(detail::display_tuple(ap.A.display(a), ap.U.display(u)),
                        [=] {
                          auto again = left_identities(ap.A, fuel);
                          std::set<a_el> s(again.begin(), again.end());
                          return s.count(ap.exp(a, u)) && !s.count(a);
                        });
      break;
    }

    case axiom::p8: {
      // strongly coconfluent exp family
      for (const auto& a : as)
        for (const auto& u : us) {
          if (!ap.in_h(a, u)) continue;
          for (const auto& b : as)
            for (const auto& v : us) {
              if (!ap.in_h(b, v) || !(ap.exp(a, u) == ap.exp(b, v))) continue;
              // do u and v have a common left multiple?
              bool clm = false;
              for (const auto& p : us) {
                if (!du(p, u)) continue;
                for (const auto& q : us)
                  if (du(q, v) && ap.U.product(p, u) == ap.U.product(q, v)) {
                    clm = true;
                    break;
                  }
                if (clm) break;
              }
              if (!clm) continue;
              bool found = false;
              for (const auto& g : as) {
                for (const auto& p : us) {
                  if (!ap.in_h(g, p) || !(ap.exp(g, p) == a) || !du(p, u)) continue;
                  for (const auto& q : us)
                    if (ap.in_h(g, q) && ap.exp(g, q) == b && du(q, v) &&
                        ap.U.product(p, u) == ap.U.product(q, v)) {
                      found = true;
                      break;
                    }
                  if (found) break;
                }
                if (found) break;
              }
              if (!found) {
                if (!total) {
                  search_exhausted = true;
                  continue;
                }
                return fail(
                    detail::display_tuple(ap.A.display(a), ap.U.display(u),
                                          ap.A.display(b), ap.U.display(v)),
                    [=] {
                      for (const auto& g : as)
                        for (const auto& p : us)
                          for (const auto& q : us)
                            if (ap.in_h(g, p) && ap.in_h(g, q) &&
                                ap.exp(g, p) == a && ap.exp(g, q) == b &&
                                ap.U.defined(p, u) && ap.U.defined(q, v) &&
                                ap.U.product(p, u) == ap.U.product(q, v))
                              return false;
                      return true;
                    });
              }
            }
        }
      break;
    }
  }

  if (search_exhausted) {
    rep.result = verdict::inconclusive;
    rep.note = "existential witness search exhausted the enumeration";
  }
  return rep;
}

/// Checks one axiom of the catalog.  Running out of rewriting fuel inside a
/// word domain is reported as inconclusive, never as pass.
template <mul_domain DA, mul_domain DU>
axiom_report check_axiom(
    const action_pair<DA, DU>& ap,
    const product_set<typename DU::element_type, typename DA::element_type>& e,
    axiom tag, std::size_t fuel = fuel_defaults::word_length) {
  try {
    return check_axiom_impl(ap, e, tag, fuel);
  } catch (const error& err) {
    if (err.code != error_code::fuel_exhausted) throw;
    axiom_report rep;
    rep.axiom_name = to_string(tag);
    rep.result = verdict::inconclusive;
    rep.note = "fuel exhausted while evaluating";
    return rep;
  }
}

template <mul_domain DA, mul_domain DU>
axiom_report check_axiom(const action_pair<DA, DU>& ap, axiom tag,
                         std::size_t fuel = fuel_defaults::word_length) {
  product_set<typename DU::element_type, typename DA::element_type> full;
  return check_axiom(ap, full, tag, fuel);
}

/// Per-family verdicts for the one-parameter family properties.
struct family_report {
  axiom_report injective, surjective, confluent, coconfluent, strongly_coconfluent,
      multiplicative, trivial;
};

struct family_properties_result {
  family_report exp_family;  // (a, u) -> a^u, base A, parameters U
  family_report dot_family;  // (a, u) -> a.u, base U, parameters A
};

template <mul_domain DA, mul_domain DU>
family_properties_result family_properties(const action_pair<DA, DU>& ap,
                                           std::size_t fuel = fuel_defaults::word_length) {
  const bool total = ap.A.exhaustive() && ap.U.exhaustive();
  auto as = ap.A.elements(fuel);
  auto us = ap.U.elements(fuel);

  family_properties_result out;

  auto base = [&](const char* name) {
    axiom_report r;
    r.axiom_name = name;
    r.result = total ? verdict::pass : verdict::inconclusive;
    if (!total) r.note = "pass-up-to-fuel";
    return r;
  };
  auto set_fail = [&](axiom_report& r, std::vector<std::string> w,
                      std::function<bool()> chk) {
    r.result = verdict::fail;
    r.witness = std::move(w);
    r.note.clear();
    r.recheck = std::move(chk);
  };
  auto set_exhausted = [&](axiom_report& r) {
    if (r.result != verdict::fail) {
      r.result = verdict::inconclusive;
      r.note = "existential witness search exhausted the enumeration";
    }
  };

  out.exp_family.injective = check_axiom(ap, axiom::p4a, fuel);
  out.exp_family.injective.axiom_name = "exp.injective";
  out.exp_family.surjective = check_axiom(ap, axiom::p5b, fuel);
  out.exp_family.surjective.axiom_name = "exp.surjective";
  out.exp_family.strongly_coconfluent = check_axiom(ap, axiom::p8, fuel);
  out.exp_family.strongly_coconfluent.axiom_name = "exp.strongly_coconfluent";
  out.exp_family.multiplicative = check_axiom(ap, axiom::p2d_bwd, fuel);
  out.exp_family.multiplicative.axiom_name = "exp.multiplicative";

  out.dot_family.injective = check_axiom(ap, axiom::p4b, fuel);
  out.dot_family.injective.axiom_name = "dot.injective";
  out.dot_family.surjective = check_axiom(ap, axiom::p5a, fuel);
  out.dot_family.surjective.axiom_name = "dot.surjective";
  out.dot_family.multiplicative = check_axiom(ap, axiom::p2a_bwd, fuel);
  out.dot_family.multiplicative.axiom_name = "dot.multiplicative";

  // exp confluent: values of one base element under two parameters rejoin
  out.exp_family.confluent = base("exp.confluent");
  for (const auto& a : as)
    for (const auto& u : us)
      for (const auto& v : us) {
        if (!ap.in_h(a, u) || !ap.in_h(a, v)) continue;
        bool found = false;
        for (const auto& p : us) {
          if (!ap.in_h(ap.exp(a, u), p)) continue;
          for (const auto& q : us)
            if (ap.in_h(ap.exp(a, v), q) &&
                ap.exp(ap.exp(a, u), p) == ap.exp(ap.exp(a, v), q)) {
              found = true;
              break;
            }
          if (found) break;
        }
        if (!found) {
          if (!total) {
            set_exhausted(out.exp_family.confluent);
            continue;
          }
          set_fail(out.exp_family.confluent,
                   {ap.A.display(a), ap.U.display(u), ap.U.display(v)}, {});
        }
        if (out.exp_family.confluent.result == verdict::fail) break;
      }

  // dot confluent (mirrored: base U, parameters A)
  out.dot_family.confluent = base("dot.confluent");
  for (const auto& u : us)
    for (const auto& a : as)
      for (const auto& b : as) {
        if (!ap.in_h(a, u) || !ap.in_h(b, u)) continue;
        bool found = false;
        for (const auto& p : as) {
          if (!ap.in_h(p, ap.dot(a, u))) continue;
          for (const auto& q : as)
            if (ap.in_h(q, ap.dot(b, u)) &&
                ap.dot(p, ap.dot(a, u)) == ap.dot(q, ap.dot(b, u))) {
              found = true;
              break;
            }
          if (found) break;
        }
        if (!found) {
          if (!total) {
            set_exhausted(out.dot_family.confluent);
            continue;
          }
          set_fail(out.dot_family.confluent,
                   {ap.U.display(u), ap.A.display(a), ap.A.display(b)}, {});
        }
        if (out.dot_family.confluent.result == verdict::fail) break;
      }

  // exp coconfluent: a^u = b^v forces a common origin
  out.exp_family.coconfluent = base("exp.coconfluent");
  for (const auto& a : as)
    for (const auto& u : us) {
      if (!ap.in_h(a, u)) continue;
      for (const auto& b : as)
        for (const auto& v : us) {
          if (!ap.in_h(b, v) || !(ap.exp(a, u) == ap.exp(b, v))) continue;
          bool found = false;
          for (const auto& g : as) {
            for (const auto& p : us) {
              if (!ap.in_h(g, p) || !(ap.exp(g, p) == a)) continue;
              for (const auto& q : us)
                if (ap.in_h(g, q) && ap.exp(g, q) == b) {
                  found = true;
                  break;
                }
              if (found) break;
            }
            if (found) break;
          }
          if (!found) {
            if (!total) {
              set_exhausted(out.exp_family.coconfluent);
              continue;
            }
            set_fail(out.exp_family.coconfluent,
                     {ap.A.display(a), ap.U.display(u), ap.A.display(b),
                      ap.U.display(v)},
                     {});
          }
          if (out.exp_family.coconfluent.result == verdict::fail) break;
        }
      if (out.exp_family.coconfluent.result == verdict::fail) break;
    }

  // dot coconfluent (mirrored)
  out.dot_family.coconfluent = base("dot.coconfluent");
  for (const auto& a : as)
    for (const auto& u : us) {
      if (!ap.in_h(a, u)) continue;
      for (const auto& b : as)
        for (const auto& v : us) {
          if (!ap.in_h(b, v) || !(ap.dot(a, u) == ap.dot(b, v))) continue;
          bool found = false;
          for (const auto& w : us) {
            for (const auto& p : as) {
              if (!ap.in_h(p, w) || !(ap.dot(p, w) == u)) continue;
              for (const auto& q : as)
                if (ap.in_h(q, w) && ap.dot(q, w) == v) {
                  found = true;
                  break;
                }
              if (found) break;
            }
            if (found) break;
          }
          if (!found) {
            if (!total) {
              set_exhausted(out.dot_family.coconfluent);
              continue;
            }
            set_fail(out.dot_family.coconfluent,
                     {ap.A.display(a), ap.U.display(u), ap.A.display(b),
                      ap.U.display(v)},
                     {});
          }
          if (out.dot_family.coconfluent.result == verdict::fail) break;
        }
      if (out.dot_family.coconfluent.result == verdict::fail) break;
    }

  // dot strongly coconfluent (mirror of P8)
  out.dot_family.strongly_coconfluent = base("dot.strongly_coconfluent");
  for (const auto& a : as)
    for (const auto& u : us) {
      if (!ap.in_h(a, u)) continue;
      for (const auto& b : as)
        for (const auto& v : us) {
          if (!ap.in_h(b, v) || !(ap.dot(a, u) == ap.dot(b, v))) continue;
          bool clm = false;
          for (const auto& p : as) {
            if (!ap.A.defined(p, a)) continue;
            for (const auto& q : as)
              if (ap.A.defined(q, b) && ap.A.product(p, a) == ap.A.product(q, b)) {
                clm = true;
                break;
              }
            if (clm) break;
          }
          if (!clm) continue;
          bool found = false;
          for (const auto& w : us) {
            for (const auto& p : as) {
              if (!ap.in_h(p, w) || !(ap.dot(p, w) == u) || !ap.A.defined(p, a))
                continue;
              for (const auto& q : as)
                if (ap.in_h(q, w) && ap.dot(q, w) == v && ap.A.defined(q, b) &&
                    ap.A.product(p, a) == ap.A.product(q, b)) {
                  found = true;
                  break;
                }
              if (found) break;
            }
            if (found) break;
          }
          if (!found) {
            if (!total) {
              set_exhausted(out.dot_family.strongly_coconfluent);
              continue;
            }
            set_fail(out.dot_family.strongly_coconfluent,
                     {ap.A.display(a), ap.U.display(u), ap.A.display(b),
                      ap.U.display(v)},
                     {});
          }
          if (out.dot_family.strongly_coconfluent.result == verdict::fail) break;
        }
      if (out.dot_family.strongly_coconfluent.result == verdict::fail) break;
    }

  // trivial families
  out.exp_family.trivial = base("exp.trivial");
  for (const auto& a : as) {
    for (const auto& u : us)
      if (ap.in_h(a, u) && !(ap.exp(a, u) == a)) {
        set_fail(out.exp_family.trivial, {ap.A.display(a), ap.U.display(u)},
                 [=] { return !(ap.exp(a, u) == a); });
        break;
      }
    if (out.exp_family.trivial.result == verdict::fail) break;
  }
  out.dot_family.trivial = base("dot.trivial");
  for (const auto& a : as) {
    for (const auto& u : us)
      if (ap.in_h(a, u) && !(ap.dot(a, u) == u)) {
        set_fail(out.dot_family.trivial, {ap.A.display(a), ap.U.display(u)},
                 [=] { return !(ap.dot(a, u) == u); });
        break;
      }
    if (out.dot_family.trivial.result == verdict::fail) break;
  }

  return out;
}

}  // namespace zs

#endif  // ZS_ACTIONS_HPP_
