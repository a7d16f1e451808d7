// zs: partial multiplications, Zappa-Szep products, and rewriting at desk scale.
// SPDX-License-Identifier: Apache-2.0
//
// A common carrier interface for the product machinery: finite magmas and
// fuel-bounded word monoids (free or presented by a complete rule set).
// Everything downstream (actions, axioms, products, least common left
// multiples) is generic over this concept, so the same code serves both.

#ifndef ZS_DOMAIN_HPP_
#define ZS_DOMAIN_HPP_

#include <algorithm>
#include <concepts>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "core.hpp"
#include "magma.hpp"
#include "rewriting.hpp"

namespace zs {

template <typename D>
concept mul_domain = requires(const D d, const typename D::element_type& x,
                              const typename D::element_type& y, std::size_t fuel) {
  { d.defined(x, y) } -> std::convertible_to<bool>;
  { d.product(x, y) } -> std::same_as<typename D::element_type>;
  { d.elements(fuel) } -> std::same_as<std::vector<typename D::element_type>>;
  { d.exhaustive() } -> std::convertible_to<bool>;
  { d.display(x) } -> std::convertible_to<std::string>;
};

/// A finite magma viewed as a multiplication domain.  Enumeration is the
/// whole carrier; fuel is ignored.
struct finite_domain {
  using element_type = element_id;
  magma m;

  bool defined(element_id a, element_id b) const { return m.defined(a, b); }
  element_id product(element_id a, element_id b) const { return m.product(a, b); }
  std::vector<element_id> elements(std::size_t) const {
    std::vector<element_id> out(m.size());
    for (element_id i = 0; i < m.size(); ++i) out[i] = i;
    return out;
  }
  bool exhaustive() const { return true; }
  std::string display(element_id x) const { return m.name(x); }
};

/// Words over an alphabet modulo a complete rule set (empty rules = the free
/// monoid).  Elements are normal forms; the product normalizes the
/// concatenation.  Enumeration lists the distinct normal forms of all words
/// up to the fuel length, in length-lex order.
struct word_domain {
  using element_type = word;
  rule_set rules;  // alphabet always present; rules possibly empty
  std::size_t step_fuel = fuel_defaults::rewrite_steps;

  static word_domain free_monoid(std::vector<std::string> alphabet) {
    word_domain d;
    d.rules.alphabet = std::move(alphabet);
    d.rules.kind = pres_kind::monoid;
    return d;
  }

  bool defined(const word&, const word&) const { return true; }
  word product(const word& a, const word& b) const {
    return normalize_word(rules, concat(a, b), step_fuel);
  }
  std::vector<word> elements(std::size_t fuel) const {
    std::size_t max_len = std::min<std::size_t>(fuel, fuel_defaults::word_length);
    std::vector<word> out;
    std::set<word> seen;
    std::vector<word> layer = {word{}};
    if (seen.insert(normalize_word(rules, {}, step_fuel)).second)
      out.push_back(normalize_word(rules, {}, step_fuel));
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::vector<word> next;
      for (const auto& w : layer)
        for (letter a = 0; a < rules.alphabet.size(); ++a) {
          word v = w;
          v.push_back(a);
          next.push_back(v);
          word nf = normalize_word(rules, v, step_fuel);
          if (seen.insert(nf).second) out.push_back(nf);
        }
      layer = std::move(next);
    }
    return out;
  }
  bool exhaustive() const { return rules.alphabet.empty(); }
  std::string display(const word& w) const {
    auto s = format_word(rules, w);
    return s.empty() ? "(empty)" : s;
  }
};

static_assert(mul_domain<finite_domain>);
static_assert(mul_domain<word_domain>);

/// Right identities of a domain: elements a such that some xa is defined and
/// xa = x whenever defined.  Exact for exhaustive domains, fuel-bounded
/// otherwise.
template <mul_domain D>
std::vector<typename D::element_type> right_identities(const D& d, std::size_t fuel) {
  std::vector<typename D::element_type> out;
  auto elems = d.elements(fuel);
  for (const auto& a : elems) {
    bool used = false, ok = true;
    for (const auto& x : elems) {
      if (!d.defined(x, a)) continue;
      used = true;
      if (!(d.product(x, a) == x)) {
        ok = false;
        break;
      }
    }
    if (used && ok) out.push_back(a);
  }
  return out;
}

template <mul_domain D>
std::vector<typename D::element_type> left_identities(const D& d, std::size_t fuel) {
  std::vector<typename D::element_type> out;
  auto elems = d.elements(fuel);
  for (const auto& a : elems) {
    bool used = false, ok = true;
    for (const auto& x : elems) {
      if (!d.defined(a, x)) continue;
      used = true;
      if (!(d.product(a, x) == x)) {
        ok = false;
        break;
      }
    }
    if (used && ok) out.push_back(a);
  }
  return out;
}

template <mul_domain D>
std::optional<typename D::element_type> global_identity_of(const D& d, std::size_t fuel) {
  auto elems = d.elements(fuel);
  for (const auto& e : elems) {
    bool ok = true;
    for (const auto& a : elems) {
      if (!d.defined(e, a) || !d.defined(a, e) || !(d.product(e, a) == a) ||
          !(d.product(a, e) == a)) {
        ok = false;
        break;
      }
    }
    if (ok) return e;
  }
  return std::nullopt;
}

}  // namespace zs

#endif  // ZS_DOMAIN_HPP_
