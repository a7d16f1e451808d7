// zs: partial multiplications, Zappa-Szep products, and rewriting at desk scale.
// SPDX-License-Identifier: Apache-2.0
//
// Finite sets with a partial multiplication (A, D, m) and exhaustive checkers
// for every multiplication property used by the product constructions:
// associativity flavours, cancellativity flavours, identities, units, common
// multiples and least common left multiples.

#ifndef ZS_MAGMA_HPP_
#define ZS_MAGMA_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"

namespace zs {

/// A finite carrier 0..size-1 with a partial multiplication stored sparsely.
/// The table is defined on exactly the pairs of its domain D and every value
/// lies inside the carrier.  Instances are immutable values after
/// construction; all operations below are pure functions of their inputs.
class magma {
 public:
  magma() = default;
  magma(std::size_t size, std::vector<std::string> names,
        std::map<std::pair<element_id, element_id>, element_id> table)
      : size_(size), names_(std::move(names)), table_(std::move(table)) {}

  std::size_t size() const { return size_; }
  const std::string& name(element_id x) const { return names_.at(x); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<element_id> index_of(const std::string& name) const {
    for (element_id i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  bool defined(element_id a, element_id b) const {
    return table_.count({a, b}) != 0;
  }

  /// m(a, b); the pair must be in the domain.
  element_id product(element_id a, element_id b) const {
    auto it = table_.find({a, b});
    if (it == table_.end())
      throw error(error_code::index_out_of_range,
                  "product " + name(a) + "*" + name(b) + " is not defined");
    return it->second;
  }

  std::optional<element_id> try_product(element_id a, element_id b) const {
    auto it = table_.find({a, b});
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  const std::map<std::pair<element_id, element_id>, element_id>& table() const {
    return table_;
  }

  std::size_t domain_size() const { return table_.size(); }

  bool operator==(const magma& o) const {
    return size_ == o.size_ && names_ == o.names_ && table_ == o.table_;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::string> names_;
  std::map<std::pair<element_id, element_id>, element_id> table_;
};

/// Builds a magma from explicit entries ((i, j) -> k).  Rejects out-of-range
/// indices, duplicate pair keys and duplicate names.
inline magma build_magma(
    std::size_t size, std::vector<std::string> names,
    const std::vector<std::pair<std::pair<element_id, element_id>, element_id>>&
        entries) {
  if (names.empty() && size > 0) {
    names.reserve(size);
    for (std::size_t i = 0; i < size; ++i) names.push_back("e" + std::to_string(i));
  }
  if (names.size() != size)
    throw error(error_code::index_out_of_range,
                "expected " + std::to_string(size) + " names, got " +
                    std::to_string(names.size()));
  std::set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second)
      throw error(error_code::duplicate_name, "name '" + n + "' repeats");
  std::map<std::pair<element_id, element_id>, element_id> table;
  for (const auto& [key, value] : entries) {
    if (key.first >= size || key.second >= size || value >= size)
      throw error(error_code::index_out_of_range,
                  "entry (" + std::to_string(key.first) + "," +
                      std::to_string(key.second) + ")->" + std::to_string(value));
    if (!table.emplace(key, value).second)
      throw error(error_code::duplicate_entry,
                  "pair (" + std::to_string(key.first) + "," +
                      std::to_string(key.second) + ") given twice");
  }
  return magma(size, std::move(names), std::move(table));
}

/// Builds a full magma from a dense row-major table (size x size).
inline magma build_full_magma(std::size_t size,
                              const std::vector<std::vector<element_id>>& rows,
                              std::vector<std::string> names = {}) {
  std::vector<std::pair<std::pair<element_id, element_id>, element_id>> entries;
  for (element_id i = 0; i < size; ++i)
    for (element_id j = 0; j < size; ++j)
      entries.push_back({{i, j}, rows.at(i).at(j)});
  return build_magma(size, std::move(names), entries);
}

enum class m_prop {
  right_assoc,
  left_assoc,
  assoc,
  categorical,
  full,
  left_canc,
  right_canc,
  strongly_left_canc,
  strongly_right_canc,
  common_right_multiples,
  least_common_left_multiples,
  has_right_identities,
  has_left_identities,
  has_full_identities,
  has_global_identity,
  left_inverses_wrt_right_identities,
  digraph_rule
};

inline const char* to_string(m_prop p) {
  switch (p) {
    case m_prop::right_assoc: return "right_assoc";
    case m_prop::left_assoc: return "left_assoc";
    case m_prop::assoc: return "assoc";
    case m_prop::categorical: return "categorical";
    case m_prop::full: return "full";
    case m_prop::left_canc: return "left_canc";
    case m_prop::right_canc: return "right_canc";
    case m_prop::strongly_left_canc: return "strongly_left_canc";
    case m_prop::strongly_right_canc: return "strongly_right_canc";
    case m_prop::common_right_multiples: return "common_right_multiples";
    case m_prop::least_common_left_multiples: return "least_common_left_multiples";
    case m_prop::has_right_identities: return "has_right_identities";
    case m_prop::has_left_identities: return "has_left_identities";
    case m_prop::has_full_identities: return "has_full_identities";
    case m_prop::has_global_identity: return "has_global_identity";
    case m_prop::left_inverses_wrt_right_identities:
      return "left_inverses_wrt_right_identities";
    case m_prop::digraph_rule: return "digraph_rule";
  }
  return "?";
}

inline std::optional<m_prop> m_prop_from_string(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(m_prop::digraph_rule); ++i) {
    auto p = static_cast<m_prop>(i);
    if (s == to_string(p)) return p;
  }
  return std::nullopt;
}

inline std::vector<m_prop> all_m_props() {
  std::vector<m_prop> out;
  for (int i = 0; i <= static_cast<int>(m_prop::digraph_rule); ++i)
    out.push_back(static_cast<m_prop>(i));
  return out;
}

namespace detail {

// a is a right identity for the magma: some x has xDa, and xa = x whenever xDa.
inline bool right_identity_for_all(const magma& m, element_id a) {
  bool used = false;
  for (element_id x = 0; x < m.size(); ++x)
    if (m.defined(x, a)) {
      used = true;
      if (m.product(x, a) != x) return false;
    }
  return used;
}

inline bool left_identity_for_all(const magma& m, element_id a) {
  bool used = false;
  for (element_id x = 0; x < m.size(); ++x)
    if (m.defined(a, x)) {
      used = true;
      if (m.product(a, x) != x) return false;
    }
  return used;
}

inline bool global_identity_at(const magma& m, element_id e) {
  for (element_id a = 0; a < m.size(); ++a) {
    if (!m.defined(e, a) || !m.defined(a, e)) return false;
    if (m.product(e, a) != a || m.product(a, e) != a) return false;
  }
  return true;
}

}  // namespace detail

inline std::optional<element_id> global_identity(const magma& m) {
  for (element_id e = 0; e < m.size(); ++e)
    if (detail::global_identity_at(m, e)) return e;
  return std::nullopt;
}

/// The common left multiples of (a, b): values pa = qb together with the least
/// (p, q) producing each, in value order.
inline std::map<element_id, std::pair<element_id, element_id>>
common_left_multiples(const magma& m, element_id a, element_id b) {
  std::map<element_id, std::pair<element_id, element_id>> out;
  for (element_id p = 0; p < m.size(); ++p) {
    if (!m.defined(p, a)) continue;
    element_id pa = m.product(p, a);
    for (element_id q = 0; q < m.size(); ++q) {
      if (!m.defined(q, b) || m.product(q, b) != pa) continue;
      out.emplace(pa, std::make_pair(p, q));  // keeps the least (p, q)
      break;
    }
  }
  return out;
}

/// Checks one quantified multiplication property over the whole finite
/// carrier.  The fail witness is the first counterexample under lexicographic
/// tuple order.  Properties whose statements assume semigroups are still
/// evaluated literally on arbitrary magmas.
inline property_report check_property(const magma& m, m_prop prop) {
  const std::size_t n = m.size();
  auto rep = [&](verdict v, std::vector<element_id> w = {}, std::string note = "") {
    return property_report{to_string(prop), v, std::move(w), {}, std::move(note)};
  };

  switch (prop) {
    case m_prop::right_assoc: {
      for (element_id a = 0; a < n; ++a)
        for (element_id b = 0; b < n; ++b)
          for (element_id c = 0; c < n; ++c) {
            if (!m.defined(a, b)) continue;
            element_id ab = m.product(a, b);
            if (!m.defined(ab, c)) continue;
            if (!m.defined(b, c)) return rep(verdict::fail, {a, b, c});
            element_id bc = m.product(b, c);
            if (!m.defined(a, bc)) return rep(verdict::fail, {a, b, c});
            if (m.product(ab, c) != m.product(a, bc))
              return rep(verdict::fail, {a, b, c});
          }
      return rep(verdict::pass);
    }
    case m_prop::left_assoc: {
      for (element_id a = 0; a < n; ++a)
        for (element_id b = 0; b < n; ++b)
          for (element_id c = 0; c < n; ++c) {
            if (!m.defined(b, c)) continue;
            element_id bc = m.product(b, c);
            if (!m.defined(a, bc)) continue;
            if (!m.defined(a, b)) return rep(verdict::fail, {a, b, c});
            element_id ab = m.product(a, b);
            if (!m.defined(ab, c)) return rep(verdict::fail, {a, b, c});
            if (m.product(ab, c) != m.product(a, bc))
              return rep(verdict::fail, {a, b, c});
          }
      return rep(verdict::pass);
    }
    case m_prop::assoc: {
      auto r = check_property(m, m_prop::right_assoc);
      if (!r.ok()) return rep(verdict::fail, r.witness, "right side");
      auto l = check_property(m, m_prop::left_assoc);
      if (!l.ok()) return rep(verdict::fail, l.witness, "left side");
      return rep(verdict::pass);
    }
    case m_prop::categorical: {
      auto a2 = check_property(m, m_prop::assoc);
      if (!a2.ok()) return rep(verdict::fail, a2.witness, "not associative");
      for (element_id a = 0; a < n; ++a)
        for (element_id b = 0; b < n; ++b)
          for (element_id c = 0; c < n; ++c) {
            if (!m.defined(a, b) || !m.defined(b, c)) continue;
            if (!m.defined(a, m.product(b, c)) ||
                !m.defined(m.product(a, b), c))
              return rep(verdict::fail, {a, b, c}, "composability");
          }
      return rep(verdict::pass);
    }
    case m_prop::full: {
      for (element_id a = 0; a < n; ++a)
        for (element_id b = 0; b < n; ++b)
          if (!m.defined(a, b)) return rep(verdict::fail, {a, b});
      return rep(verdict::pass);
    }
    case m_prop::left_canc: {
      for (element_id a = 0; a < n; ++a)
        for (element_id b = 0; b < n; ++b)
          for (element_id c = 0; c < n; ++c) {
            if (b == c || !m.defined(a, b) || !m.defined(a, c)) continue;
            if (m.product(a, b) == m.product(a, c))
              return rep(verdict::fail, {a, b, c});
          }
      return rep(verdict::pass);
    }
    case m_prop::right_canc: {
      for (element_id a = 0; a < n; ++a)
        for (element_id b = 0; b < n; ++b)
          for (element_id c = 0; c < n; ++c) {
            if (a == b || !m.defined(a, c) || !m.defined(b, c)) continue;
            if (m.product(a, c) == m.product(b, c))
              return rep(verdict::fail, {a, b, c});
          }
      return rep(verdict::pass);
    }
    case m_prop::strongly_left_canc: {
      auto lc = check_property(m, m_prop::left_canc);
      if (!lc.ok()) return rep(verdict::fail, lc.witness, "not left cancellative");
      for (element_id a = 0; a < n; ++a)
        for (element_id b = 0; b < n; ++b)
          if (m.defined(a, b) && m.product(a, b) == a &&
              !detail::global_identity_at(m, b))
            return rep(verdict::fail, {a, b}, "ab=a with b not a global identity");
      return rep(verdict::pass);
    }
    case m_prop::strongly_right_canc: {
      // strongly right cancellative, mirroring the left-handed notion
      auto rc = check_property(m, m_prop::right_canc);
      if (!rc.ok()) return rep(verdict::fail, rc.witness, "not right cancellative");
      for (element_id a = 0; a < n; ++a)
        for (element_id b = 0; b < n; ++b)
          if (m.defined(a, b) && m.product(a, b) == b &&
              !detail::global_identity_at(m, a))
            return rep(verdict::fail, {a, b}, "ab=b with a not a global identity");
      return rep(verdict::pass);
    }
    case m_prop::common_right_multiples: {
      for (element_id a = 0; a < n; ++a)
        for (element_id b = 0; b < n; ++b) {
          bool found = false;
          for (element_id p = 0; p < n && !found; ++p) {
            if (!m.defined(a, p)) continue;
            for (element_id q = 0; q < n && !found; ++q)
              if (m.defined(b, q) && m.product(a, p) == m.product(b, q))
                found = true;
          }
          if (!found) return rep(verdict::fail, {a, b});
        }
      return rep(verdict::pass);
    }
    case m_prop::least_common_left_multiples: {
      std::string note;
      if (!check_property(m, m_prop::full).ok() ||
          !check_property(m, m_prop::assoc).ok())
        note = "stated only for semigroups; this carrier is not one";
      for (element_id a = 0; a < n; ++a)
        for (element_id b = 0; b < n; ++b) {
          auto clm = common_left_multiples(m, a, b);
          if (clm.empty()) continue;
          bool some_least = false;
          for (const auto& [l, pq] : clm) {
            (void)pq;
            bool divides_all = true;
            for (const auto& [mm, pq2] : clm) {
              (void)pq2;
              bool have_k = false;
              for (element_id k = 0; k < n && !have_k; ++k)
                if (m.defined(k, l) && m.product(k, l) == mm) have_k = true;
              if (!have_k) {
                divides_all = false;
                break;
              }
            }
            if (divides_all) {
              some_least = true;
              break;
            }
          }
          if (!some_least) return rep(verdict::fail, {a, b}, note);
        }
      return rep(verdict::pass, {}, note);
    }
    case m_prop::has_right_identities: {
      for (element_id x = 0; x < n; ++x) {
        bool found = false;
        for (element_id a = 0; a < n && !found; ++a)
          if (m.defined(x, a) && m.product(x, a) == x &&
              detail::right_identity_for_all(m, a))
            found = true;
        if (!found) return rep(verdict::fail, {x});
      }
      return rep(verdict::pass);
    }
    case m_prop::has_left_identities: {
      for (element_id x = 0; x < n; ++x) {
        bool found = false;
        for (element_id a = 0; a < n && !found; ++a)
          if (m.defined(a, x) && m.product(a, x) == x &&
              detail::left_identity_for_all(m, a))
            found = true;
        if (!found) return rep(verdict::fail, {x});
      }
      return rep(verdict::pass);
    }
    case m_prop::has_full_identities: {
      auto r = check_property(m, m_prop::has_right_identities);
      if (!r.ok()) return rep(verdict::fail, r.witness, "no right identity");
      auto l = check_property(m, m_prop::has_left_identities);
      if (!l.ok()) return rep(verdict::fail, l.witness, "no left identity");
      return rep(verdict::pass);
    }
    case m_prop::has_global_identity: {
      if (global_identity(m)) return rep(verdict::pass);
      return rep(verdict::fail, {}, "no element is a global identity");
    }
    case m_prop::left_inverses_wrt_right_identities: {
      for (element_id a = 0; a < n; ++a)
        for (element_id b = 0; b < n; ++b) {
          if (!detail::right_identity_for_all(m, b) || !m.defined(a, b)) continue;
          bool found = false;
          for (element_id x = 0; x < n && !found; ++x)
            if (m.defined(x, a) && m.product(x, a) == b) found = true;
          if (!found) return rep(verdict::fail, {a, b});
        }
      return rep(verdict::pass);
    }
    case m_prop::digraph_rule: {
      for (element_id a = 0; a < n; ++a)
        for (element_id b = 0; b < n; ++b)
          for (element_id c = 0; c < n; ++c)
            for (element_id d = 0; d < n; ++d) {
              if (m.defined(a, b) && m.defined(c, b) && m.defined(c, d) &&
                  !m.defined(a, d))
                return rep(verdict::fail, {a, b, c, d});
            }
      return rep(verdict::pass);
    }
  }
  return rep(verdict::not_applicable);
}

inline bool is_semigroup(const magma& m) {
  return check_property(m, m_prop::full).ok() &&
         check_property(m, m_prop::assoc).ok();
}

inline bool is_monoid(const magma& m) {
  return is_semigroup(m) && global_identity(m).has_value();
}

/// Per-element identity classification.
struct identity_info {
  std::vector<element_id> right_identity_for;  // x with xa = x
  std::vector<element_id> left_identity_for;   // x with ax = x
  bool right_identity_for_magma = false;
  bool left_identity_for_magma = false;
  bool full_identity = false;
  bool global_identity = false;
};

inline std::vector<identity_info> identities_of(const magma& m) {
  std::vector<identity_info> out(m.size());
  for (element_id a = 0; a < m.size(); ++a) {
    auto& info = out[a];
    for (element_id x = 0; x < m.size(); ++x) {
      if (m.defined(x, a) && m.product(x, a) == x)
        info.right_identity_for.push_back(x);
      if (m.defined(a, x) && m.product(a, x) == x)
        info.left_identity_for.push_back(x);
    }
    info.right_identity_for_magma = detail::right_identity_for_all(m, a);
    info.left_identity_for_magma = detail::left_identity_for_all(m, a);
    info.full_identity = info.right_identity_for_magma && info.left_identity_for_magma;
    info.global_identity = detail::global_identity_at(m, a);
  }
  return out;
}

/// Elements with two-sided inverses relative to the global identity; empty
/// when no global identity exists.
inline std::vector<element_id> units_of(const magma& m) {
  auto e = global_identity(m);
  if (!e) return {};
  std::vector<element_id> out;
  for (element_id a = 0; a < m.size(); ++a)
    for (element_id b = 0; b < m.size(); ++b)
      if (m.defined(a, b) && m.defined(b, a) && m.product(a, b) == *e &&
          m.product(b, a) == *e) {
        out.push_back(a);
        break;
      }
  return out;
}

inline bool is_group(const magma& m) {
  return is_monoid(m) && units_of(m).size() == m.size();
}

struct lclm_result {
  element_id multiple;  // l = pa = qb
  element_id left_cofactor;   // p
  element_id right_cofactor;  // q
};

/// Least common left multiple of (a, b), canonicalized to the least element
/// index among the valid least multiples (they form one unit orbit in a
/// cancellative semigroup).  Returns nothing when no common left multiple
/// exists, or when none of them left-divides all the others.
inline std::optional<lclm_result> lclm(const magma& m, element_id a, element_id b) {
  auto clm = common_left_multiples(m, a, b);
  if (clm.empty()) return std::nullopt;
  for (const auto& [l, pq] : clm) {  // value order = index order, least first
    bool divides_all = true;
    for (const auto& [mm, pq2] : clm) {
      (void)pq2;
      bool have_k = false;
      for (element_id k = 0; k < m.size() && !have_k; ++k)
        if (m.defined(k, l) && m.product(k, l) == mm) have_k = true;
      if (!have_k) {
        divides_all = false;
        break;
      }
    }
    if (divides_all) return lclm_result{l, pq.first, pq.second};
  }
  return std::nullopt;
}

/// A total map between the carriers of two magmas.
struct morphism {
  magma source;
  magma target;
  std::vector<element_id> map;  // source index -> target index
};

/// Pass iff f(D) is inside the target domain and f(ab) = f(a)f(b) on the
/// source domain.
inline property_report is_homomorphism(const morphism& f) {
  if (f.map.size() != f.source.size())
    throw error(error_code::index_out_of_range, "map is not total on the source");
  for (auto v : f.map)
    if (v >= f.target.size())
      throw error(error_code::index_out_of_range, "map value out of range");
  for (const auto& [key, value] : f.source.table()) {
    auto [a, b] = key;
    if (!f.target.defined(f.map[a], f.map[b]))
      return property_report::failed("homomorphism", {a, b}, "image pair undefined");
    if (f.target.product(f.map[a], f.map[b]) != f.map[value])
      return property_report::failed("homomorphism", {a, b}, "products disagree");
  }
  return property_report::passed("homomorphism");
}

/// The same table under new element names.
inline magma renamed(const magma& m, std::vector<std::string> names) {
  std::vector<std::pair<std::pair<element_id, element_id>, element_id>> entries;
  for (const auto& [key, value] : m.table()) entries.push_back({key, value});
  return build_magma(m.size(), std::move(names), entries);
}

/// The restriction of m to a subset, reindexed densely.  `embed[i]` is the
/// parent index of subset element i.  Requires the subset to be closed.
struct sub_magma {
  magma m;
  std::vector<element_id> embed;
};

inline sub_magma restrict_to(const magma& parent, std::vector<element_id> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  std::map<element_id, element_id> back;
  for (element_id i = 0; i < subset.size(); ++i) back[subset[i]] = i;
  std::vector<std::string> names;
  for (auto p : subset) names.push_back(parent.name(p));
  std::vector<std::pair<std::pair<element_id, element_id>, element_id>> entries;
  for (element_id i = 0; i < subset.size(); ++i)
    for (element_id j = 0; j < subset.size(); ++j)
      if (parent.defined(subset[i], subset[j])) {
        element_id v = parent.product(subset[i], subset[j]);
        auto it = back.find(v);
        if (it == back.end())
          throw error(error_code::not_closed,
                      "product " + parent.name(subset[i]) + "*" +
                          parent.name(subset[j]) + " leaves the subset");
        entries.push_back({{i, j}, it->second});
      }
  return sub_magma{build_magma(subset.size(), std::move(names), entries),
                   std::move(subset)};
}

/// Brute-force isomorphism search between two small magmas: generator images
/// are enumerated and extended by closure, with a candidate cap.
inline std::optional<std::vector<element_id>> find_isomorphism(
    const magma& a, const magma& b, std::size_t candidate_cap = 1000000) {
  if (a.size() != b.size() || a.domain_size() != b.domain_size()) return std::nullopt;
  const std::size_t n = a.size();
  if (n == 0) return std::vector<element_id>{};

  // Greedy generating set of a: keep adding the least element outside the
  // generated closure.
  auto closure = [&](const std::vector<element_id>& gens) {
    std::set<element_id> cl(gens.begin(), gens.end());
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<element_id> cur(cl.begin(), cl.end());
      for (auto x : cur)
        for (auto y : cur)
          if (a.defined(x, y) && cl.insert(a.product(x, y)).second) grew = true;
    }
    return cl;
  };
  std::vector<element_id> gens;
  auto cl = closure(gens);
  for (element_id x = 0; x < n; ++x)
    if (!cl.count(x)) {
      gens.push_back(x);
      cl = closure(gens);
    }

  // Depth-first over image tuples, extending by closure and checking
  // consistency along the way.
  std::size_t tried = 0;
  std::vector<element_id> image(n, n);  // n = unassigned
  std::vector<char> used(n, 0);

  // expressions: order in which closure produced each element from gens
  struct expr { element_id x, y, value; };
  std::vector<expr> exprs;
  {
    std::set<element_id> have(gens.begin(), gens.end());
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<element_id> cur(have.begin(), have.end());
      for (auto x : cur)
        for (auto y : cur)
          if (a.defined(x, y)) {
            element_id v = a.product(x, y);
            if (!have.count(v)) {
              exprs.push_back({x, y, v});
              have.insert(v);
              grew = true;
            }
          }
    }
  }

  std::function<bool(std::size_t)> place = [&](std::size_t gi) -> bool {
    if (gi == gens.size()) {
      // extend to all elements through the recorded expressions
      std::vector<element_id> im = image;
      std::vector<char> us = used;
      for (const auto& e : exprs) {
        if (!b.defined(im[e.x], im[e.y])) return false;
        element_id v = b.product(im[e.x], im[e.y]);
        if (im[e.value] != n) {
          if (im[e.value] != v) return false;
        } else {
          if (us[v]) return false;
          im[e.value] = v;
          us[v] = 1;
        }
      }
      for (element_id x = 0; x < n; ++x)
        if (im[x] == n) return false;
      // full table check
      for (element_id x = 0; x < n; ++x)
        for (element_id y = 0; y < n; ++y) {
          bool da = a.defined(x, y), db = b.defined(im[x], im[y]);
          if (da != db) return false;
          if (da && im[a.product(x, y)] != b.product(im[x], im[y])) return false;
        }
      image = im;
      return true;
    }
    for (element_id cand = 0; cand < n; ++cand) {
      if (used[cand]) continue;
      if (++tried > candidate_cap)
        throw error(error_code::unsupported, "isomorphism search candidate cap hit");
      image[gens[gi]] = cand;
      used[cand] = 1;
      if (place(gi + 1)) return true;
      used[cand] = 0;
      image[gens[gi]] = n;
    }
    return false;
  };
  if (place(0)) return image;
  return std::nullopt;
}

/// All automorphisms of a small magma: images of a greedy generating set are
/// enumerated and extended through the closure expressions, then the full
/// table is checked.
inline std::vector<std::vector<element_id>> find_automorphisms(
    const magma& m, std::size_t candidate_cap = 1000000) {
  const std::size_t n = m.size();
  std::vector<std::vector<element_id>> out;
  if (n == 0) return {std::vector<element_id>{}};

  auto closure = [&](const std::vector<element_id>& gens) {
    std::set<element_id> cl(gens.begin(), gens.end());
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<element_id> cur(cl.begin(), cl.end());
      for (auto x : cur)
        for (auto y : cur)
          if (m.defined(x, y) && cl.insert(m.product(x, y)).second) grew = true;
    }
    return cl;
  };
  std::vector<element_id> gens;
  auto cl = closure(gens);
  for (element_id x = 0; x < n; ++x)
    if (!cl.count(x)) {
      gens.push_back(x);
      cl = closure(gens);
    }

  struct expr { element_id x, y, value; };
  std::vector<expr> exprs;
  {
    std::set<element_id> have(gens.begin(), gens.end());
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<element_id> cur(have.begin(), have.end());
      for (auto x : cur)
        for (auto y : cur)
          if (m.defined(x, y)) {
            element_id v = m.product(x, y);
            if (!have.count(v)) {
              exprs.push_back({x, y, v});
              have.insert(v);
              grew = true;
            }
          }
    }
  }

  std::size_t tried = 0;
  std::vector<element_id> image(n, n);
  std::vector<char> used(n, 0);
  std::function<void(std::size_t)> place = [&](std::size_t gi) {
    if (gi == gens.size()) {
      std::vector<element_id> im = image;
      std::vector<char> us = used;
      for (const auto& e : exprs) {
        if (!m.defined(im[e.x], im[e.y])) return;
        element_id v = m.product(im[e.x], im[e.y]);
        if (im[e.value] != n) {
          if (im[e.value] != v) return;
        } else {
          if (us[v]) return;
          im[e.value] = v;
          us[v] = 1;
        }
      }
      for (element_id x = 0; x < n; ++x)
        if (im[x] == n) return;
      for (element_id x = 0; x < n; ++x)
        for (element_id y = 0; y < n; ++y) {
          bool da = m.defined(x, y), db = m.defined(im[x], im[y]);
          if (da != db) return;
          if (da && im[m.product(x, y)] != m.product(im[x], im[y])) return;
        }
      out.push_back(im);
      return;
    }
    for (element_id cand = 0; cand < n; ++cand) {
      if (used[cand]) continue;
      if (++tried > candidate_cap)
        throw error(error_code::unsupported, "automorphism search candidate cap hit");
      image[gens[gi]] = cand;
      used[cand] = 1;
      place(gi + 1);
      used[cand] = 0;
      image[gens[gi]] = n;
    }
  };
  place(0);
  return out;
}

}  // namespace zs

#endif  // ZS_MAGMA_HPP_
