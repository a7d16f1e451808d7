// zs: partial multiplications, Zappa-Szep products, and rewriting at desk scale.
// SPDX-License-Identifier: Apache-2.0
//
// Binary relations on a finite carrier: closure operators, the confluence
// hierarchy (Church-Rosser, confluent, strongly confluent, locally confluent),
// termination, and unique-normal-form maps for complete relations.

#ifndef ZS_ABSTRACT_REL_HPP_
#define ZS_ABSTRACT_REL_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"

namespace zs {

/// A binary relation -> on {0..n-1}, stored densely.
class abstract_rel {
 public:
  abstract_rel() = default;
  abstract_rel(std::size_t n,
               const std::vector<std::pair<element_id, element_id>>& edges)
      : n_(n), adj_(n * n, 0) {
    for (auto [a, b] : edges) {
      if (a >= n || b >= n)
        throw error(error_code::index_out_of_range, "edge endpoint out of range");
      adj_[a * n + b] = 1;
    }
  }

  std::size_t size() const { return n_; }
  bool has(element_id a, element_id b) const { return adj_[a * n_ + b] != 0; }
  void add(element_id a, element_id b) { adj_[a * n_ + b] = 1; }

  std::vector<std::pair<element_id, element_id>> edges() const {
    std::vector<std::pair<element_id, element_id>> out;
    for (element_id a = 0; a < n_; ++a)
      for (element_id b = 0; b < n_; ++b)
        if (has(a, b)) out.push_back({a, b});
    return out;
  }

  abstract_rel transpose() const {
    abstract_rel t(n_, {});
    for (element_id a = 0; a < n_; ++a)
      for (element_id b = 0; b < n_; ++b)
        if (has(a, b)) t.add(b, a);
    return t;
  }

  /// Composition: a (this o other) b iff there is c with a this c and c other b.
  abstract_rel compose(const abstract_rel& other) const {
    abstract_rel r(n_, {});
    for (element_id a = 0; a < n_; ++a)
      for (element_id c = 0; c < n_; ++c)
        if (has(a, c))
          for (element_id b = 0; b < n_; ++b)
            if (other.has(c, b)) r.add(a, b);
    return r;
  }

  /// First pair (lex order) of this relation missing from `other`.
  std::optional<std::pair<element_id, element_id>> subset_of(
      const abstract_rel& other) const {
    for (element_id a = 0; a < n_; ++a)
      for (element_id b = 0; b < n_; ++b)
        if (has(a, b) && !other.has(a, b)) return std::make_pair(a, b);
    return std::nullopt;
  }

  bool operator==(const abstract_rel& o) const {
    return n_ == o.n_ && adj_ == o.adj_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<char> adj_;
};

enum class closure_kind { reflexive, transitive, reflexive_transitive, symmetric, equivalence };

inline std::optional<closure_kind> closure_kind_from_string(const std::string& s) {
  if (s == "reflexive") return closure_kind::reflexive;
  if (s == "transitive") return closure_kind::transitive;
  if (s == "reflexive_transitive") return closure_kind::reflexive_transitive;
  if (s == "symmetric") return closure_kind::symmetric;
  if (s == "equivalence") return closure_kind::equivalence;
  return std::nullopt;
}

/// Minimal relation of the requested kind containing r.
inline abstract_rel rel_closure(const abstract_rel& r, closure_kind kind) {
  const std::size_t n = r.size();
  abstract_rel out = r;
  auto reflexive = [&] {
    for (element_id a = 0; a < n; ++a) out.add(a, a);
  };
  auto symmetric = [&] {
    for (element_id a = 0; a < n; ++a)
      for (element_id b = 0; b < n; ++b)
        if (out.has(a, b)) out.add(b, a);
  };
  auto transitive = [&] {
    for (element_id c = 0; c < n; ++c)
      for (element_id a = 0; a < n; ++a)
        if (out.has(a, c))
          for (element_id b = 0; b < n; ++b)
            if (out.has(c, b)) out.add(a, b);
  };
  switch (kind) {
    case closure_kind::reflexive: reflexive(); break;
    case closure_kind::transitive: transitive(); break;
    case closure_kind::reflexive_transitive:
      reflexive();
      transitive();
      break;
    case closure_kind::symmetric: symmetric(); break;
    case closure_kind::equivalence:
      symmetric();
      reflexive();
      transitive();
      break;
  }
  return out;
}

enum class rel_prop { terminating, church_rosser, confluent, strongly_confluent, locally_confluent };

inline const char* to_string(rel_prop p) {
  switch (p) {
    case rel_prop::terminating: return "terminating";
    case rel_prop::church_rosser: return "church_rosser";
    case rel_prop::confluent: return "confluent";
    case rel_prop::strongly_confluent: return "strongly_confluent";
    case rel_prop::locally_confluent: return "locally_confluent";
  }
  return "?";
}

inline std::optional<rel_prop> rel_prop_from_string(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(rel_prop::locally_confluent); ++i) {
    auto p = static_cast<rel_prop>(i);
    if (s == to_string(p)) return p;
  }
  return std::nullopt;
}

/// On a finite carrier, terminating means the digraph of edges a -> b with
/// a != b is acyclic.  The confluence properties are the containment
/// conditions between composed closures, checked exactly as displayed.
inline property_report check_rel_property(const abstract_rel& r, rel_prop prop) {
  const std::size_t n = r.size();
  auto star = rel_closure(r, closure_kind::reflexive_transitive);
  auto starT = star.transpose();
  auto rep_fail = [&](std::pair<element_id, element_id> w, std::string note = "") {
    return property_report{to_string(prop), verdict::fail, {w.first, w.second}, {}, std::move(note)};
  };
  switch (prop) {
    case rel_prop::terminating: {
      // cycle through strict edges
      std::vector<int> state(n, 0);  // 0 unseen, 1 active, 2 done
      std::vector<element_id> cyc;
      std::function<bool(element_id)> dfs = [&](element_id v) -> bool {
        state[v] = 1;
        for (element_id w = 0; w < n; ++w) {
          if (!r.has(v, w) || v == w) continue;
          if (state[w] == 1) {
            cyc = {v, w};
            return true;
          }
          if (state[w] == 0 && dfs(w)) return true;
        }
        state[v] = 2;
        return false;
      };
      for (element_id v = 0; v < n; ++v)
        if (state[v] == 0 && dfs(v)) return rep_fail({cyc[0], cyc[1]}, "cycle edge");
      return property_report::passed(to_string(prop));
    }
    case rel_prop::church_rosser: {
      auto sim = rel_closure(r, closure_kind::equivalence);
      auto join = star.compose(starT);
      if (auto w = sim.subset_of(join)) return rep_fail(*w);
      return property_report::passed(to_string(prop));
    }
    case rel_prop::confluent: {
      auto peaks = starT.compose(star);
      auto join = star.compose(starT);
      if (auto w = peaks.subset_of(join)) return rep_fail(*w);
      return property_report::passed(to_string(prop));
    }
    case rel_prop::strongly_confluent: {
      auto peaks = r.transpose().compose(r);
      auto eq = rel_closure(r, closure_kind::reflexive);
      auto join = eq.compose(eq.transpose());
      if (auto w = peaks.subset_of(join)) return rep_fail(*w);
      return property_report::passed(to_string(prop));
    }
    case rel_prop::locally_confluent: {
      auto peaks = r.transpose().compose(r);
      auto join = star.compose(starT);
      if (auto w = peaks.subset_of(join)) return rep_fail(*w);
      return property_report::passed(to_string(prop));
    }
  }
  return property_report::passed(to_string(prop));
}

inline bool is_irreducible(const abstract_rel& r, element_id a) {
  for (element_id b = 0; b < r.size(); ++b)
    if (b != a && r.has(a, b)) return false;
  return true;
}

/// Equivalence classes of the relation generated by r, each sorted, listed in
/// order of least element.
inline std::vector<std::vector<element_id>> equivalence_classes(const abstract_rel& r) {
  auto sim = rel_closure(r, closure_kind::equivalence);
  std::vector<char> seen(r.size(), 0);
  std::vector<std::vector<element_id>> out;
  for (element_id a = 0; a < r.size(); ++a) {
    if (seen[a]) continue;
    std::vector<element_id> cls;
    for (element_id b = 0; b < r.size(); ++b)
      if (sim.has(a, b)) {
        cls.push_back(b);
        seen[b] = 1;
      }
    out.push_back(cls);
  }
  return out;
}

/// For a complete relation, the map sending every element to the unique
/// irreducible of its class (reachable via the reflexive-transitive closure).
/// Throws NotTerminating / NotComplete otherwise.
inline std::vector<element_id> normal_forms_abstract(const abstract_rel& r) {
  auto term = check_rel_property(r, rel_prop::terminating);
  if (!term.ok()) throw error(error_code::not_terminating, "relation has a cycle");
  auto star = rel_closure(r, closure_kind::reflexive_transitive);
  std::vector<element_id> nf(r.size());
  for (const auto& cls : equivalence_classes(r)) {
    std::vector<element_id> irr;
    for (auto a : cls)
      if (is_irreducible(r, a)) irr.push_back(a);
    if (irr.size() != 1) {
      std::string members;
      for (auto a : cls) members += (members.empty() ? "" : ",") + std::to_string(a);
      throw error(error_code::not_complete,
                  "class {" + members + "} has " + std::to_string(irr.size()) +
                      " irreducibles");
    }
    for (auto a : cls) {
      if (!star.has(a, irr[0]))
        throw error(error_code::not_complete,
                    std::to_string(a) + " cannot reach its class irreducible");
      nf[a] = irr[0];
    }
  }
  return nf;
}

}  // namespace zs

#endif  // ZS_ABSTRACT_REL_HPP_
