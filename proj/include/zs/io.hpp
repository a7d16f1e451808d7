// zs: partial multiplications, Zappa-Szep products, and rewriting at desk scale.
// SPDX-License-Identifier: Apache-2.0
//
// File formats.  Everything is JSON with sorted keys, so identical inputs
// serialize byte-for-byte identically.  Words serialize as strings over
// single-character generator names with multi-character names bracketed.

#ifndef ZS_IO_HPP_
#define ZS_IO_HPP_

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "actions.hpp"
#include "category.hpp"
#include "core.hpp"
#include "examples.hpp"
#include "magma.hpp"
#include "presentation.hpp"
#include "product.hpp"
#include "rewriting.hpp"

namespace zs {

using nlohmann::json;

// -- magmas -------------------------------------------------------------------

inline json to_json(const magma& m) {
  json j;
  j["size"] = m.size();
  j["names"] = m.names();
  json table = json::array();
  for (const auto& [key, value] : m.table())
    table.push_back({key.first, key.second, value});
  j["table"] = table;
  return j;
}

inline magma magma_from_json(const json& j) {
  if (!j.is_object() || !j.contains("size") || !j.contains("table"))
    throw error(error_code::bad_file, "expected a magma object with size and table");
  std::vector<std::string> names;
  if (j.contains("names")) names = j["names"].get<std::vector<std::string>>();
  std::vector<std::pair<std::pair<element_id, element_id>, element_id>> entries;
  for (const auto& row : j["table"]) {
    if (!row.is_array() || row.size() != 3)
      throw error(error_code::bad_file, "table rows are triples [i, j, k]");
    entries.push_back({{row[0].get<element_id>(), row[1].get<element_id>()},
                       row[2].get<element_id>()});
  }
  return build_magma(j["size"].get<std::size_t>(), names, entries);
}

// -- reports ------------------------------------------------------------------

inline json to_json(const property_report& r) {
  json j;
  j["property"] = r.property;
  j["verdict"] = to_string(r.result);
  j["witness"] = r.witness;
  if (!r.witness_names.empty()) j["witness_names"] = r.witness_names;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline json to_json(const axiom_report& r) {
  json j;
  j["property"] = r.axiom_name;
  j["verdict"] = to_string(r.result);
  j["witness"] = r.witness;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

// -- actions ------------------------------------------------------------------

inline presentation presentation_from_json(const json& j);

inline json to_json(const finite_actions& fa) {
  json j;
  j["A"] = to_json(fa.A);
  j["U"] = to_json(fa.U);
  if (fa.h_full) {
    j["H"] = "full";
  } else {
    json h = json::array();
    for (auto [a, u] : fa.h) h.push_back({a, u});
    j["H"] = h;
  }
  json dot = json::array(), exp = json::array();
  for (const auto& [key, value] : fa.dot) dot.push_back({key.first, key.second, value});
  for (const auto& [key, value] : fa.exp) exp.push_back({key.first, key.second, value});
  j["dot"] = dot;
  j["exp"] = exp;
  return j;
}

inline finite_actions actions_from_json(const json& j) {
  finite_actions fa;
  if (!j.contains("A") || !j.contains("U"))
    throw error(error_code::bad_file, "actions file needs A and U");
  // each side is either an inline magma or a presentation whose monoid is
  // finite; in the latter case the carrier is the enumerated class list
  auto domain_of = [](const json& side) -> magma {
    if (!side.contains("alphabet")) return magma_from_json(side);
    auto p = presentation_from_json(side);
    auto machine = class_machine::enumerate(p.rs);
    if (!machine)
      throw error(error_code::fuel_exhausted,
                  "presentation-backed domain did not enumerate to a finite monoid");
    return machine->to_magma(p.rs);
  };
  fa.A = domain_of(j["A"]);
  fa.U = domain_of(j["U"]);
  if (j.contains("H") && j["H"].is_string() && j["H"] == "full") {
    fa.h_full = true;
  } else if (j.contains("H")) {
    for (const auto& row : j["H"])
      fa.h.push_back({row[0].get<element_id>(), row[1].get<element_id>()});
    std::sort(fa.h.begin(), fa.h.end());
  } else {
    fa.h_full = true;
  }
  for (const auto& row : j["dot"])
    fa.dot[{row[0].get<element_id>(), row[1].get<element_id>()}] = row[2].get<element_id>();
  for (const auto& row : j["exp"])
    fa.exp[{row[0].get<element_id>(), row[1].get<element_id>()}] = row[2].get<element_id>();
  for (auto [a, u] : fa.h_enumerated())
    if (fa.in_h(a, u) && (!fa.dot.count({a, u}) || !fa.exp.count({a, u})))
      throw error(error_code::bad_file, "dot and exp must be defined on all of H");
  return fa;
}

// -- presentations ------------------------------------------------------------

inline json to_json(const presentation& p) {
  json j;
  j["alphabet"] = p.rs.alphabet;
  j["kind"] = to_string(p.rs.kind);
  json rules = json::array();
  for (const auto& [l, r] : p.rs.rules)
    rules.push_back({format_word(p.rs, l), format_word(p.rs, r)});
  j["rules"] = rules;
  if (!p.origin.empty()) {
    json origins = json::array();
    for (auto o : p.origin)
      origins.push_back(o == rule_origin::r_rules   ? "R"
                        : o == rule_origin::t_rules ? "T"
                        : o == rule_origin::w_rules ? "W"
                                                    : "-");
    j["origins"] = origins;
  }
  if (!p.is_x.empty()) {
    json split = json::array();
    for (auto b : p.is_x) split.push_back(b != 0);
    j["is_x"] = split;
  }
  return j;
}

inline presentation presentation_from_json(const json& j) {
  presentation p;
  if (!j.contains("alphabet") || !j.contains("rules"))
    throw error(error_code::bad_file, "presentation file needs alphabet and rules");
  p.rs.alphabet = j["alphabet"].get<std::vector<std::string>>();
  if (j.contains("kind")) {
    auto k = pres_kind_from_string(j["kind"].get<std::string>());
    if (!k) throw error(error_code::bad_file, "unknown kind");
    p.rs.kind = *k;
  }
  for (const auto& row : j["rules"])
    p.rs.rules.push_back({parse_word(p.rs, row[0].get<std::string>()),
                          parse_word(p.rs, row[1].get<std::string>())});
  if (j.contains("origins")) {
    for (const auto& o : j["origins"]) {
      std::string s = o.get<std::string>();
      p.origin.push_back(s == "R"   ? rule_origin::r_rules
                         : s == "T" ? rule_origin::t_rules
                         : s == "W" ? rule_origin::w_rules
                                    : rule_origin::plain);
    }
  } else {
    p.origin.assign(p.rs.rules.size(), rule_origin::plain);
  }
  if (j.contains("is_x"))
    for (const auto& b : j["is_x"]) p.is_x.push_back(b.get<bool>() ? 1 : 0);
  p.rs.validate();
  return p;
}

// -- generator actions ----------------------------------------------------------

inline json to_json(const gen_actions& ga) {
  json j;
  j["X"] = ga.x_alphabet;
  j["Y"] = ga.y_alphabet;
  rule_set xv, yv;
  xv.alphabet = ga.x_alphabet;
  yv.alphabet = ga.y_alphabet;
  json dot = json::array(), exp = json::array();
  for (const auto& [key, value] : ga.dot)
    dot.push_back({ga.y_alphabet[key.first], ga.x_alphabet[key.second],
                   ga.x_alphabet[value]});
  for (const auto& [key, value] : ga.exp)
    exp.push_back({ga.y_alphabet[key.first], ga.x_alphabet[key.second],
                   format_word(yv, value)});
  j["dot"] = dot;
  j["exp"] = exp;
  return j;
}

inline gen_actions gen_actions_from_json(const json& j) {
  gen_actions ga;
  if (!j.contains("X") || !j.contains("Y"))
    throw error(error_code::bad_file, "gen-actions file needs X and Y");
  ga.x_alphabet = j["X"].get<std::vector<std::string>>();
  ga.y_alphabet = j["Y"].get<std::vector<std::string>>();
  rule_set xv, yv;
  xv.alphabet = ga.x_alphabet;
  yv.alphabet = ga.y_alphabet;
  auto xletter = [&](const std::string& s) {
    auto l = xv.letter_of(s);
    if (!l) throw error(error_code::bad_file, "unknown X letter '" + s + "'");
    return *l;
  };
  auto yletter = [&](const std::string& s) {
    auto l = yv.letter_of(s);
    if (!l) throw error(error_code::bad_file, "unknown Y letter '" + s + "'");
    return *l;
  };
  for (const auto& row : j["dot"])
    ga.dot[{yletter(row[0].get<std::string>()), xletter(row[1].get<std::string>())}] =
        xletter(row[2].get<std::string>());
  for (const auto& row : j["exp"])
    ga.exp[{yletter(row[0].get<std::string>()), xletter(row[1].get<std::string>())}] =
        parse_word(yv, row[2].get<std::string>());
  ga.validate();
  return ga;
}

// -- categories and bundles -----------------------------------------------------

inline json to_json(const finite_category& c) {
  json j;
  j["objects"] = c.objects;
  json mors = json::array();
  for (const auto& m : c.morphisms)
    mors.push_back({{"name", m.name}, {"src", c.objects[m.src]}, {"tgt", c.objects[m.tgt]}});
  j["morphisms"] = mors;
  json comp = json::array();
  for (const auto& [key, value] : c.compose)
    comp.push_back({c.morphisms[key.first].name, c.morphisms[key.second].name,
                    c.morphisms[value].name});
  j["compose"] = comp;
  return j;
}

inline finite_category category_from_json(const json& j) {
  finite_category c;
  if (!j.contains("objects") || !j.contains("morphisms") || !j.contains("compose"))
    throw error(error_code::bad_file, "category file needs objects, morphisms, compose");
  c.objects = j["objects"].get<std::vector<std::string>>();
  for (const auto& m : j["morphisms"]) {
    auto src = c.object_index(m["src"].get<std::string>());
    auto tgt = c.object_index(m["tgt"].get<std::string>());
    if (!src || !tgt) throw error(error_code::bad_file, "morphism endpoint unknown");
    c.morphisms.push_back({m["name"].get<std::string>(), *src, *tgt});
  }
  for (const auto& row : j["compose"]) {
    auto a = c.morphism_index(row[0].get<std::string>());
    auto b = c.morphism_index(row[1].get<std::string>());
    auto v = c.morphism_index(row[2].get<std::string>());
    if (!a || !b || !v) throw error(error_code::bad_file, "compose row names unknown morphism");
    c.compose[{*a, *b}] = *v;
  }
  // infer the identity at each object
  c.identity.assign(c.objects.size(), 0);
  for (element_id x = 0; x < c.objects.size(); ++x) {
    std::optional<element_id> found;
    for (element_id e = 0; e < c.morphisms.size(); ++e) {
      if (c.morphisms[e].src != x || c.morphisms[e].tgt != x) continue;
      bool ok = true;
      for (element_id a = 0; a < c.morphisms.size() && ok; ++a) {
        if (c.morphisms[a].src == x) {
          auto it = c.compose.find({a, e});
          if (it == c.compose.end() || it->second != a) ok = false;
        }
        if (ok && c.morphisms[a].tgt == x) {
          auto it = c.compose.find({e, a});
          if (it == c.compose.end() || it->second != a) ok = false;
        }
      }
      if (ok) {
        found = e;
        break;
      }
    }
    if (!found)
      throw error(error_code::ill_formed_category,
                  "object " + c.objects[x] + " has no identity morphism");
    c.identity[x] = *found;
  }
  return c;
}

inline json to_json(const groupoid_bundle& b, const std::vector<element_id>& a_sub) {
  json j = to_json(b.g);
  j["U"] = to_json(b.u);
  json phi;
  for (element_id x = 0; x < b.g.objects.size(); ++x) {
    json col = json::array();
    for (element_id u = 0; u < b.u.size(); ++u)
      col.push_back({b.u.name(u), b.g.morphisms[b.phi[x][u]].name});
    phi[b.g.objects[x]] = col;
  }
  j["phi"] = phi;
  if (!a_sub.empty()) {
    json a = json::array();
    for (auto i : a_sub) a.push_back(b.g.morphisms[i].name);
    j["A"] = a;
  }
  return j;
}

struct bundle_file {
  groupoid_bundle bundle;
  std::vector<element_id> a_sub;
};

inline bundle_file bundle_from_json(const json& j) {
  bundle_file out;
  out.bundle.g = category_from_json(j);
  if (!j.contains("U") || !j.contains("phi"))
    throw error(error_code::bad_file, "bundle file needs U and phi");
  out.bundle.u = magma_from_json(j["U"]);
  out.bundle.phi.assign(out.bundle.g.objects.size(),
                        std::vector<element_id>(out.bundle.u.size(), 0));
  for (element_id x = 0; x < out.bundle.g.objects.size(); ++x) {
    const auto& col = j["phi"].at(out.bundle.g.objects[x]);
    for (const auto& row : col) {
      auto u = out.bundle.u.index_of(row[0].get<std::string>());
      auto m = out.bundle.g.morphism_index(row[1].get<std::string>());
      if (!u || !m) throw error(error_code::bad_file, "phi row names unknown element");
      out.bundle.phi[x][*u] = *m;
    }
  }
  if (j.contains("A"))
    for (const auto& name : j["A"]) {
      auto m = out.bundle.g.morphism_index(name.get<std::string>());
      if (!m) throw error(error_code::bad_file, "A names unknown morphism");
      out.a_sub.push_back(*m);
    }
  return out;
}

// -- products -----------------------------------------------------------------

inline json to_json(const finite_product& p, const std::string& provenance) {
  json j;
  j["actions"] = to_json(p.actions);
  if (p.e_full) {
    j["E"] = "full";
  } else {
    json e = json::array();
    for (auto [u, a] : p.pairs) e.push_back({u, a});
    j["E"] = e;
  }
  json pairs = json::array();
  for (auto [u, a] : p.pairs) pairs.push_back({u, a});
  j["pairs"] = pairs;
  j["product"] = to_json(p.table);
  j["provenance"] = provenance;
  return j;
}

// -- file helpers ---------------------------------------------------------------

inline json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(error_code::bad_file, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw error(error_code::bad_file, path + ": " + e.what());
  }
  return j;
}

inline void save_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw error(error_code::bad_file, "cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace zs

#endif  // ZS_IO_HPP_
