// zs: partial multiplications, Zappa-Szep products, and rewriting at desk scale.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end.  Every verb maps to exactly one library operation;
// all state lives in files.  Exit codes: 0 pass/success, 1 fail, 2 usage or
// file errors, 3 inconclusive (fuel).

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "zs/abstract_rel.hpp"
#include "zs/actions.hpp"
#include "zs/category.hpp"
#include "zs/examples.hpp"
#include "zs/io.hpp"
#include "zs/magma.hpp"
#include "zs/presentation.hpp"
#include "zs/product.hpp"
#include "zs/rewriting.hpp"

namespace {

using namespace zs;

int exit_for(verdict v) {
  switch (v) {
    case verdict::pass:
    case verdict::not_applicable: return 0;
    case verdict::fail: return 1;
    case verdict::inconclusive: return 3;
  }
  return 2;
}

int exit_for(const error& e) {
  switch (e.code) {
    case error_code::bad_file:
    case error_code::unknown_example:
    case error_code::index_out_of_range: return 2;
    case error_code::fuel_exhausted:
    case error_code::no_common_left_multiple: return 3;  // bounded search
    default: return 1;
  }
}

struct output {
  bool as_json = false;

  void report(const property_report& r) const {
    if (as_json) {
      std::cout << to_json(r).dump(2) << "\n";
      return;
    }
    std::cout << r.property << ": " << to_string(r.result);
    if (!r.witness.empty()) {
      std::cout << "  witness:";
      for (auto w : r.witness) std::cout << " " << w;
    }
    if (!r.witness_names.empty()) {
      std::cout << "  witness:";
      for (const auto& w : r.witness_names) std::cout << " " << w;
    }
    if (!r.note.empty()) std::cout << "  (" << r.note << ")";
    std::cout << "\n";
  }

  void report(const axiom_report& r) const {
    if (as_json) {
      std::cout << to_json(r).dump(2) << "\n";
      return;
    }
    std::cout << r.axiom_name << ": " << to_string(r.result);
    if (!r.witness.empty()) {
      std::cout << "  witness:";
      for (const auto& w : r.witness) std::cout << " " << w;
    }
    if (!r.note.empty()) std::cout << "  (" << r.note << ")";
    std::cout << "\n";
  }
};

std::vector<element_id> parse_subset(const magma& m, const std::string& csv) {
  std::vector<element_id> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (auto idx = m.index_of(item)) {
      out.push_back(*idx);
    } else {
      try {
        out.push_back(std::stoul(item));
      } catch (...) {
        throw error(error_code::bad_file, "no element named '" + item + "'");
      }
    }
  }
  return out;
}

element_id parse_element(const magma& m, const std::string& s) {
  auto v = parse_subset(m, s);
  if (v.size() != 1) throw error(error_code::bad_file, "expected one element");
  return v[0];
}

json rel_to_json(const abstract_rel& r) {
  json j;
  j["size"] = r.size();
  json edges = json::array();
  for (auto [a, b] : r.edges()) edges.push_back({a, b});
  j["edges"] = edges;
  return j;
}

abstract_rel rel_from_json(const json& j) {
  if (!j.contains("size") || !j.contains("edges"))
    throw error(error_code::bad_file, "relation file needs size and edges");
  std::vector<std::pair<element_id, element_id>> edges;
  for (const auto& e : j["edges"])
    edges.push_back({e[0].get<element_id>(), e[1].get<element_id>()});
  return abstract_rel(j["size"].get<std::size_t>(), edges);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computations with partial multiplications and their products"};
  app.require_subcommand(1);
  output out;
  app.add_flag("--json", out.as_json, "machine-readable reports");
  std::size_t fuel = fuel_defaults::rewrite_steps;
  app.add_option("--fuel", fuel, "step / enumeration budget");
  unsigned seed = 0;
  app.add_option("--seed", seed, "seed for randomized subcommands");

  int code = 0;
  auto run = [&](auto f) { return [&, f]() { code = f(); }; };

  // ---- magma verbs ----
  std::string in_path, out_path, prop_name, a_name, b_name, u_csv, a_csv;

  auto* check = app.add_subcommand("check", "check one multiplication property");
  check->add_option("magma", in_path)->required();
  check->add_option("--prop", prop_name)->required();
  check->callback(run([&] {
    auto m = magma_from_json(load_json(in_path));
    auto p = m_prop_from_string(prop_name);
    if (!p) throw error(error_code::bad_file, "unknown property '" + prop_name + "'");
    auto r = check_property(m, *p);
    out.report(r);
    return exit_for(r.result);
  }));

  auto* identities = app.add_subcommand("identities", "classify identity elements");
  identities->add_option("magma", in_path)->required();
  identities->callback(run([&] {
    auto m = magma_from_json(load_json(in_path));
    auto info = identities_of(m);
    json rows = json::array();
    for (element_id i = 0; i < m.size(); ++i) {
      json row;
      row["element"] = m.name(i);
      row["right_identity_for"] = info[i].right_identity_for;
      row["left_identity_for"] = info[i].left_identity_for;
      row["right_identity_for_magma"] = info[i].right_identity_for_magma;
      row["left_identity_for_magma"] = info[i].left_identity_for_magma;
      row["full_identity"] = info[i].full_identity;
      row["global_identity"] = info[i].global_identity;
      rows.push_back(row);
    }
    if (out.as_json) {
      std::cout << rows.dump(2) << "\n";
    } else {
      for (const auto& row : rows) {
        std::cout << row["element"].get<std::string>() << ":";
        if (row["global_identity"].get<bool>()) std::cout << " global";
        else if (row["full_identity"].get<bool>()) std::cout << " full";
        else {
          if (row["right_identity_for_magma"].get<bool>()) std::cout << " right-for-magma";
          if (row["left_identity_for_magma"].get<bool>()) std::cout << " left-for-magma";
        }
        std::cout << "\n";
      }
    }
    return 0;
  }));

  auto* units = app.add_subcommand("units", "elements with two-sided inverses");
  units->add_option("magma", in_path)->required();
  units->callback(run([&] {
    auto m = magma_from_json(load_json(in_path));
    auto us = units_of(m);
    json j = json::array();
    for (auto u : us) j.push_back(m.name(u));
    std::cout << j.dump() << "\n";
    return 0;
  }));

  auto* lclm_cmd = app.add_subcommand("lclm", "least common left multiple of a pair");
  lclm_cmd->add_option("magma", in_path)->required();
  lclm_cmd->add_option("--a", a_name)->required();
  lclm_cmd->add_option("--b", b_name)->required();
  lclm_cmd->callback(run([&] {
    auto m = magma_from_json(load_json(in_path));
    auto r = lclm(m, parse_element(m, a_name), parse_element(m, b_name));
    if (!r) {
      std::cout << "none\n";
      return 1;
    }
    json j;
    j["multiple"] = m.name(r->multiple);
    j["left_cofactor"] = m.name(r->left_cofactor);
    j["right_cofactor"] = m.name(r->right_cofactor);
    std::cout << j.dump() << "\n";
    return 0;
  }));

  auto* derive = app.add_subcommand("derive-actions", "actions from a unique factorization");
  derive->add_option("magma", in_path)->required();
  derive->add_option("--u", u_csv)->required();
  derive->add_option("--a", a_csv)->required();
  derive->add_option("-o,--output", out_path);
  derive->callback(run([&] {
    auto m = magma_from_json(load_json(in_path));
    auto d = derive_internal_actions(m, parse_subset(m, u_csv), parse_subset(m, a_csv));
    if (!out_path.empty()) save_json(out_path, to_json(d.actions));
    std::cout << "derived actions: |U| = " << d.actions.U.size()
              << ", |A| = " << d.actions.A.size() << ", |H| = " << d.actions.h.size()
              << "\n";
    return 0;
  }));

  // ---- actions verbs ----
  std::string axiom_csv, x_pair, y_pair, witness_pair, mode_name, stock_name;

  auto* axiom_cmd = app.add_subcommand("check-axiom", "check P1-P8 axioms");
  axiom_cmd->add_option("actions", in_path)->required();
  axiom_cmd->add_option("--axiom", axiom_csv, "tag, comma list, or 'all'")->required();
  axiom_cmd->callback(run([&] {
    auto fa = actions_from_json(load_json(in_path));
    auto view = fa.view();
    std::vector<axiom> tags;
    if (axiom_csv == "all") {
      tags = all_axioms();
    } else {
      std::stringstream ss(axiom_csv);
      std::string item;
      while (std::getline(ss, item, ',')) {
        auto t = axioms_from_string(item);
        if (t.empty()) throw error(error_code::bad_file, "unknown axiom '" + item + "'");
        tags.insert(tags.end(), t.begin(), t.end());
      }
    }
    verdict worst = verdict::pass;
    for (auto t : tags) {
      auto r = check_axiom(view, t);
      out.report(r);
      if (r.result == verdict::fail) worst = verdict::fail;
      else if (r.result == verdict::inconclusive && worst == verdict::pass)
        worst = verdict::inconclusive;
    }
    return exit_for(worst);
  }));

  auto* families = app.add_subcommand("families", "one-parameter family properties");
  families->add_option("actions", in_path)->required();
  families->callback(run([&] {
    auto fa = actions_from_json(load_json(in_path));
    auto fp = family_properties(fa.view());
    for (const auto* rep :
         {&fp.exp_family.injective, &fp.exp_family.surjective, &fp.exp_family.confluent,
          &fp.exp_family.coconfluent, &fp.exp_family.strongly_coconfluent,
          &fp.exp_family.multiplicative, &fp.exp_family.trivial, &fp.dot_family.injective,
          &fp.dot_family.surjective, &fp.dot_family.confluent, &fp.dot_family.coconfluent,
          &fp.dot_family.strongly_coconfluent, &fp.dot_family.multiplicative,
          &fp.dot_family.trivial})
      out.report(*rep);
    return 0;
  }));

  auto* product = app.add_subcommand("product", "external product of an actions file");
  product->add_option("actions", in_path)->required();
  product->add_option("-o,--output", out_path, "emit the product magma");
  std::string emit_product;
  product->add_option("--emit-product", emit_product, "emit the full product file");
  product->callback(run([&] {
    auto fa = actions_from_json(load_json(in_path));
    auto ext = external_product(fa);
    out.report(ext.p1a);
    out.report(ext.p1b);
    out.report(ext.p1c);
    std::cout << "closed: " << (ext.closed ? "yes" : "no")
              << ", total on E: " << (ext.total_on_e ? "yes" : "no")
              << ", H in projections: " << (ext.h_in_projections ? "yes" : "no") << "\n";
    if (!ext.closed) return 1;
    if (!out_path.empty()) save_json(out_path, to_json(ext.product.table));
    if (!emit_product.empty())
      save_json(emit_product, to_json(ext.product, "external"));
    return 0;
  }));

  auto* reconstruct = app.add_subcommand("reconstruct", "internal product reconstruction");
  reconstruct->add_option("magma", in_path)->required();
  reconstruct->add_option("--u", u_csv)->required();
  reconstruct->add_option("--a", a_csv)->required();
  reconstruct->add_option("-o,--output", out_path, "emit the product file");
  reconstruct->callback(run([&] {
    auto m = magma_from_json(load_json(in_path));
    auto rec = reconstruction_iso(m, parse_subset(m, u_csv), parse_subset(m, a_csv));
    std::cout << "reconstructed " << rec.product.pairs.size()
              << " pairs onto the carrier; tables match\n";
    if (!out_path.empty()) save_json(out_path, to_json(rec.product, "reconstruction"));
    return 0;
  }));

  auto* monoidp = app.add_subcommand("monoid-product", "monoid product on U x A");
  monoidp->add_option("actions", in_path)->required();
  monoidp->add_option("-o,--output", out_path);
  monoidp->callback(run([&] {
    auto fa = actions_from_json(load_json(in_path));
    auto p = monoid_product(fa);
    if (!out_path.empty()) save_json(out_path, to_json(p.table));
    std::cout << "monoid of order " << p.table.size() << "\n";
    return 0;
  }));

  auto* groupp = app.add_subcommand("group-product", "group product on U x A");
  groupp->add_option("actions", in_path)->required();
  groupp->add_option("-o,--output", out_path);
  groupp->callback(run([&] {
    auto fa = actions_from_json(load_json(in_path));
    auto p = group_product(fa);
    if (!out_path.empty()) save_json(out_path, to_json(p.table));
    std::cout << "group of order " << p.table.size() << "\n";
    return 0;
  }));

  auto* classify = app.add_subcommand("classify", "direct / semidirect / general");
  classify->add_option("actions", in_path)->required();
  classify->callback(run([&] {
    auto fa = actions_from_json(load_json(in_path));
    auto c = classify_product(fa);
    json j;
    j["class"] = to_string(c.result);
    j["dot_trivial"] = c.dot_trivial;
    j["exp_trivial"] = c.exp_trivial;
    std::cout << (out.as_json ? j.dump(2) : std::string(to_string(c.result))) << "\n";
    return 0;
  }));

  auto* plclm = app.add_subcommand("product-lclm", "least common left multiple in a product");
  plclm->add_option("actions", in_path, "actions file (finite path)");
  plclm->add_option("--stock", stock_name, "'free2-c2-swap' for the word-domain example");
  plclm->add_option("--x", x_pair, "pair 'u,a'")->required();
  plclm->add_option("--y", y_pair, "pair 'v,b'")->required();
  plclm->add_option("--witness", witness_pair, "a known common left multiple 'w,c'");
  plclm->callback(run([&] {
    if (stock_name == "free2-c2-swap") {
      auto pd = swap_product();
      auto parse_pair = [&](const std::string& s) {
        auto comma = s.rfind(',');
        if (comma == std::string::npos)
          throw error(error_code::bad_file, "expected 'word,a'");
        word w = parse_word(pd.ap.U.rules, s.substr(0, comma));
        std::string an = s.substr(comma + 1);
        auto a = pd.ap.A.m.index_of(an);
        if (!a) throw error(error_code::bad_file, "unknown A element '" + an + "'");
        return std::make_pair(w, *a);
      };
      std::optional<std::pair<word, element_id>> wit;
      if (!witness_pair.empty()) wit = parse_pair(witness_pair);
      // fuel is a word length here; the step default would be far too wide
      std::size_t len = fuel == fuel_defaults::rewrite_steps ? 4
                                                             : std::min<std::size_t>(fuel, 8);
      auto r = product_lclm(pd, parse_pair(x_pair), parse_pair(y_pair), wit, len);
      std::cout << "lclm: " << pd.display(r.multiple)
                << "  cofactors: " << pd.display(r.left_cofactor) << " "
                << pd.display(r.right_cofactor) << "\n";
      return 0;
    }
    if (in_path.empty())
      throw error(error_code::bad_file, "need an actions file or --stock");
    auto fa = actions_from_json(load_json(in_path));
    product_domain<finite_domain, finite_domain> pd;
    pd.ap = fa.view();
    auto parse_pair = [&](const std::string& s) {
      auto comma = s.rfind(',');
      if (comma == std::string::npos) throw error(error_code::bad_file, "expected 'u,a'");
      auto u = fa.U.index_of(s.substr(0, comma));
      auto a = fa.A.index_of(s.substr(comma + 1));
      if (!u || !a) throw error(error_code::bad_file, "unknown pair '" + s + "'");
      return std::make_pair(*u, *a);
    };
    std::optional<std::pair<element_id, element_id>> wit;
    if (!witness_pair.empty()) wit = parse_pair(witness_pair);
    auto r = product_lclm(pd, parse_pair(x_pair), parse_pair(y_pair), wit, fuel);
    std::cout << "lclm: " << pd.display(r.multiple)
              << "  cofactors: " << pd.display(r.left_cofactor) << " "
              << pd.display(r.right_cofactor) << "\n";
    return 0;
  }));

  std::string factors_csv, tree_name;
  auto* chain = app.add_subcommand("assoc-chain", "iterated product along a tree");
  chain->add_option("magma", in_path)->required();
  chain->add_option("--factors", factors_csv, "semicolon-separated subsets")->required();
  chain->add_option("--tree", tree_name, "left | right | nested pairs like '((1 2) 3)'")
      ->default_val("left");
  chain->callback(run([&] {
    auto m = magma_from_json(load_json(in_path));
    std::vector<std::vector<element_id>> factors;
    std::stringstream ss(factors_csv);
    std::string part;
    while (std::getline(ss, part, ';')) factors.push_back(parse_subset(m, part));
    auto tree = tree_name == "right"  ? paren_tree::right_comb(factors.size())
                : tree_name == "left" ? paren_tree::left_comb(factors.size())
                                      : paren_tree::parse(tree_name, factors.size());
    auto r = assoc_chain_iso(m, factors, tree);
    out.report(r.report);
    return exit_for(r.report.result);
  }));

  // ---- relations and rewriting ----
  std::string kind_name, word_in, word2_in, cert_name, order_csv;

  auto* closure = app.add_subcommand("closure", "closure of an abstract relation");
  closure->add_option("relation", in_path)->required();
  closure->add_option("--kind", kind_name)->required();
  closure->add_option("-o,--output", out_path);
  closure->callback(run([&] {
    auto r = rel_from_json(load_json(in_path));
    auto k = closure_kind_from_string(kind_name);
    if (!k) throw error(error_code::bad_file, "unknown closure kind");
    auto c = rel_closure(r, *k);
    if (!out_path.empty())
      save_json(out_path, rel_to_json(c));
    else
      std::cout << rel_to_json(c).dump(2) << "\n";
    return 0;
  }));

  auto* relcheck = app.add_subcommand("rel-check", "confluence hierarchy / termination");
  relcheck->add_option("relation", in_path)->required();
  relcheck->add_option("--prop", prop_name)->required();
  relcheck->callback(run([&] {
    auto r = rel_from_json(load_json(in_path));
    auto p = rel_prop_from_string(prop_name);
    if (!p) throw error(error_code::bad_file, "unknown relation property");
    auto rep = check_rel_property(r, *p);
    out.report(rep);
    return exit_for(rep.result);
  }));

  auto* nf = app.add_subcommand("normal-forms", "unique irreducibles of a complete relation");
  nf->add_option("relation", in_path)->required();
  nf->callback(run([&] {
    auto r = rel_from_json(load_json(in_path));
    auto map = normal_forms_abstract(r);
    json j = json::array();
    for (auto v : map) j.push_back(v);
    std::cout << j.dump() << "\n";
    return 0;
  }));

  auto* rewrite = app.add_subcommand("rewrite", "all single-step rewrites of a word");
  rewrite->add_option("presentation", in_path)->required();
  rewrite->add_option("--word", word_in)->required();
  rewrite->callback(run([&] {
    auto p = presentation_from_json(load_json(in_path));
    json j = json::array();
    for (const auto& w : word_rewrite_step(p.rs, parse_word(p.rs, word_in)))
      j.push_back(format_word(p.rs, w));
    std::cout << j.dump() << "\n";
    return 0;
  }));

  auto* normalize = app.add_subcommand("normalize", "leftmost-first normal form");
  normalize->add_option("presentation", in_path)->required();
  normalize->add_option("--word", word_in)->required();
  normalize->callback(run([&] {
    auto p = presentation_from_json(load_json(in_path));
    auto nf_word = normalize_word(p.rs, parse_word(p.rs, word_in), fuel);
    std::cout << format_word(p.rs, nf_word) << "\n";
    return 0;
  }));

  auto* localc = app.add_subcommand("local-confluence", "critical-pair joinability");
  localc->add_option("presentation", in_path)->required();
  localc->callback(run([&] {
    auto p = presentation_from_json(load_json(in_path));
    auto r = string_local_confluence(p.rs, fuel);
    out.report(r);
    return exit_for(r.result);
  }));

  auto* term = app.add_subcommand("termination", "termination certificates");
  term->add_option("presentation", in_path)->required();
  term->add_option("--cert", cert_name, "length_reducing | length_lex | cw")->required();
  term->add_option("--order", order_csv, "letter priority for length_lex");
  term->callback(run([&] {
    auto p = presentation_from_json(load_json(in_path));
    termination_cert cert;
    if (cert_name == "length_reducing") {
      cert.kind = cert_kind::length_reducing;
    } else if (cert_name == "length_lex") {
      cert.kind = cert_kind::length_lex;
      if (!order_csv.empty()) {
        cert.alphabet_priority.assign(p.rs.alphabet.size(), 0);
        std::stringstream ss(order_csv);
        std::string item;
        letter rank = 0;
        while (std::getline(ss, item, ',')) {
          auto l = p.rs.letter_of(item);
          if (!l) throw error(error_code::bad_file, "unknown letter '" + item + "'");
          cert.alphabet_priority[*l] = rank++;
        }
      }
    } else if (cert_name == "cw") {
      cert.kind = cert_kind::cw_measure;
      if (p.is_x.empty())
        throw error(error_code::shape_mismatch,
                    "the presentation file carries no X/Y split (is_x)");
      cert.is_x = p.is_x;
    } else {
      throw error(error_code::bad_file, "unknown certificate '" + cert_name + "'");
    }
    auto r = termination_certificate(p.rs, cert);
    out.report(r);
    return exit_for(r.result);
  }));

  auto* tablep = app.add_subcommand("table-pres", "multiplication-table presentation");
  tablep->add_option("magma", in_path)->required();
  tablep->add_option("--kind", kind_name)->default_val("monoid");
  tablep->add_option("-o,--output", out_path);
  tablep->callback(run([&] {
    auto m = magma_from_json(load_json(in_path));
    auto k = pres_kind_from_string(kind_name);
    if (!k) throw error(error_code::bad_file, "unknown kind");
    auto rs = table_presentation(m, *k);
    auto p = presentation::plain(rs);
    if (!out_path.empty())
      save_json(out_path, to_json(p));
    else
      std::cout << to_json(p).dump(2) << "\n";
    return 0;
  }));

  // ---- presentations ----
  std::string pres_u_path, pres_a_path, gen_path, alpha_word, u_word;

  auto* zspres = app.add_subcommand("zs-pres", "product presentation R u T u W");
  zspres->add_option("--actions", in_path)->required();
  zspres->add_option("--pres-u", pres_u_path)->required();
  zspres->add_option("--pres-a", pres_a_path)->required();
  zspres->add_option("--mode", mode_name)->default_val("generators");
  zspres->add_option("-o,--output", out_path);
  zspres->callback(run([&] {
    auto fa = actions_from_json(load_json(in_path));
    auto pu = presentation_from_json(load_json(pres_u_path));
    auto pa = presentation_from_json(load_json(pres_a_path));
    auto mode = mode_name == "full" ? zs_mode::full : zs_mode::generators;
    auto zp = zs_presentation(fa, pu, pa, mode);
    if (!out_path.empty()) save_json(out_path, to_json(zp.pres));
    std::cout << "rules: " << zp.pres.rs.rules.size() << ", classes: "
              << (zp.class_count ? std::to_string(*zp.class_count) : "not enumerated")
              << " (expected " << zp.expected_classes << ")\n";
    if (zp.class_count && *zp.class_count != zp.expected_classes) return 1;
    return 0;
  }));

  auto* actionp = app.add_subcommand("action-pres", "the two-alphabet action presentation");
  actionp->add_option("gen-actions", gen_path)->required();
  actionp->add_option("-o,--output", out_path);
  actionp->callback(run([&] {
    auto ga = gen_actions_from_json(load_json(gen_path));
    auto ap = action_presentation(ga);
    out.report(ap.completeness);
    if (!out_path.empty()) save_json(out_path, to_json(ap.pres));
    return exit_for(ap.completeness.result);
  }));

  auto* extend = app.add_subcommand("extend-actions", "word-level action values");
  extend->add_option("gen-actions", gen_path)->required();
  extend->add_option("--alpha", alpha_word, "Y-word")->required();
  extend->add_option("--u", u_word, "X-word")->required();
  bool run_checks = false;
  extend->add_flag("--check", run_checks, "run the fuel-bounded axiom checks");
  extend->callback(run([&] {
    auto ga = gen_actions_from_json(load_json(gen_path));
    auto wa = extend_gen_actions(ga);
    rule_set xv, yv;
    xv.alphabet = ga.x_alphabet;
    yv.alphabet = ga.y_alphabet;
    auto [dot_w, exp_w] = wa.reverse(parse_word(yv, alpha_word), parse_word(xv, u_word));
    std::cout << "dot: " << (dot_w.empty() ? "(empty)" : format_word(xv, dot_w))
              << "\nexp: " << (exp_w.empty() ? "(empty)" : format_word(yv, exp_w)) << "\n";
    if (run_checks) {
      verdict worst = verdict::pass;
      for (const auto& r : extension_checks(wa)) {
        out.report(r);
        if (r.result == verdict::fail) worst = verdict::fail;
      }
      return exit_for(worst == verdict::fail ? verdict::fail : verdict::pass);
    }
    return 0;
  }));

  auto* twisted = app.add_subcommand("twisted3", "quotient-action hypothesis checker");
  twisted->add_option("--pres-u", pres_u_path)->required();
  twisted->add_option("--pres-a", pres_a_path)->required();
  twisted->add_option("--gen", gen_path)->required();
  twisted->add_option("-o,--output", out_path, "emit the induced actions");
  twisted->callback(run([&] {
    auto pu = presentation_from_json(load_json(pres_u_path));
    auto pa = presentation_from_json(load_json(pres_a_path));
    auto ga = gen_actions_from_json(load_json(gen_path));
    auto res = twisted_iii_check(pu, pa, ga, fuel);
    out.report(res.report);
    if (res.induced && !out_path.empty()) save_json(out_path, to_json(*res.induced));
    return exit_for(res.report.result);
  }));

  auto* wp = app.add_subcommand("wp", "word problem");
  wp->add_option("presentation", in_path)->required();
  wp->add_option("--w1", word_in)->required();
  wp->add_option("--w2", word2_in)->required();
  wp->callback(run([&] {
    auto p = presentation_from_json(load_json(in_path));
    auto v = word_problem(p, parse_word(p.rs, word_in), parse_word(p.rs, word2_in), fuel);
    std::cout << to_string(v) << "\n";
    return v == wp_verdict::equal ? 0 : v == wp_verdict::distinct ? 1 : 3;
  }));

  // ---- categories ----
  auto* category = app.add_subcommand("category", "validate and export a category");
  category->add_option("category", in_path)->required();
  category->add_option("-o,--output", out_path, "emit the morphism magma");
  category->callback(run([&] {
    auto c = category_from_json(load_json(in_path));
    auto m = category_as_magma(c);
    std::cout << c.objects.size() << " objects, " << c.morphisms.size()
              << " morphisms; composition is categorical\n";
    if (!out_path.empty()) save_json(out_path, to_json(m));
    return 0;
  }));

  auto* convert = app.add_subcommand("convert", "transport bundle actions to A x U");
  convert->add_option("bundle", in_path)->required();
  convert->add_option("-o,--output", out_path);
  convert->callback(run([&] {
    auto bf = bundle_from_json(load_json(in_path));
    if (bf.a_sub.empty())
      throw error(error_code::bad_file, "bundle file carries no A subcategory");
    auto conv = convert_zs_actions(bf.bundle, bf.a_sub);
    out.report(conv.package);
    if (conv.package.ok() && !out_path.empty())
      save_json(out_path, to_json(conv.actions));
    return exit_for(conv.package.result);
  }));

  int situation = 1;
  auto* roundtrip = app.add_subcommand("roundtrip", "internal/external correspondence");
  roundtrip->add_option("bundle", in_path)->required();
  roundtrip->add_option("--situation", situation)->check(CLI::Range(1, 2));
  roundtrip->callback(run([&] {
    auto bf = bundle_from_json(load_json(in_path));
    if (bf.a_sub.empty())
      throw error(error_code::bad_file, "bundle file carries no A subcategory");
    roundtrip_result r;
    if (situation == 1) {
      r = roundtrip_situation_one(bf.bundle, bf.a_sub);
    } else {
      auto conv = convert_zs_actions(bf.bundle, bf.a_sub);
      if (!conv.package.ok()) {
        out.report(conv.package);
        return exit_for(conv.package.result);
      }
      mutual_action_data data;
      data.a_cat = subcategory(bf.bundle.g, bf.a_sub);
      data.u_group = bf.bundle.u;
      data.dot = conv.actions.dot;
      data.exp = conv.actions.exp;
      r = roundtrip_situation_two(data);
    }
    out.report(r.report);
    return exit_for(r.report.result);
  }));

  // ---- the registry ----
  bool list_examples = false;
  std::string emit_actions;
  auto* example = app.add_subcommand("example", "stock examples");
  example->add_option("name", in_path);
  example->add_flag("--list", list_examples);
  example->add_option("-o,--output", out_path, "emit the example's natural file");
  example->add_option("--emit-actions", emit_actions,
                      "derive actions from the subsets and emit them");
  example->callback(run([&] {
    if (list_examples) {
      for (const auto& n : stock_example_names()) std::cout << n << "\n";
      return 0;
    }
    if (in_path.empty()) throw error(error_code::unknown_example, "no name given");
    auto ex = stock_example(in_path);
    std::cout << ex.name << ": " << ex.description << "\n";
    if (!out_path.empty()) {
      if (ex.bundle) {
        save_json(out_path, to_json(*ex.bundle, ex.category_a));
      } else if (ex.actions) {
        save_json(out_path, to_json(*ex.actions));
      } else if (ex.gen_acts) {
        save_json(out_path, to_json(*ex.gen_acts));
      } else if (ex.m) {
        auto j = to_json(*ex.m);
        for (const auto& [label, subset] : ex.subsets) {
          json names = json::array();
          for (auto i : subset) names.push_back(ex.m->name(i));
          j["subsets"][label] = names;
        }
        save_json(out_path, j);
      }
    }
    if (!emit_actions.empty()) {
      finite_actions fa;
      if (ex.actions) {
        fa = *ex.actions;
      } else if (ex.m && ex.subsets.count("U") && ex.subsets.count("A")) {
        fa = derive_internal_actions(*ex.m, ex.subsets.at("U"), ex.subsets.at("A")).actions;
      } else {
        throw error(error_code::unknown_example, "example carries no actions");
      }
      save_json(emit_actions, to_json(fa));
    }
    return 0;
  }));

  // global flags (--json, --fuel, --seed) are accepted after the verb too
  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return code;
}
