// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "helpers.hpp"
#include "zs/examples.hpp"
#include "zs/io.hpp"

using namespace zs;
using namespace zs_test;

TEST_CASE("magma files round-trip and serialize byte-stably") {
  for (const char* name : {"s4", "c6", "left-zero-2", "trivial"}) {
    auto ex = stock_example(name);
    auto j = to_json(*ex.m);
    auto back = magma_from_json(j);
    CHECK(back == *ex.m);
    CHECK(to_json(back).dump(2) == j.dump(2));
  }
  // partial tables keep their holes
  auto partial = build_magma(2, {"e", "a"}, {{{0, 0}, 0}});
  auto back = magma_from_json(to_json(partial));
  CHECK(back == partial);
  CHECK(!back.defined(0, 1));
}

TEST_CASE("actions files round-trip, including explicit H") {
  auto ex = stock_example("s4-s3-c4");
  auto d = derive_internal_actions(*ex.m, ex.subsets["U"], ex.subsets["A"]);
  auto j = to_json(d.actions);
  auto back = actions_from_json(j);
  CHECK(back == d.actions);
  CHECK(to_json(back).dump(2) == j.dump(2));

  auto fa = trivial_actions(make_cyclic_group(2), make_cyclic_group(3));
  auto j2 = to_json(fa);
  CHECK(j2["H"] == "full");
  CHECK(actions_from_json(j2) == fa);

  // dot/exp must cover H
  auto broken = j;
  broken["dot"] = json::array();
  CHECK_THROWS_AS(actions_from_json(broken), error);
}

TEST_CASE("actions files may name their domains by presentation") {
  // U presented as <r, s | rr=s, ss=r, rs=sr=1> (C3), A as <f | ff=1> (C2),
  // with conjugation tables indexed by enumeration order (1, r, s / 1, f)
  json j;
  j["U"]["alphabet"] = std::vector<std::string>{"r", "s"};
  j["U"]["kind"] = "monoid";
  j["U"]["rules"] = json::array(
      {json::array({"rr", "s"}), json::array({"ss", "r"}), json::array({"rs", ""}),
       json::array({"sr", ""})});
  j["A"]["alphabet"] = std::vector<std::string>{"f"};
  j["A"]["kind"] = "monoid";
  j["A"]["rules"] = json::array({json::array({"ff", ""})});
  j["H"] = "full";
  json dot = json::array(), exp = json::array();
  for (element_id a = 0; a < 2; ++a)
    for (element_id u = 0; u < 3; ++u) {
      dot.push_back({a, u, a == 0 ? u : (3 - u) % 3});
      exp.push_back({a, u, a});
    }
  j["dot"] = dot;
  j["exp"] = exp;
  auto fa = actions_from_json(j);
  CHECK(fa.U.size() == 3);
  CHECK(fa.A.size() == 2);
  CHECK(fa.U.name(0) == "1");
  CHECK(fa.U.name(1) == "r");
  CHECK(find_isomorphism(monoid_product(fa).table, symmetric_group(3)).has_value());

  // an infinite presented domain cannot back an actions file
  json free_side;
  free_side["U"]["alphabet"] = std::vector<std::string>{"x", "y"};
  free_side["U"]["kind"] = "monoid";
  free_side["U"]["rules"] = json::array();
  free_side["A"] = j["A"];
  free_side["dot"] = json::array();
  free_side["exp"] = json::array();
  CHECK_THROWS_AS(actions_from_json(free_side), error);
}

TEST_CASE("presentation files round-trip with bracketed names") {
  rule_set rs;
  rs.alphabet = {"x", "longname"};
  rs.kind = pres_kind::monoid;
  rs.rules = {{{1, 0}, {0, 1, 1}}, {{1, 1}, {}}};
  auto p = presentation::plain(rs);
  p.is_x = {1, 0};
  auto j = to_json(p);
  CHECK(j["rules"][0][0] == "[longname]x");
  auto back = presentation_from_json(j);
  CHECK(back.rs == p.rs);
  CHECK(back.is_x == p.is_x);
  CHECK(to_json(back).dump(2) == j.dump(2));
}

TEST_CASE("gen-actions files round-trip") {
  auto ex = stock_example("c3c2-gen");
  auto j = to_json(*ex.gen_acts);
  auto back = gen_actions_from_json(j);
  CHECK(back.x_alphabet == ex.gen_acts->x_alphabet);
  CHECK(back.dot == ex.gen_acts->dot);
  CHECK(back.exp == ex.gen_acts->exp);
  CHECK(to_json(back).dump(2) == j.dump(2));
}

TEST_CASE("category and bundle files round-trip") {
  auto ex = stock_example("pairgpd2-c2");
  auto j = to_json(*ex.bundle, ex.category_a);
  auto back = bundle_from_json(j);
  back.bundle.validate();
  CHECK(back.bundle.g.morphisms.size() == ex.bundle->g.morphisms.size());
  CHECK(back.bundle.phi == ex.bundle->phi);
  CHECK(back.a_sub == ex.category_a);
  CHECK(to_json(back.bundle, back.a_sub).dump(2) == j.dump(2));

  // identities are inferred on load
  auto cat = category_from_json(to_json(ex.bundle->g));
  CHECK(cat.identity == ex.bundle->g.identity);
}

TEST_CASE("product files carry E, the pair table and provenance") {
  auto conj = *stock_example("c3-c2-conj").actions;
  auto p = monoid_product(conj);
  auto j = to_json(p, "monoid");
  CHECK(j["provenance"] == "monoid");
  CHECK(j["E"] == "full");
  CHECK(j["pairs"].size() == 6);
  auto table = magma_from_json(j["product"]);
  CHECK(find_isomorphism(table, symmetric_group(3)).has_value());
}
