// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "zs/abstract_rel.hpp"

#include <random>

using namespace zs;

TEST_CASE("rel_closure: worked examples") {
  abstract_rel r(3, {{0, 1}, {1, 2}});
  auto rt = rel_closure(r, closure_kind::reflexive_transitive);
  for (element_id i = 0; i < 3; ++i) CHECK(rt.has(i, i));
  CHECK(rt.has(0, 2));
  CHECK(!rt.has(2, 0));

  abstract_rel empty(3, {});
  auto eq = rel_closure(empty, closure_kind::equivalence);
  for (element_id i = 0; i < 3; ++i)
    for (element_id j = 0; j < 3; ++j) CHECK(eq.has(i, j) == (i == j));

  abstract_rel single(2, {{0, 1}});
  auto sym = rel_closure(single, closure_kind::symmetric);
  CHECK(sym.has(0, 1));
  CHECK(sym.has(1, 0));
  CHECK(!sym.has(0, 0));
}

TEST_CASE("check_rel_property: worked examples") {
  // 0 -> 1, 0 -> 2 with 1, 2 irreducible: not locally confluent
  abstract_rel fork(3, {{0, 1}, {0, 2}});
  auto lc = check_rel_property(fork, rel_prop::locally_confluent);
  CHECK(lc.result == verdict::fail);
  CHECK(lc.witness == std::vector<element_id>{1, 2});

  abstract_rel cycle(2, {{0, 1}, {1, 0}});
  CHECK(check_rel_property(cycle, rel_prop::terminating).result == verdict::fail);

  abstract_rel diamond(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(check_rel_property(diamond, rel_prop::confluent).ok());
  CHECK(check_rel_property(diamond, rel_prop::terminating).ok());
}

TEST_CASE("normal_forms_abstract: worked examples") {
  abstract_rel diamond(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  auto nf = normal_forms_abstract(diamond);
  CHECK(nf == std::vector<element_id>{3, 3, 3, 3});

  abstract_rel empty(3, {});
  CHECK(normal_forms_abstract(empty) == std::vector<element_id>{0, 1, 2});

  abstract_rel fork(3, {{0, 1}, {0, 2}});
  try {
    normal_forms_abstract(fork);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code == error_code::not_complete);
  }

  abstract_rel cycle(2, {{0, 1}, {1, 0}});
  try {
    normal_forms_abstract(cycle);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code == error_code::not_terminating);
  }
}

namespace {

abstract_rel from_mask(std::size_t n, std::uint32_t mask) {
  std::vector<std::pair<element_id, element_id>> edges;
  for (element_id a = 0; a < n; ++a)
    for (element_id b = 0; b < n; ++b)
      if (mask & (1u << (a * n + b))) edges.push_back({a, b});
  return abstract_rel(n, edges);
}

}  // namespace

TEST_CASE("implication chain over every relation on up to 4 elements") {
  // strongly confluent => confluent <=> Church-Rosser => locally confluent
  for (std::size_t n = 0; n <= 4; ++n) {
    std::uint64_t limit = 1ull << (n * n);
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      auto r = from_mask(n, static_cast<std::uint32_t>(mask));
      bool sc = check_rel_property(r, rel_prop::strongly_confluent).ok();
      bool cf = check_rel_property(r, rel_prop::confluent).ok();
      bool cr = check_rel_property(r, rel_prop::church_rosser).ok();
      bool lc = check_rel_property(r, rel_prop::locally_confluent).ok();
      REQUIRE(((!sc || cf) && cf == cr && (!cf || lc)));
    }
  }
}

TEST_CASE("implication chain on 1000 random relations on 6 elements") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> edge_count(0, 14);
  std::uniform_int_distribution<element_id> v(0, 5);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<std::pair<element_id, element_id>> edges;
    int k = edge_count(rng);
    for (int i = 0; i < k; ++i) edges.push_back({v(rng), v(rng)});
    abstract_rel r(6, edges);
    bool sc = check_rel_property(r, rel_prop::strongly_confluent).ok();
    bool cf = check_rel_property(r, rel_prop::confluent).ok();
    bool cr = check_rel_property(r, rel_prop::church_rosser).ok();
    bool lc = check_rel_property(r, rel_prop::locally_confluent).ok();
    REQUIRE(((!sc || cf) && cf == cr && (!cf || lc)));
  }
}

TEST_CASE("a locally confluent but not confluent non-terminating relation") {
  // b <- a <-> c -> d, stored as 1 -> 0, 1 <-> 2, 2 -> 3
  abstract_rel w(4, {{1, 0}, {1, 2}, {2, 1}, {2, 3}});
  CHECK(check_rel_property(w, rel_prop::locally_confluent).ok());
  CHECK(!check_rel_property(w, rel_prop::confluent).ok());
  CHECK(!check_rel_property(w, rel_prop::terminating).ok());
}

TEST_CASE("Newman: the four properties coincide on terminating relations") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> edge_count(0, 10);
  std::uniform_int_distribution<element_id> v(0, 4);
  int terminating_seen = 0;
  for (int trial = 0; trial < 800; ++trial) {
    std::vector<std::pair<element_id, element_id>> edges;
    int k = edge_count(rng);
    for (int i = 0; i < k; ++i) edges.push_back({v(rng), v(rng)});
    abstract_rel r(5, edges);
    if (!check_rel_property(r, rel_prop::terminating).ok()) continue;
    ++terminating_seen;
    bool cr = check_rel_property(r, rel_prop::church_rosser).ok();
    bool cf = check_rel_property(r, rel_prop::confluent).ok();
    bool lc = check_rel_property(r, rel_prop::locally_confluent).ok();
    bool unique_irr = true;
    for (const auto& cls : equivalence_classes(r)) {
      int irr = 0;
      for (auto a : cls)
        if (is_irreducible(r, a)) ++irr;
      if (irr != 1) unique_irr = false;
    }
    REQUIRE(cr == cf);
    REQUIRE(cf == lc);
    REQUIRE(lc == unique_irr);
    if (unique_irr) {
      auto nf = normal_forms_abstract(r);
      auto star = rel_closure(r, closure_kind::reflexive_transitive);
      for (element_id a = 0; a < 5; ++a) {
        CHECK(star.has(a, nf[a]));
        CHECK(is_irreducible(r, nf[a]));
      }
    }
  }
  CHECK(terminating_seen > 100);
}
