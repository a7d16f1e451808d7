// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "helpers.hpp"
#include "zs/abstract_rel.hpp"
#include "zs/rewriting.hpp"

#include <map>
#include <random>

using namespace zs;
using namespace zs_test;

namespace {

rule_set make_rs(std::vector<std::string> alpha,
                 std::vector<std::pair<std::string, std::string>> rules,
                 pres_kind kind = pres_kind::monoid) {
  rule_set rs;
  rs.alphabet = std::move(alpha);
  rs.kind = kind;
  for (auto& [l, r] : rules) rs.rules.push_back({parse_word(rs, l), parse_word(rs, r)});
  rs.validate();
  return rs;
}

}  // namespace

TEST_CASE("word_rewrite_step: worked examples") {
  auto ba_ab = make_rs({"a", "b"}, {{"ba", "ab"}});
  auto steps = word_rewrite_step(ba_ab, parse_word(ba_ab, "bab"));
  REQUIRE(steps.size() == 1);
  CHECK(format_word(ba_ab, steps[0]) == "abb");

  auto yx = make_rs({"x", "y"}, {{"yx", "xyy"}});
  auto s2 = word_rewrite_step(yx, parse_word(yx, "yxx"));
  REQUIRE(s2.size() == 1);
  CHECK(format_word(yx, s2[0]) == "xyyx");

  CHECK(word_rewrite_step(ba_ab, {}).empty());
}

TEST_CASE("normalize_word: worked examples, with the independent oracle") {
  auto yx = make_rs({"x", "y"}, {{"yx", "xyy"}});
  auto nf = normalize_word(yx, parse_word(yx, "yxx"));
  CHECK(format_word(yx, nf) == "xxyyyy");

  // oracle: exhaustive rewriting reaches a unique irreducible
  std::set<word> frontier = {parse_word(yx, "yxx")};
  std::set<word> irreducibles;
  while (!frontier.empty()) {
    std::set<word> next;
    for (const auto& w : frontier) {
      auto succ = word_rewrite_step(yx, w);
      if (succ.empty())
        irreducibles.insert(w);
      else
        next.insert(succ.begin(), succ.end());
    }
    frontier = std::move(next);
  }
  REQUIRE(irreducibles.size() == 1);
  CHECK(*irreducibles.begin() == nf);

  auto ba_ab = make_rs({"a", "b"}, {{"ba", "ab"}});
  CHECK(format_word(ba_ab, normalize_word(ba_ab, parse_word(ba_ab, "bab"))) == "abb");
  CHECK(normalize_word(ba_ab, {}).empty());

  auto grow = make_rs({"a"}, {{"a", "aa"}});
  CHECK_THROWS_AS(normalize_word(grow, parse_word(grow, "a"), 50), error);
}

TEST_CASE("string_local_confluence: worked examples") {
  auto ba_ab = make_rs({"a", "b"}, {{"ba", "ab"}});
  auto r = string_local_confluence(ba_ab);
  CHECK(r.ok());

  auto bad = make_rs({"a", "b"}, {{"ab", "a"}, {"ba", "b"}});
  auto f = string_local_confluence(bad);
  CHECK(f.result == verdict::fail);
  // the witness words are distinct irreducibles obtained from one
  // superposition
  REQUIRE(f.witness_names.size() == 3);
  CHECK(f.witness_names[1] != f.witness_names[2]);

  rule_set empty;
  empty.alphabet = {"a"};
  CHECK(string_local_confluence(empty).ok());
}

TEST_CASE("termination_certificate: worked examples") {
  auto yx = make_rs({"x", "y"}, {{"yx", "xyy"}});
  termination_cert cw{cert_kind::cw_measure, {}, {1, 0}};  // x is X, y is Y
  CHECK(termination_certificate(yx, cw).ok());

  auto ba_ab = make_rs({"a", "b"}, {{"ba", "ab"}});
  termination_cert ll{cert_kind::length_lex, {0, 1}, {}};  // a < b
  CHECK(termination_certificate(ba_ab, ll).ok());

  auto grow = make_rs({"a"}, {{"a", "aa"}});
  termination_cert lr{cert_kind::length_reducing, {}, {}};
  CHECK(termination_certificate(grow, lr).result == verdict::fail);

  // cw certificate on a non-conforming rule set
  termination_cert cw2{cert_kind::cw_measure, {}, {1, 1}};
  CHECK_THROWS_AS(termination_certificate(yx, cw2), error);
}

TEST_CASE("cw_tuple bookkeeping") {
  auto yx = make_rs({"x", "y"}, {{"yx", "xyy"}});
  std::vector<char> is_x = {1, 0};
  CHECK(cw_tuple(parse_word(yx, "yxx"), is_x) == std::vector<std::size_t>{1, 1});
  CHECK(cw_tuple(parse_word(yx, "xyyx"), is_x) == std::vector<std::size_t>{0, 2});
  CHECK(cw_tuple({}, is_x).empty());
}

TEST_CASE("table_presentation: worked examples") {
  auto c2 = cyclic_group(2);
  auto mono = table_presentation(c2, pres_kind::monoid);
  REQUIRE(mono.alphabet.size() == 1);
  REQUIRE(mono.rules.size() == 1);
  CHECK(mono.rules[0].first.size() == 2);
  CHECK(mono.rules[0].second.empty());  // aa -> empty word

  auto lz = left_zero_semigroup();
  auto semi = table_presentation(lz, pres_kind::semigroup);
  CHECK(semi.rules.size() == 4);
  std::map<std::string, std::string> got;
  for (const auto& [l, r] : semi.rules) got[format_word(semi, l)] = format_word(semi, r);
  CHECK(got["xx"] == "x");
  CHECK(got["xy"] == "x");
  CHECK(got["yx"] == "y");
  CHECK(got["yy"] == "y");

  auto grp = table_presentation(c2, pres_kind::group);
  CHECK(grp.alphabet.size() == 2);  // a and a^-1
  CHECK(grp.rules.size() == 3);     // aa->1, a a^-1 -> 1, a^-1 a -> 1

  CHECK_THROWS_AS(table_presentation(lz, pres_kind::monoid), error);
}

TEST_CASE("table presentations of small semigroups are complete") {
  std::mt19937 rng(5150);
  std::vector<magma> pool = {left_zero_semigroup(), cyclic_group(2), cyclic_group(3),
                             cyclic_group(5), cyclic_group(8), symmetric_group(3)};
  int found = 0;
  while (found < 20) {
    auto m = random_full_magma(rng, 3);
    if (is_semigroup(m)) {
      pool.push_back(m);
      ++found;
    }
  }
  for (const auto& m : pool) {
    if (m.size() == 0 || m.size() > 8) continue;
    auto rs = table_presentation(m, pres_kind::semigroup);
    CHECK(termination_certificate(rs, {cert_kind::length_reducing, {}, {}}).ok());
    CHECK(string_local_confluence(rs).ok());
    // irreducible words of length <= 3 are exactly the length-1 words
    std::set<word> irr;
    std::vector<word> layer = {word{}};
    for (int len = 1; len <= 3; ++len) {
      std::vector<word> next;
      for (const auto& w : layer)
        for (letter a = 0; a < rs.alphabet.size(); ++a) {
          word v = w;
          v.push_back(a);
          next.push_back(v);
          if (is_irreducible_word(rs, v)) irr.insert(v);
        }
      layer = next;
    }
    CHECK(irr.size() == m.size());
    for (const auto& w : irr) CHECK(w.size() == 1);
  }
}

TEST_CASE("normalize_word matches normal_forms_abstract on bounded words") {
  // restrict the derived relation of a complete system to words of length <= 4
  auto lz = left_zero_semigroup();
  auto rs = table_presentation(lz, pres_kind::semigroup);

  std::vector<word> words;
  std::vector<word> layer = {word{}};
  for (int len = 1; len <= 4; ++len) {
    std::vector<word> next;
    for (const auto& w : layer)
      for (letter a = 0; a < rs.alphabet.size(); ++a) {
        word v = w;
        v.push_back(a);
        next.push_back(v);
        words.push_back(v);
      }
    layer = next;
  }
  std::map<word, element_id> index;
  for (element_id i = 0; i < words.size(); ++i) index[words[i]] = i;
  std::vector<std::pair<element_id, element_id>> edges;
  for (const auto& w : words)
    for (const auto& v : word_rewrite_step(rs, w))
      if (index.count(v)) edges.push_back({index[w], index[v]});
  abstract_rel r(words.size(), edges);
  REQUIRE(check_rel_property(r, rel_prop::terminating).ok());
  auto nf = normal_forms_abstract(r);  // throws if the restriction is incomplete
  for (const auto& w : words) CHECK(words[nf[index[w]]] == normalize_word(rs, w));
}
