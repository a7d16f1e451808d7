// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "helpers.hpp"
#include "zs/actions.hpp"
#include "zs/examples.hpp"
#include "zs/product.hpp"

using namespace zs;
using namespace zs_test;

namespace {

// oracle: factor g = u * a by exhaustive search over the subsets
std::optional<std::pair<element_id, element_id>> factor_once(
    const magma& m, const std::vector<element_id>& us,
    const std::vector<element_id>& as, element_id g) {
  std::optional<std::pair<element_id, element_id>> found;
  for (auto u : us)
    for (auto a : as)
      if (m.defined(u, a) && m.product(u, a) == g) {
        if (found) return std::nullopt;  // ambiguous
        found = {u, a};
      }
  return found;
}

}  // namespace

TEST_CASE("derive_internal_actions: S4 over (S3, C4)") {
  auto ex = stock_example("s4-s3-c4");
  const auto& s4 = *ex.m;
  auto d = derive_internal_actions(s4, ex.subsets["U"], ex.subsets["A"]);
  CHECK(d.actions.U.size() == 6);
  CHECK(d.actions.A.size() == 4);
  CHECK(d.actions.h.size() == 24);  // full group: H = A x U

  // the worked pair: dot(c, (1 2)) = (0 2 1), exp(c, (1 2)) = c^2,
  // cross-checked here by factoring c o (1 2) = (0 1 3) via the oracle
  element_id c = *d.actions.A.index_of("1230");
  element_id t12 = *d.actions.U.index_of("0213");
  auto byhand = factor_once(s4, ex.subsets["U"], ex.subsets["A"],
                            s4.product(*s4.index_of("1230"), *s4.index_of("0213")));
  REQUIRE(byhand.has_value());
  CHECK(s4.name(byhand->first) == "2013");   // (0 2 1)
  CHECK(s4.name(byhand->second) == "2301");  // c^2
  CHECK(d.actions.U.name(d.actions.dot.at({c, t12})) == "2013");
  CHECK(d.actions.A.name(d.actions.exp.at({c, t12})) == "2301");

  // factorization table entries really factor
  for (element_id x = 0; x < s4.size(); ++x) {
    auto [u, a] = d.factorization.parts[x];
    CHECK(s4.product(u, a) == x);
  }
}

TEST_CASE("derive_internal_actions: ambiguity and missing factorizations") {
  auto c4 = cyclic_group(4);
  try {
    derive_internal_actions(c4, {0, 2}, {0, 2});
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code == error_code::factorization_ambiguous);
  }

  // not closed
  try {
    derive_internal_actions(c4, {0, 1}, {0});
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code == error_code::not_closed);
  }
}

TEST_CASE("derive_internal_actions: commuting factors of C6 act trivially") {
  auto ex = stock_example("c6-c2-c3");
  auto d = derive_internal_actions(*ex.m, ex.subsets["U"], ex.subsets["A"]);
  for (auto [a, u] : d.actions.h) {
    CHECK(d.actions.dot.at({a, u}) == u);
    CHECK(d.actions.exp.at({a, u}) == a);
  }
  auto fp = family_properties(d.actions.view());
  CHECK(fp.exp_family.trivial.clean());
  CHECK(fp.dot_family.trivial.clean());
  CHECK(fp.exp_family.multiplicative.clean());
  CHECK(fp.dot_family.multiplicative.clean());
}

TEST_CASE("lemma: derived actions satisfy the four identities in both directions") {
  for (const char* name : {"s4-s3-c4", "s4-s3-klein", "c6-c2-c3"}) {
    auto ex = stock_example(name);
    REQUIRE(check_property(*ex.m, m_prop::categorical).ok());
    auto d = derive_internal_actions(*ex.m, ex.subsets["U"], ex.subsets["A"]);
    auto view = d.actions.view();
    for (auto t : p2_axioms()) {
      auto r = check_axiom(view, t);
      INFO(name << " " << to_string(t));
      CHECK(r.clean());
    }
  }
}

TEST_CASE("lemma: commuting elements act trivially on each other") {
  auto ex = stock_example("s4-s3-c4");
  auto d = derive_internal_actions(*ex.m, ex.subsets["U"], ex.subsets["A"]);
  const auto& m = *ex.m;
  for (auto [a, u] : d.actions.h) {
    element_id am = d.a_embed[a], um = d.u_embed[u];
    if (m.product(um, am) != m.product(am, um)) continue;
    CHECK(d.actions.dot.at({a, u}) == u);
    CHECK(d.actions.exp.at({a, u}) == a);
  }
}

TEST_CASE("corollary: the identity acts and is acted on trivially") {
  auto ex = stock_example("s4-s3-c4");
  auto d = derive_internal_actions(*ex.m, ex.subsets["U"], ex.subsets["A"]);
  auto one_u = *global_identity(d.actions.U);
  auto one_a = *global_identity(d.actions.A);
  for (element_id a = 0; a < d.actions.A.size(); ++a) {
    CHECK(d.actions.exp.at({a, one_u}) == a);
    CHECK(d.actions.dot.at({a, one_u}) == one_u);
  }
  for (element_id u = 0; u < d.actions.U.size(); ++u) {
    CHECK(d.actions.dot.at({one_a, u}) == u);
    CHECK(d.actions.exp.at({one_a, u}) == one_a);
  }
}

TEST_CASE("lemma: every used u admits a left identity of A fixing it") {
  for (const char* name : {"s4-s3-c4", "c6-c2-c3"}) {
    auto ex = stock_example(name);
    auto d = derive_internal_actions(*ex.m, ex.subsets["U"], ex.subsets["A"]);
    const auto& m = *ex.m;
    auto ids = identities_of(d.actions.A);
    for (element_id u = 0; u < d.actions.U.size(); ++u) {
      bool used = false;
      for (element_id a = 0; a < d.actions.A.size() && !used; ++a)
        if (m.defined(d.u_embed[u], d.a_embed[a])) used = true;
      if (!used) continue;
      bool found = false;
      for (element_id a = 0; a < d.actions.A.size() && !found; ++a)
        if (ids[a].left_identity_for_magma && m.defined(d.u_embed[u], d.a_embed[a]) &&
            m.product(d.u_embed[u], d.a_embed[a]) == d.u_embed[u])
          found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("check_axiom: corrupting one exp entry breaks the mixed identity") {
  auto ex = stock_example("s4-s3-c4");
  auto d = derive_internal_actions(*ex.m, ex.subsets["U"], ex.subsets["A"]);
  element_id c = *d.actions.A.index_of("1230");
  element_id t12 = *d.actions.U.index_of("0213");
  auto corrupted = d.actions;
  REQUIRE(corrupted.exp.at({c, t12}) == *d.actions.A.index_of("2301"));
  corrupted.exp[{c, t12}] = c;  // c^(1 2) := c instead of c^2
  auto r = check_axiom(corrupted.view(), axiom::p2d_bwd);
  auto r2 = check_axiom(corrupted.view(), axiom::p2d_fwd);
  CHECK((r.failed() || r2.failed()));
  const auto& bad = r.failed() ? r : r2;
  REQUIRE(bad.recheck);
  CHECK(bad.recheck());  // the witness violates on re-evaluation
}

TEST_CASE("check_axiom: trivial actions pass the closure and identity axioms") {
  auto fa = trivial_actions(make_cyclic_group(2), make_cyclic_group(3));
  auto view = fa.view();
  for (auto t : {axiom::p1a, axiom::p1b, axiom::p1c, axiom::p7a, axiom::p7b,
                 axiom::p7c, axiom::p7d, axiom::p7e, axiom::p7f, axiom::p7g,
                 axiom::p7h}) {
    auto r = check_axiom(view, t);
    INFO(to_string(t));
    CHECK(r.clean());
  }
}

TEST_CASE("family_properties: letter swap gives a strongly coconfluent exp family") {
  auto pd = swap_product();
  auto fp = family_properties(pd.ap, 4);
  CHECK(fp.exp_family.strongly_coconfluent.result != verdict::fail);
  CHECK(fp.exp_family.strongly_coconfluent.note == "pass-up-to-fuel");
  CHECK(fp.exp_family.trivial.result != verdict::fail);  // exp constant in u
  CHECK(fp.dot_family.trivial.result == verdict::fail);  // the swap moves words
}

TEST_CASE("family_properties: the derived S4 exp family is injective") {
  auto ex = stock_example("s4-s3-c4");
  auto d = derive_internal_actions(*ex.m, ex.subsets["U"], ex.subsets["A"]);
  auto fp = family_properties(d.actions.view());
  CHECK(fp.exp_family.injective.clean());
  CHECK(fp.exp_family.multiplicative.clean());
  CHECK(fp.exp_family.confluent.clean());
}

TEST_CASE("lemma: full multiplicative exp families over CRM semigroups are confluent") {
  auto conj = stock_example("c3-c2-conj");
  REQUIRE(check_property(conj.actions->U, m_prop::common_right_multiples).ok());
  auto fp = family_properties(conj.actions->view());
  REQUIRE(fp.exp_family.multiplicative.clean());
  CHECK(fp.exp_family.confluent.clean());
}

TEST_CASE("lemma: strong coconfluence lifts least common left multiples") {
  auto ex = stock_example("s4-s3-c4");
  auto d = derive_internal_actions(*ex.m, ex.subsets["U"], ex.subsets["A"]);
  const auto& fa = d.actions;
  auto p8 = check_axiom(fa.view(), axiom::p8);
  if (!p8.clean()) return;  // hypotheses unmet; nothing to verify
  REQUIRE(check_property(fa.U, m_prop::right_canc).ok());
  for (auto [a, u] : fa.h)
    for (auto [b, v] : fa.h) {
      if (fa.exp.at({a, u}) != fa.exp.at({b, v})) continue;
      auto l = lclm(fa.U, u, v);
      if (!l) continue;
      bool found = false;
      for (element_id g = 0; g < fa.A.size() && !found; ++g)
        if (fa.exp.at({g, l->left_cofactor}) == a &&
            fa.exp.at({g, l->right_cofactor}) == b)
          found = true;
      CHECK(found);
    }
}

TEST_CASE("word domains: free monoid enumeration and identities") {
  auto d = word_domain::free_monoid({"x", "y"});
  auto els = d.elements(2);
  CHECK(els.size() == 7);  // empty + 2 + 4
  auto rids = right_identities(d, 2);
  REQUIRE(rids.size() == 1);
  CHECK(rids[0].empty());
  CHECK(global_identity_of(d, 2) == word{});
}
