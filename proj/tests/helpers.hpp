// SPDX-License-Identifier: Apache-2.0
//
// Shared builders for the test suites.  Everything here is constructed from
// first principles (permutation composition, modular arithmetic) so the tests
// have oracles that do not pass through the library's own constructions.

#ifndef ZS_TESTS_HELPERS_HPP_
#define ZS_TESTS_HELPERS_HPP_

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "zs/magma.hpp"

namespace zs_test {

using perm = std::vector<std::size_t>;  // one-line notation

// function-order composition: (a o b)(i) = a(b(i))
inline perm compose(const perm& a, const perm& b) {
  perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

inline perm inverse(const perm& a) {
  perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] = i;
  return out;
}

inline std::string perm_name(const perm& p) {
  std::string s;
  for (auto v : p) s += std::to_string(v);
  return s;
}

inline std::vector<perm> all_perms(std::size_t n) {
  perm p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::vector<perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// The magma of a list of permutations under function-order composition.
// Requires closure; element order follows the given list.
inline zs::magma magma_from_perms(const std::vector<perm>& ps) {
  std::map<perm, zs::element_id> index;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    index[ps[i]] = i;
    names.push_back(perm_name(ps[i]));
  }
  std::vector<std::vector<zs::element_id>> rows(ps.size(),
                                                std::vector<zs::element_id>(ps.size()));
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = 0; j < ps.size(); ++j) rows[i][j] = index.at(compose(ps[i], ps[j]));
  return zs::build_full_magma(ps.size(), rows, names);
}

inline zs::magma symmetric_group(std::size_t n) { return magma_from_perms(all_perms(n)); }

inline zs::magma cyclic_group(std::size_t n) {
  std::vector<std::vector<zs::element_id>> rows(n, std::vector<zs::element_id>(n));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(i == 0 ? "e" : "g" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = (i + j) % n;
  }
  return zs::build_full_magma(n, rows, names);
}

inline zs::magma left_zero_semigroup() {
  // {x, y} with ab = a
  return zs::build_full_magma(2, {{0, 0}, {1, 1}}, {"x", "y"});
}

inline zs::magma right_zero_with_identity() {
  // {1, a, b} with xy = y for x,y != 1
  return zs::build_full_magma(3, {{0, 1, 2}, {1, 1, 2}, {2, 1, 2}}, {"1", "a", "b"});
}

inline zs::magma trivial_monoid() { return zs::build_full_magma(1, {{0}}, {"e"}); }

// Seeded random partial magma: each pair lands in the domain with the given
// density, values uniform.
inline zs::magma random_magma(std::mt19937& rng, std::size_t max_size,
                              double density = 0.6) {
  std::uniform_int_distribution<std::size_t> size_dist(0, max_size);
  std::size_t n = size_dist(rng);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<std::pair<zs::element_id, zs::element_id>, zs::element_id>> entries;
  if (n > 0) {
    std::uniform_int_distribution<zs::element_id> val(0, n - 1);
    for (zs::element_id i = 0; i < n; ++i)
      for (zs::element_id j = 0; j < n; ++j)
        if (coin(rng) < density) entries.push_back({{i, j}, val(rng)});
  }
  return zs::build_magma(n, {}, entries);
}

// Seeded random full table (candidate semigroup when it happens to associate).
inline zs::magma random_full_magma(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<zs::element_id> val(0, n - 1);
  std::vector<std::vector<zs::element_id>> rows(n, std::vector<zs::element_id>(n));
  for (auto& row : rows)
    for (auto& v : row) v = val(rng);
  return zs::build_full_magma(n, rows);
}

}  // namespace zs_test

#endif  // ZS_TESTS_HELPERS_HPP_
