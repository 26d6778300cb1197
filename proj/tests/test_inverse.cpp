/*
 * Copyright 2026 The frobdet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "doctest.h"
#include "frobdet/error.hpp"
#include "frobdet/inverse.hpp"
#include "frobdet/order.hpp"
#include "oracle.hpp"

using namespace frobdet;

namespace {

Poly x(VarId v) { return Poly::variable(v); }

/// Generalized inverses of s by direct search.
std::vector<Elem> inverses_of(const Semigroup& s, Elem a) {
  std::vector<Elem> out;
  for (Elem t = 0; t < s.size(); ++t) {
    if (s.mul(s.mul(a, t), a) == a && s.mul(s.mul(t, a), t) == t) out.push_back(t);
  }
  return out;
}

}  // namespace

TEST_CASE("inverse recognition") {
  const Semigroup g = zmod_add(5);
  const InverseCheck r = is_inverse(g);
  REQUIRE(r.inverse);
  for (Elem a = 0; a < 5; ++a) CHECK(g.mul(a, r.star[a]) == 0);

  const InverseCheck l = is_inverse(gcd_semilattice(4));
  REQUIRE(l.inverse);
  for (Elem a = 0; a < 4; ++a) CHECK(l.star[a] == a);

  const Semigroup t2 = full_transformation(2);
  const InverseCheck t = is_inverse(t2);
  CHECK_FALSE(t.inverse);
  REQUIRE(t.witness);
  CHECK(inverses_of(t2, *t.witness).size() == t.witness_count);
  CHECK(t.witness_count != 1);

  const Semigroup i3 = rook_monoid(3);
  const InverseCheck ri = is_inverse(i3);
  REQUIRE(ri.inverse);
  for (Elem a = 0; a < i3.size(); ++a) CHECK(inverses_of(i3, a) == std::vector<Elem>{ri.star[a]});
}

TEST_CASE("groupoids") {
  const Semigroup g = zmod_add(3);
  const Groupoid gg = groupoid_of(g, is_inverse(g).star);
  CHECK(gg.objects.size() == 1);
  CHECK(gg.arrows.size() == 3);

  const Semigroup l = gcd_semilattice(4);
  const Groupoid lg = groupoid_of(l, is_inverse(l).star);
  CHECK(lg.objects.size() == 4);
  for (std::size_t a = 0; a < lg.arrows.size(); ++a) CHECK(lg.dom[a] == lg.ran[a]);

  const Semigroup i2 = rook_monoid(2);
  const Groupoid rg = groupoid_of(i2, is_inverse(i2).star);
  CHECK(rg.objects.size() == 4);
  CHECK(rg.arrows.size() == 7);
  const GroupoidStructure st = groupoid_structure(rg);
  CHECK(st.dimension_identity());
  std::vector<std::size_t> sizes;
  for (const auto& c : st.classes) sizes.push_back(c.n());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 1, 2});

  for (const Semigroup& s : {rook_monoid(3), adjoin_zero(symmetric_group(3)),
                             direct_product(zmod_add(2), chain_semilattice(3))}) {
    const Groupoid gr = groupoid_of(s, is_inverse(s).star);
    const GroupoidStructure gs = groupoid_structure(gr);
    std::size_t total = 0;
    for (const auto& c : gs.classes) total += c.n() * c.n() * c.automorphisms.size();
    CHECK(total == s.size());
    CHECK(gs.dimension_identity());
  }
}

TEST_CASE("groupoid determinants") {
  const Semigroup z2 = zmod_add(2);
  const Groupoid g = groupoid_of(z2, is_inverse(z2).star);
  CHECK(groupoid_determinant(g) == x(0) * x(0) - x(1) * x(1));

  const Semigroup l = chain_semilattice(2);
  const Groupoid lg = groupoid_of(l, is_inverse(l).star);
  CHECK(groupoid_determinant(lg) == x(0) * x(1));

  const Semigroup i2 = rook_monoid(2);
  const Groupoid rg = groupoid_of(i2, is_inverse(i2).star);
  CHECK(groupoid_determinant(rg) == oracle::leibniz(groupoid_matrix(rg)));
}

TEST_CASE("inverse semigroup determinants") {
  const Semigroup i2 = rook_monoid(2);
  const InverseDeterminant r = inverse_determinant(i2);
  CHECK(r.theta == oracle::theta(i2));
  CHECK(r.checked_direct);

  const Semigroup g = zmod_add(3);
  const InverseDeterminant rg = inverse_determinant(g);
  CHECK(rg.theta == oracle::theta(g));
  for (Elem a = 0; a < 3; ++a) CHECK(rg.substitution.at(a) == LinForm::variable(a));

  const Semigroup l = gcd_semilattice(4);
  CHECK(inverse_determinant(l).theta == factor_semilattice(l).expand());
  CHECK_THROWS_AS(inverse_determinant(full_transformation(2)), Error);
}

TEST_CASE("clifford factorization") {
  const Semigroup g = zmod_add(4);
  CHECK(factor_clifford(g).expand() == oracle::theta(g));
  const Semigroup l = gcd_semilattice(4);
  CHECK(factor_clifford(l).expand() == oracle::theta(l));
  const Semigroup z2z = adjoin_zero(zmod_add(2));
  const Factorization f = factor_clifford(z2z);
  CHECK(f.expand() == oracle::theta(z2z));
  CHECK(f.factors.size() == 3);
  CHECK(f.verification.mode == "exact");
  CHECK(f.provenance == "clifford");

  const Semigroup mixed = direct_product(zmod_add(2), chain_semilattice(3));
  CHECK(factor_clifford(mixed).expand() == oracle::theta(mixed));
  CHECK_THROWS_AS(factor_clifford(rook_monoid(2)), Error);
  CHECK_THROWS_AS(factor_clifford(full_transformation(2)), Error);
  CHECK_THROWS_AS(factor_clifford(adjoin_zero(symmetric_group(3))), Error);
}
