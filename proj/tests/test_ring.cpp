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

#include <set>

#include "doctest.h"
#include "frobdet/commutative.hpp"
#include "frobdet/error.hpp"
#include "frobdet/ring.hpp"

using namespace frobdet;

TEST_CASE("finite fields") {
  const FiniteField f2(2);
  CHECK(f2.modulus() == std::vector<unsigned>{0, 1});
  const FiniteField f4(4);
  CHECK(f4.modulus() == std::vector<unsigned>{1, 1, 1});
  const FiniteField f8(8);
  CHECK(f8.modulus() == std::vector<unsigned>{1, 1, 0, 1});
  const FiniteField f9(9);
  CHECK(f9.modulus() == std::vector<unsigned>{1, 0, 1});
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u}) {
    const FiniteField f(q);
    unsigned nonzero_units = 0;
    for (unsigned a = 1; a < q; ++a)
      for (unsigned b = 1; b < q; ++b) nonzero_units += f.mul(a, b) == 1;
    CHECK(nonzero_units == q - 1);
    for (unsigned a = 0; a < q; ++a)
      for (unsigned b = 0; b < q; ++b)
        CHECK(f.trace(f.add(a, b)) == (f.trace(a) + f.trace(b)) % f.p());
    // trace is onto F_p
    std::set<unsigned> values;
    for (unsigned a = 0; a < q; ++a) values.insert(f.trace(a));
    CHECK(values.size() == f.p());
  }
  CHECK_THROWS_AS(FiniteField(6), Error);
  CHECK_THROWS_AS(FiniteField(512), Error);
}

TEST_CASE("ring monoids") {
  const RingMonoid z2 = zmod_monoid(2);
  CHECK(z2.monoid.size() == 2);
  const RingMonoid z4 = zmod_monoid(4);
  CHECK(group_of_units(z4.monoid) == std::vector<Elem>{1, 3});
  const RingMonoid z6 = zmod_monoid(6);
  CHECK(z6.monoid.idempotents() == std::vector<Elem>{0, 1, 3, 4});
  CHECK_THROWS_AS(zmod_monoid(1), Error);
  CHECK_THROWS_AS(zmod_monoid(513), Error);

  CHECK(matrix_monoid(1, 2).monoid.size() == 2);
  const RingMonoid m22 = matrix_monoid(2, 2);
  CHECK(m22.monoid.size() == 16);
  CHECK(group_of_units(m22.monoid).size() == 6);
  const RingMonoid f4 = matrix_monoid(1, 4);
  CHECK(f4.monoid.size() == 4);
  CHECK(group_of_units(f4.monoid).size() == 3);
  CHECK(group_of_units(f4.monoid).size() == 3);
  CHECK(matrix_monoid(3, 2).monoid.size() == 512);
  CHECK_THROWS_AS(matrix_monoid(2, 16), Error);
  CHECK_THROWS_AS(matrix_monoid(4, 2), Error);
}

TEST_CASE("frobenius form") {
  const RingMonoid z2 = zmod_monoid(2);
  const auto d = frobenius_form_check(z2.monoid, z2.lambda);
  REQUIRE(d);
  CHECK(*d == CycNum(-2L));
  for (unsigned n = 2; n <= 12; ++n) {
    const RingMonoid r = zmod_monoid(n);
    CHECK(frobenius_form_check(r.monoid, r.lambda));
  }
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const RingMonoid r = matrix_monoid(1, q);
    CHECK(frobenius_form_check(r.monoid, r.lambda));
  }
  const RingMonoid m = matrix_monoid(2, 2);
  CHECK(frobenius_form_check(m.monoid, m.lambda));
  // a character that ignores the ring structure can vanish
  GeneratingCharacter trivial{1, std::vector<unsigned>(4, 0)};
  CHECK_FALSE(frobenius_form_check(zmod_mul(4), trivial));
}

TEST_CASE("kovacs identity") {
  CHECK(q_binomial(2, 1, 2) == 3);
  CHECK(q_binomial(2, 1, 3) == 4);
  CHECK(gl_order(2, 2) == 6);
  CHECK(gl_order(2, 3) == 48);
  for (auto [n, q] : std::vector<std::pair<unsigned, unsigned>>{
           {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}, {2, 4}, {4, 2}, {3, 5}, {4, 3}}) {
    const KovacsReport r = kovacs_check(n, q);
    CHECK(r.holds);
    for (const auto& t : r.terms) {
      if (t.subspaces) CHECK(*t.subspaces == t.qbinomial);
    }
  }
  const KovacsReport r22 = kovacs_check(2, 2);
  CHECK(r22.total == 16);
  CHECK(r22.terms[1].qbinomial * r22.terms[1].qbinomial * r22.terms[1].gl_order == 9);
  CHECK_THROWS_AS(kovacs_check(5, 2), Error);
  CHECK_THROWS_AS(kovacs_check(2, 6), Error);
}

TEST_CASE("chain rings") {
  for (unsigned n : {4u, 8u, 9u, 25u}) {
    const RingMonoid r = zmod_monoid(n);
    const Factorization f = factor_commutative(r.monoid);
    CHECK(f.status == FactorStatus::Factored);
    const SplusDecomposition d = splus_decompose(r.monoid);
    for (const auto& c : d.components) {
      if (c.monoid.size() > 2) CHECK(chain_fastpath(c.monoid).status == FactorStatus::Factored);
    }
  }
}
