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
#include "frobdet/order.hpp"
#include "oracle.hpp"

using namespace frobdet;

namespace {

int number_theoretic_mu(unsigned n) {
  int mu = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

}  // namespace

TEST_CASE("natural orders") {
  const Semigroup g6 = gcd_semilattice(6);
  const FinitePoset p = natural_order(g6, OrderMode::Semilattice);
  for (Elem a = 0; a < 6; ++a)
    for (Elem b = 0; b < 6; ++b) CHECK(p.leq(a, b) == ((b + 1) % (a + 1) == 0));

  const Semigroup i2 = rook_monoid(2);
  const FinitePoset r = natural_order(i2, OrderMode::Inverse);
  const Elem empty = *i2.zero();
  for (Elem s = 0; s < i2.size(); ++s) CHECK(r.leq(empty, s));
  const Elem id = *i2.identity();
  for (Elem s = 0; s < i2.size(); ++s) {
    if (s != id) CHECK_FALSE(r.leq(id, s));
  }

  const Semigroup g = zmod_add(4);
  const FinitePoset q = natural_order(g, OrderMode::Inverse);
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) CHECK(q.leq(a, b) == (a == b));

  CHECK_THROWS_AS(natural_order(left_zero(2), OrderMode::Semilattice), Error);
}

TEST_CASE("mobius functions") {
  FinitePoset anti(3, std::vector<char>{1, 0, 0, 0, 1, 0, 0, 0, 1});
  CHECK(mobius(anti) == identity_matrix<BigInt>(3, 1, 0));
  FinitePoset two(2, std::vector<char>{1, 1, 0, 1});
  CHECK(mobius(two) == IntMatrix{{1, -1}, {0, 1}});
  CHECK_THROWS_AS(FinitePoset(2, std::vector<char>{1, 1, 1, 1}), Error);

  const FinitePoset div = natural_order(gcd_semilattice(12), OrderMode::Semilattice);
  const IntMatrix mu = mobius(div);
  for (unsigned a = 1; a <= 12; ++a)
    for (unsigned b = 1; b <= 12; ++b) {
      const long expect = b % a == 0 ? number_theoretic_mu(b / a) : 0;
      CHECK(mu(a - 1, b - 1) == expect);
    }
  CHECK(mu(0, 5) == 1);
  CHECK(zeta_matrix(div) * mu == identity_matrix<BigInt>(12, 1, 0));
}

TEST_CASE("s-plus map") {
  const Semigroup z8 = zmod_mul(8);
  const auto plus = splus_map(z8);
  CHECK(plus[0] == 0);
  for (Elem s = 1; s < 8; ++s) CHECK(plus[s] == 1);
  CHECK_THROWS_AS(splus_map(null_semigroup(3)), Error);
  CHECK_THROWS_AS(splus_map(left_zero(2)), Error);
}

TEST_CASE("semilattice factorization") {
  const Factorization one = factor_semilattice(chain_semilattice(1));
  CHECK(one.expand() == Poly::variable(0));

  const Semigroup c2 = chain_semilattice(2);
  const Elem bottom = *c2.zero(), top = *c2.identity();
  const Poly x0 = Poly::variable(bottom), x1 = Poly::variable(top);
  CHECK(factor_semilattice(c2).expand() == x0 * (x1 - x0));

  const Poly y1 = Poly::variable(0), y2 = Poly::variable(1), y3 = Poly::variable(2);
  const Factorization g3 = factor_semilattice(gcd_semilattice(3));
  CHECK(g3.expand() == y1 * (y2 - y1) * (y3 - y1));
  CHECK(g3.factors.size() == 3);
  CHECK(g3.verification.mode == "exact");

  for (const Semigroup& s : {gcd_semilattice(5), boolean_lattice(2), gcd_semilattice(6)}) {
    CHECK(factor_semilattice(s).expand() == oracle::theta(s));
  }
  CHECK_THROWS_AS(factor_semilattice(zmod_add(2)), Error);
}

TEST_CASE("smith determinants") {
  CHECK(smith_matrix(1).direct == 1);
  CHECK(smith_matrix(3).direct == 2);
  CHECK(smith_matrix(6).direct == 32);
  CHECK(smith_matrix(8).direct == 768);
  for (unsigned n = 1; n <= 12; ++n) {
    const SmithReport r = smith_matrix(n);
    CHECK(r.direct == oracle::gcd_det_by_elimination(n));
    CHECK(r.direct == r.phi_product);
  }
  CHECK_THROWS_AS(smith_matrix(0), Error);
}
