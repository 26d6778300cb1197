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
#include "frobdet/determinant.hpp"
#include "frobdet/error.hpp"
#include "frobdet/nilpotent.hpp"
#include "oracle.hpp"

using namespace frobdet;

namespace {

Poly x(VarId v) { return Poly::variable(v); }

}  // namespace

TEST_CASE("nilpotent analysis") {
  const Semigroup c3 = cyclic_nilpotent(3);
  const NilReport r = analyze_nilpotent(c3);
  CHECK(r.unique_annihilator == c3.find("a^2"));
  CHECK(r.nilpotency_index == 3);

  const Semigroup zero_b = three_nil({{0, 0}, {0, 0}});
  const NilReport rz = analyze_nilpotent(zero_b);
  CHECK_FALSE(rz.unique_annihilator);
  CHECK(rz.annihilating.size() == 3);

  const Semigroup iz = Semigroup::from_grid({{0, 1}, {1, 1}});
  CHECK(analyze_nilpotent(iz).unique_annihilator == std::optional<Elem>(0));

  CHECK_THROWS_AS(analyze_nilpotent(zmod_add(3)), Error);
  CHECK_THROWS_AS(analyze_nilpotent(adjoin_zero(zmod_add(2))), Error);
}

TEST_CASE("annihilator matrices") {
  for (unsigned k = 2; k <= 5; ++k) {
    const Matrix<CycNum> a = annihilator_matrix(cyclic_nilpotent(k));
    for (unsigned i = 0; i < k; ++i)
      for (unsigned j = 0; j < k; ++j) CHECK(a(i, j) == CycNum(long(i + j == k - 1)));
  }
  const std::vector<std::vector<int>> b{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
  const Semigroup m = three_nil(b);
  const Matrix<CycNum> a = annihilator_matrix(m);
  REQUIRE(a.rows() == 5);
  CHECK(a(0, 4) == CycNum(1L));
  CHECK(a(4, 0) == CycNum(1L));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(a(i + 1, j + 1) == CycNum(long(b[i][j])));
  CHECK_THROWS_AS(annihilator_matrix(three_nil({{0, 0}, {0, 0}})), Error);
}

TEST_CASE("nilpotent factorization") {
  const Factorization c2 = factor_nil_adjoined(cyclic_nilpotent(2));
  CHECK(c2.constant == CycNum(-1L));
  REQUIRE(c2.factors.size() == 1);
  CHECK(c2.factors[0].form == x(1));
  CHECK(c2.factors[0].multiplicity == 2);

  for (unsigned k = 2; k <= 5; ++k) {
    const Semigroup m = cyclic_nilpotent(k);
    const Factorization f = factor_nil_adjoined(m);
    const long sign = (k * (k - 1) / 2) % 2 ? -1 : 1;
    CHECK(f.expand() == x(*m.find(k == 2 ? "a" : "a^" + std::to_string(k - 1))).pow(k).scaled(CycNum(sign)));
    CHECK(f.expand() == oracle::theta(m, true));
  }

  const Semigroup t = three_nil({{1, 0}, {0, 1}});
  const Factorization ft = factor_nil_adjoined(t);
  CHECK(ft.constant == CycNum(-1L));
  CHECK(ft.factors[0].form == x(*t.find("z'")));
  CHECK(ft.factors[0].multiplicity == 4);

  const Semigroup iz = Semigroup::from_grid({{0, 1}, {1, 1}});
  const Factorization fi = factor_nil_adjoined(iz);
  CHECK(fi.expand() == x(0));

  const Semigroup singular = three_nil({{1, 1}, {1, 1}});
  const Factorization fz = factor_nil_adjoined(singular);
  CHECK(fz.status == FactorStatus::Zero);
  CHECK(oracle::theta(singular, true).is_zero());

  for (const auto& b : std::vector<std::vector<std::vector<int>>>{
           {{1, 1}, {0, 1}}, {{0, 1}, {1, 0}}, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}}) {
    const Semigroup m = three_nil(b);
    const Factorization f = factor_nil_adjoined(m);
    CHECK(f.expand() == oracle::theta(m, true));
  }
}

TEST_CASE("twisted nilpotent factorization") {
  const Semigroup m = cyclic_nilpotent(3);
  Cocycle c;
  c.set(1, 1, CycNum::root_of_unity(4, 1));
  const Factorization f = factor_nil_adjoined(m, &c);
  Matrix<Poly> twisted{{x(0), x(1), x(2)},
                       {x(1), x(2).scaled(CycNum::root_of_unity(4, 1)), Poly()},
                       {x(2), Poly(), Poly()}};
  CHECK(f.expand() == oracle::leibniz(twisted));

  const Cocycle parsed = parse_cocycle("# twist\na a z^1\n", m, 4);
  CHECK(parsed(1, 1) == CycNum::root_of_unity(4, 1));
  CHECK_THROWS_AS(parse_cocycle("a a^2 2\n", m, 4), Error);
}
