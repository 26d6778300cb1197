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
#include "frobdet/commutative.hpp"
#include "frobdet/determinant.hpp"
#include "frobdet/error.hpp"
#include "frobdet/nilpotent.hpp"
#include "frobdet/ring.hpp"
#include "oracle.hpp"

using namespace frobdet;

namespace {

Poly x(VarId v) { return Poly::variable(v); }

Matrix<CycNum> ints(std::initializer_list<std::initializer_list<long>> rows) {
  Matrix<CycNum> m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long v : r) m(i, j++) = CycNum(v);
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("s-plus decomposition") {
  const Semigroup l = gcd_semilattice(4);
  const SplusDecomposition d = splus_decompose(l);
  CHECK(d.components.size() == 4);
  for (const auto& c : d.components) {
    CHECK(c.members == std::vector<Elem>{c.idempotent});
    CHECK(c.monoid.size() == 2);
  }

  const Semigroup g = zmod_add(3);
  const SplusDecomposition dg = splus_decompose(g);
  REQUIRE(dg.components.size() == 1);
  CHECK(dg.components[0].members.size() == 3);
  CHECK(dg.components[0].monoid.size() == 4);

  const Semigroup z8 = zmod_mul(8);
  const SplusDecomposition dz = splus_decompose(z8);
  REQUIRE(dz.components.size() == 2);
  for (const auto& c : dz.components) {
    if (c.idempotent == 1) {
      CHECK(c.members == std::vector<Elem>{1, 2, 3, 4, 5, 6, 7});
      CHECK(c.monoid.size() == 8);
    } else {
      CHECK(c.members == std::vector<Elem>{0});
    }
  }
  CHECK_THROWS_AS(splus_decompose(null_semigroup(2)), Error);
  CHECK_THROWS_AS(splus_decompose(left_zero(2)), Error);
}

TEST_CASE("decomposition identity") {
  CHECK(global_decomposition_check(gcd_semilattice(4)).holds);
  CHECK(global_decomposition_check(zmod_add(4)).holds);
  CHECK(global_decomposition_check(zmod_mul(6)).holds);
  for (unsigned n = 1; n <= 4; ++n) {
    for (const Semigroup& s : enumerate_commutative(n)) {
      if (s.idempotents().size() != s.size()) continue;
      const DecompositionCheck r = global_decomposition_check(s);
      CHECK(r.holds);
      CHECK(r.theta == oracle::theta(s));
    }
  }
}

TEST_CASE("local spectra") {
  const Semigroup gz = adjoin_zero(zmod_add(3));
  const LocalSpectrum s = local_spectrum(gz);
  CHECK(s.reps.size() == 1);
  CHECK(s.characters.size() == 3);
  for (const auto& cd : s.characters) {
    CHECK(cd.quotient.size() == 2);
    CHECK(cd.a == ints({{1}}));
  }

  const Semigroup z8 = zmod_mul(8);
  const LocalSpectrum sz = local_spectrum(z8);
  CHECK(sz.reps == std::vector<Elem>{1, 2, 4});
  CHECK(sz.stabilizers[1] == std::vector<Elem>{1, 5});
  CHECK(sz.stabilizers[2] == std::vector<Elem>{1, 3, 5, 7});
  CHECK(sz.orbit_sizes == std::vector<std::size_t>{4, 2, 1});
  for (const auto& cd : sz.characters) {
    for (std::size_t i : cd.J) {
      for (Elem g : sz.stabilizers[i]) CHECK(cd.chi.in_kernel(g));
    }
    // every pair of reps multiplies to a rep or to zero, so the twist is trivial
    CHECK(cd.twist.values().empty());
  }

  const Semigroup w = wenger_monoid();
  const LocalSpectrum sw = local_spectrum(w);
  REQUIRE(sw.characters.size() == 2);
  CHECK(sw.characters[0].det_a == CycNum(-1L));
  CHECK(sw.characters[1].det_a == CycNum(1L));
  CHECK(sw.characters[0].a == ints({{0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 0}}));
  CHECK(sw.characters[1].a == ints({{0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, -1, 0}, {1, 0, 0, 0}}));
  for (const auto& cd : sw.characters) check_cocycle(cd.quotient, cd.twist);

  CHECK_THROWS_AS(local_spectrum(zmod_add(3)), Error);
  CHECK_THROWS_AS(local_spectrum(zmod_mul(6)), Error);
}

TEST_CASE("local factorization of the worked examples") {
  const Semigroup w = wenger_monoid();
  const Factorization f = factor_local(w);
  REQUIRE(f.status == FactorStatus::Factored);
  CHECK(f.constant == CycNum(-1L));
  const Poly zp = x(*w.find("z'")), azp = x(*w.find("az'"));
  CHECK(f.expand() == (zp + azp).pow(4) * (zp - azp).pow(4) * Poly(-1L));
  CHECK(f.expand() == oracle::theta(w, true));

  const Semigroup e = eleven_monoid();
  const LocalSpectrum se = local_spectrum(e);
  bool singular = false;
  for (const auto& cd : se.characters) {
    if (!cd.chi.is_trivial()) {
      CHECK(cd.det_a.is_zero());
      CHECK(cd.a == ints({{0, 0, 0, 0, 1},
                          {0, 1, 1, 0, 0},
                          {0, 1, 0, -1, 0},
                          {0, 0, -1, -1, 0},
                          {1, 0, 0, 0, 0}}));
      singular = true;
    } else {
      CHECK(cd.a == ints({{0, 0, 0, 0, 1},
                          {0, 1, 1, 0, 0},
                          {0, 1, 0, 1, 0},
                          {0, 0, 1, 1, 0},
                          {1, 0, 0, 0, 0}}));
    }
  }
  CHECK(singular);
  const Factorization fe = factor_local(e);
  CHECK(fe.status == FactorStatus::Zero);
  CHECK(std::find(fe.notes.begin(), fe.notes.end(), "det A(chi_1) = 0") != fe.notes.end());
}

TEST_CASE("chain fast path") {
  for (unsigned n : {4u, 8u, 9u, 25u, 27u}) {
    const Semigroup m = zmod_mul(n);
    const Factorization chain = chain_fastpath(m);
    CHECK(same_factorization(chain, factor_local(m)));
    if (m.size() <= 9) CHECK(chain.expand() == oracle::theta(m, true));
  }
  const Semigroup z4 = zmod_mul(4);
  const Factorization c4 = chain_fastpath(z4);
  CHECK(c4.factors.size() == 2);
  CHECK(c4.expand() == paratrophic_determinant(z4, CayleyMode::Contracted));

  const Semigroup ck = cyclic_nilpotent(4);
  const Factorization fc = chain_fastpath(ck);
  CHECK(fc.factors.size() == 1);
  CHECK(fc.factors[0].form == x(*ck.find("a^3")));
  CHECK(fc.factors[0].multiplicity == 4);
  CHECK(same_factorization(fc, factor_nil_adjoined(ck)));

  CHECK_THROWS_AS(chain_fastpath(wenger_monoid()), Error);
}

TEST_CASE("commutative factorization") {
  const Semigroup g = zmod_add(4);
  const Factorization fg = factor_commutative(g);
  CHECK(fg.factors.size() == 4);
  CHECK(fg.expand() == oracle::theta(g));

  const Semigroup l = gcd_semilattice(4);
  CHECK(factor_commutative(l).expand() == oracle::theta(l));

  const Factorization fn = factor_commutative(null_semigroup(3));
  CHECK(fn.status == FactorStatus::Zero);

  for (unsigned n : {6u, 8u, 9u, 10u}) {
    const Semigroup z = zmod_mul(n);
    const Factorization f = factor_commutative(z);
    CHECK(f.status == FactorStatus::Factored);
    CHECK(f.expand() == paratrophic_determinant(z, CayleyMode::Plain));
  }
  CHECK(factor_commutative(zmod_mul(4)).expand() == oracle::theta(zmod_mul(4)));

  // the worked examples with a zero adjoined stay in the same picture
  const Semigroup we = adjoin_zero(wenger_monoid());
  const Factorization fw = factor_commutative(we, {VerifyMode::Randomized});
  CHECK(fw.status == FactorStatus::Factored);
  CHECK(fw.verification.mode == "randomized");
  CHECK(factor_commutative(eleven_monoid()).status == FactorStatus::Zero);

  CHECK_THROWS_AS(factor_commutative(left_zero(2)), Error);
}

TEST_CASE("exhaustive commutative corpus of order 3") {
  for (unsigned n = 1; n <= 3; ++n) {
    for (const Semigroup& s : enumerate_commutative(n)) {
      const Factorization f = factor_commutative(s);
      const Poly t = oracle::theta(s);
      CHECK((f.status == FactorStatus::Zero) == t.is_zero());
      CHECK(f.expand() == t);
    }
  }
}

TEST_CASE("parallel merge is deterministic") {
  const Semigroup s = direct_product(zmod_mul(4), chain_semilattice(3));
  VerifyOptions one, four;
  four.threads = 4;
  const Factorization a = factor_commutative(s, one), b = factor_commutative(s, four);
  REQUIRE(a.factors.size() == b.factors.size());
  for (std::size_t i = 0; i < a.factors.size(); ++i) CHECK(a.factors[i].form == b.factors[i].form);
  CHECK(a.constant == b.constant);
}
