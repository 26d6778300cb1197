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
#include "oracle.hpp"

using namespace frobdet;

namespace {

Poly x(VarId v) { return Poly::variable(v); }

/// Permutation of {1..n} read from an image-string name such as "231".
std::vector<unsigned> perm_of(const std::string& name) {
  std::vector<unsigned> p;
  for (char c : name) p.push_back(static_cast<unsigned>(c - '1'));
  return p;
}

/// Standard representation of S_3 on the sum-zero plane with basis
/// e1 - e3, e2 - e3, plus the trivial and sign representations.
std::vector<RepMatrix> s3_reps(const Semigroup& g) {
  RepMatrix triv, sign, standard;
  for (Elem s = 0; s < g.size(); ++s) {
    const auto p = perm_of(g.name(s));
    triv[s] = Matrix<CycNum>{{CycNum(1L)}};
    sign[s] = Matrix<CycNum>{{CycNum(long(oracle::perm_sign({p.begin(), p.end()})))}};
    Matrix<CycNum> m(2, 2, CycNum(0L));
    for (unsigned j = 0; j < 2; ++j) {
      // image of e_{j} - e_{3} is e_{p(j)} - e_{p(3)}
      std::vector<long> v(3, 0);
      v[p[j]] += 1;
      v[p[2]] -= 1;
      m(0, j) = CycNum(v[0]);
      m(1, j) = CycNum(v[1]);
    }
    standard[s] = m;
  }
  return {triv, sign, standard};
}

/// theta of the group algebra of Z/2 in the basis b'_k = sum_b Q(b,k) b,
/// Q = P^-1, computed straight from structure constants.
Poly z2_theta_new_basis(const Matrix<Rat>& p, VarId first) {
  const Rat det = p(0, 0) * p(1, 1) - p(0, 1) * p(1, 0);
  Matrix<Rat> q{{p(1, 1) / det, -p(0, 1) / det}, {-p(1, 0) / det, p(0, 0) / det}};
  Matrix<Poly> m(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Rat v[2] = {0, 0};
      for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t) v[(s + t) % 2] += q(s, i) * q(t, j);
      for (int k = 0; k < 2; ++k) {
        const Rat c = p(k, 0) * v[0] + p(k, 1) * v[1];
        m(i, j) += x(first + k).scaled(CycNum(c));
      }
    }
  return oracle::leibniz(m);
}

}  // namespace

TEST_CASE("cayley matrices") {
  const auto triv = cayley_matrix(Semigroup::from_grid({{0}}), CayleyMode::Plain);
  CHECK(triv.entries == Matrix<Poly>{{x(0)}});
  const auto z2 = cayley_matrix(zmod_add(2), CayleyMode::Plain);
  CHECK(z2.entries == Matrix<Poly>{{x(0), x(1)}, {x(1), x(0)}});
  const Semigroup c2 = chain_semilattice(2);
  const auto con = cayley_matrix(c2, CayleyMode::Contracted);
  CHECK(con.entries == Matrix<Poly>{{x(*c2.identity())}});
  CHECK_THROWS_AS(cayley_matrix(left_zero(2), CayleyMode::Contracted), Error);
  CHECK_THROWS_AS(cayley_matrix(c2, CayleyMode::Twisted), Error);
}

TEST_CASE("paratrophic determinants") {
  CHECK(paratrophic_determinant(zmod_add(2), CayleyMode::Plain) == x(0) * x(0) - x(1) * x(1));
  CHECK(paratrophic_determinant(left_zero(2), CayleyMode::Plain).is_zero());
  CHECK(paratrophic_determinant(cyclic_nilpotent(2), CayleyMode::Contracted) == -(x(1) * x(1)));
  for (const Semigroup& s : {rook_monoid(2), wenger_monoid(), full_transformation(2),
                             three_nil({{1, 1}, {0, 1}}), symmetric_group(3)}) {
    const Poly p = paratrophic_determinant(s, CayleyMode::Plain);
    CHECK(p == oracle::theta(s));
    if (!p.is_zero()) {
      CHECK(p.is_homogeneous());
      CHECK(p.total_degree() == int(s.size()));
    }
    if (s.zero()) CHECK(paratrophic_determinant(s, CayleyMode::Contracted) == oracle::theta(s, true));
  }
}

TEST_CASE("twisted contracted determinant") {
  const Semigroup m = cyclic_nilpotent(3);  // I, a, a^2, z
  Cocycle c;
  c.set(1, 1, CycNum(-1L));
  check_cocycle(m, c);
  // rows I, a, a^2 against columns: only the anti-diagonal lands on a^2
  const Poly twisted = paratrophic_determinant(m, CayleyMode::Twisted, &c);
  Matrix<Poly> oracle_m{{x(0), x(1), x(2)}, {x(1), -x(2), Poly()}, {x(2), Poly(), Poly()}};
  CHECK(twisted == oracle::leibniz(oracle_m));
  Cocycle bad;
  bad.set(2, 2, CycNum(2L));
  CHECK_THROWS_AS(check_cocycle(m, bad), Error);
}

TEST_CASE("back and forth") {
  const Semigroup c2 = chain_semilattice(2);
  const BackNForth r = backnforth_check(c2);
  CHECK(r.holds);
  const Poly xb = x(*c2.zero()), xt = x(*c2.identity());
  CHECK(r.theta == xb * (xt - xb));
  CHECK(backnforth_check(adjoin_zero(cyclic_nilpotent(2))).holds);
  for (unsigned n = 1; n <= 4; ++n)
    for (const Semigroup& s : enumerate_commutative(n))
      if (s.zero()) CHECK(backnforth_check(s).holds);
  CHECK(backnforth_check(rook_monoid(2)).holds);
  CHECK_THROWS_AS(backnforth_check(left_zero(2)), Error);
}

TEST_CASE("staged frobenius test") {
  const FrobeniusResult z2 = frobenius_test(zmod_add(2));
  CHECK(z2.verdict == FrobeniusVerdict::Frobenius);
  CHECK(z2.witness.at(0) == 1);
  CHECK(z2.witness.at(1) == 0);

  const FrobeniusResult t2 = frobenius_test(full_transformation(2));
  CHECK(t2.verdict == FrobeniusVerdict::NotFrobenius);
  CHECK(t2.stage == 2);

  CHECK(frobenius_test(left_zero(2)).verdict == FrobeniusVerdict::NotFrobenius);
  CHECK(frobenius_test(null_semigroup(2)).stage == 1);
  CHECK(frobenius_test(gcd_semilattice(6)).verdict == FrobeniusVerdict::Frobenius);
}

TEST_CASE("basis transport") {
  const Poly t1 = x(0) * x(0) - x(1) * x(1);
  CHECK(transport_basis(t1, identity_matrix<CycNum>(2, CycNum(1L), CycNum(0L)), {0, 1}, {0, 1}) ==
        t1);
  Matrix<CycNum> two{{CycNum(2L)}};
  CHECK(transport_basis(x(0), two, {0}, {0}) == x(0).scaled(CycNum(2L)));

  const Poly direct = oracle::theta(zmod_add(2));
  for (const auto& p : {Matrix<Rat>{{2, 1}, {1, 1}}, Matrix<Rat>{{1, 1}, {1, -1}},
                        Matrix<Rat>{{3, 2}, {1, 1}}}) {
    Matrix<CycNum> pc(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) pc(i, j) = CycNum(p(i, j));
    const Poly theta_prime = z2_theta_new_basis(p, 10);
    CHECK(transport_basis(theta_prime, pc, {0, 1}, {10, 11}) == direct);
  }
  CHECK_THROWS_AS(inverse_cyc_matrix(Matrix<CycNum>{{CycNum(1L), CycNum(1L)},
                                                    {CycNum(1L), CycNum(1L)}}),
                  Error);
}

TEST_CASE("group determinants") {
  const Factorization z2 = factor_group_determinant(zmod_add(2));
  CHECK(z2.constant == CycNum(1L));
  CHECK(z2.factors.size() == 2);
  CHECK(z2.expand() == x(0) * x(0) - x(1) * x(1));

  const Factorization z3 = factor_group_determinant(zmod_add(3));
  const CycNum w = CycNum::root_of_unity(3, 1);
  const Poly expect = (x(0) + x(1) + x(2)) *
                      (x(0) + x(1).scaled(w) + x(2).scaled(w * w)) *
                      (x(0) + x(1).scaled(w * w) + x(2).scaled(w));
  // x_{s+t} differs from the circulant x_{s-t} by the column swap 1 <-> 2
  CHECK(z3.expand_factors() == expect);
  CHECK(z3.constant == CycNum(-1L));
  CHECK(z3.expand() == oracle::theta(zmod_add(3)));

  const Semigroup s3 = symmetric_group(3);
  const auto reps = s3_reps(s3);
  check_representations(s3, group_of_units(s3), reps);
  const Factorization f = factor_group_determinant(s3, &reps);
  std::vector<unsigned> mult;
  for (const auto& fac : f.factors) mult.push_back(fac.multiplicity);
  std::sort(mult.begin(), mult.end());
  CHECK(mult == std::vector<unsigned>{1, 1, 2});
  CHECK(f.expand() == oracle::theta(s3));
  CHECK(f.constant.is_rational());

  CHECK_THROWS_AS(factor_group_determinant(s3), Error);
  CHECK_THROWS_AS(factor_group_determinant(chain_semilattice(2)), Error);
  std::vector<RepMatrix> partial{reps[0], reps[2]};
  CHECK_THROWS_AS(check_representations(s3, group_of_units(s3), partial), Error);
}

TEST_CASE("factorization verification") {
  const Poly ref = x(0) * x(0) - x(1) * x(1);
  Factorization good;
  good.factors = {{x(0) + x(1), 1}, {x(0) - x(1), 1}};
  CHECK(verify_factorization(ref, good, IdentityMode::Exact).equal);
  CHECK(verify_factorization(ref, good, IdentityMode::Randomized, 4).equal);
  Factorization bad = good;
  bad.factors[0].multiplicity = 2;
  const auto r = verify_factorization(ref, bad, IdentityMode::Randomized, 4);
  CHECK_FALSE(r.equal);
  CHECK_FALSE(r.witness.empty());
  CHECK_FALSE(verify_factorization(ref, bad, IdentityMode::Exact).equal);
}
