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

// One PASS/FAIL line per acceptance criterion, with wall time against its
// budget. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "frobdet/commutative.hpp"
#include "frobdet/determinant.hpp"
#include "frobdet/error.hpp"
#include "frobdet/inverse.hpp"
#include "frobdet/nilpotent.hpp"
#include "frobdet/order.hpp"
#include "frobdet/ring.hpp"
#include "oracle.hpp"

using namespace frobdet;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (out.ok && secs > budget_s) {
    out.ok = false;
    out.detail = "over time budget";
  }
  if (!out.ok) ++failures;
  std::printf("%s criterion %2d: %-38s %8.3fs / %gs%s%s\n", out.ok ? "PASS" : "FAIL", id, title,
              secs, budget_s, out.detail.empty() ? "" : "  ", out.detail.c_str());
  std::fflush(stdout);
}

Poly x(VarId v) { return Poly::variable(v); }

std::vector<RepMatrix> s3_reps(const Semigroup& g) {
  RepMatrix triv, sign, standard;
  for (Elem s = 0; s < g.size(); ++s) {
    std::vector<std::size_t> p;
    for (char c : g.name(s)) p.push_back(static_cast<std::size_t>(c - '1'));
    triv[s] = Matrix<CycNum>{{CycNum(1L)}};
    sign[s] = Matrix<CycNum>{{CycNum(long(oracle::perm_sign(p)))}};
    Matrix<CycNum> m(2, 2, CycNum(0L));
    for (unsigned j = 0; j < 2; ++j) {
      long v[3] = {0, 0, 0};
      v[p[j]] += 1;
      v[p[2]] -= 1;
      m(0, j) = CycNum(v[0]);
      m(1, j) = CycNum(v[1]);
    }
    standard[s] = m;
  }
  return {triv, sign, standard};
}

std::vector<Semigroup> all_up_to(unsigned n) {
  std::vector<Semigroup> out;
  for (unsigned k = 1; k <= n; ++k) {
    enumerate_semigroups(k, false, false, [&](const Semigroup& s) { out.push_back(s); });
  }
  return out;
}

}  // namespace

int main() {
  criterion(1, "smith determinants", 1, [](Outcome& o) {
    const SmithReport r6 = smith_matrix(6), r8 = smith_matrix(8);
    o.require(r6.direct == 32 && r6.phi_product == 32, "smith 6 != 32");
    o.require(r8.direct == 768 && r8.phi_product == 768, "smith 8 != 768");
    o.require(oracle::gcd_det_by_elimination(6) == 32, "oracle smith 6");
    o.require(oracle::gcd_det_by_elimination(8) == 768, "oracle smith 8");
  });

  criterion(2, "wilf-lindstrom on semilattices", 30, [](Outcome& o) {
    std::vector<Semigroup> corpus;
    for (unsigned n = 1; n <= 4; ++n) {
      enumerate_semigroups(n, true, true, [&](const Semigroup& s) { corpus.push_back(s); });
    }
    corpus.push_back(gcd_semilattice(5));
    corpus.push_back(boolean_lattice(2));
    for (const Semigroup& s : corpus) {
      const Factorization f = factor_semilattice(s);
      o.require(f.expand() == oracle::theta(s), "mismatch on " + to_sgp(s));
      o.require(f.constant.is_rational(), "irrational constant");
    }
    o.detail = o.ok ? std::to_string(corpus.size()) + " semilattices" : o.detail;
  });

  criterion(3, "group determinants", 30, [](Outcome& o) {
    const Semigroup klein = direct_product(zmod_add(2), zmod_add(2));
    for (const Semigroup& g : {zmod_add(2), zmod_add(3), zmod_add(4), klein}) {
      const Factorization f = factor_group_determinant(g);
      o.require(f.expand() == oracle::theta(g), "abelian mismatch");
      o.require(f.constant.is_rational(), "irrational constant");
    }
    const Semigroup s3 = symmetric_group(3);
    const auto reps = s3_reps(s3);
    const Factorization f = factor_group_determinant(s3, &reps);
    o.require(f.expand() == oracle::theta(s3), "S_3 mismatch");
    o.require(f.constant.is_rational(), "S_3 irrational constant");
  });

  criterion(4, "cyclic nilpotent", 1, [](Outcome& o) {
    for (unsigned k = 2; k <= 5; ++k) {
      const Semigroup m = cyclic_nilpotent(k);
      const Elem top = *m.find(k == 2 ? "a" : "a^" + std::to_string(k - 1));
      const long sign = (k * (k - 1) / 2) % 2 ? -1 : 1;
      const Factorization f = factor_nil_adjoined(m);
      o.require(f.expand() == x(top).pow(k).scaled(CycNum(sign)), "k = " + std::to_string(k));
      o.require(f.factors.size() == 1 && f.factors[0].multiplicity == k, "shape k = " + std::to_string(k));
    }
  });

  criterion(5, "worked local examples", 60, [](Outcome& o) {
    const Semigroup w = wenger_monoid();
    const Factorization f = factor_local(w);
    const Poly zp = x(*w.find("z'")), azp = x(*w.find("az'"));
    o.require(f.constant == CycNum(-1L), "wenger constant " + f.constant.to_string());
    o.require(f.expand_factors() == (zp + azp).pow(4) * (zp - azp).pow(4), "wenger factors");
    o.require(f.expand() == oracle::theta(w, true), "wenger vs 8x8 contracted determinant");
    const Semigroup e = eleven_monoid();
    const Factorization fe = factor_local(e);
    o.require(fe.status == FactorStatus::Zero, "eleven not zero");
    bool surfaced = false;
    for (const auto& n : fe.notes) surfaced = surfaced || n.find("= 0") != std::string::npos;
    o.require(surfaced, "det A(chi) = 0 not reported");
    o.require(oracle::theta(e, true).is_zero(), "eleven contracted determinant nonzero");
  });

  criterion(6, "exhaustive commutative oracle", 600, [](Outcome& o) {
    std::size_t count = 0, zeros = 0;
    for (unsigned n = 1; n <= 4; ++n) {
      for (const Semigroup& s : enumerate_commutative(n)) {
        const Factorization f = factor_commutative(s);
        const Poly t = oracle::theta(s);
        o.require((f.status == FactorStatus::Zero) == t.is_zero(), "zero mismatch " + to_sgp(s));
        o.require(f.expand() == t, "product mismatch " + to_sgp(s));
        ++count;
        zeros += f.status == FactorStatus::Zero;
      }
    }
    if (o.ok) o.detail = std::to_string(count) + " tables, " + std::to_string(zeros) + " zero";
  });

  criterion(7, "chain rings", 60, [](Outcome& o) {
    for (unsigned n : {4u, 8u, 9u}) {
      const Semigroup m = zmod_monoid(n).monoid;
      const Factorization c = chain_fastpath(m), l = factor_local(m);
      o.require(same_factorization(c, l), "chain != local for " + std::to_string(n));
      o.require(c.expand() == oracle::theta(m, true), "chain != determinant for " + std::to_string(n));
    }
  });

  criterion(8, "inverse semigroups", 60, [](Outcome& o) {
    const Semigroup i2 = rook_monoid(2);
    o.require(inverse_determinant(i2).theta == oracle::theta(i2), "rook I_2");
    std::vector<Semigroup> clifford;
    for (unsigned k = 1; k <= 5; ++k) clifford.push_back(adjoin_zero(zmod_add(k)));
    clifford.push_back(direct_product(zmod_add(2), chain_semilattice(3)));
    clifford.push_back(direct_product(zmod_add(3), chain_semilattice(2)));
    for (const Semigroup& s : all_up_to(4)) {
      if (s.is_commutative() && is_inverse(s).inverse) clifford.push_back(s);
    }
    for (const Semigroup& s : clifford) {
      const Factorization f = factor_clifford(s);
      o.require(f.verification.mode == "exact", "not exact");
      o.require(f.expand() == oracle::theta(s), "clifford mismatch " + to_sgp(s));
    }
    if (o.ok) o.detail = std::to_string(clifford.size()) + " clifford semigroups";
  });

  criterion(9, "vanishing certificates", 30, [](Outcome& o) {
    std::vector<Semigroup> corpus{full_transformation(2), left_zero(2)};
    for (unsigned n = 1; n <= 4; ++n) {
      enumerate_semigroups(n, false, true, [&](const Semigroup& s) {
        if (!s.is_commutative()) corpus.push_back(s);
      });
    }
    for (const Semigroup& s : corpus) {
      const FrobeniusResult r = frobenius_test(s);
      o.require(r.verdict == FrobeniusVerdict::NotFrobenius, "not rejected: " + to_sgp(s));
      o.require(oracle::theta(s).is_zero(), "determinant nonzero: " + to_sgp(s));
    }
    if (o.ok) o.detail = std::to_string(corpus.size()) + " semigroups";
  });

  criterion(10, "frobenius rings and kovacs", 120, [](Outcome& o) {
    for (unsigned n = 2; n <= 12; ++n) {
      const RingMonoid r = zmod_monoid(n);
      o.require(frobenius_form_check(r.monoid, r.lambda).has_value(), "Z/" + std::to_string(n));
    }
    const RingMonoid m = matrix_monoid(2, 2);
    o.require(frobenius_form_check(m.monoid, m.lambda).has_value(), "M_2(F_2)");
    for (auto [n, q] : std::vector<std::pair<unsigned, unsigned>>{
             {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}}) {
      const KovacsReport k = kovacs_check(n, q);
      o.require(k.holds, "kovacs identity");
      for (const auto& t : k.terms) o.require(t.subspaces && *t.subspaces == t.qbinomial, "subspace count");
    }
  });

  criterion(11, "structural identities", 120, [](Outcome& o) {
    const std::vector<Semigroup> small = all_up_to(4);
    std::vector<Semigroup> with_zero;
    for (const Semigroup& s : small) {
      if (s.zero()) with_zero.push_back(s);
    }
    for (unsigned k = 2; k <= 5; ++k) with_zero.push_back(cyclic_nilpotent(k));
    for (unsigned k = 1; k <= 5; ++k) with_zero.push_back(adjoin_zero(zmod_add(k)));
    with_zero.push_back(three_nil({{1, 0}, {1, 1}}));
    with_zero.push_back(matrix_units(2));
    with_zero.push_back(rook_monoid(2));
    with_zero.push_back(adjoin_zero(boolean_lattice(2)));
    with_zero.push_back(adjoin_identity(null_semigroup(5)));
    with_zero.push_back(gcd_semilattice(6));
    for (const Semigroup& s : with_zero) {
      o.require(backnforth_check(s).holds, "back and forth: " + to_sgp(s));
    }

    for (const auto& p : {Matrix<CycNum>{{CycNum(2L), CycNum(1L)}, {CycNum(1L), CycNum(1L)}},
                          Matrix<CycNum>{{CycNum(1L), CycNum(1L)}, {CycNum(1L), CycNum(-1L)}}}) {
      const Poly theta = oracle::theta(zmod_add(2));
      const Poly there = transport_basis(theta, p, {10, 11}, {0, 1});
      const Poly back = transport_basis(there, inverse_cyc_matrix(p), {0, 1}, {10, 11});
      o.require(back == theta, "transport round trip");
    }

    std::size_t posets = 0;
    for (const Semigroup& s : small) {
      std::vector<FinitePoset> ps;
      if (s.is_commutative() && s.idempotents().size() == s.size()) {
        ps.push_back(natural_order(s, OrderMode::Semilattice));
      }
      if (is_inverse(s).inverse) ps.push_back(natural_order(s, OrderMode::Inverse));
      for (const FinitePoset& p : ps) {
        ++posets;
        o.require(zeta_matrix(p) * mobius(p) == identity_matrix<BigInt>(p.size(), 1, 0), "zeta mu");
      }
    }

    std::vector<Semigroup> groups;
    for (unsigned n = 1; n <= 12; ++n) groups.push_back(zmod_add(n));
    groups.push_back(direct_product(zmod_add(2), zmod_add(2)));
    groups.push_back(direct_product(zmod_add(2), zmod_add(6)));
    for (const Semigroup& g : groups) {
      const auto chars = character_group(g);
      o.require(chars.size() == g.size(), "character count");
      for (const auto& a : chars)
        for (const auto& b : chars) {
          CycNum ip(0L);
          for (Elem s = 0; s < g.size(); ++s) ip += a.value(s) * b.value(s).conj();
          o.require(ip == CycNum(long(a == b ? g.size() : 0)), "orthogonality");
        }
    }

    std::size_t nonzero = 0, groupoids = 0;
    for (const Semigroup& s : small) {
      const Poly t = paratrophic_determinant(s, CayleyMode::Plain);
      if (!t.is_zero()) {
        ++nonzero;
        o.require(t.is_homogeneous() && t.total_degree() == int(s.size()), "homogeneity");
      }
      const InverseCheck ic = is_inverse(s);
      if (ic.inverse) {
        ++groupoids;
        const GroupoidStructure gs = groupoid_structure(groupoid_of(s, ic.star));
        std::size_t total = 0;
        for (const auto& c : gs.classes) total += c.n() * c.n() * c.automorphisms.size();
        o.require(total == s.size() && gs.dimension_identity(), "groupoid dimension");
      }
    }
    if (o.ok) {
      o.detail = std::to_string(with_zero.size()) + " with zero, " + std::to_string(posets) +
                 " posets, " + std::to_string(nonzero) + " nonzero determinants, " +
                 std::to_string(groupoids) + " groupoids";
    }
  });

  return failures == 0 ? 0 : 1;
}
