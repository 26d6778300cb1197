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

#ifndef FROBDET_RING_HPP
#define FROBDET_RING_HPP

#include <optional>
#include <vector>

#include "frobdet/cyclotomic.hpp"
#include "frobdet/matrix.hpp"
#include "frobdet/semigroup.hpp"

namespace frobdet {

/// F_q with q = p^m <= 256. Element a encodes the polynomial
/// sum_i c_i X^i with a = sum_i c_i p^i; the modulus is the monic
/// irreducible of degree m whose lower coefficients have the least code.
class FiniteField {
 public:
  /// Throws OutOfRange unless q is a prime power in [2, 256].
  explicit FiniteField(unsigned q);
  unsigned p() const noexcept { return p_; }
  unsigned degree() const noexcept { return m_; }
  unsigned q() const noexcept { return q_; }
  /// Coefficients c_0..c_m, c_m = 1.
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }
  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  /// Absolute trace to F_p, as an integer in [0, p).
  unsigned trace(unsigned a) const { return trace_[a]; }

 private:
  unsigned p_ = 2, m_ = 1, q_ = 2;
  std::vector<unsigned> modulus_;
  std::vector<unsigned> add_, mul_, trace_;
};

/// lambda(s) = zeta_order^exps[s].
struct GeneratingCharacter {
  unsigned order = 1;
  std::vector<unsigned> exps;
  CycNum value(Elem s) const { return CycNum::root_of_unity(order, exps.at(s)); }
};

/// Multiplicative monoid of a finite ring together with its additive
/// structure and generating character (additivity checked exhaustively).
struct RingMonoid {
  Semigroup monoid;
  /// Ring addition on element indices, row-major.
  std::vector<Elem> addition;
  GeneratingCharacter lambda;
};

/// Z/n, 2 <= n <= 512, lambda(k) = zeta_n^k. Throws OutOfRange.
RingMonoid zmod_monoid(unsigned n);
/// M_n(F_q) with lambda(A) = zeta_p^{Tr(tr A)}; q^{n^2} <= 4096.
/// Throws OutOfRange or SizeOverflow.
RingMonoid matrix_monoid(unsigned n, unsigned q);

/// det[lambda(st)] over Q(zeta); nullopt when it vanishes.
std::optional<CycNum> frobenius_form_check(const Semigroup& s, const GeneratingCharacter& lambda);

struct KovacsTerm {
  unsigned r = 0;
  BigInt qbinomial;
  std::optional<BigInt> subspaces;
  BigInt gl_order;
};

struct KovacsReport {
  unsigned n = 0, q = 0;
  BigInt total;
  BigInt sum;
  std::vector<KovacsTerm> terms;
  bool holds = false;
};

/// q^{n^2} = sum_r binom(n,r)_q^2 |GL_r(F_q)|, n <= 4 and q <= 16 a prime
/// power. Subspaces are counted by brute force when q^n <= 256.
KovacsReport kovacs_check(unsigned n, unsigned q);

BigInt q_binomial(unsigned n, unsigned r, unsigned q);
BigInt gl_order(unsigned r, unsigned q);
/// Number of subspaces of F_q^n of each dimension, by enumeration.
std::vector<BigInt> count_subspaces(unsigned n, const FiniteField& f);

}  // namespace frobdet

#endif  // FROBDET_RING_HPP
