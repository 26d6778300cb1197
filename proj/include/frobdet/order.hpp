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

#ifndef FROBDET_ORDER_HPP
#define FROBDET_ORDER_HPP

#include <map>
#include <vector>

#include "frobdet/factorization.hpp"
#include "frobdet/matrix.hpp"
#include "frobdet/semigroup.hpp"

namespace frobdet {

enum class OrderMode { Semilattice, Inverse, CentralIdempotent };

const char* to_string(OrderMode mode) noexcept;

/// Finite partial order with a fixed linear extension (repeated
/// extraction of the least-index minimal element).
class FinitePoset {
 public:
  FinitePoset() = default;
  /// leq is row-major, leq[a*n+b] != 0 iff a <= b. Throws
  /// ModeHypothesisFailed when the relation is not a partial order.
  FinitePoset(std::size_t n, std::vector<char> leq);

  std::size_t size() const noexcept { return n_; }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a * n_ + b] != 0; }
  const std::vector<std::size_t>& extension() const noexcept { return ext_; }
  /// Elements below a, in index order.
  std::vector<std::size_t> below(std::size_t a) const;

 private:
  std::size_t n_ = 0;
  std::vector<char> leq_;
  std::vector<std::size_t> ext_;
};

/// The order attached to S by `mode`; hypotheses are checked.
FinitePoset natural_order(const Semigroup& s, OrderMode mode);

IntMatrix zeta_matrix(const FinitePoset& p);
/// Inverse of the zeta matrix, by back-substitution along the extension.
IntMatrix mobius(const FinitePoset& p);

/// s -> least idempotent e with se = s. Requires S^2 = S and central
/// idempotents.
std::vector<Elem> splus_map(const Semigroup& s);

/// y_s = sum_{t <= s} mu(t, s) x_t for every element s.
std::map<VarId, LinForm> mobius_substitution(const FinitePoset& p, const IntMatrix& mu);

/// Product over a of sum_{b <= a} mu(b, a) x_b, checked against det C(L).
Factorization factor_semilattice(const Semigroup& l, const VerifyOptions& opt = {});

struct SmithReport {
  IntMatrix matrix;
  BigInt direct;
  BigInt phi_product;
  std::vector<unsigned> phi;
};

/// gcd matrix of 1..n with its determinant computed directly and as a
/// totient product (VerificationFailed if they differ).
SmithReport smith_matrix(unsigned n);

}  // namespace frobdet

#endif  // FROBDET_ORDER_HPP
