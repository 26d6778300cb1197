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

#ifndef FROBDET_DETERMINANT_HPP
#define FROBDET_DETERMINANT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "frobdet/cocycle.hpp"
#include "frobdet/det.hpp"
#include "frobdet/factorization.hpp"
#include "frobdet/semigroup.hpp"

namespace frobdet {

enum class CayleyMode { Plain, Contracted, Twisted };

const char* to_string(CayleyMode mode) noexcept;

/// Variables are element ids: entry (s,t) is c(s,t) x_{st}, or 0 when the
/// mode drops st = z.
struct ParatrophicMatrix {
  std::vector<Elem> basis;
  Matrix<Poly> entries;
  CayleyMode mode = CayleyMode::Plain;
};

/// Twisted mode requires a cocycle and is contracted.
ParatrophicMatrix cayley_matrix(const Semigroup& s, CayleyMode mode,
                                const Cocycle* cocycle = nullptr);

/// Symbolic determinant; asserts that a nonzero result is homogeneous of
/// degree equal to the basis size.
Poly paratrophic_determinant(const Semigroup& s, CayleyMode mode,
                             const Cocycle* cocycle = nullptr,
                             std::size_t cap = kDefaultSymbolicCap);
Poly checked_determinant(const Matrix<Poly>& m, std::size_t cap = kDefaultSymbolicCap);

struct BackNForth {
  Poly theta;
  Poly contracted;
  /// x_z * contracted(y_s = x_s - x_z)
  Poly rhs;
  bool holds = false;
};

BackNForth backnforth_check(const Semigroup& s, std::size_t cap = kDefaultSymbolicCap);

enum class FrobeniusVerdict { Frobenius, NotFrobenius, Inconclusive };

const char* to_string(FrobeniusVerdict v) noexcept;

struct FrobeniusOptions {
  std::uint64_t seed = 0;
  std::size_t cap = kDefaultSymbolicCap;
  unsigned attempts = 5;
};

struct FrobeniusResult {
  FrobeniusVerdict verdict = FrobeniusVerdict::Inconclusive;
  /// 1: S^2 = S, 2: fixed points, 3: specialization, 4: symbolic.
  int stage = 0;
  std::string reason;
  /// Point with nonzero determinant (Frobenius from stage 3).
  std::map<VarId, long long> witness;
  BigInt value;
};

FrobeniusResult frobenius_test(const Semigroup& s, const FrobeniusOptions& opt = {});

/// Exact inverse by Gauss-Jordan; throws SingularP.
Matrix<CycNum> inverse_cyc_matrix(Matrix<CycNum> p);

/// det(P)^2 * theta_prime(x_{b'} -> sum_b (P^-1)_{b,b'} x_b), where P is the
/// B' x B matrix of an isomorphism and basis / basis_prime give the
/// variables of B and B'.
Poly transport_basis(const Poly& theta_prime, const Matrix<CycNum>& p,
                     const std::vector<VarId>& basis, const std::vector<VarId>& basis_prime);

/// Group element -> matrix of a representation.
using RepMatrix = std::map<Elem, Matrix<CycNum>>;

/// Checks that reps form a complete set of irreducible representations of
/// the group g: multiplicative, identity to identity, irreducible, pairwise
/// inequivalent, sum of squared degrees = |G|.
void check_representations(const Semigroup& g, const std::vector<Elem>& group,
                           const std::vector<RepMatrix>& reps);

/// Group determinant as a product of det[sum_g rho_ij(g) x_g]^{d}. Without
/// reps the group must be abelian and characters are used.
Factorization factor_group_determinant(const Semigroup& g,
                                       const std::vector<RepMatrix>* reps = nullptr,
                                       const VerifyOptions& opt = {});

/// The rep-factor polynomial det[sum_g rho_ij(g) x_{var(g)}].
Poly rep_factor(const RepMatrix& rep, const std::map<Elem, LinForm>& var);

}  // namespace frobdet

#endif  // FROBDET_DETERMINANT_HPP
