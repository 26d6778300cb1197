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

#ifndef FROBDET_DET_HPP
#define FROBDET_DET_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "frobdet/matrix.hpp"
#include "frobdet/poly.hpp"

namespace frobdet {

inline constexpr std::size_t kDefaultSymbolicCap = 12;

enum class DetMethod { Auto, Cofactor, Minors, Bareiss };

/// Exact determinant of a polynomial matrix. Auto picks cofactor expansion
/// up to dimension 6 and memoized Laplace minors above. Throws DimensionCap
/// when the dimension exceeds `cap`.
Poly det_poly_matrix(const Matrix<Poly>& m, std::size_t cap = kDefaultSymbolicCap,
                     DetMethod method = DetMethod::Auto);

/// Gaussian elimination over the cyclotomic field.
CycNum det_cyc_matrix(Matrix<CycNum> m);

/// Fraction-free Bareiss elimination over the integers.
BigInt det_int_matrix(IntMatrix m);

/// Inverse of a matrix that is unitriangular with respect to `order`, a
/// permutation of the indices listing each index before everything it
/// relates to (Z(a,b) != 0 only if a comes no later than b, Z(a,a) = 1).
IntMatrix unitriangular_inverse(const IntMatrix& z, const std::vector<std::size_t>& order);

enum class IdentityMode { Exact, Randomized };

struct IdentityResult {
  bool equal = false;
  bool probabilistic = false;
  unsigned rounds = 0;
  std::uint64_t seed = 0;
  /// Upper bound on the chance that unequal polynomials looked equal.
  double failure_bound = 0.0;
  /// Integer point where the two sides differ (empty for exact inequality
  /// found structurally).
  std::map<VarId, long long> witness;
};

inline constexpr long long kSampleRange = 1000000;

/// Draws integer points uniformly from [-10^6, 10^6].
class PointSampler {
 public:
  explicit PointSampler(std::uint64_t seed);
  std::map<VarId, long long> draw(const std::set<VarId>& vars);

 private:
  std::mt19937_64 rng_;
};

/// Compares p and q. When `universe` is given, both must only mention
/// variables inside it (VariableMismatch otherwise).
IdentityResult poly_identity_test(const Poly& p, const Poly& q, IdentityMode mode,
                                  std::uint64_t seed = 0, unsigned rounds = 3,
                                  const std::set<VarId>* universe = nullptr);

/// Schwartz-Zippel bound (deg / (2*10^6 + 1))^rounds.
double schwartz_zippel_bound(int degree, unsigned rounds);

std::function<CycNum(VarId)> as_valuation(const std::map<VarId, long long>& point);

}  // namespace frobdet

#endif  // FROBDET_DET_HPP
