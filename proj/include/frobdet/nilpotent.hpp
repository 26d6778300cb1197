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

#ifndef FROBDET_NILPOTENT_HPP
#define FROBDET_NILPOTENT_HPP

#include <optional>
#include <vector>

#include "frobdet/cocycle.hpp"
#include "frobdet/factorization.hpp"
#include "frobdet/semigroup.hpp"

namespace frobdet {

/// Facts about M = S u {I} with S nilpotent.
struct NilReport {
  Elem identity = 0;
  Elem zero = 0;
  /// Least k + 1 with S^{k+1} = {z}.
  unsigned nilpotency_index = 0;
  std::vector<Elem> left_annihilating;
  std::vector<Elem> right_annihilating;
  std::vector<Elem> annihilating;
  std::optional<Elem> unique_annihilator;
};

/// Throws NotNilpotentAdjoined when M is not a nilpotent semigroup with an
/// identity adjoined.
NilReport analyze_nilpotent(const Semigroup& m);

/// A over the basis M minus z: A(s,t) = c(s,t) when st is the unique
/// annihilating element, else 0. Throws NoUniqueAnnihilator.
Matrix<CycNum> annihilator_matrix(const Semigroup& m, const Cocycle* c = nullptr);

/// Contracted (twisted when c is given) determinant as det A times a power
/// of the annihilator variable, or Zero.
Factorization factor_nil_adjoined(const Semigroup& m, const Cocycle* c = nullptr,
                                  const VerifyOptions& opt = {});

}  // namespace frobdet

#endif  // FROBDET_NILPOTENT_HPP
