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

#ifndef FROBDET_FACTORIZATION_HPP
#define FROBDET_FACTORIZATION_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "frobdet/det.hpp"
#include "frobdet/poly.hpp"

namespace frobdet {

enum class FactorStatus { Zero, Factored };

struct Factor {
  Poly form;
  unsigned multiplicity = 1;
};

struct Verification {
  /// "exact", "randomized" or "none".
  std::string mode = "none";
  unsigned rounds = 0;
  std::uint64_t seed = 0;
  double failure_bound = 0.0;
  bool passed = false;
};

/// constant * prod factor^multiplicity, or Zero.
struct Factorization {
  FactorStatus status = FactorStatus::Factored;
  CycNum constant = CycNum(1L);
  std::vector<Factor> factors;
  std::string provenance;
  Verification verification;
  std::vector<std::string> notes;

  Poly expand() const;
  /// Product of the factors without the constant.
  Poly expand_factors() const;
  unsigned cyclotomic_order() const;
  int degree() const;
};

enum class VerifyMode { Auto, Exact, Randomized, None };

struct VerifyOptions {
  VerifyMode mode = VerifyMode::Auto;
  std::uint64_t seed = 0;
  unsigned rounds = 3;
  std::size_t cap = kDefaultSymbolicCap;
  unsigned threads = 1;
};

/// The determinant a factorization is checked against: a symbolic
/// polynomial when affordable, always a numeric evaluator.
struct Reference {
  std::optional<Poly> symbolic;
  std::function<CycNum(const std::function<CycNum(VarId)>&)> evaluate;
  std::set<VarId> variables;
  int degree = 0;
};

/// Reference for det(m). The symbolic determinant is computed when the
/// options ask for exact verification (or Auto and dim <= cap).
Reference matrix_reference(const Matrix<Poly>& m, const VerifyOptions& opt);
/// Reference from an already known polynomial.
Reference poly_reference(const Poly& p, const std::set<VarId>& vars, int degree);

Matrix<CycNum> evaluate_matrix(const Matrix<Poly>& m, const std::function<CycNum(VarId)>& at);

/// Normalizes factors (linear ones monic in their least-index variable,
/// others monic in their leading term), merges repeats, derives the
/// constant against the reference and checks the whole identity. When
/// `claimed` is given it must equal the derived constant.
/// Throws VerificationFailed on any mismatch.
void settle(Factorization& f, const Reference& ref, const VerifyOptions& opt,
            const std::optional<CycNum>& claimed = std::nullopt);

/// Normalization and merging only.
void normalize_factors(Factorization& f);

/// Compares constant * prod factors against the reference polynomial.
IdentityResult verify_factorization(const Poly& reference, const Factorization& f,
                                    IdentityMode mode, std::uint64_t seed = 0,
                                    unsigned rounds = 3);

Factorization zero_factorization(const std::string& provenance);

}  // namespace frobdet

#endif  // FROBDET_FACTORIZATION_HPP
