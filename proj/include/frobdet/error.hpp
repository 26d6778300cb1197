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

#ifndef FROBDET_ERROR_HPP
#define FROBDET_ERROR_HPP

#include <stdexcept>
#include <string>

namespace frobdet {

enum class ErrorCode {
  // semigroup-core
  AssociativityViolation,
  IndexOutOfRange,
  DuplicateName,
  DeclaredZeroNotZero,
  DeclaredIdentityNotIdentity,
  NotIdempotent,
  SizeOverflow,
  UnknownFamily,
  ParamOutOfRange,
  SizeTooLarge,
  // exact-algebra
  OutOfRange,
  DimensionCap,
  MissingVariable,
  VariableMismatch,
  NotUnitriangular,
  NotAGroup,
  NotAbelian,
  InexactDivision,
  DivisionByZero,
  // order-mobius
  ModeHypothesisFailed,
  NotSemilattice,
  // determinant-engine
  NoZero,
  CocycleDomainMismatch,
  SingularP,
  RepDimensionMismatch,
  NotMultiplicative,
  NotAbelianWithoutReps,
  VerificationFailed,
  // inverse-groupoid
  NotInverse,
  NotClifford,
  NonabelianWithoutReps,
  // nilpotent-adjoined
  NotNilpotentAdjoined,
  NoUniqueAnnihilator,
  InvalidCocycle,
  // commutative-factorizer
  NotIdempotentSemigroup,
  IdempotentsNotCentral,
  NotLocalShape,
  NotChain,
  NotCommutative,
  // io
  Parse,
};

const char* to_string(ErrorCode code) noexcept;

/// Domain error carrying a machine-readable code and a one-line diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace frobdet

#endif  // FROBDET_ERROR_HPP
