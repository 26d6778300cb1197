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

#include "frobdet/error.hpp"

namespace frobdet {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::AssociativityViolation: return "AssociativityViolation";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::DeclaredZeroNotZero: return "DeclaredZeroNotZero";
    case ErrorCode::DeclaredIdentityNotIdentity: return "DeclaredIdentityNotIdentity";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::SizeOverflow: return "SizeOverflow";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorCode::SizeTooLarge: return "SizeTooLarge";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::DimensionCap: return "DimensionCap";
    case ErrorCode::MissingVariable: return "MissingVariable";
    case ErrorCode::VariableMismatch: return "VariableMismatch";
    case ErrorCode::NotUnitriangular: return "NotUnitriangular";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::NotAbelian: return "NotAbelian";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ModeHypothesisFailed: return "ModeHypothesisFailed";
    case ErrorCode::NotSemilattice: return "NotSemilattice";
    case ErrorCode::NoZero: return "NoZero";
    case ErrorCode::CocycleDomainMismatch: return "CocycleDomainMismatch";
    case ErrorCode::SingularP: return "SingularP";
    case ErrorCode::RepDimensionMismatch: return "RepDimensionMismatch";
    case ErrorCode::NotMultiplicative: return "NotMultiplicative";
    case ErrorCode::NotAbelianWithoutReps: return "NotAbelianWithoutReps";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::NotInverse: return "NotInverse";
    case ErrorCode::NotClifford: return "NotClifford";
    case ErrorCode::NonabelianWithoutReps: return "NonabelianWithoutReps";
    case ErrorCode::NotNilpotentAdjoined: return "NotNilpotentAdjoined";
    case ErrorCode::NoUniqueAnnihilator: return "NoUniqueAnnihilator";
    case ErrorCode::InvalidCocycle: return "InvalidCocycle";
    case ErrorCode::NotIdempotentSemigroup: return "NotIdempotentSemigroup";
    case ErrorCode::IdempotentsNotCentral: return "IdempotentsNotCentral";
    case ErrorCode::NotLocalShape: return "NotLocalShape";
    case ErrorCode::NotChain: return "NotChain";
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace frobdet
