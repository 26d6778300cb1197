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

#ifndef FROBDET_COMMUTATIVE_HPP
#define FROBDET_COMMUTATIVE_HPP

#include <optional>
#include <vector>

#include "frobdet/characters.hpp"
#include "frobdet/cocycle.hpp"
#include "frobdet/factorization.hpp"
#include "frobdet/order.hpp"
#include "frobdet/semigroup.hpp"

namespace frobdet {

/// One local monoid H_e u {z}: elements of S with s+ = e, products that
/// fall below e collapse to the new zero (the last element).
struct LocalComponent {
  Elem idempotent = 0;
  /// Local element i (except the zero) is the element members[i] of S.
  std::vector<Elem> members;
  Semigroup monoid;
};

struct SplusDecomposition {
  std::vector<Elem> plus;
  std::vector<Elem> idempotents;
  FinitePoset order;
  std::vector<LocalComponent> components;
  /// I_e = {s : s+ < e}, per component.
  std::vector<std::vector<Elem>> ideals;
};

/// Requires S^2 = S and central idempotents.
SplusDecomposition splus_decompose(const Semigroup& s);

struct DecompositionCheck {
  Poly theta;
  Poly product;
  bool holds = false;
};

/// theta_S(X) against prod_e contracted theta of H_e u {z} at Y_e.
DecompositionCheck global_decomposition_check(const Semigroup& s,
                                              std::size_t cap = kDefaultSymbolicCap);

struct CharacterData {
  Character chi;
  /// Orbit indices i with G_i inside ker chi, ascending (J[0] = 0).
  std::vector<std::size_t> J;
  /// M_chi / G as a monoid: element k is the orbit J[k], zero last.
  Semigroup quotient;
  Cocycle twist;
  /// Position in J of the unique annihilating orbit.
  std::optional<std::size_t> annihilator;
  std::size_t annihilating_count = 0;
  Matrix<CycNum> a;
  CycNum det_a;
};

/// Orbit and character data of a commutative monoid with zero whose
/// nonunits are nilpotent.
struct LocalSpectrum {
  Elem identity = 0;
  Elem zero = 0;
  std::vector<Elem> units;
  /// Orbit representatives, least index per orbit, reps[0] = identity.
  std::vector<Elem> reps;
  std::vector<std::vector<Elem>> stabilizers;
  std::vector<std::size_t> orbit_sizes;
  /// Orbit index of each nonzero element.
  std::vector<std::size_t> orbit_of;
  /// A unit g with m = g * reps[orbit_of[m]].
  std::vector<Elem> coset_unit;
  std::vector<CharacterData> characters;

  /// chi(m) for m outside I_chi.
  CycNum value(const Character& chi, Elem m) const;
};

/// Throws NotLocalShape.
LocalSpectrum local_spectrum(const Semigroup& m);

/// Linear factorization of the contracted determinant of a local monoid,
/// or Zero.
Factorization factor_local(const Semigroup& m, const VerifyOptions& opt = {});
Factorization factor_local(const Semigroup& m, const LocalSpectrum& spec,
                           const VerifyOptions& opt);

/// Closed form when the nonunits form the principal ideal Mt; asserted
/// equal to factor_local. Throws NotChain.
Factorization chain_fastpath(const Semigroup& m, const VerifyOptions& opt = {});

/// Full linear factorization of a commutative semigroup, or Zero.
Factorization factor_commutative(const Semigroup& s, const VerifyOptions& opt = {});

/// Order-insensitive comparison of normalized factorizations.
bool same_factorization(const Factorization& a, const Factorization& b);

}  // namespace frobdet

#endif  // FROBDET_COMMUTATIVE_HPP
