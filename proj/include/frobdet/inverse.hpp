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

#ifndef FROBDET_INVERSE_HPP
#define FROBDET_INVERSE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frobdet/determinant.hpp"
#include "frobdet/factorization.hpp"
#include "frobdet/order.hpp"
#include "frobdet/semigroup.hpp"

namespace frobdet {

struct InverseCheck {
  bool inverse = false;
  /// s -> s*, when inverse.
  std::vector<Elem> star;
  /// First element without exactly one generalized inverse.
  std::optional<Elem> witness;
  std::size_t witness_count = 0;
};

InverseCheck is_inverse(const Semigroup& s);

/// Groupoid of an inverse semigroup: arrows are the elements, objects the
/// idempotents, dom(s) = s*s, ran(s) = ss*.
struct Groupoid {
  std::vector<Elem> objects;
  std::vector<Elem> arrows;
  std::vector<Elem> dom;  // by arrow position
  std::vector<Elem> ran;
  std::vector<Elem> inv;  // by arrow position, as element ids
  const Semigroup* ambient = nullptr;

  bool composable(std::size_t a, std::size_t b) const { return dom[a] == ran[b]; }
  /// a.b for composable positions, as an element id.
  Elem compose(std::size_t a, std::size_t b) const;
  std::size_t position(Elem arrow) const;
};

Groupoid groupoid_of(const Semigroup& s, const std::vector<Elem>& star);

struct GroupoidClass {
  std::vector<Elem> objects;
  /// Automorphism group of the first object.
  std::vector<Elem> automorphisms;
  std::size_t arrows = 0;
  std::size_t n() const { return objects.size(); }
  std::size_t block_dimension() const { return objects.size() * automorphisms.size(); }
};

struct GroupoidStructure {
  std::vector<GroupoidClass> classes;
  std::size_t arrow_count = 0;
  /// sum n_i^2 |G_i| == arrow_count
  bool dimension_identity() const;
};

GroupoidStructure groupoid_structure(const Groupoid& g);

/// Matrix with entry x_{ab} when dom(a) = ran(b), over arrow positions.
Matrix<Poly> groupoid_matrix(const Groupoid& g);

/// det of the groupoid matrix, computed per connected component.
Poly groupoid_determinant(const Groupoid& g, std::size_t cap = kDefaultSymbolicCap);

struct InverseDeterminant {
  Poly theta;
  Poly groupoid_theta;
  std::map<VarId, LinForm> substitution;
  /// Compared with the direct symbolic determinant when within the cap.
  bool checked_direct = false;
};

InverseDeterminant inverse_determinant(const Semigroup& s, std::size_t cap = kDefaultSymbolicCap);

/// Linear factorization of a Clifford semigroup with abelian maximal
/// subgroups; `reps` supplies irreducible representations per idempotent
/// for nonabelian ones.
Factorization factor_clifford(const Semigroup& s, const VerifyOptions& opt = {},
                              const std::map<Elem, std::vector<RepMatrix>>* reps = nullptr);

}  // namespace frobdet

#endif  // FROBDET_INVERSE_HPP
