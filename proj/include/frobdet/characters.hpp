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

#ifndef FROBDET_CHARACTERS_HPP
#define FROBDET_CHARACTERS_HPP

#include <vector>

#include "frobdet/cyclotomic.hpp"
#include "frobdet/semigroup.hpp"

namespace frobdet {

/// Linear character of an abelian subgroup G of a semigroup, stored as
/// exponents: chi(g) = zeta_N^exps[g] (-1 for elements outside G).
struct Character {
  std::vector<Elem> group;
  unsigned order = 1;
  std::vector<int> exps;

  CycNum value(Elem g) const;
  bool in_kernel(Elem g) const { return exps.at(g) == 0; }
  bool is_trivial() const;
  Character conj() const;
  bool is_real() const;
  friend bool operator==(const Character& a, const Character& b) {
    return a.order == b.order && a.exps == b.exps;
  }
};

/// Characters of a semigroup that is an abelian group.
std::vector<Character> character_group(const Semigroup& g);

/// Characters of the abelian group formed by `subgroup` inside s. The
/// trivial character comes first, then lexicographic order on the
/// exponents assigned to the greedy generators.
std::vector<Character> character_group(const Semigroup& s, const std::vector<Elem>& subgroup);

/// Identity of a subgroup (its unique idempotent).
Elem subgroup_identity(const Semigroup& s, const std::vector<Elem>& subgroup);

}  // namespace frobdet

#endif  // FROBDET_CHARACTERS_HPP
