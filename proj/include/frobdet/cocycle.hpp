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

#ifndef FROBDET_COCYCLE_HPP
#define FROBDET_COCYCLE_HPP

#include <map>
#include <string_view>
#include <utility>

#include "frobdet/cyclotomic.hpp"
#include "frobdet/semigroup.hpp"

namespace frobdet {

/// Twist c(s,t) on the pairs of a monoid with zero whose product is
/// nonzero. Pairs not stored are 1.
class Cocycle {
 public:
  Cocycle() = default;
  void set(Elem s, Elem t, const CycNum& value);
  CycNum operator()(Elem s, Elem t) const;
  const std::map<std::pair<Elem, Elem>, CycNum>& values() const noexcept { return values_; }
  unsigned order() const;

 private:
  std::map<std::pair<Elem, Elem>, CycNum> values_;
};

/// Domain (no values on pairs with st = z, all values nonzero),
/// normalization at the identity and twisted associativity
/// c(s,t)c(st,u) = c(t,u)c(s,tu) whenever stu != z.
/// Throws NoZero, CocycleDomainMismatch or InvalidCocycle.
void check_cocycle(const Semigroup& m, const Cocycle& c);

/// Lines `s t value`: names (or 1-based indices) and a cyclotomic number
/// such as `z^2` in Q(zeta_order). Blank lines and `#` comments allowed.
Cocycle parse_cocycle(std::string_view text, const Semigroup& m, unsigned order);

}  // namespace frobdet

#endif  // FROBDET_COCYCLE_HPP
