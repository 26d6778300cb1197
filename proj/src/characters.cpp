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

#include "frobdet/characters.hpp"

#include <algorithm>
#include <functional>

#include "frobdet/error.hpp"

namespace frobdet {

CycNum Character::value(Elem g) const {
  const int e = exps.at(g);
  if (e < 0) throw Error(ErrorCode::OutOfRange, "element outside the character's group");
  return CycNum::root_of_unity(order, e);
}

bool Character::is_trivial() const {
  return std::all_of(group.begin(), group.end(), [&](Elem g) { return exps[g] == 0; });
}

Character Character::conj() const {
  Character c = *this;
  for (Elem g : group) c.exps[g] = (static_cast<int>(order) - exps[g]) % static_cast<int>(order);
  return c;
}

bool Character::is_real() const { return conj() == *this; }

Elem subgroup_identity(const Semigroup& s, const std::vector<Elem>& subgroup) {
  for (Elem e : subgroup) {
    if (s.is_idempotent(e)) return e;
  }
  throw Error(ErrorCode::NotAGroup, "no idempotent in the subgroup");
}

std::vector<Character> character_group(const Semigroup& g) {
  std::vector<Elem> all(g.size());
  for (Elem i = 0; i < g.size(); ++i) all[i] = i;
  return character_group(g, all);
}

std::vector<Character> character_group(const Semigroup& s, const std::vector<Elem>& subgroup) {
  if (subgroup.empty()) throw Error(ErrorCode::NotAGroup, "empty subgroup");
  std::vector<Elem> elems = subgroup;
  std::sort(elems.begin(), elems.end());
  std::vector<bool> member(s.size(), false);
  for (Elem g : elems) member[g] = true;
  const Elem one = subgroup_identity(s, elems);
  for (Elem a : elems) {
    if (s.mul(one, a) != a || s.mul(a, one) != a) {
      throw Error(ErrorCode::NotAGroup, "no two-sided identity");
    }
    bool has_inverse = false;
    for (Elem b : elems) {
      if (!member[s.mul(a, b)]) throw Error(ErrorCode::NotAGroup, "not closed");
      if (s.mul(a, b) == one && s.mul(b, a) == one) has_inverse = true;
      if (s.mul(a, b) != s.mul(b, a)) {
        throw Error(ErrorCode::NotAbelian, s.name(a) + " and " + s.name(b) + " do not commute");
      }
    }
    if (!has_inverse) throw Error(ErrorCode::NotAGroup, s.name(a) + " has no inverse");
  }
  auto elem_order = [&](Elem g) {
    unsigned k = 1;
    for (Elem p = g; p != one; p = s.mul(p, g)) ++k;
    return k;
  };
  unsigned exponent = 1;
  for (Elem g : elems) exponent = lcm_u(exponent, elem_order(g));

  // Greedy generating sequence.
  std::vector<Elem> gens;
  std::vector<bool> span(s.size(), false);
  std::vector<Elem> span_list{one};
  span[one] = true;
  for (Elem g : elems) {
    if (span[g]) continue;
    gens.push_back(g);
    std::vector<Elem> grown = span_list;
    for (Elem x : span_list) {
      for (Elem p = s.mul(x, g); !span[p]; p = s.mul(p, g)) {
        span[p] = true;
        grown.push_back(p);
      }
    }
    span_list = std::move(grown);
  }

  std::vector<Character> out;
  const int n = static_cast<int>(exponent);
  std::vector<int> exps(s.size(), -1);
  exps[one] = 0;
  std::vector<Elem> assigned{one};
  std::function<void(std::size_t)> dfs = [&](std::size_t k) {
    if (k == gens.size()) {
      Character c;
      c.group = elems;
      c.order = exponent;
      c.exps = exps;
      out.push_back(std::move(c));
      return;
    }
    const Elem g = gens[k];
    const unsigned o = elem_order(g);
    const int step = n / static_cast<int>(o);
    for (unsigned j = 0; j < o; ++j) {
      const int cg = static_cast<int>(j) * step;
      // Extend over the span of the assigned part and g.
      std::vector<Elem> added;
      bool ok = true;
      for (Elem x : assigned) {
        Elem p = s.mul(x, g);
        int e = (exps[x] + cg) % n;
        while (true) {
          if (exps[p] >= 0) {
            if (exps[p] != e) ok = false;
            break;
          }
          exps[p] = e;
          added.push_back(p);
          p = s.mul(p, g);
          e = (e + cg) % n;
        }
        if (!ok) break;
      }
      if (ok) {
        // Newly reached elements may also collide among themselves through
        // products with earlier ones; check multiplicativity on the span.
        std::vector<Elem> all = assigned;
        all.insert(all.end(), added.begin(), added.end());
        for (Elem a : all) {
          for (Elem b : all) {
            const Elem ab = s.mul(a, b);
            if (exps[ab] >= 0 && exps[ab] != (exps[a] + exps[b]) % n) ok = false;
          }
          if (!ok) break;
        }
      }
      if (ok) {
        const std::size_t before = assigned.size();
        assigned.insert(assigned.end(), added.begin(), added.end());
        dfs(k + 1);
        assigned.resize(before);
      }
      for (Elem p : added) exps[p] = -1;
    }
  };
  dfs(0);
  if (out.size() != elems.size()) {
    throw Error(ErrorCode::NotAGroup, "character count " + std::to_string(out.size()) +
                                          " differs from group order");
  }
  return out;
}

}  // namespace frobdet
