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

#include "frobdet/inverse.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "frobdet/characters.hpp"
#include "frobdet/error.hpp"

namespace frobdet {

InverseCheck is_inverse(const Semigroup& s) {
  InverseCheck r;
  const std::size_t n = s.size();
  r.star.assign(n, 0);
  for (Elem a = 0; a < n; ++a) {
    std::size_t count = 0;
    for (Elem t = 0; t < n; ++t) {
      if (s.mul(s.mul(a, t), a) == a && s.mul(s.mul(t, a), t) == t) {
        r.star[a] = t;
        ++count;
      }
    }
    if (count != 1) {
      r.witness = a;
      r.witness_count = count;
      r.star.clear();
      return r;
    }
  }
  r.inverse = true;
  return r;
}

Elem Groupoid::compose(std::size_t a, std::size_t b) const {
  return ambient->mul(arrows[a], arrows[b]);
}

std::size_t Groupoid::position(Elem arrow) const {
  auto it = std::find(arrows.begin(), arrows.end(), arrow);
  if (it == arrows.end()) throw Error(ErrorCode::IndexOutOfRange, "not an arrow");
  return static_cast<std::size_t>(it - arrows.begin());
}

Groupoid groupoid_of(const Semigroup& s, const std::vector<Elem>& star) {
  Groupoid g;
  g.ambient = &s;
  g.objects = s.idempotents();
  for (Elem a = 0; a < s.size(); ++a) {
    g.arrows.push_back(a);
    g.dom.push_back(s.mul(star[a], a));
    g.ran.push_back(s.mul(a, star[a]));
    g.inv.push_back(star[a]);
  }
  return g;
}

namespace {

// Component label (least object id) for every object.
std::map<Elem, Elem> components(const Groupoid& g) {
  std::map<Elem, Elem> parent;
  for (Elem o : g.objects) parent[o] = o;
  std::function<Elem(Elem)> root = [&](Elem x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < g.arrows.size(); ++a) {
    Elem x = root(g.dom[a]);
    Elem y = root(g.ran[a]);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
  std::map<Elem, Elem> label;
  for (Elem o : g.objects) label[o] = root(o);
  return label;
}

}  // namespace

bool GroupoidStructure::dimension_identity() const {
  std::size_t total = 0;
  for (const auto& c : classes) total += c.n() * c.n() * c.automorphisms.size();
  return total == arrow_count;
}

GroupoidStructure groupoid_structure(const Groupoid& g) {
  const auto label = components(g);
  GroupoidStructure st;
  st.arrow_count = g.arrows.size();
  std::map<Elem, std::size_t> index;
  for (Elem o : g.objects) {
    const Elem root = label.at(o);
    if (!index.count(root)) {
      index[root] = st.classes.size();
      st.classes.emplace_back();
    }
    st.classes[index[root]].objects.push_back(o);
  }
  for (std::size_t a = 0; a < g.arrows.size(); ++a) {
    auto& c = st.classes[index[label.at(g.dom[a])]];
    ++c.arrows;
    if (g.dom[a] == c.objects.front() && g.ran[a] == c.objects.front()) {
      c.automorphisms.push_back(g.arrows[a]);
    }
  }
  return st;
}

Matrix<Poly> groupoid_matrix(const Groupoid& g) {
  const std::size_t n = g.arrows.size();
  Matrix<Poly> m(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (g.composable(a, b)) m(a, b) = Poly::variable(g.compose(a, b));
    }
  }
  return m;
}

Poly groupoid_determinant(const Groupoid& g, std::size_t cap) {
  const auto label = components(g);
  std::map<Elem, std::vector<std::size_t>> blocks;
  for (std::size_t a = 0; a < g.arrows.size(); ++a) blocks[label.at(g.dom[a])].push_back(a);
  if (g.arrows.size() > cap) {
    throw Error(ErrorCode::DimensionCap, std::to_string(g.arrows.size()) + " arrows exceed cap " +
                                             std::to_string(cap));
  }
  Poly theta(1L);
  for (const auto& [root, arrows] : blocks) {
    const std::size_t k = arrows.size();
    Matrix<Poly> m(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (g.composable(arrows[i], arrows[j])) {
          m(i, j) = Poly::variable(g.compose(arrows[i], arrows[j]));
        }
      }
    }
    theta = theta * det_poly_matrix(m, cap);
  }
  return theta;
}

InverseDeterminant inverse_determinant(const Semigroup& s, std::size_t cap) {
  const auto check = is_inverse(s);
  if (!check.inverse) {
    throw Error(ErrorCode::NotInverse,
                s.name(*check.witness) + " has " + std::to_string(check.witness_count) +
                    " generalized inverses");
  }
  InverseDeterminant r;
  const Groupoid g = groupoid_of(s, check.star);
  r.groupoid_theta = groupoid_determinant(g, cap);
  const FinitePoset p = natural_order(s, OrderMode::Inverse);
  r.substitution = mobius_substitution(p, mobius(p));
  r.theta = substitute_linear(r.groupoid_theta, r.substitution);
  if (s.size() <= cap) {
    const Poly direct = paratrophic_determinant(s, CayleyMode::Plain, nullptr, cap);
    if (direct != r.theta) {
      throw Error(ErrorCode::VerificationFailed,
                  "groupoid determinant after substitution differs from the direct one");
    }
    r.checked_direct = true;
  }
  return r;
}

Factorization factor_clifford(const Semigroup& s, const VerifyOptions& opt,
                              const std::map<Elem, std::vector<RepMatrix>>* reps) {
  const auto check = is_inverse(s);
  if (!check.inverse) throw Error(ErrorCode::NotInverse, "expected an inverse semigroup");
  if (!analyze(s).central_idempotents) {
    throw Error(ErrorCode::NotClifford, "idempotents are not central");
  }
  const FinitePoset p = natural_order(s, OrderMode::Inverse);
  const auto sub = mobius_substitution(p, mobius(p));
  std::map<Elem, LinForm> y;
  for (const auto& [v, form] : sub) y.emplace(static_cast<Elem>(v), form);
  Factorization f;
  f.provenance = "clifford";
  for (Elem e : s.idempotents()) {
    const auto group = maximal_subgroup(s, e);
    bool abelian = true;
    for (Elem a : group) {
      for (Elem b : group) abelian = abelian && s.mul(a, b) == s.mul(b, a);
    }
    if (abelian) {
      for (const auto& chi : character_group(s, group)) {
        LinForm l;
        for (Elem g : group) {
          for (const auto& [v, c] : y.at(g).coeffs()) l.add(v, c * chi.value(g));
        }
        f.factors.push_back({l.to_poly(), 1});
      }
      continue;
    }
    if (!reps || !reps->count(e)) {
      throw Error(ErrorCode::NonabelianWithoutReps,
                  "maximal subgroup at " + s.name(e) + " is nonabelian");
    }
    check_representations(s, group, reps->at(e));
    for (const auto& rho : reps->at(e)) {
      const auto d = static_cast<unsigned>(rho.begin()->second.rows());
      f.factors.push_back({rep_factor(rho, y), d});
    }
  }
  settle(f, matrix_reference(cayley_matrix(s, CayleyMode::Plain).entries, opt), opt);
  return f;
}

}  // namespace frobdet
