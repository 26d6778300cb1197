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

#include "frobdet/nilpotent.hpp"

#include <cctype>
#include <set>

#include "frobdet/determinant.hpp"
#include "frobdet/error.hpp"

namespace frobdet {

// ----------------------------------------------------------------- Cocycle

void Cocycle::set(Elem s, Elem t, const CycNum& value) {
  if (value.is_one()) {
    values_.erase({s, t});
  } else {
    values_[{s, t}] = value;
  }
}

CycNum Cocycle::operator()(Elem s, Elem t) const {
  auto it = values_.find({s, t});
  return it == values_.end() ? CycNum(1L) : it->second;
}

unsigned Cocycle::order() const {
  unsigned n = 1;
  for (const auto& [k, v] : values_) n = lcm_u(n, v.order());
  return n;
}

void check_cocycle(const Semigroup& m, const Cocycle& c) {
  if (!m.zero()) throw Error(ErrorCode::NoZero, "a cocycle needs a monoid with zero");
  const Elem z = *m.zero();
  const std::size_t n = m.size();
  for (const auto& [key, v] : c.values()) {
    const auto [s, t] = key;
    if (s >= n || t >= n) throw Error(ErrorCode::CocycleDomainMismatch, "element out of range");
    if (m.mul(s, t) == z) {
      throw Error(ErrorCode::CocycleDomainMismatch,
                  "value given on (" + m.name(s) + "," + m.name(t) + ") whose product is zero");
    }
    if (v.is_zero()) {
      throw Error(ErrorCode::InvalidCocycle, "zero value on (" + m.name(s) + "," + m.name(t) + ")");
    }
  }
  if (m.identity()) {
    const Elem one = *m.identity();
    for (Elem x = 0; x < n; ++x) {
      if (x == z) continue;
      if (!c(one, x).is_one() || !c(x, one).is_one()) {
        throw Error(ErrorCode::InvalidCocycle, "not normalized at " + m.name(x));
      }
    }
  }
  for (Elem s = 0; s < n; ++s) {
    for (Elem t = 0; t < n; ++t) {
      const Elem st = m.mul(s, t);
      if (st == z) continue;
      for (Elem u = 0; u < n; ++u) {
        const Elem tu = m.mul(t, u);
        if (m.mul(st, u) == z) continue;
        if (c(s, t) * c(st, u) != c(t, u) * c(s, tu)) {
          throw Error(ErrorCode::InvalidCocycle, "twisted associativity fails at (" + m.name(s) +
                                                     "," + m.name(t) + "," + m.name(u) + ")");
        }
      }
    }
  }
}

Cocycle parse_cocycle(std::string_view text, const Semigroup& m, unsigned order) {
  Cocycle c;
  std::size_t number = 0;
  std::size_t pos = 0;
  auto resolve = [&](const std::string& tok) -> Elem {
    if (auto e = m.find(tok)) return *e;
    if (!m.has_names() && !tok.empty() && tok.find_first_not_of("0123456789") == std::string::npos &&
        tok.size() < 10) {
      const unsigned long v = std::stoul(tok);
      if (v >= 1 && v <= m.size()) return static_cast<Elem>(v - 1);
    }
    throw Error(ErrorCode::Parse, "line " + std::to_string(number) + ": unknown element '" + tok + "'");
  };
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> toks;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) toks.push_back(line.substr(i, j - i));
      i = j;
    }
    if (toks.empty() || toks[0][0] == '#') continue;
    if (toks.size() < 3) {
      throw Error(ErrorCode::Parse, "line " + std::to_string(number) + ": expected 's t value'");
    }
    std::string value;
    for (std::size_t k = 2; k < toks.size(); ++k) value += toks[k];
    c.set(resolve(toks[0]), resolve(toks[1]), CycNum::parse(value, order));
  }
  check_cocycle(m, c);
  return c;
}

// ------------------------------------------------------------ nil reports

NilReport analyze_nilpotent(const Semigroup& m) {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::NotNilpotentAdjoined, why); };
  if (!m.identity() || !m.zero() || *m.identity() == *m.zero()) {
    fail("needs an identity and a distinct zero");
  }
  NilReport r;
  r.identity = *m.identity();
  r.zero = *m.zero();
  const std::size_t n = m.size();
  std::vector<Elem> s;
  for (Elem a = 0; a < n; ++a) {
    if (a != r.identity) s.push_back(a);
  }
  for (Elem a : s) {
    for (Elem b : s) {
      if (m.mul(a, b) == r.identity) fail("identity is a product of nonidentity elements");
    }
  }
  // Powers S^j until {z}.
  std::set<Elem> power(s.begin(), s.end());
  unsigned j = 1;
  while (!(power.size() == 1 && *power.begin() == r.zero)) {
    std::set<Elem> next;
    for (Elem a : power) {
      for (Elem b : s) next.insert(m.mul(a, b));
    }
    if (next == power) fail("the nonidentity elements are not nilpotent");
    power = std::move(next);
    ++j;
  }
  r.nilpotency_index = j;
  for (Elem a = 0; a < n; ++a) {
    if (a == r.zero) continue;
    bool left = true;
    bool right = true;
    for (Elem b : s) {
      left = left && m.mul(a, b) == r.zero;
      right = right && m.mul(b, a) == r.zero;
    }
    if (left) r.left_annihilating.push_back(a);
    if (right) r.right_annihilating.push_back(a);
    if (left && right) r.annihilating.push_back(a);
  }
  if (r.annihilating.size() == 1) r.unique_annihilator = r.annihilating.front();
  return r;
}

Matrix<CycNum> annihilator_matrix(const Semigroup& m, const Cocycle* c) {
  const NilReport r = analyze_nilpotent(m);
  if (!r.unique_annihilator) {
    throw Error(ErrorCode::NoUniqueAnnihilator,
                std::to_string(r.annihilating.size()) + " annihilating elements");
  }
  if (c) check_cocycle(m, *c);
  std::vector<Elem> basis;
  for (Elem a = 0; a < m.size(); ++a) {
    if (a != r.zero) basis.push_back(a);
  }
  Matrix<CycNum> a(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (m.mul(basis[i], basis[j]) == *r.unique_annihilator) {
        a(i, j) = c ? (*c)(basis[i], basis[j]) : CycNum(1L);
      }
    }
  }
  return a;
}

Factorization factor_nil_adjoined(const Semigroup& m, const Cocycle* c, const VerifyOptions& opt) {
  const NilReport r = analyze_nilpotent(m);
  const CayleyMode mode = c ? CayleyMode::Twisted : CayleyMode::Contracted;
  const Reference ref = matrix_reference(cayley_matrix(m, mode, c).entries, opt);
  Factorization f;
  f.provenance = "nilpotent-adjoined";
  if (!r.unique_annihilator) {
    f = zero_factorization(f.provenance);
    f.notes.push_back("no unique annihilating element (" +
                      std::to_string(r.annihilating.size()) + " found)");
    settle(f, ref, opt);
    return f;
  }
  const CycNum det_a = det_cyc_matrix(annihilator_matrix(m, c));
  f.notes.push_back("det A = " + det_a.to_string());
  if (det_a.is_zero()) {
    f = zero_factorization(f.provenance);
    f.notes.push_back("det A = 0");
    settle(f, ref, opt);
    return f;
  }
  f.factors.push_back({Poly::variable(*r.unique_annihilator),
                       static_cast<unsigned>(m.size() - 1)});
  settle(f, ref, opt, det_a);
  return f;
}

}  // namespace frobdet
