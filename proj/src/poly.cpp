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

#include "frobdet/poly.hpp"

#include <algorithm>

#include "frobdet/error.hpp"

namespace frobdet {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(VarId v, std::uint32_t exp) {
  if (exp > 0) {
    f_.emplace_back(v, exp);
    degree_ = exp;
  }
}

std::uint32_t Monomial::exponent(VarId v) const {
  auto it = std::lower_bound(f_.begin(), f_.end(), std::make_pair(v, 0U));
  return (it != f_.end() && it->first == v) ? it->second : 0;
}

bool Monomial::divides(const Monomial& o) const {
  if (degree_ > o.degree_) return false;
  std::size_t j = 0;
  for (const auto& [v, e] : f_) {
    while (j < o.f_.size() && o.f_[j].first < v) ++j;
    if (j == o.f_.size() || o.f_[j].first != v || o.f_[j].second < e) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  Monomial out;
  std::size_t i = 0;
  for (const auto& [v, e] : o.f_) {
    std::uint32_t sub = 0;
    while (i < f_.size() && f_[i].first < v) ++i;
    if (i < f_.size() && f_[i].first == v) sub = f_[i].second;
    if (e > sub) out.f_.emplace_back(v, e - sub);
  }
  out.degree_ = o.degree_ - degree_;
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.f_.reserve(a.f_.size() + b.f_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.f_.size() || j < b.f_.size()) {
    if (j == b.f_.size() || (i < a.f_.size() && a.f_[i].first < b.f_[j].first)) {
      out.f_.push_back(a.f_[i++]);
    } else if (i == a.f_.size() || b.f_[j].first < a.f_[i].first) {
      out.f_.push_back(b.f_[j++]);
    } else {
      out.f_.emplace_back(a.f_[i].first, a.f_[i].second + b.f_[j].second);
      ++i;
      ++j;
    }
  }
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t n = std::min(fa.size(), fb.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (fa[k].first != fb[k].first) return fa[k].first < fb[k].first;
    if (fa[k].second != fb[k].second) return fa[k].second > fb[k].second;
  }
  return false;  // equal degree and equal prefix means equal
}

std::string default_var_name(VarId v) { return "x" + std::to_string(v); }

// -------------------------------------------------------------------- Poly

Poly::Poly(const CycNum& c) {
  if (!c.is_zero()) terms_.emplace(Monomial(), c);
}

Poly Poly::variable(VarId v) { return term(Monomial(v), CycNum(1L)); }

Poly Poly::term(const Monomial& m, const CycNum& c) {
  Poly p;
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) {
    if (m.degree() != d) return false;
  }
  return true;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

CycNum Poly::constant_term() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? CycNum() : it->second;
}

std::set<VarId> Poly::variables() const {
  std::set<VarId> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, e] : m.factors()) out.insert(v);
  }
  return out;
}

unsigned Poly::order() const {
  unsigned n = 1;
  for (const auto& [m, c] : terms_) n = lcm_u(n, c.order());
  return n;
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) throw Error(ErrorCode::OutOfRange, "zero polynomial has no leading term");
  return terms_.begin()->first;
}

const CycNum& Poly::leading_coefficient() const {
  if (terms_.empty()) throw Error(ErrorCode::OutOfRange, "zero polynomial has no leading term");
  return terms_.begin()->second;
}

void Poly::add_term(const Monomial& m, const CycNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly Poly::scaled(const CycNum& c) const {
  if (c.is_zero()) return Poly();
  Poly out(*this);
  for (auto& [m, x] : out.terms_) x *= c;
  return out;
}

Poly Poly::times_term(const Monomial& m, const CycNum& c) const {
  Poly out;
  if (c.is_zero()) return out;
  // Multiplying by a monomial preserves the order, so hinted insertion at
  // the end is linear.
  for (const auto& [mm, x] : terms_) out.terms_.emplace_hint(out.terms_.end(), mm * m, x * c);
  return out;
}

void Poly::add_product_term(const Poly& o, const Monomial& m, const CycNum& c) {
  if (c.is_zero()) return;
  for (const auto& [mm, x] : o.terms_) add_term(mm * m, x * c);
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.terms_.size() < b.terms_.size()) return b * a;
  Poly out;
  for (const auto& [m, c] : b.terms_) out.add_product_term(a, m, c);
  return out;
}

Poly Poly::pow(unsigned e) const {
  Poly result(CycNum(1L));
  Poly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ib = b.terms_.begin();
  for (const auto& [m, c] : a.terms_) {
    if (!(ib->first == m) || ib->second != c) return false;
    ++ib;
  }
  return true;
}

Poly Poly::exact_div(const Poly& d) const {
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  const Monomial& dm = d.leading_monomial();
  const CycNum dc_inv = d.leading_coefficient().inverse();
  Poly r = *this;
  Poly q;
  while (!r.is_zero()) {
    const Monomial& rm = r.leading_monomial();
    if (!dm.divides(rm)) {
      throw Error(ErrorCode::InexactDivision, "leading monomial not divisible");
    }
    Monomial t = dm.quotient_of(rm);
    CycNum tc = r.leading_coefficient() * dc_inv;
    q.add_term(t, tc);
    r.add_product_term(d, t, -tc);
  }
  return q;
}

CycNum Poly::eval(const std::map<VarId, CycNum>& point) const {
  return eval([&](VarId v) {
    auto it = point.find(v);
    if (it == point.end()) {
      throw Error(ErrorCode::MissingVariable, "no value for " + default_var_name(v));
    }
    return it->second;
  });
}

CycNum Poly::eval(const std::function<CycNum(VarId)>& point) const {
  std::map<VarId, CycNum> cache;
  CycNum total;
  for (const auto& [m, c] : terms_) {
    CycNum t = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = cache.find(v);
      if (it == cache.end()) it = cache.emplace(v, point(v)).first;
      t *= it->second.pow(e);
    }
    total += t;
  }
  return total;
}

namespace {

std::string monomial_string(const Monomial& m, const VarNamer& namer) {
  std::string s;
  for (const auto& [v, e] : m.factors()) {
    if (!s.empty()) s += "*";
    s += namer(v);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

// Renders c*m; the result starts with '-' when the term reads as negative.
std::string term_string(const CycNum& c, const std::string& mono) {
  if (mono.empty()) {
    std::string cs = c.to_string();
    return c.is_monomial_form() ? cs : "(" + cs + ")";
  }
  if (c.is_one()) return mono;
  if ((-c).is_one()) return "-" + mono;
  if (c.is_monomial_form()) return c.to_string() + "*" + mono;
  return "(" + c.to_string() + ")*" + mono;
}

}  // namespace

std::string Poly::to_string(const VarNamer& namer) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string t = term_string(c, monomial_string(m, namer));
    if (!out.empty() && t[0] != '-') out += "+";
    out += t;
  }
  return out;
}

// ----------------------------------------------------------------- LinForm

LinForm::LinForm(std::map<VarId, CycNum> coeffs) {
  for (auto& [v, c] : coeffs) {
    if (!c.is_zero()) c_.emplace(v, std::move(c));
  }
}

LinForm LinForm::variable(VarId v) { return LinForm({{v, CycNum(1L)}}); }

void LinForm::add(VarId v, const CycNum& c) {
  auto [it, inserted] = c_.try_emplace(v, c);
  if (!inserted) it->second += c;
  if (it->second.is_zero()) c_.erase(it);
}

LinForm LinForm::scaled(const CycNum& c) const {
  if (c.is_zero()) return LinForm();
  LinForm out(*this);
  for (auto& [v, x] : out.c_) x *= c;
  return out;
}

Poly LinForm::to_poly() const {
  Poly p;
  for (const auto& [v, c] : c_) p += Poly::term(Monomial(v), c);
  return p;
}

std::pair<CycNum, LinForm> LinForm::normalized() const {
  if (c_.empty()) throw Error(ErrorCode::OutOfRange, "zero linear form");
  CycNum lead = c_.begin()->second;
  return {lead, scaled(lead.inverse())};
}

CycNum LinForm::eval(const std::function<CycNum(VarId)>& point) const {
  CycNum total;
  for (const auto& [v, c] : c_) total += c * point(v);
  return total;
}

std::string LinForm::to_string(const VarNamer& namer) const { return to_poly().to_string(namer); }

bool operator==(const LinForm& a, const LinForm& b) {
  if (a.c_.size() != b.c_.size()) return false;
  auto ib = b.c_.begin();
  for (const auto& [v, c] : a.c_) {
    if (ib->first != v || ib->second != c) return false;
    ++ib;
  }
  return true;
}

LinForm operator+(const LinForm& a, const LinForm& b) {
  LinForm out(a);
  for (const auto& [v, c] : b.c_) out.add(v, c);
  return out;
}

LinForm to_linform(const Poly& p) {
  std::map<VarId, CycNum> coeffs;
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() != 1) throw Error(ErrorCode::OutOfRange, "polynomial is not linear homogeneous");
    coeffs.emplace(m.factors().front().first, c);
  }
  return LinForm(std::move(coeffs));
}

Poly substitute_linear(const Poly& p, const std::map<VarId, LinForm>& sub) {
  std::map<VarId, Poly> images;
  for (VarId v : p.variables()) {
    auto it = sub.find(v);
    if (it == sub.end()) {
      throw Error(ErrorCode::MissingVariable, "no image for " + default_var_name(v));
    }
    images.emplace(v, it->second.to_poly());
  }
  // Cache powers of images; monomials of determinants reuse them heavily.
  std::map<std::pair<VarId, std::uint32_t>, Poly> powers;
  auto power = [&](VarId v, std::uint32_t e) -> const Poly& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, images.at(v).pow(e)).first;
    return it->second;
  };
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    Poly t(c);
    for (const auto& [v, e] : m.factors()) t = t * power(v, e);
    out += t;
  }
  return out;
}

}  // namespace frobdet
