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

#include "frobdet/cyclotomic.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

#include "frobdet/error.hpp"

namespace frobdet {

unsigned gcd_u(unsigned a, unsigned b) {
  while (b != 0) {
    unsigned t = a % b;
    a = b;
    b = t;
  }
  return a;
}

unsigned lcm_u(unsigned a, unsigned b) { return a / gcd_u(a, b) * b; }

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

constexpr unsigned kMaxCyclotomicOrder = 10000;

// Divides num by the monic polynomial den; both constant term first.
// Asserts the remainder vanishes.
std::vector<BigInt> exact_div_monic(std::vector<BigInt> num,
                                    const std::vector<BigInt>& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) {
    throw Error(ErrorCode::InexactDivision, "cyclotomic division degree");
  }
  std::vector<BigInt> quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    BigInt c = num[k];
    if (c == 0) continue;
    quot[k - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  for (const auto& r : num) {
    if (r != 0) throw Error(ErrorCode::InexactDivision, "cyclotomic remainder");
  }
  return quot;
}

std::mutex& poly_cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<unsigned, std::vector<BigInt>>& poly_cache() {
  static std::map<unsigned, std::vector<BigInt>> cache;
  return cache;
}

std::vector<BigInt> cyclotomic_uncached(unsigned n) {
  std::vector<BigInt> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) num = exact_div_monic(std::move(num), cyclotomic_polynomial(d));
  }
  return num;
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(unsigned n) {
  if (n < 1 || n > kMaxCyclotomicOrder) {
    throw Error(ErrorCode::OutOfRange,
                "cyclotomic order " + std::to_string(n) + " not in [1, 10000]");
  }
  {
    std::lock_guard<std::mutex> lock(poly_cache_mutex());
    auto it = poly_cache().find(n);
    if (it != poly_cache().end()) return it->second;
  }
  auto result = cyclotomic_uncached(n);
  std::lock_guard<std::mutex> lock(poly_cache_mutex());
  poly_cache().emplace(n, result);
  return result;
}

namespace detail {

struct CycloField {
  unsigned order = 1;
  unsigned phi = 1;
  std::vector<BigInt> modulus;  // Phi_N, constant term first, monic
  // x^k mod Phi_N for 0 <= k < order, when order is small enough
  std::vector<std::vector<BigInt>> powers;

  // Reduces a coefficient vector of arbitrary length modulo Phi_N.
  void reduce(std::vector<Rat>& v) const {
    for (std::size_t k = v.size(); k-- > phi;) {
      if (v[k] == 0) continue;
      Rat c = v[k];
      for (std::size_t j = 0; j <= phi; ++j) {
        if (modulus[j] != 0) v[k - phi + j] -= c * modulus[j];
      }
    }
    v.resize(phi);
  }
};

const CycloField* cyclo_field(unsigned order) {
  static std::mutex m;
  static std::map<unsigned, std::unique_ptr<CycloField>> fields;
  {
    std::lock_guard<std::mutex> lock(m);
    auto it = fields.find(order);
    if (it != fields.end()) return it->second.get();
  }
  auto f = std::make_unique<CycloField>();
  f->order = order;
  f->modulus = cyclotomic_polynomial(order);
  f->phi = static_cast<unsigned>(f->modulus.size() - 1);
  if (order <= 2048) {
    f->powers.reserve(order);
    std::vector<BigInt> cur(f->phi, 0);
    cur[0] = 1;
    for (unsigned k = 0; k < order; ++k) {
      f->powers.push_back(cur);
      // multiply by x and reduce
      BigInt top = cur[f->phi - 1];
      for (unsigned j = f->phi - 1; j > 0; --j) cur[j] = cur[j - 1];
      cur[0] = 0;
      if (top != 0) {
        for (unsigned j = 0; j < f->phi; ++j) cur[j] -= top * f->modulus[j];
      }
    }
  }
  std::lock_guard<std::mutex> lock(m);
  auto [it, inserted] = fields.emplace(order, std::move(f));
  return it->second.get();
}

}  // namespace detail

using detail::cyclo_field;

CycNum::CycNum() : f_(cyclo_field(1)), c_(1) {}

CycNum::CycNum(unsigned order) : f_(cyclo_field(order)), c_(f_->phi) {}

CycNum::CycNum(unsigned order, const Rat& value) : CycNum(order) {
  c_[0] = value;
  c_[0].canonicalize();
}

CycNum::CycNum(long value) : f_(cyclo_field(1)), c_(1) { c_[0] = value; }

CycNum::CycNum(const Rat& value) : f_(cyclo_field(1)), c_(1, value) { c_[0].canonicalize(); }

CycNum CycNum::root_of_unity(unsigned order, long long k) {
  CycNum out(order);
  long long r = k % static_cast<long long>(order);
  if (r < 0) r += order;
  const auto* f = out.f_;
  if (static_cast<unsigned>(r) < f->phi) {
    out.c_[r] = 1;
  } else if (!f->powers.empty()) {
    for (unsigned j = 0; j < f->phi; ++j) out.c_[j] = f->powers[r][j];
  } else {
    std::vector<Rat> v(r + 1);
    v[r] = 1;
    f->reduce(v);
    out.c_ = std::move(v);
  }
  return out;
}

CycNum CycNum::from_coords(unsigned order, std::vector<Rat> coords) {
  CycNum out(order);
  if (coords.size() > out.c_.size()) {
    out.f_->reduce(coords);
  }
  coords.resize(out.c_.size());
  for (auto& c : coords) c.canonicalize();
  out.c_ = std::move(coords);
  return out;
}

unsigned CycNum::order() const noexcept { return f_->order; }

bool CycNum::is_zero() const {
  for (const auto& x : c_) {
    if (x != 0) return false;
  }
  return true;
}

bool CycNum::is_one() const {
  if (c_[0] != 1) return false;
  for (std::size_t j = 1; j < c_.size(); ++j) {
    if (c_[j] != 0) return false;
  }
  return true;
}

bool CycNum::is_rational() const {
  for (std::size_t j = 1; j < c_.size(); ++j) {
    if (c_[j] != 0) return false;
  }
  return true;
}

Rat CycNum::rational_value() const {
  if (!is_rational()) {
    throw Error(ErrorCode::OutOfRange, to_string() + " is not rational");
  }
  return c_[0];
}

CycNum CycNum::embed(unsigned m) const {
  if (m % order() != 0) {
    throw Error(ErrorCode::OutOfRange, "cannot embed order " +
                                           std::to_string(order()) + " into " +
                                           std::to_string(m));
  }
  CycNum out(m);
  if (f_->phi == 1) {
    out.c_[0] = c_[0];
    return out;
  }
  const unsigned step = m / order();
  std::vector<Rat> v(static_cast<std::size_t>(step) * (c_.size() - 1) + 1);
  for (std::size_t j = 0; j < c_.size(); ++j) v[j * step] = c_[j];
  out.f_->reduce(v);
  out.c_ = std::move(v);
  return out;
}

void CycNum::lift_to(unsigned m) {
  if (m == order()) return;
  *this = embed(m);
}

CycNum CycNum::conj() const {
  if (f_->phi == 1) return *this;
  const unsigned n = order();
  std::vector<Rat> v(n);
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] != 0) v[(n - j) % n] += c_[j];
  }
  return from_coords(n, std::move(v));
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  const unsigned phi = f_->phi;
  if (phi == 1) {
    CycNum out(*this);
    out.c_[0] = 1 / c_[0];
    return out;
  }
  // Solve (multiplication by *this) * b = 1 over Q.
  Matrix<Rat> a(phi, phi + 1, Rat(0));
  CycNum basis(order());
  for (unsigned j = 0; j < phi; ++j) {
    CycNum xj = root_of_unity(order(), j);
    CycNum col = *this * xj;
    for (unsigned i = 0; i < phi; ++i) a(i, j) = col.c_[i];
  }
  a(0, phi) = 1;
  for (unsigned col = 0; col < phi; ++col) {
    unsigned piv = col;
    while (piv < phi && a(piv, col) == 0) ++piv;
    if (piv == phi) throw Error(ErrorCode::DivisionByZero, "singular inverse");
    a.swap_rows(piv, col);
    Rat inv = 1 / a(col, col);
    for (unsigned j = col; j <= phi; ++j) a(col, j) *= inv;
    for (unsigned i = 0; i < phi; ++i) {
      if (i == col || a(i, col) == 0) continue;
      Rat factor = a(i, col);
      for (unsigned j = col; j <= phi; ++j) a(i, j) -= factor * a(col, j);
    }
  }
  CycNum out(order());
  for (unsigned i = 0; i < phi; ++i) out.c_[i] = a(i, phi);
  return out;
}

CycNum CycNum::pow(unsigned long e) const {
  CycNum result(order(), Rat(1));
  CycNum base = *this;
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (o.f_ != f_) {
    if (o.f_->phi == 1) {
      c_[0] += o.c_[0];
      return *this;
    }
    const unsigned m = lcm_u(order(), o.order());
    lift_to(m);
    if (o.order() != m) return *this += o.embed(m);
  }
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  if (o.f_ != f_) {
    if (o.f_->phi == 1) {
      c_[0] -= o.c_[0];
      return *this;
    }
    const unsigned m = lcm_u(order(), o.order());
    lift_to(m);
    if (o.order() != m) return *this -= o.embed(m);
  }
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= o.c_[j];
  return *this;
}

CycNum& CycNum::operator*=(const CycNum& o) {
  if (o.f_->phi == 1) {
    if (o.f_ != f_ && f_->phi == 1) {
      // both rational: keep the larger order label
      if (o.order() > order()) f_ = o.f_;
    }
    for (auto& x : c_) x *= o.c_[0];
    return *this;
  }
  if (f_->phi == 1) {
    Rat s = c_[0];
    *this = o;
    for (auto& x : c_) x *= s;
    return *this;
  }
  if (o.f_ != f_) {
    const unsigned m = lcm_u(order(), o.order());
    lift_to(m);
    if (o.order() != m) return *this *= o.embed(m);
  }
  const std::size_t phi = c_.size();
  std::vector<Rat> prod(2 * phi - 1);
  for (std::size_t i = 0; i < phi; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
    }
  }
  f_->reduce(prod);
  c_ = std::move(prod);
  return *this;
}

CycNum CycNum::operator-() const {
  CycNum out(*this);
  for (auto& x : out.c_) x = -x;
  return out;
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.f_ == b.f_) return a.c_ == b.c_;
  if (a.f_->phi == 1 || b.f_->phi == 1) {
    return a.is_rational() && b.is_rational() && a.c_[0] == b.c_[0];
  }
  const unsigned m = lcm_u(a.order(), b.order());
  return a.embed(m).c_ == b.embed(m).c_;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

std::string CycNum::to_string() const {
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rat& a = c_[k];
    if (a == 0) continue;
    const bool neg = a < 0;
    Rat mag = neg ? Rat(-a) : a;
    if (!out.empty()) {
      out += neg ? "-" : "+";
    } else if (neg) {
      out += "-";
    }
    if (k == 0) {
      out += rat_to_string(mag);
      continue;
    }
    if (mag != 1) out += rat_to_string(mag) + "*";
    out += "z";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

bool CycNum::is_monomial_form() const {
  int nonzero = 0;
  for (const auto& x : c_) nonzero += (x != 0);
  return nonzero <= 1;
}

CycNum CycNum::parse(std::string_view text, unsigned order) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw Error(ErrorCode::Parse, "empty cyclotomic number");
  std::vector<Rat> v(order);
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::Parse, "bad cyclotomic number '" + std::string(text) +
                                      "': " + why);
  };
  auto read_uint = [&]() {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) fail("expected digits");
    return s.substr(start, i - start);
  };
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      fail("expected sign between terms");
    }
    first = false;
    Rat coef(1);
    bool have_coef = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::string num = read_uint();
      std::string den = "1";
      if (i < s.size() && s[i] == '/') {
        ++i;
        den = read_uint();
      }
      coef = Rat(BigInt(num), BigInt(den));
      if (BigInt(den) == 0) fail("zero denominator");
      coef.canonicalize();
      have_coef = true;
    }
    unsigned long power = 0;
    if (have_coef && i < s.size() && s[i] == '*') {
      ++i;
      if (i >= s.size() || s[i] != 'z') fail("expected z after *");
    }
    if (i < s.size() && s[i] == 'z') {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        power = std::stoul(read_uint());
      }
    } else if (!have_coef) {
      fail("expected term");
    }
    v[power % order] += sign * coef;
  }
  return from_coords(order, std::move(v));
}

std::ostream& operator<<(std::ostream& os, const CycNum& x) {
  return os << x.to_string();
}

}  // namespace frobdet
