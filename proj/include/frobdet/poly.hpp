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

#ifndef FROBDET_POLY_HPP
#define FROBDET_POLY_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "frobdet/cyclotomic.hpp"

namespace frobdet {

using VarId = std::uint32_t;

/// Sparse exponent vector, sorted by variable id, no zero exponents.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(VarId v, std::uint32_t exp = 1);

  const std::vector<std::pair<VarId, std::uint32_t>>& factors() const noexcept {
    return f_;
  }
  std::uint32_t degree() const noexcept { return degree_; }
  std::uint32_t exponent(VarId v) const;
  bool is_one() const noexcept { return f_.empty(); }

  bool divides(const Monomial& o) const;
  /// Requires divides(o); returns o / *this.
  Monomial quotient_of(const Monomial& o) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.f_ == b.f_;
  }

 private:
  std::vector<std::pair<VarId, std::uint32_t>> f_;
  std::uint32_t degree_ = 0;
};

/// Graded lexicographic order, larger monomials first: higher total degree
/// wins, ties broken by the larger exponent at the first differing
/// variable (x0 > x1 > ...).
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

using VarNamer = std::function<std::string(VarId)>;
std::string default_var_name(VarId v);

class LinForm;

/// Sparse multivariate polynomial with cyclotomic coefficients, kept in
/// canonical graded-lex form with no stored zeros.
class Poly {
 public:
  using Terms = std::map<Monomial, CycNum, GrlexGreater>;

  Poly() = default;
  Poly(const CycNum& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(CycNum(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly variable(VarId v);
  static Poly term(const Monomial& m, const CycNum& c);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  /// -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  bool is_constant() const;
  /// Constant term value; zero when absent.
  CycNum constant_term() const;
  std::set<VarId> variables() const;
  /// lcm of coefficient orders.
  unsigned order() const;

  const Monomial& leading_monomial() const;
  const CycNum& leading_coefficient() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly operator-() const;
  Poly scaled(const CycNum& c) const;
  /// Multiplies by c * m in place (cheap for single-term factors).
  Poly times_term(const Monomial& m, const CycNum& c) const;
  /// Adds c * m * o into *this.
  void add_product_term(const Poly& o, const Monomial& m, const CycNum& c);
  Poly pow(unsigned e) const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Exact quotient; throws InexactDivision when the divisor does not
  /// divide, DivisionByZero for a zero divisor.
  Poly exact_div(const Poly& d) const;

  /// Evaluates at integer (or cyclotomic) values; throws MissingVariable.
  CycNum eval(const std::map<VarId, CycNum>& point) const;
  CycNum eval(const std::function<CycNum(VarId)>& point) const;

  std::string to_string(const VarNamer& namer = default_var_name) const;

 private:
  void add_term(const Monomial& m, const CycNum& c);
  Terms terms_;
};

/// Homogeneous linear polynomial sum_v c_v x_v.
class LinForm {
 public:
  LinForm() = default;
  LinForm(std::map<VarId, CycNum> coeffs);  // NOLINT(google-explicit-constructor)
  static LinForm variable(VarId v);

  const std::map<VarId, CycNum>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  void add(VarId v, const CycNum& c);
  LinForm scaled(const CycNum& c) const;
  Poly to_poly() const;
  /// Returns (c, L') with *this == c * L' and L' having coefficient 1 on
  /// its least-index variable.
  std::pair<CycNum, LinForm> normalized() const;
  CycNum eval(const std::function<CycNum(VarId)>& point) const;
  std::string to_string(const VarNamer& namer = default_var_name) const;

  friend bool operator==(const LinForm& a, const LinForm& b);
  friend LinForm operator+(const LinForm& a, const LinForm& b);

 private:
  std::map<VarId, CycNum> c_;
};

/// Converts a degree-1 homogeneous polynomial; throws OutOfRange otherwise.
LinForm to_linform(const Poly& p);

/// Replaces each variable of p by its linear image. Throws MissingVariable
/// if some variable of p has no image.
Poly substitute_linear(const Poly& p, const std::map<VarId, LinForm>& sub);

}  // namespace frobdet

#endif  // FROBDET_POLY_HPP
