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

#ifndef FROBDET_CYCLOTOMIC_HPP
#define FROBDET_CYCLOTOMIC_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "frobdet/matrix.hpp"

namespace frobdet {

/// Integer coefficients of the n-th cyclotomic polynomial, constant term
/// first. Computed by exact division of x^n - 1 by the cyclotomic
/// polynomials of the proper divisors of n. Valid for 1 <= n <= 10^4.
std::vector<BigInt> cyclotomic_polynomial(unsigned n);

unsigned euler_phi(unsigned n);
unsigned gcd_u(unsigned a, unsigned b);
unsigned lcm_u(unsigned a, unsigned b);

namespace detail {
struct CycloField;
const CycloField* cyclo_field(unsigned order);
}  // namespace detail

/// Element of the cyclotomic field Q(zeta_N), stored as the coordinates of a
/// polynomial in zeta_N of degree < phi(N), i.e. reduced modulo Phi_N.
///
/// Values of different orders may be mixed freely: both operands are lifted
/// to the lcm of their orders first, so equality is field equality.
class CycNum {
 public:
  CycNum();
  explicit CycNum(unsigned order);
  CycNum(unsigned order, const Rat& value);
  CycNum(long value);  // NOLINT(google-explicit-constructor)
  CycNum(const Rat& value);  // NOLINT(google-explicit-constructor)

  static CycNum root_of_unity(unsigned order, long long k);
  static CycNum from_coords(unsigned order, std::vector<Rat> coords);

  unsigned order() const noexcept;
  const std::vector<Rat>& coords() const noexcept { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Throws OutOfRange when the value is not rational.
  Rat rational_value() const;

  /// Re-expresses the value in Q(zeta_m); requires order() | m.
  CycNum embed(unsigned m) const;
  /// Complex conjugation zeta^k -> zeta^{-k}.
  CycNum conj() const;
  /// Throws DivisionByZero for zero.
  CycNum inverse() const;
  CycNum pow(unsigned long e) const;

  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o) { return *this *= o.inverse(); }
  CycNum operator-() const;

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  /// Canonical form: polynomial in `z` with highest power first,
  /// e.g. "1/2*z^2-3". Zero prints as "0".
  std::string to_string() const;
  /// Inverse of to_string; the result has the given order.
  static CycNum parse(std::string_view text, unsigned order);

  /// True when the string form has a single term (used to decide on
  /// parentheses when printing polynomials).
  bool is_monomial_form() const;

 private:
  void lift_to(unsigned m);

  const detail::CycloField* f_;
  std::vector<Rat> c_;
};

std::ostream& operator<<(std::ostream& os, const CycNum& x);

std::string rat_to_string(const Rat& r);

}  // namespace frobdet

#endif  // FROBDET_CYCLOTOMIC_HPP
