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

// Naive reference computations shared by the tests. Nothing here calls the
// determinant or factorization code under test.

#ifndef FROBDET_TESTS_ORACLE_HPP
#define FROBDET_TESTS_ORACLE_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "frobdet/matrix.hpp"
#include "frobdet/poly.hpp"
#include "frobdet/semigroup.hpp"

namespace oracle {

using frobdet::Elem;
using frobdet::Matrix;
using frobdet::Poly;

inline int perm_sign(const std::vector<std::size_t>& p) {
  int sign = 1;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

/// Sum over permutations, pruning on zero entries.
template <class T>
T leibniz(const Matrix<T>& m, const T& zero, const T& one) {
  const std::size_t n = m.rows();
  T total = zero;
  std::vector<std::size_t> perm(n);
  std::vector<char> used(n, 0);
  std::vector<T> partial(n + 1, one);
  auto rec = [&](auto& self, std::size_t row) -> void {
    if (row == n) {
      if (perm_sign(perm) > 0) {
        total = total + partial[n];
      } else {
        total = total - partial[n];
      }
      return;
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || m(row, c) == zero) continue;
      used[c] = 1;
      perm[row] = c;
      partial[row + 1] = partial[row] * m(row, c);
      self(self, row + 1);
      used[c] = 0;
    }
  };
  rec(rec, 0);
  return total;
}

inline Poly leibniz(const Matrix<Poly>& m) { return leibniz(m, Poly(), Poly(1L)); }

/// Cayley matrix straight from the table: (s,t) -> x_{st}; the contracted
/// version drops the zero row, column and variable.
inline Matrix<Poly> cayley(const frobdet::Semigroup& s, bool contracted = false) {
  std::vector<Elem> basis;
  for (Elem x = 0; x < s.size(); ++x) {
    if (!contracted || x != *s.zero()) basis.push_back(x);
  }
  Matrix<Poly> m(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Elem p = s.mul(basis[i], basis[j]);
      if (!contracted || p != *s.zero()) m(i, j) = Poly::variable(p);
    }
  }
  return m;
}

inline Poly theta(const frobdet::Semigroup& s, bool contracted = false) {
  return leibniz(cayley(s, contracted));
}

inline bool associative(std::size_t n, const std::vector<Elem>& t) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]]) return false;
  return true;
}

/// Number of associative tables on n elements (optionally commutative /
/// idempotent), running through every filling of the free cells.
inline std::size_t count_tables(unsigned n, bool commutative, bool idempotent) {
  std::vector<std::pair<unsigned, unsigned>> free;
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = commutative ? a : 0; b < n; ++b)
      if (!(idempotent && a == b)) free.emplace_back(a, b);
  std::vector<Elem> t(n * n, 0);
  for (unsigned a = 0; a < n; ++a)
    if (idempotent) t[a * n + a] = a;
  std::vector<Elem> digit(free.size(), 0);
  std::size_t count = 0;
  while (true) {
    for (std::size_t k = 0; k < free.size(); ++k) {
      t[free[k].first * n + free[k].second] = digit[k];
      if (commutative) t[free[k].second * n + free[k].first] = digit[k];
    }
    if (associative(n, t)) ++count;
    std::size_t k = 0;
    while (k < digit.size() && ++digit[k] == n) digit[k++] = 0;
    if (k == digit.size()) break;
  }
  return count;
}

inline long gcd_det_by_elimination(unsigned n) {
  Matrix<frobdet::Rat> m(n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) m(i, j) = std::gcd(i + 1, j + 1);
  frobdet::Rat det = 1;
  for (unsigned c = 0; c < n; ++c) {
    unsigned piv = c;
    while (piv < n && m(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      m.swap_rows(piv, c);
      det = -det;
    }
    det *= m(c, c);
    for (unsigned r = c + 1; r < n; ++r) {
      const frobdet::Rat f = m(r, c) / m(c, c);
      for (unsigned k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det.get_num().get_si();
}

}  // namespace oracle

#endif  // FROBDET_TESTS_ORACLE_HPP
