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

#include "frobdet/det.hpp"

#include <bit>
#include <cmath>
#include <numeric>

#include "frobdet/error.hpp"

namespace frobdet {

namespace {

// acc += sign * entry * minor, with a fast path for one-term entries.
void accumulate(Poly& acc, const Poly& entry, const Poly& minor, bool negate) {
  if (entry.is_zero() || minor.is_zero()) return;
  if (entry.size() == 1) {
    const auto& [m, c] = *entry.terms().begin();
    acc.add_product_term(minor, m, negate ? -c : c);
    return;
  }
  Poly prod = entry * minor;
  if (negate) {
    acc -= prod;
  } else {
    acc += prod;
  }
}

Poly cofactor(const Matrix<Poly>& m, std::size_t row, std::vector<std::size_t>& cols) {
  if (cols.size() == 1) return m(row, cols[0]);
  Poly acc;
  for (std::size_t p = 0; p < cols.size(); ++p) {
    const Poly& entry = m(row, cols[p]);
    if (entry.is_zero()) continue;
    std::size_t c = cols[p];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(p));
    Poly minor = cofactor(m, row + 1, cols);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(p), c);
    accumulate(acc, entry, minor, p % 2 == 1);
  }
  return acc;
}

// Laplace expansion along rows, bottom-up, memoizing every minor on the
// trailing rows by its column subset.
Poly laplace_minors(const Matrix<Poly>& m) {
  const std::size_t n = m.rows();
  if (n > 24) throw Error(ErrorCode::DimensionCap, "minor table too large");
  const std::uint32_t full = (n == 32) ? 0xFFFFFFFFU : ((1U << n) - 1U);
  std::vector<Poly> prev(std::size_t{1} << n);
  std::vector<Poly> cur(std::size_t{1} << n);
  for (std::size_t j = 0; j < n; ++j) prev[std::size_t{1} << j] = m(n - 1, j);
  for (std::size_t k = n - 1; k-- > 0;) {
    const int want = static_cast<int>(n - k);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      if (std::popcount(mask) != want) continue;
      Poly acc;
      int pos = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (!(mask >> j & 1U)) continue;
        accumulate(acc, m(k, j), prev[mask & ~(1U << j)], pos % 2 == 1);
        ++pos;
      }
      cur[mask] = std::move(acc);
    }
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      if (std::popcount(mask) == want - 1) prev[mask] = Poly();
    }
    std::swap(prev, cur);
  }
  return prev[full];
}

Poly bareiss(Matrix<Poly> m) {
  const std::size_t n = m.rows();
  bool negate = false;
  Poly prev(1L);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k).is_zero()) ++p;
    if (p == n) return Poly();
    if (p != k) {
      m.swap_rows(p, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = num.exact_div(prev);
      }
      m(i, k) = Poly();
    }
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

}  // namespace

Poly det_poly_matrix(const Matrix<Poly>& m, std::size_t cap, DetMethod method) {
  if (!m.square()) throw Error(ErrorCode::OutOfRange, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n > cap) {
    throw Error(ErrorCode::DimensionCap,
                "dimension " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
  if (n == 0) return Poly(1L);
  if (method == DetMethod::Auto) method = n <= 6 ? DetMethod::Cofactor : DetMethod::Minors;
  switch (method) {
    case DetMethod::Cofactor: {
      std::vector<std::size_t> cols(n);
      std::iota(cols.begin(), cols.end(), 0);
      return cofactor(m, 0, cols);
    }
    case DetMethod::Bareiss:
      return bareiss(m);
    default:
      return laplace_minors(m);
  }
}

CycNum det_cyc_matrix(Matrix<CycNum> m) {
  if (!m.square()) throw Error(ErrorCode::OutOfRange, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  CycNum det(1L);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k).is_zero()) ++p;
    if (p == n) return CycNum();
    if (p != k) {
      m.swap_rows(p, k);
      det = -det;
    }
    const CycNum inv = m(k, k).inverse();
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      const CycNum f = m(i, k) * inv;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (!m(k, j).is_zero()) m(i, j) -= f * m(k, j);
      }
      m(i, k) = CycNum();
    }
  }
  return det;
}

BigInt det_int_matrix(IntMatrix m) {
  if (!m.square()) throw Error(ErrorCode::OutOfRange, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  bool negate = false;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      m.swap_rows(p, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return negate ? BigInt(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

IntMatrix unitriangular_inverse(const IntMatrix& z, const std::vector<std::size_t>& order) {
  const std::size_t n = z.rows();
  if (!z.square() || order.size() != n) {
    throw Error(ErrorCode::NotUnitriangular, "shape does not match the order");
  }
  std::vector<std::size_t> pos(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || pos[order[i]] != n) {
      throw Error(ErrorCode::NotUnitriangular, "order is not a permutation");
    }
    pos[order[i]] = i;
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (z(a, a) != 1) throw Error(ErrorCode::NotUnitriangular, "diagonal entry is not 1");
    for (std::size_t b = 0; b < n; ++b) {
      if (z(a, b) != 0 && pos[a] > pos[b]) {
        throw Error(ErrorCode::NotUnitriangular,
                    "nonzero entry at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
    }
  }
  IntMatrix w(n, n, BigInt(0));
  for (std::size_t jp = 0; jp < n; ++jp) {
    const std::size_t j = order[jp];
    w(j, j) = 1;
    for (std::size_t ip = jp; ip-- > 0;) {
      const std::size_t i = order[ip];
      BigInt s = 0;
      for (std::size_t kp = ip + 1; kp <= jp; ++kp) {
        const std::size_t k = order[kp];
        if (z(i, k) != 0 && w(k, j) != 0) s += z(i, k) * w(k, j);
      }
      w(i, j) = -s;
    }
  }
  return w;
}

PointSampler::PointSampler(std::uint64_t seed) : rng_(seed) {}

std::map<VarId, long long> PointSampler::draw(const std::set<VarId>& vars) {
  std::uniform_int_distribution<long long> dist(-kSampleRange, kSampleRange);
  std::map<VarId, long long> point;
  for (VarId v : vars) point.emplace(v, dist(rng_));
  return point;
}

std::function<CycNum(VarId)> as_valuation(const std::map<VarId, long long>& point) {
  return [&point](VarId v) {
    auto it = point.find(v);
    if (it == point.end()) {
      throw Error(ErrorCode::MissingVariable, "no value for " + default_var_name(v));
    }
    return CycNum(static_cast<long>(it->second));
  };
}

double schwartz_zippel_bound(int degree, unsigned rounds) {
  if (degree <= 0) return 0.0;
  const double per = static_cast<double>(degree) / static_cast<double>(2 * kSampleRange + 1);
  return std::pow(std::min(per, 1.0), static_cast<double>(rounds));
}

IdentityResult poly_identity_test(const Poly& p, const Poly& q, IdentityMode mode,
                                  std::uint64_t seed, unsigned rounds,
                                  const std::set<VarId>* universe) {
  std::set<VarId> vars = p.variables();
  for (VarId v : q.variables()) vars.insert(v);
  if (universe) {
    for (VarId v : vars) {
      if (!universe->count(v)) {
        throw Error(ErrorCode::VariableMismatch, default_var_name(v) + " outside the universe");
      }
    }
  }
  IdentityResult r;
  r.seed = seed;
  if (mode == IdentityMode::Exact) {
    r.equal = (p == q);
    if (!r.equal) {
      // Look for a concrete witness; the structural verdict stands regardless.
      const Poly diff = p - q;
      PointSampler sampler(seed);
      for (int attempt = 0; attempt < 8; ++attempt) {
        auto point = sampler.draw(vars);
        if (!diff.eval(as_valuation(point)).is_zero()) {
          r.witness = std::move(point);
          break;
        }
      }
    }
    return r;
  }
  r.rounds = rounds;
  r.probabilistic = true;
  PointSampler sampler(seed);
  for (unsigned i = 0; i < rounds; ++i) {
    auto point = sampler.draw(vars);
    auto val = as_valuation(point);
    if (p.eval(val) != q.eval(val)) {
      r.equal = false;
      r.probabilistic = false;
      r.witness = std::move(point);
      return r;
    }
  }
  r.equal = true;
  r.failure_bound = schwartz_zippel_bound(std::max(p.total_degree(), q.total_degree()), rounds);
  return r;
}

}  // namespace frobdet
