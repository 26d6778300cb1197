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

#include "frobdet/ring.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>

#include "frobdet/det.hpp"
#include "frobdet/error.hpp"

namespace frobdet {

namespace {

using Coeffs = std::vector<unsigned>;

Coeffs digits(unsigned a, unsigned p, unsigned len) {
  Coeffs c(len, 0);
  for (unsigned i = 0; i < len; ++i, a /= p) c[i] = a % p;
  return c;
}

unsigned encode(const Coeffs& c, unsigned p) {
  unsigned a = 0;
  for (std::size_t i = c.size(); i-- > 0;) a = a * p + c[i];
  return a;
}

/// Remainder of a modulo the monic b over F_p.
Coeffs poly_mod(Coeffs a, const Coeffs& b, unsigned p) {
  const std::size_t db = b.size() - 1;
  for (std::size_t i = a.size(); i-- > db;) {
    const unsigned c = a[i] % p;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      a[i - db + j] = (a[i - db + j] + (p - c) * b[j]) % p;
    }
  }
  a.resize(std::min(a.size(), db));
  return a;
}

}  // namespace

FiniteField::FiniteField(unsigned q) {
  if (q < 2 || q > 256) throw Error(ErrorCode::OutOfRange, "field size must be in [2, 256]");
  unsigned p = 2;
  while (q % p) ++p;
  unsigned m = 0;
  for (unsigned r = q; r > 1; r /= p) {
    if (r % p) throw Error(ErrorCode::OutOfRange, std::to_string(q) + " is not a prime power");
    ++m;
  }
  p_ = p;
  m_ = m;
  q_ = q;
  // Least monic irreducible: no monic factor of degree 1..m/2.
  for (unsigned code = 0; code < q; ++code) {
    Coeffs cand = digits(code, p, m);
    cand.push_back(1);
    bool irreducible = true;
    for (unsigned d = 1; d <= m / 2 && irreducible; ++d) {
      unsigned count = 1;
      for (unsigned k = 0; k < d; ++k) count *= p;
      for (unsigned low = 0; low < count && irreducible; ++low) {
        Coeffs div = digits(low, p, d);
        div.push_back(1);
        const Coeffs rem = poly_mod(cand, div, p);
        if (std::all_of(rem.begin(), rem.end(), [](unsigned c) { return c == 0; })) {
          irreducible = false;
        }
      }
    }
    if (irreducible) {
      modulus_ = cand;
      break;
    }
  }
  add_.resize(q * q);
  mul_.resize(q * q);
  for (unsigned a = 0; a < q; ++a) {
    const Coeffs ca = digits(a, p, m);
    for (unsigned b = 0; b < q; ++b) {
      const Coeffs cb = digits(b, p, m);
      Coeffs sum(m), prod(2 * m, 0);
      for (unsigned i = 0; i < m; ++i) sum[i] = (ca[i] + cb[i]) % p;
      for (unsigned i = 0; i < m; ++i) {
        for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
      }
      add_[a * q + b] = encode(sum, p);
      mul_[a * q + b] = encode(poly_mod(prod, modulus_, p), p);
    }
  }
  trace_.resize(q);
  for (unsigned a = 0; a < q; ++a) {
    unsigned t = 0, power = a;
    for (unsigned k = 0; k < m; ++k) {
      t = add(t, power);
      unsigned next = 1;
      for (unsigned i = 0; i < p; ++i) next = mul(next, power);
      power = next;
    }
    if (t >= p) throw Error(ErrorCode::VerificationFailed, "trace left the prime field");
    trace_[a] = t;
  }
  if (q <= 16) {
    for (unsigned a = 0; a < q; ++a) {
      bool has_inverse = a == 0;
      for (unsigned b = 0; b < q; ++b) {
        if (mul(a, b) == 1) has_inverse = true;
        for (unsigned c = 0; c < q; ++c) {
          if (mul(mul(a, b), c) != mul(a, mul(b, c)) ||
              add(add(a, b), c) != add(a, add(b, c)) ||
              mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) {
            throw Error(ErrorCode::VerificationFailed, "field axioms fail for F_" + std::to_string(q));
          }
        }
      }
      if (!has_inverse) {
        throw Error(ErrorCode::VerificationFailed, "missing inverse in F_" + std::to_string(q));
      }
    }
  }
}

namespace {

void check_additive(const RingMonoid& r) {
  const std::size_t n = r.monoid.size();
  const unsigned ord = r.lambda.order;
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (r.lambda.exps[r.addition[a * n + b]] != (r.lambda.exps[a] + r.lambda.exps[b]) % ord) {
        throw Error(ErrorCode::VerificationFailed, "generating character is not additive");
      }
    }
  }
}

}  // namespace

RingMonoid zmod_monoid(unsigned n) {
  if (n < 2 || n > 512) throw Error(ErrorCode::OutOfRange, "zmod needs 2 <= n <= 512");
  RingMonoid r;
  r.monoid = zmod_mul(n);
  r.addition.resize(std::size_t(n) * n);
  for (unsigned a = 0; a < n; ++a) {
    for (unsigned b = 0; b < n; ++b) r.addition[a * n + b] = (a + b) % n;
  }
  r.lambda.order = n;
  for (unsigned k = 0; k < n; ++k) r.lambda.exps.push_back(k);
  check_additive(r);
  return r;
}

RingMonoid matrix_monoid(unsigned n, unsigned q) {
  if (n < 1) throw Error(ErrorCode::OutOfRange, "matrix size must be positive");
  const FiniteField f(q);
  const unsigned cells = n * n;
  std::size_t size = 1;
  for (unsigned i = 0; i < cells; ++i) {
    size *= q;
    if (size > kDefaultSizeCap) {
      throw Error(ErrorCode::SizeOverflow, "q^(n^2) exceeds " + std::to_string(kDefaultSizeCap));
    }
  }
  std::vector<std::vector<unsigned>> entries(size, std::vector<unsigned>(cells));
  for (std::size_t a = 0; a < size; ++a) {
    std::size_t code = a;
    for (unsigned k = 0; k < cells; ++k, code /= q) entries[a][k] = static_cast<unsigned>(code % q);
  }
  auto index = [&](const std::vector<unsigned>& e) {
    std::size_t code = 0;
    for (unsigned k = cells; k-- > 0;) code = code * q + e[k];
    return static_cast<Elem>(code);
  };
  RingMonoid r;
  std::vector<Elem> table(size * size);
  r.addition.resize(size * size);
  std::vector<unsigned> prod(cells), sum(cells);
  for (std::size_t a = 0; a < size; ++a) {
    const auto& x = entries[a];
    for (std::size_t b = 0; b < size; ++b) {
      const auto& y = entries[b];
      for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
          unsigned acc = 0;
          for (unsigned k = 0; k < n; ++k) acc = f.add(acc, f.mul(x[i * n + k], y[k * n + j]));
          prod[i * n + j] = acc;
        }
      }
      for (unsigned k = 0; k < cells; ++k) sum[k] = f.add(x[k], y[k]);
      table[a * size + b] = index(prod);
      r.addition[a * size + b] = index(sum);
    }
  }
  std::vector<std::string> names;
  for (std::size_t a = 0; a < size; ++a) {
    std::string s;
    for (unsigned i = 0; i < n; ++i) {
      if (i) s += '/';
      for (unsigned j = 0; j < n; ++j) {
        if (j) s += ',';
        s += std::to_string(entries[a][i * n + j]);
      }
    }
    names.push_back(s);
  }
  r.monoid = Semigroup::from_table(size, std::move(table), std::move(names), std::nullopt,
                                   std::nullopt, true);
  r.lambda.order = f.p();
  for (std::size_t a = 0; a < size; ++a) {
    unsigned tr = 0;
    for (unsigned i = 0; i < n; ++i) tr = f.add(tr, entries[a][i * n + i]);
    r.lambda.exps.push_back(f.trace(tr));
  }
  check_additive(r);
  return r;
}

std::optional<CycNum> frobenius_form_check(const Semigroup& s, const GeneratingCharacter& lambda) {
  const std::size_t n = s.size();
  Matrix<CycNum> m(n, n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) m(a, b) = lambda.value(s.mul(a, b));
  }
  CycNum d = det_cyc_matrix(m);
  if (d.is_zero()) return std::nullopt;
  return d;
}

BigInt q_binomial(unsigned n, unsigned r, unsigned q) {
  if (r > n) return 0;
  BigInt num = 1, den = 1;
  const BigInt bq = q;
  for (unsigned i = 0; i < r; ++i) {
    BigInt a, b;
    mpz_pow_ui(a.get_mpz_t(), bq.get_mpz_t(), n - i);
    mpz_pow_ui(b.get_mpz_t(), bq.get_mpz_t(), i + 1);
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

BigInt gl_order(unsigned r, unsigned q) {
  BigInt out = 1;
  const BigInt bq = q;
  BigInt qr;
  mpz_pow_ui(qr.get_mpz_t(), bq.get_mpz_t(), r);
  for (unsigned i = 0; i < r; ++i) {
    BigInt qi;
    mpz_pow_ui(qi.get_mpz_t(), bq.get_mpz_t(), i);
    out *= qr - qi;
  }
  return out;
}

std::vector<BigInt> count_subspaces(unsigned n, const FiniteField& f) {
  const unsigned q = f.q();
  std::size_t vectors = 1;
  for (unsigned i = 0; i < n; ++i) vectors *= q;
  if (vectors > 256) throw Error(ErrorCode::OutOfRange, "brute force needs q^n <= 256");
  auto vadd = [&](std::size_t a, std::size_t b) {
    std::size_t out = 0, scale = 1;
    for (unsigned i = 0; i < n; ++i, a /= q, b /= q, scale *= q) out += scale * f.add(a % q, b % q);
    return out;
  };
  auto vscale = [&](unsigned c, std::size_t a) {
    std::size_t out = 0, scale = 1;
    for (unsigned i = 0; i < n; ++i, a /= q, scale *= q) out += scale * f.mul(c, a % q);
    return out;
  };
  using Set = std::array<std::uint64_t, 4>;
  auto has = [](const Set& s, std::size_t v) { return (s[v / 64] >> (v % 64)) & 1U; };
  auto put = [](Set& s, std::size_t v) { s[v / 64] |= std::uint64_t{1} << (v % 64); };
  std::set<Set> seen;
  std::vector<Set> frontier;
  Set zero{};
  put(zero, 0);
  seen.insert(zero);
  frontier.push_back(zero);
  while (!frontier.empty()) {
    std::vector<Set> next;
    for (const Set& w : frontier) {
      for (std::size_t v = 1; v < vectors; ++v) {
        if (has(w, v)) continue;
        Set span{};
        for (std::size_t u = 0; u < vectors; ++u) {
          if (!has(w, u)) continue;
          for (unsigned c = 0; c < q; ++c) put(span, vadd(u, vscale(c, v)));
        }
        if (seen.insert(span).second) next.push_back(span);
      }
    }
    frontier = std::move(next);
  }
  std::vector<BigInt> counts(n + 1, 0);
  for (const Set& s : seen) {
    std::size_t size = 0;
    for (auto word : s) size += static_cast<std::size_t>(__builtin_popcountll(word));
    unsigned dim = 0;
    for (std::size_t t = size; t > 1; t /= q) ++dim;
    counts[dim] += 1;
  }
  return counts;
}

KovacsReport kovacs_check(unsigned n, unsigned q) {
  if (n > 4 || n < 1) throw Error(ErrorCode::OutOfRange, "kovacs needs 1 <= n <= 4");
  if (q > 16) throw Error(ErrorCode::OutOfRange, "kovacs needs q <= 16");
  const FiniteField f(q);
  KovacsReport rep;
  rep.n = n;
  rep.q = q;
  mpz_pow_ui(rep.total.get_mpz_t(), BigInt(q).get_mpz_t(), n * n);
  std::size_t vectors = 1;
  for (unsigned i = 0; i < n; ++i) vectors *= q;
  std::optional<std::vector<BigInt>> brute;
  if (vectors <= 256) brute = count_subspaces(n, f);
  rep.sum = 0;
  for (unsigned r = 0; r <= n; ++r) {
    KovacsTerm t;
    t.r = r;
    t.qbinomial = q_binomial(n, r, q);
    t.gl_order = gl_order(r, q);
    if (brute) {
      t.subspaces = (*brute)[r];
      if (*t.subspaces != t.qbinomial) {
        throw Error(ErrorCode::VerificationFailed, "q-binomial differs from the subspace count");
      }
    }
    rep.sum += t.qbinomial * t.qbinomial * t.gl_order;
    rep.terms.push_back(std::move(t));
  }
  rep.holds = rep.sum == rep.total;
  return rep;
}

}  // namespace frobdet
