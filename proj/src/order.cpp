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

#include "frobdet/order.hpp"

#include <numeric>

#include "frobdet/determinant.hpp"
#include "frobdet/error.hpp"
#include "frobdet/inverse.hpp"

namespace frobdet {

const char* to_string(OrderMode mode) noexcept {
  switch (mode) {
    case OrderMode::Semilattice:
      return "semilattice";
    case OrderMode::Inverse:
      return "inverse";
    case OrderMode::CentralIdempotent:
      return "central_idempotent";
  }
  return "?";
}

FinitePoset::FinitePoset(std::size_t n, std::vector<char> leq) : n_(n), leq_(std::move(leq)) {
  auto fail = [](const std::string& why) {
    throw Error(ErrorCode::ModeHypothesisFailed, "not a partial order: " + why);
  };
  if (leq_.size() != n * n) fail("relation has the wrong size");
  for (std::size_t a = 0; a < n; ++a) {
    if (!this->leq(a, a)) fail("not reflexive at " + std::to_string(a + 1));
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && this->leq(a, b) && this->leq(b, a)) {
        fail("not antisymmetric at " + std::to_string(a + 1) + ", " + std::to_string(b + 1));
      }
      if (!this->leq(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (this->leq(b, c) && !this->leq(a, c)) fail("not transitive");
      }
    }
  }
  std::vector<bool> taken(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t a = 0; a < n; ++a) {
      if (taken[a]) continue;
      bool minimal = true;
      for (std::size_t b = 0; b < n && minimal; ++b) {
        if (b != a && !taken[b] && this->leq(b, a)) minimal = false;
      }
      if (minimal) {
        taken[a] = true;
        ext_.push_back(a);
        break;
      }
    }
  }
}

std::vector<std::size_t> FinitePoset::below(std::size_t a) const {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < n_; ++b) {
    if (leq(b, a)) out.push_back(b);
  }
  return out;
}

std::vector<Elem> splus_map(const Semigroup& s) {
  const auto rep = analyze(s);
  if (!rep.is_idempotent_semigroup) {
    throw Error(ErrorCode::NotIdempotentSemigroup, "S^2 is a proper subset of S");
  }
  if (!rep.central_idempotents) throw Error(ErrorCode::IdempotentsNotCentral, "");
  std::vector<Elem> plus(s.size());
  for (Elem a = 0; a < s.size(); ++a) {
    std::optional<Elem> acc;
    for (Elem e : rep.idempotents) {
      if (s.mul(a, e) != a) continue;
      acc = acc ? s.mul(*acc, e) : e;
    }
    if (!acc) {
      throw Error(ErrorCode::NotIdempotentSemigroup, "no idempotent fixes " + s.name(a));
    }
    plus[a] = *acc;
  }
  return plus;
}

FinitePoset natural_order(const Semigroup& s, OrderMode mode) {
  const std::size_t n = s.size();
  std::vector<char> leq(n * n, 0);
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::ModeHypothesisFailed, std::string(to_string(mode)) + ": " + why);
  };
  switch (mode) {
    case OrderMode::Semilattice: {
      if (!s.is_commutative()) fail("not commutative");
      if (s.idempotents().size() != n) fail("not every element is idempotent");
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) leq[a * n + b] = s.mul(a, b) == a;
      }
      break;
    }
    case OrderMode::Inverse: {
      const auto check = is_inverse(s);
      if (!check.inverse) fail("not an inverse semigroup");
      const auto idem = s.idempotents();
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          for (Elem e : idem) {
            if (s.mul(b, e) == a) {
              leq[a * n + b] = 1;
              break;
            }
          }
        }
      }
      break;
    }
    case OrderMode::CentralIdempotent: {
      std::vector<Elem> plus;
      try {
        plus = splus_map(s);
      } catch (const Error& e) {
        fail(e.what());
      }
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) leq[a * n + b] = s.mul(b, plus[a]) == a;
      }
      break;
    }
  }
  return FinitePoset(n, std::move(leq));
}

IntMatrix zeta_matrix(const FinitePoset& p) {
  IntMatrix z(p.size(), p.size(), BigInt(0));
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (p.leq(a, b)) z(a, b) = 1;
    }
  }
  return z;
}

IntMatrix mobius(const FinitePoset& p) { return unitriangular_inverse(zeta_matrix(p), p.extension()); }

std::map<VarId, LinForm> mobius_substitution(const FinitePoset& p, const IntMatrix& mu) {
  std::map<VarId, LinForm> sub;
  for (std::size_t s = 0; s < p.size(); ++s) {
    LinForm y;
    for (std::size_t t : p.below(s)) {
      if (mu(t, s) != 0) y.add(static_cast<VarId>(t), CycNum(Rat(mu(t, s))));
    }
    sub.emplace(static_cast<VarId>(s), std::move(y));
  }
  return sub;
}

Factorization factor_semilattice(const Semigroup& l, const VerifyOptions& opt) {
  if (!l.is_commutative() || l.idempotents().size() != l.size()) {
    throw Error(ErrorCode::NotSemilattice, "expected a commutative band");
  }
  const FinitePoset p = natural_order(l, OrderMode::Semilattice);
  const IntMatrix mu = mobius(p);
  const auto sub = mobius_substitution(p, mu);
  Factorization f;
  f.provenance = "wilf-lindstrom";
  for (Elem a = 0; a < l.size(); ++a) f.factors.push_back({sub.at(a).to_poly(), 1});
  settle(f, matrix_reference(cayley_matrix(l, CayleyMode::Plain).entries, opt), opt,
         CycNum(1L));
  return f;
}

SmithReport smith_matrix(unsigned n) {
  if (n < 1 || n > 200) throw Error(ErrorCode::OutOfRange, "smith needs 1 <= n <= 200");
  SmithReport r;
  r.matrix = IntMatrix(n, n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) r.matrix(i, j) = std::gcd(i + 1, j + 1);
  }
  r.direct = det_int_matrix(r.matrix);
  r.phi_product = 1;
  for (unsigned i = 1; i <= n; ++i) {
    r.phi.push_back(euler_phi(i));
    r.phi_product *= r.phi.back();
  }
  if (r.direct != r.phi_product) {
    throw Error(ErrorCode::VerificationFailed, "gcd determinant differs from the totient product");
  }
  return r;
}

}  // namespace frobdet
