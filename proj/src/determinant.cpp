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

#include "frobdet/determinant.hpp"

#include "frobdet/characters.hpp"
#include "frobdet/error.hpp"

namespace frobdet {

const char* to_string(CayleyMode mode) noexcept {
  switch (mode) {
    case CayleyMode::Plain:
      return "plain";
    case CayleyMode::Contracted:
      return "contracted";
    case CayleyMode::Twisted:
      return "twisted";
  }
  return "?";
}

const char* to_string(FrobeniusVerdict v) noexcept {
  switch (v) {
    case FrobeniusVerdict::Frobenius:
      return "frobenius";
    case FrobeniusVerdict::NotFrobenius:
      return "not_frobenius";
    case FrobeniusVerdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

ParatrophicMatrix cayley_matrix(const Semigroup& s, CayleyMode mode, const Cocycle* cocycle) {
  ParatrophicMatrix out;
  out.mode = mode;
  std::optional<Elem> z;
  if (mode != CayleyMode::Plain) {
    z = s.zero();
    if (!z) throw Error(ErrorCode::NoZero, "contracted matrix needs a zero");
  }
  if (mode == CayleyMode::Twisted) {
    if (!cocycle) throw Error(ErrorCode::CocycleDomainMismatch, "twisted mode needs a cocycle");
    check_cocycle(s, *cocycle);
  }
  for (Elem a = 0; a < s.size(); ++a) {
    if (!z || a != *z) out.basis.push_back(a);
  }
  const std::size_t n = out.basis.size();
  out.entries = Matrix<Poly>(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Elem a = out.basis[i];
      const Elem b = out.basis[j];
      const Elem p = s.mul(a, b);
      if (z && p == *z) continue;
      if (mode == CayleyMode::Twisted) {
        out.entries(i, j) = Poly::term(Monomial(p), (*cocycle)(a, b));
      } else {
        out.entries(i, j) = Poly::variable(p);
      }
    }
  }
  return out;
}

Poly checked_determinant(const Matrix<Poly>& m, std::size_t cap) {
  Poly d = det_poly_matrix(m, cap);
  if (!d.is_zero() &&
      (!d.is_homogeneous() || d.total_degree() != static_cast<int>(m.rows()))) {
    throw Error(ErrorCode::VerificationFailed, "determinant is not homogeneous of full degree");
  }
  return d;
}

Poly paratrophic_determinant(const Semigroup& s, CayleyMode mode, const Cocycle* cocycle,
                             std::size_t cap) {
  return checked_determinant(cayley_matrix(s, mode, cocycle).entries, cap);
}

BackNForth backnforth_check(const Semigroup& s, std::size_t cap) {
  if (!s.zero()) throw Error(ErrorCode::NoZero, "back-and-forth identity needs a zero");
  const Elem z = *s.zero();
  BackNForth r;
  r.theta = paratrophic_determinant(s, CayleyMode::Plain, nullptr, cap);
  r.contracted = paratrophic_determinant(s, CayleyMode::Contracted, nullptr, cap);
  std::map<VarId, LinForm> sub;
  for (Elem a = 0; a < s.size(); ++a) {
    if (a == z) continue;
    LinForm y = LinForm::variable(a);
    y.add(z, CycNum(-1L));
    sub.emplace(a, std::move(y));
  }
  r.rhs = Poly::variable(z) * substitute_linear(r.contracted, sub);
  r.holds = r.rhs == r.theta;
  return r;
}

FrobeniusResult frobenius_test(const Semigroup& s, const FrobeniusOptions& opt) {
  FrobeniusResult r;
  const auto rep = analyze(s);
  if (!rep.is_idempotent_semigroup) {
    r.verdict = FrobeniusVerdict::NotFrobenius;
    r.stage = 1;
    r.reason = "S^2 != S";
    return r;
  }
  for (Elem a = 0; a < s.size(); ++a) {
    const auto [left, right] = rep.fixed_points[a];
    if (left != right) {
      r.verdict = FrobeniusVerdict::NotFrobenius;
      r.stage = 2;
      r.reason = "left multiplication by " + s.name(a) + " fixes " + std::to_string(left) +
                 " elements, right multiplication fixes " + std::to_string(right);
      return r;
    }
  }
  const std::size_t n = s.size();
  auto try_point = [&](const std::map<VarId, long long>& pt) {
    IntMatrix m(n, n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) m(a, b) = static_cast<long>(pt.at(s.mul(a, b)));
    }
    BigInt d = det_int_matrix(std::move(m));
    if (d == 0) return false;
    r.verdict = FrobeniusVerdict::Frobenius;
    r.stage = 3;
    r.reason = "nonzero specialization";
    r.witness = pt;
    r.value = d;
    return true;
  };
  std::set<VarId> vars;
  for (Elem a = 0; a < n; ++a) vars.insert(a);
  if (s.identity()) {
    std::map<VarId, long long> pt;
    for (Elem a = 0; a < n; ++a) pt[a] = a == *s.identity() ? 1 : 0;
    if (try_point(pt)) return r;
  }
  PointSampler sampler(opt.seed);
  for (unsigned i = 0; i < opt.attempts; ++i) {
    if (try_point(sampler.draw(vars))) return r;
  }
  if (n <= opt.cap) {
    const Poly theta = paratrophic_determinant(s, CayleyMode::Plain, nullptr, opt.cap);
    r.stage = 4;
    if (theta.is_zero()) {
      r.verdict = FrobeniusVerdict::NotFrobenius;
      r.reason = "symbolic determinant is zero";
    } else {
      r.verdict = FrobeniusVerdict::Frobenius;
      r.reason = "symbolic determinant is nonzero";
    }
    return r;
  }
  r.verdict = FrobeniusVerdict::Inconclusive;
  r.stage = 3;
  r.reason = "all specializations vanished and the size exceeds the symbolic cap";
  return r;
}

Matrix<CycNum> inverse_cyc_matrix(Matrix<CycNum> p) {
  if (!p.square()) throw Error(ErrorCode::SingularP, "matrix is not square");
  const std::size_t n = p.rows();
  Matrix<CycNum> inv = identity_matrix(n, CycNum(1L), CycNum());
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && p(piv, k).is_zero()) ++piv;
    if (piv == n) throw Error(ErrorCode::SingularP, "matrix is singular");
    p.swap_rows(piv, k);
    inv.swap_rows(piv, k);
    const CycNum scale = p(k, k).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      p(k, j) *= scale;
      inv(k, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || p(i, k).is_zero()) continue;
      const CycNum f = p(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        if (!p(k, j).is_zero()) p(i, j) -= f * p(k, j);
        if (!inv(k, j).is_zero()) inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

Poly transport_basis(const Poly& theta_prime, const Matrix<CycNum>& p,
                     const std::vector<VarId>& basis, const std::vector<VarId>& basis_prime) {
  if (p.rows() != basis_prime.size() || p.cols() != basis.size()) {
    throw Error(ErrorCode::SingularP, "matrix shape does not match the bases");
  }
  const Matrix<CycNum> inv = inverse_cyc_matrix(p);
  const CycNum d = det_cyc_matrix(p);
  std::map<VarId, LinForm> sub;
  for (std::size_t i = 0; i < basis_prime.size(); ++i) {
    LinForm image;
    for (std::size_t j = 0; j < basis.size(); ++j) image.add(basis[j], inv(j, i));
    sub.emplace(basis_prime[i], std::move(image));
  }
  return substitute_linear(theta_prime, sub).scaled(d * d);
}

void check_representations(const Semigroup& g, const std::vector<Elem>& group,
                           const std::vector<RepMatrix>& reps) {
  const Elem one = subgroup_identity(g, group);
  std::size_t dims = 0;
  std::vector<std::vector<CycNum>> chars;
  for (std::size_t k = 0; k < reps.size(); ++k) {
    const RepMatrix& rho = reps[k];
    const std::string tag = "representation " + std::to_string(k + 1);
    if (!rho.count(one)) throw Error(ErrorCode::RepDimensionMismatch, tag + " misses elements");
    const std::size_t d = rho.at(one).rows();
    for (Elem a : group) {
      auto it = rho.find(a);
      if (it == rho.end() || it->second.rows() != d || it->second.cols() != d) {
        throw Error(ErrorCode::RepDimensionMismatch, tag + " has inconsistent matrices");
      }
    }
    if (!(rho.at(one) == identity_matrix(d, CycNum(1L), CycNum()))) {
      throw Error(ErrorCode::NotMultiplicative, tag + " does not send 1 to the identity");
    }
    for (Elem a : group) {
      for (Elem b : group) {
        if (!(rho.at(a) * rho.at(b) == rho.at(g.mul(a, b)))) {
          throw Error(ErrorCode::NotMultiplicative,
                      tag + " fails at (" + g.name(a) + "," + g.name(b) + ")");
        }
      }
    }
    std::vector<CycNum> chi;
    for (Elem a : group) {
      CycNum t;
      for (std::size_t i = 0; i < d; ++i) t += rho.at(a)(i, i);
      chi.push_back(t);
    }
    chars.push_back(std::move(chi));
    dims += d * d;
  }
  const CycNum order(static_cast<long>(group.size()));
  for (std::size_t i = 0; i < chars.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      CycNum ip;
      for (std::size_t a = 0; a < group.size(); ++a) ip += chars[i][a] * chars[j][a].conj();
      if (i == j && ip != order) {
        throw Error(ErrorCode::RepDimensionMismatch,
                    "representation " + std::to_string(i + 1) + " is reducible");
      }
      if (i != j && !ip.is_zero()) {
        throw Error(ErrorCode::RepDimensionMismatch, "representations " + std::to_string(j + 1) +
                                                         " and " + std::to_string(i + 1) +
                                                         " are equivalent");
      }
    }
  }
  if (dims != group.size()) {
    throw Error(ErrorCode::RepDimensionMismatch,
                "squared degrees sum to " + std::to_string(dims) + ", not |G|");
  }
}

Poly rep_factor(const RepMatrix& rep, const std::map<Elem, LinForm>& var) {
  const std::size_t d = rep.begin()->second.rows();
  Matrix<Poly> m(d, d);
  for (const auto& [g, mat] : rep) {
    const Poly x = var.at(g).to_poly();
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        if (!mat(i, j).is_zero()) m(i, j) += x.scaled(mat(i, j));
      }
    }
  }
  return det_poly_matrix(m, std::max<std::size_t>(d, kDefaultSymbolicCap));
}

Factorization factor_group_determinant(const Semigroup& g, const std::vector<RepMatrix>* reps,
                                       const VerifyOptions& opt) {
  if (!g.is_group()) throw Error(ErrorCode::NotAGroup, "expected a group");
  std::vector<Elem> all(g.size());
  for (Elem a = 0; a < g.size(); ++a) all[a] = a;
  Factorization f;
  if (reps && !reps->empty()) {
    check_representations(g, all, *reps);
    std::map<Elem, LinForm> var;
    for (Elem a : all) var.emplace(a, LinForm::variable(a));
    f.provenance = "frobenius-group";
    for (const auto& rho : *reps) {
      const auto d = static_cast<unsigned>(rho.begin()->second.rows());
      f.factors.push_back({rep_factor(rho, var), d});
    }
  } else {
    if (!g.is_commutative()) {
      throw Error(ErrorCode::NotAbelianWithoutReps, "nonabelian group needs representations");
    }
    f.provenance = "dedekind";
    for (const auto& chi : character_group(g)) {
      LinForm l;
      for (Elem a : all) l.add(a, chi.value(a));
      f.factors.push_back({l.to_poly(), 1});
    }
  }
  settle(f, matrix_reference(cayley_matrix(g, CayleyMode::Plain).entries, opt), opt);
  if (!f.constant.is_rational()) {
    throw Error(ErrorCode::VerificationFailed, "group determinant constant is not rational");
  }
  return f;
}

}  // namespace frobdet
