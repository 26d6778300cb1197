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

#include "frobdet/factorization.hpp"

#include "frobdet/error.hpp"

namespace frobdet {

Poly Factorization::expand_factors() const {
  if (status == FactorStatus::Zero) return Poly();
  Poly p(1L);
  for (const auto& f : factors) p = p * f.form.pow(f.multiplicity);
  return p;
}

Poly Factorization::expand() const {
  if (status == FactorStatus::Zero) return Poly();
  return expand_factors().scaled(constant);
}

unsigned Factorization::cyclotomic_order() const {
  unsigned n = constant.order();
  for (const auto& f : factors) n = lcm_u(n, f.form.order());
  return n;
}

int Factorization::degree() const {
  if (status == FactorStatus::Zero) return -1;
  int d = 0;
  for (const auto& f : factors) d += f.form.total_degree() * static_cast<int>(f.multiplicity);
  return d;
}

Factorization zero_factorization(const std::string& provenance) {
  Factorization f;
  f.status = FactorStatus::Zero;
  f.constant = CycNum();
  f.provenance = provenance;
  return f;
}

Matrix<CycNum> evaluate_matrix(const Matrix<Poly>& m, const std::function<CycNum(VarId)>& at) {
  Matrix<CycNum> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) out(i, j) = m(i, j).eval(at);
    }
  }
  return out;
}

Reference matrix_reference(const Matrix<Poly>& m, const VerifyOptions& opt) {
  Reference r;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      for (VarId v : m(i, j).variables()) r.variables.insert(v);
    }
  }
  r.degree = static_cast<int>(m.rows());
  const bool symbolic = opt.mode == VerifyMode::Exact ||
                        (opt.mode == VerifyMode::Auto && m.rows() <= opt.cap);
  if (symbolic) r.symbolic = det_poly_matrix(m, opt.cap);
  r.evaluate = [m](const std::function<CycNum(VarId)>& at) {
    return det_cyc_matrix(evaluate_matrix(m, at));
  };
  return r;
}

Reference poly_reference(const Poly& p, const std::set<VarId>& vars, int degree) {
  Reference r;
  r.symbolic = p;
  r.variables = vars;
  r.degree = degree;
  r.evaluate = [p](const std::function<CycNum(VarId)>& at) { return p.eval(at); };
  return r;
}

void normalize_factors(Factorization& f) {
  if (f.status == FactorStatus::Zero) return;
  std::vector<Factor> merged;
  for (auto& fac : f.factors) {
    if (fac.multiplicity == 0) continue;
    if (fac.form.is_zero()) {
      f.status = FactorStatus::Zero;
      f.constant = CycNum();
      f.factors.clear();
      return;
    }
    CycNum scale;
    Poly form;
    if (fac.form.is_constant()) {
      f.constant *= fac.form.constant_term().pow(fac.multiplicity);
      continue;
    }
    if (fac.form.total_degree() == 1 && fac.form.is_homogeneous()) {
      auto [c, lf] = to_linform(fac.form).normalized();
      scale = c;
      form = lf.to_poly();
    } else {
      scale = fac.form.leading_coefficient();
      form = fac.form.scaled(scale.inverse());
    }
    f.constant *= scale.pow(fac.multiplicity);
    bool found = false;
    for (auto& m : merged) {
      if (m.form == form) {
        m.multiplicity += fac.multiplicity;
        found = true;
        break;
      }
    }
    if (!found) merged.push_back({std::move(form), fac.multiplicity});
  }
  f.factors = std::move(merged);
}

namespace {

CycNum eval_factors(const Factorization& f, const std::function<CycNum(VarId)>& at) {
  CycNum v(1L);
  for (const auto& fac : f.factors) v *= fac.form.eval(at).pow(fac.multiplicity);
  return v;
}

[[noreturn]] void fail(const std::string& what) {
  throw Error(ErrorCode::VerificationFailed, what);
}

}  // namespace

void settle(Factorization& f, const Reference& ref, const VerifyOptions& opt,
            const std::optional<CycNum>& claimed) {
  normalize_factors(f);
  Verification& v = f.verification;
  v = Verification{};
  v.seed = opt.seed;
  const bool exact = ref.symbolic.has_value() && opt.mode != VerifyMode::Randomized;
  if (opt.mode == VerifyMode::None) {
    if (claimed && f.status == FactorStatus::Factored) f.constant *= *claimed;
    return;
  }
  if (f.status == FactorStatus::Zero) {
    if (exact) {
      v.mode = "exact";
      if (!ref.symbolic->is_zero()) fail("reported zero but the determinant is nonzero");
    } else {
      v.mode = "randomized";
      v.rounds = opt.rounds;
      PointSampler sampler(opt.seed);
      for (unsigned i = 0; i < opt.rounds; ++i) {
        auto pt = sampler.draw(ref.variables);
        if (!ref.evaluate(as_valuation(pt)).is_zero()) {
          fail("reported zero but the determinant is nonzero at a sample point");
        }
      }
      v.failure_bound = schwartz_zippel_bound(ref.degree, opt.rounds);
    }
    v.passed = true;
    return;
  }
  // Everything collected so far in f.constant is a normalization scale;
  // the true constant is derived from the reference.
  CycNum derived;
  if (exact) {
    v.mode = "exact";
    const Poly& theta = *ref.symbolic;
    const Poly prod = f.expand_factors();
    if (theta.is_zero()) fail("determinant vanishes but a factorization was produced");
    if (!(theta.leading_monomial() == prod.leading_monomial())) {
      fail("leading monomial of the factor product differs from the determinant");
    }
    derived = theta.leading_coefficient() / prod.leading_coefficient();
    if (prod.scaled(derived) != theta) fail("expanded product differs from the determinant");
  } else {
    v.mode = "randomized";
    v.rounds = opt.rounds;
    PointSampler sampler(opt.seed);
    bool have = false;
    for (int attempt = 0; attempt < 16 && !have; ++attempt) {
      auto pt = sampler.draw(ref.variables);
      const CycNum p = eval_factors(f, as_valuation(pt));
      if (p.is_zero()) continue;
      derived = ref.evaluate(as_valuation(pt)) / p;
      have = true;
    }
    if (!have) fail("factor product vanished at every sample point");
    if (derived.is_zero()) fail("determinant vanishes at a point where the factors do not");
    for (unsigned i = 0; i < opt.rounds; ++i) {
      auto pt = sampler.draw(ref.variables);
      auto at = as_valuation(pt);
      if (ref.evaluate(at) != derived * eval_factors(f, at)) {
        fail("factorization differs from the determinant at a sample point");
      }
    }
    v.failure_bound = schwartz_zippel_bound(ref.degree, opt.rounds);
  }
  if (claimed) {
    const CycNum expected = *claimed * f.constant;
    if (expected != derived) {
      fail("closed-form constant " + expected.to_string() + " differs from derived " +
           derived.to_string());
    }
  }
  f.constant = derived;
  v.passed = true;
}

IdentityResult verify_factorization(const Poly& reference, const Factorization& f,
                                    IdentityMode mode, std::uint64_t seed, unsigned rounds) {
  return poly_identity_test(reference, f.expand(), mode, seed, rounds);
}

}  // namespace frobdet
