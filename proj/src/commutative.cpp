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

#include "frobdet/commutative.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "frobdet/det.hpp"
#include "frobdet/determinant.hpp"
#include "frobdet/error.hpp"
#include "frobdet/nilpotent.hpp"

namespace frobdet {

namespace {

std::string elem_list(const Semigroup& s, const std::vector<Elem>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += s.name(xs[i]);
  }
  return out + "}";
}

std::vector<Elem> stabilizer(const Semigroup& m, const std::vector<Elem>& units, Elem x) {
  std::vector<Elem> out;
  for (Elem g : units) {
    if (m.mul(g, x) == x) out.push_back(g);
  }
  return out;
}

bool inside_kernel(const Character& chi, const std::vector<Elem>& h) {
  return std::all_of(h.begin(), h.end(), [&](Elem g) { return chi.in_kernel(g); });
}

/// prod over one representative of each conjugate pair of non-real
/// characters of (-1)^{|J_chi|}.
long pair_sign(const std::vector<Character>& chars, const std::vector<std::size_t>& jsize) {
  long sign = 1;
  for (std::size_t a = 0; a < chars.size(); ++a) {
    if (chars[a].is_real()) continue;
    const Character c = chars[a].conj();
    const auto it = std::find(chars.begin(), chars.end(), c);
    if (it == chars.end()) {
      throw Error(ErrorCode::VerificationFailed, "character group not closed under conjugation");
    }
    if (static_cast<std::size_t>(it - chars.begin()) > a && jsize[a] % 2 == 1) sign = -sign;
  }
  return sign;
}

Poly conj_orbit_sum(const Semigroup& m, const std::vector<Elem>& units, const Character& chi,
                    Elem base) {
  const Character bar = chi.conj();
  LinForm l;
  for (Elem g : units) l.add(m.mul(g, base), bar.value(g));
  return l.to_poly();
}

void check_local_shape(const Semigroup& m) {
  if (!m.is_commutative()) throw Error(ErrorCode::NotLocalShape, "monoid is not commutative");
  if (!m.identity() || !m.zero() || *m.identity() == *m.zero()) {
    throw Error(ErrorCode::NotLocalShape, "need an identity and a distinct zero");
  }
  const auto units = group_of_units(m);
  std::vector<char> unit(m.size(), 0);
  for (Elem g : units) unit[g] = 1;
  for (Elem x = 0; x < m.size(); ++x) {
    if (unit[x]) continue;
    Elem p = x;
    for (std::size_t k = 0; k <= m.size() && p != *m.zero(); ++k) p = m.mul(p, x);
    if (p != *m.zero()) {
      throw Error(ErrorCode::NotLocalShape, "nonunit " + m.name(x) + " is not nilpotent");
    }
  }
}

}  // namespace

SplusDecomposition splus_decompose(const Semigroup& s) {
  SplusDecomposition d;
  d.plus = splus_map(s);
  d.idempotents = s.idempotents();
  d.order = natural_order(s, OrderMode::CentralIdempotent);
  const std::size_t n = s.size();
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (d.order.leq(a, b) && a != b && d.order.leq(b, a)) {
        throw Error(ErrorCode::VerificationFailed, "order is not antisymmetric");
      }
    }
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (!d.order.leq(a, b)) continue;
      for (Elem u = 0; u < n; ++u) {
        if (!d.order.leq(s.mul(a, u), s.mul(b, u)) || !d.order.leq(s.mul(u, a), s.mul(u, b))) {
          throw Error(ErrorCode::VerificationFailed, "order is not compatible with products");
        }
      }
    }
  }
  for (Elem e : d.idempotents) {
    LocalComponent comp;
    comp.idempotent = e;
    std::vector<Elem> ideal;
    for (Elem x = 0; x < n; ++x) {
      if (d.plus[x] == e) comp.members.push_back(x);
      if (d.plus[x] != e && d.order.leq(d.plus[x], e)) ideal.push_back(x);
    }
    const std::size_t k = comp.members.size();
    std::vector<Elem> local_of(n, static_cast<Elem>(k));
    for (std::size_t i = 0; i < k; ++i) local_of[comp.members[i]] = static_cast<Elem>(i);
    std::vector<Elem> table((k + 1) * (k + 1), static_cast<Elem>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        table[i * (k + 1) + j] = local_of[s.mul(comp.members[i], comp.members[j])];
      }
    }
    std::vector<std::string> names;
    for (Elem x : comp.members) names.push_back(s.name(x));
    std::string zname = "z";
    while (std::find(names.begin(), names.end(), zname) != names.end()) zname += "'";
    names.push_back(zname);
    comp.monoid = Semigroup::from_table(k + 1, std::move(table), std::move(names),
                                        static_cast<Elem>(k), std::nullopt, true);
    if (comp.monoid.identity() != std::optional<Elem>(local_of[e])) {
      throw Error(ErrorCode::VerificationFailed, "local component lacks its idempotent as identity");
    }
    d.components.push_back(std::move(comp));
    d.ideals.push_back(std::move(ideal));
  }
  return d;
}

DecompositionCheck global_decomposition_check(const Semigroup& s, std::size_t cap) {
  const SplusDecomposition d = splus_decompose(s);
  const auto sub = mobius_substitution(d.order, mobius(d.order));
  DecompositionCheck r;
  r.theta = paratrophic_determinant(s, CayleyMode::Plain, nullptr, cap);
  r.product = Poly(1L);
  for (const auto& comp : d.components) {
    std::map<VarId, LinForm> y;
    for (std::size_t i = 0; i < comp.members.size(); ++i) {
      y[static_cast<VarId>(i)] = sub.at(comp.members[i]);
    }
    const Poly local = paratrophic_determinant(comp.monoid, CayleyMode::Contracted, nullptr, cap);
    r.product *= substitute_linear(local, y);
  }
  r.holds = r.theta == r.product;
  return r;
}

CycNum LocalSpectrum::value(const Character& chi, Elem m) const {
  return chi.value(coset_unit.at(m));
}

LocalSpectrum local_spectrum(const Semigroup& m) {
  check_local_shape(m);
  LocalSpectrum sp;
  sp.identity = *m.identity();
  sp.zero = *m.zero();
  sp.units = group_of_units(m);
  const std::size_t npos = static_cast<std::size_t>(-1);
  sp.orbit_of.assign(m.size(), npos);
  sp.coset_unit.assign(m.size(), sp.identity);
  auto add_orbit = [&](Elem rep) {
    const std::size_t idx = sp.reps.size();
    sp.reps.push_back(rep);
    std::size_t count = 0;
    for (Elem g : sp.units) {
      const Elem x = m.mul(g, rep);
      if (sp.orbit_of[x] == npos) {
        sp.orbit_of[x] = idx;
        sp.coset_unit[x] = g;
        ++count;
      }
    }
    sp.orbit_sizes.push_back(count);
    sp.stabilizers.push_back(stabilizer(m, sp.units, rep));
  };
  add_orbit(sp.identity);
  for (Elem x = 0; x < m.size(); ++x) {
    if (x != sp.zero && sp.orbit_of[x] == npos) add_orbit(x);
  }

  for (Character& chi : character_group(m, sp.units)) {
    CharacterData cd;
    cd.chi = std::move(chi);
    std::vector<std::size_t> pos(sp.reps.size(), npos);
    for (std::size_t i = 0; i < sp.reps.size(); ++i) {
      if (inside_kernel(cd.chi, sp.stabilizers[i])) {
        pos[i] = cd.J.size();
        cd.J.push_back(i);
      }
    }
    // chi(g) must not depend on the unit carrying m_i to m.
    for (Elem g : sp.units) {
      for (std::size_t i : cd.J) {
        const Elem x = m.mul(g, sp.reps[i]);
        if (cd.chi.value(g) != sp.value(cd.chi, x)) {
          throw Error(ErrorCode::VerificationFailed,
                      "twist value depends on the coset representative at " + m.name(x));
        }
      }
    }
    const std::size_t k = cd.J.size();
    std::vector<Elem> table((k + 1) * (k + 1), static_cast<Elem>(k));
    std::vector<std::string> names;
    for (std::size_t a = 0; a < k; ++a) {
      names.push_back(m.name(sp.reps[cd.J[a]]));
      for (std::size_t b = 0; b < k; ++b) {
        const Elem x = m.mul(sp.reps[cd.J[a]], sp.reps[cd.J[b]]);
        if (x == sp.zero || pos[sp.orbit_of[x]] == npos) continue;
        table[a * (k + 1) + b] = static_cast<Elem>(pos[sp.orbit_of[x]]);
        cd.twist.set(static_cast<Elem>(a), static_cast<Elem>(b), sp.value(cd.chi, x));
      }
    }
    std::string zname = "z";
    while (std::find(names.begin(), names.end(), zname) != names.end()) zname += "'";
    names.push_back(zname);
    cd.quotient = Semigroup::from_table(k + 1, std::move(table), std::move(names),
                                        static_cast<Elem>(k), static_cast<Elem>(0));
    check_cocycle(cd.quotient, cd.twist);
    const NilReport nr = analyze_nilpotent(cd.quotient);
    cd.annihilating_count = nr.annihilating.size();
    if (nr.unique_annihilator) {
      cd.annihilator = *nr.unique_annihilator;
      cd.a = annihilator_matrix(cd.quotient, &cd.twist);
      cd.det_a = det_cyc_matrix(cd.a);
    } else {
      cd.det_a = CycNum(0L);
    }
    sp.characters.push_back(std::move(cd));
  }
  return sp;
}

Factorization factor_local(const Semigroup& m, const VerifyOptions& opt) {
  return factor_local(m, local_spectrum(m), opt);
}

Factorization factor_local(const Semigroup& m, const LocalSpectrum& sp, const VerifyOptions& opt) {
  const Reference ref = matrix_reference(cayley_matrix(m, CayleyMode::Contracted).entries, opt);
  Factorization f;
  f.provenance = "local";
  for (std::size_t c = 0; c < sp.characters.size(); ++c) {
    const CharacterData& cd = sp.characters[c];
    const std::string label = "chi_" + std::to_string(c);
    if (!cd.annihilator) {
      f = zero_factorization("local");
      f.notes.push_back(label + ": no unique annihilating orbit (" +
                        std::to_string(cd.annihilating_count) + " found)");
      settle(f, ref, opt);
      return f;
    }
    f.notes.push_back("det A(" + label + ") = " + cd.det_a.to_string());
    if (cd.det_a.is_zero()) {
      f = zero_factorization("local");
      f.notes.push_back("det A(" + label + ") = 0");
      settle(f, ref, opt);
      return f;
    }
  }
  CycNum det_product(1L);
  CycNum closed(1L);
  std::vector<std::size_t> jsize;
  std::vector<Character> chars;
  const Rat group_order(static_cast<long>(sp.units.size()));
  for (const CharacterData& cd : sp.characters) {
    det_product = det_product * cd.det_a;
    closed = closed * cd.det_a;
    for (std::size_t i : cd.J) {
      closed = closed * CycNum(Rat(static_cast<long>(sp.orbit_sizes[i])) / group_order);
    }
    jsize.push_back(cd.J.size());
    chars.push_back(cd.chi);
    const Elem base = sp.reps[cd.J[*cd.annihilator]];
    f.factors.push_back({conj_orbit_sum(m, sp.units, cd.chi, base),
                         static_cast<unsigned>(cd.J.size())});
    if (cd.J.size() != cd.quotient.size() - 1) {
      throw Error(ErrorCode::VerificationFailed, "|J| differs from |M_chi/G| - 1");
    }
  }
  if (!det_product.is_rational() || det_product.rational_value().get_den() != 1) {
    throw Error(ErrorCode::VerificationFailed,
                "product of det A is not a rational integer: " + det_product.to_string());
  }
  closed = closed * CycNum(pair_sign(chars, jsize));
  settle(f, ref, opt, closed);
  return f;
}

Factorization chain_fastpath(const Semigroup& m, const VerifyOptions& opt) {
  check_local_shape(m);
  const Elem zero = *m.zero();
  const Elem one = *m.identity();
  const auto units = group_of_units(m);
  std::vector<char> unit(m.size(), 0);
  for (Elem g : units) unit[g] = 1;
  std::vector<Elem> nonunits;
  for (Elem x = 0; x < m.size(); ++x) {
    if (!unit[x]) nonunits.push_back(x);
  }
  std::optional<Elem> gen;
  for (Elem t : nonunits) {
    std::vector<char> hit(m.size(), 0);
    for (Elem x = 0; x < m.size(); ++x) hit[m.mul(x, t)] = 1;
    std::vector<Elem> ideal;
    for (Elem x = 0; x < m.size(); ++x) {
      if (hit[x]) ideal.push_back(x);
    }
    if (ideal == nonunits) {
      gen = t;
      break;
    }
  }
  if (!gen) throw Error(ErrorCode::NotChain, "the nonunits are not a principal ideal");
  std::vector<Elem> powers{one};
  for (Elem p = *gen; p != zero; p = m.mul(p, *gen)) powers.push_back(p);
  std::vector<std::vector<Elem>> stabs;
  for (Elem p : powers) stabs.push_back(stabilizer(m, units, p));
  for (std::size_t i = 1; i < stabs.size(); ++i) {
    if (!std::includes(stabs[i].begin(), stabs[i].end(), stabs[i - 1].begin(),
                       stabs[i - 1].end())) {
      throw Error(ErrorCode::VerificationFailed, "stabilizers of the powers are not increasing");
    }
  }
  Factorization f;
  f.provenance = "chain";
  CycNum closed(1L);
  std::vector<std::size_t> jsize;
  const auto chars = character_group(m, units);
  for (const Character& chi : chars) {
    std::size_t top = 0;
    for (std::size_t i = 0; i < stabs.size(); ++i) {
      if (inside_kernel(chi, stabs[i])) top = i;
    }
    jsize.push_back(top + 1);
    if ((top + 1) * top / 2 % 2 == 1) closed = -closed;
    for (std::size_t i = 0; i <= top; ++i) {
      closed = closed * CycNum(Rat(1, static_cast<unsigned long>(stabs[i].size())));
    }
    f.factors.push_back({conj_orbit_sum(m, units, chi, powers[top]),
                         static_cast<unsigned>(top + 1)});
  }
  closed = closed * CycNum(pair_sign(chars, jsize));
  settle(f, matrix_reference(cayley_matrix(m, CayleyMode::Contracted).entries, opt), opt, closed);
  Factorization general = factor_local(m, opt);
  if (!same_factorization(f, general)) {
    throw Error(ErrorCode::VerificationFailed, "chain closed form differs from the local factorization");
  }
  return f;
}

bool same_factorization(const Factorization& a, const Factorization& b) {
  if (a.status != b.status) return false;
  if (a.status == FactorStatus::Zero) return true;
  if (a.constant != b.constant || a.factors.size() != b.factors.size()) return false;
  std::vector<char> used(b.factors.size(), 0);
  for (const Factor& fa : a.factors) {
    bool found = false;
    for (std::size_t j = 0; j < b.factors.size() && !found; ++j) {
      if (!used[j] && b.factors[j].multiplicity == fa.multiplicity &&
          b.factors[j].form == fa.form) {
        used[j] = 1;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

Factorization factor_commutative(const Semigroup& s, const VerifyOptions& opt) {
  if (!s.is_commutative()) throw Error(ErrorCode::NotCommutative, "semigroup is not commutative");
  const Reference ref = matrix_reference(cayley_matrix(s, CayleyMode::Plain).entries, opt);
  const AnalysisReport rep = analyze(s);
  if (!rep.is_idempotent_semigroup) {
    Factorization f = zero_factorization("commutative");
    f.notes.push_back("S^2 != S (" + std::to_string(rep.square.size()) + " of " +
                      std::to_string(s.size()) + " elements are products)");
    settle(f, ref, opt);
    return f;
  }
  const SplusDecomposition d = splus_decompose(s);
  const auto sub = mobius_substitution(d.order, mobius(d.order));

  const std::size_t count = d.components.size();
  std::vector<Factorization> local(count);
  std::vector<std::exception_ptr> failure(count);
  auto work = [&](std::size_t i) {
    try {
      local[i] = factor_local(d.components[i].monoid, opt);
    } catch (...) {
      failure[i] = std::current_exception();
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min<std::size_t>(opt.threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < count; i += threads) work(i);
      });
    }
    for (auto& th : pool) th.join();
  }
  for (auto& e : failure) {
    if (e) std::rethrow_exception(e);
  }

  Factorization f;
  f.provenance = "commutative";
  CycNum claimed(1L);
  for (std::size_t i = 0; i < count; ++i) {
    const LocalComponent& comp = d.components[i];
    const std::string tag = "e=" + s.name(comp.idempotent);
    if (local[i].status == FactorStatus::Zero) {
      Factorization z = zero_factorization("commutative");
      z.notes.push_back("component " + tag + " " + elem_list(s, comp.members) + " vanishes");
      for (const auto& note : local[i].notes) z.notes.push_back(tag + ": " + note);
      settle(z, ref, opt);
      return z;
    }
    std::map<VarId, LinForm> y;
    for (std::size_t k = 0; k < comp.members.size(); ++k) {
      y[static_cast<VarId>(k)] = sub.at(comp.members[k]);
    }
    for (const Factor& lf : local[i].factors) {
      f.factors.push_back({substitute_linear(lf.form, y), lf.multiplicity});
    }
    for (const auto& note : local[i].notes) f.notes.push_back(tag + ": " + note);
    claimed = claimed * local[i].constant;
  }
  settle(f, ref, opt, claimed);
  return f;
}

}  // namespace frobdet
