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

// frobdet: command-line front end.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "frobdet/commutative.hpp"
#include "frobdet/determinant.hpp"
#include "frobdet/error.hpp"
#include "frobdet/inverse.hpp"
#include "frobdet/nilpotent.hpp"
#include "frobdet/order.hpp"
#include "frobdet/ring.hpp"

using namespace frobdet;
using Json = nlohmann::ordered_json;

namespace {

struct RunConfig {
  std::string input = "-";
  bool contracted = false;
  std::string twist;
  unsigned order = 1;
  bool exact = false;
  bool randomized = false;
  std::uint64_t seed = 0;
  std::size_t cap = kDefaultSymbolicCap;
  bool json = false;
  unsigned threads = 1;
  std::string reps;
  std::string mode = "semilattice";
  std::vector<std::string> params;
  std::string second;

  VerifyOptions verify() const {
    VerifyOptions v;
    v.mode = exact ? VerifyMode::Exact : randomized ? VerifyMode::Randomized : VerifyMode::Auto;
    v.seed = seed;
    v.cap = cap;
    v.threads = threads;
    return v;
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

Semigroup load(const RunConfig& cfg) { return parse_sgp(read_input(cfg.input)); }

VarNamer namer_for(const Semigroup& s) {
  return [&s](VarId v) { return "x_" + s.name(v); };
}

Poly embed_poly(const Poly& p, unsigned n) {
  Poly out;
  for (const auto& [m, c] : p.terms()) out += Poly::term(m, c.embed(n));
  return out;
}

std::string monomial_key(const Monomial& m, const VarNamer& name) {
  std::string out;
  for (const auto& [v, e] : m.factors()) {
    if (!out.empty()) out += "*";
    out += name(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

/// Terms as [{"monomial": {var: exp}, "coeff": str}].
Json terms_json(const Poly& p, unsigned n, const VarNamer& name) {
  Json arr = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json mono = Json::object();
    for (const auto& [v, e] : m.factors()) mono[name(v)] = e;
    arr.push_back(Json{{"monomial", mono}, {"coeff", c.embed(n).to_string()}});
  }
  return arr;
}

Json verification_json(const Verification& v) {
  Json j{{"mode", v.mode}, {"rounds", v.rounds}, {"seed", v.seed}};
  if (v.mode == "randomized") j["failure_bound"] = v.failure_bound;
  return j;
}

Json factorization_json(const Factorization& f, const VarNamer& name) {
  const unsigned n = f.cyclotomic_order();
  Json j;
  j["status"] = f.status == FactorStatus::Zero ? "zero" : "factored";
  j["constant"] = f.constant.embed(n).to_string();
  j["cyclotomic_order"] = n;
  Json factors = Json::array();
  for (const Factor& fac : f.factors) {
    Json e;
    if (fac.form.total_degree() == 1 && fac.form.is_homogeneous()) {
      Json form = Json::object();
      for (const auto& [m, c] : fac.form.terms()) form[name(m.factors()[0].first)] = c.embed(n).to_string();
      e["form"] = form;
    } else {
      e["terms"] = terms_json(fac.form, n, name);
    }
    e["multiplicity"] = fac.multiplicity;
    factors.push_back(e);
  }
  j["factors"] = factors;
  j["verification"] = verification_json(f.verification);
  j["provenance"] = f.provenance;
  if (!f.notes.empty()) j["notes"] = f.notes;
  return j;
}

void print_factorization(std::ostream& os, const Factorization& f, const VarNamer& name) {
  const unsigned n = f.cyclotomic_order();
  os << "provenance: " << f.provenance << "\n";
  os << "status: " << (f.status == FactorStatus::Zero ? "zero" : "factored") << "\n";
  if (f.status == FactorStatus::Factored) {
    os << "constant: " << f.constant.embed(n).to_string() << "\n";
    os << "cyclotomic order: " << n << (n > 1 ? " (z = exp(2 pi i / " + std::to_string(n) + "))" : "")
       << "\n";
    for (const Factor& fac : f.factors) {
      os << "factor: (" << embed_poly(fac.form, n).to_string(name) << ")";
      if (fac.multiplicity > 1) os << "^" << fac.multiplicity;
      os << "\n";
    }
  }
  for (const auto& note : f.notes) os << "note: " << note << "\n";
  os << "verification: " << f.verification.mode;
  if (f.verification.mode == "randomized") {
    os << " (rounds " << f.verification.rounds << ", seed " << f.verification.seed
       << ", failure bound " << f.verification.failure_bound << ")";
  }
  os << "\n";
}

Json witness_json(const std::map<VarId, long long>& w, const VarNamer& name) {
  Json j = Json::object();
  for (const auto& [v, val] : w) j[name(v)] = val;
  return j;
}

Json frobenius_json(const FrobeniusResult& r, const VarNamer& name) {
  Json j;
  j["status"] = to_string(r.verdict);
  j["stage"] = r.stage;
  j["reason"] = r.reason;
  if (!r.witness.empty()) {
    j["witness"] = witness_json(r.witness, name);
    j["value"] = r.value.get_str();
  }
  return j;
}

void print_frobenius(std::ostream& os, const FrobeniusResult& r, const VarNamer& name) {
  os << "verdict: " << to_string(r.verdict) << "\n";
  os << "stage: " << r.stage << "\n";
  os << "reason: " << r.reason << "\n";
  if (!r.witness.empty()) {
    os << "witness:";
    for (const auto& [v, val] : r.witness) os << " " << name(v) << "=" << val;
    os << "\n";
    os << "determinant at witness: " << r.value.get_str() << "\n";
  }
}

// ------------------------------------------------------------ representations

Matrix<CycNum> matrix_from_json(const Json& rows, unsigned order) {
  const std::size_t n = rows.size();
  Matrix<CycNum> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw Error(ErrorCode::RepDimensionMismatch, "matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      const Json& e = rows[i][j];
      m(i, j) = e.is_string() ? CycNum::parse(e.get<std::string>(), order)
                              : CycNum(order, Rat(e.get<long>()));
    }
  }
  return m;
}

std::vector<RepMatrix> reps_from_json(const Json& list, const Semigroup& s, unsigned order) {
  std::vector<RepMatrix> out;
  for (const Json& rep : list) {
    RepMatrix r;
    for (const auto& [name, rows] : rep.items()) {
      const auto e = s.find(name);
      if (!e) throw Error(ErrorCode::IndexOutOfRange, "unknown element " + name);
      r[*e] = matrix_from_json(rows, order);
    }
    out.push_back(std::move(r));
  }
  return out;
}

/// {"order": N, "representations": [...]} for a group, or
/// {"order": N, "by_idempotent": {"e": [...]}} for a Clifford semigroup.
struct RepsFile {
  std::vector<RepMatrix> group;
  std::map<Elem, std::vector<RepMatrix>> by_idempotent;
};

RepsFile load_reps(const std::string& path, const Semigroup& s) {
  Json j;
  try {
    j = Json::parse(read_input(path));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("representation file: ") + e.what());
  }
  const unsigned order = j.value("order", 1U);
  RepsFile out;
  if (j.contains("representations")) out.group = reps_from_json(j["representations"], s, order);
  if (j.contains("by_idempotent")) {
    for (const auto& [name, list] : j["by_idempotent"].items()) {
      const auto e = s.find(name);
      if (!e) throw Error(ErrorCode::IndexOutOfRange, "unknown idempotent " + name);
      out.by_idempotent[*e] = reps_from_json(list, s, order);
    }
  }
  return out;
}

// ------------------------------------------------------------ dispatch

struct Dispatched {
  std::optional<Factorization> factorization;
  std::optional<FrobeniusResult> frobenius;
  std::string explanation;
  std::optional<GroupoidStructure> groupoid;
};

bool abelian_subgroups(const Semigroup& s) {
  for (Elem e : s.idempotents()) {
    const auto g = maximal_subgroup(s, e);
    for (Elem a : g)
      for (Elem b : g)
        if (s.mul(a, b) != s.mul(b, a)) return false;
  }
  return true;
}

bool has_nil_shape(const Semigroup& s) {
  try {
    analyze_nilpotent(s);
    return true;
  } catch (const Error&) {
    return false;
  }
}

bool has_local_shape(const Semigroup& s) {
  try {
    local_spectrum(s);
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotLocalShape) return false;
    throw;
  }
}

/// Plain determinant of a nilpotent semigroup with identity adjoined:
/// theta_M = x_z * contracted(x_s - x_z).
Factorization nil_plain(const Semigroup& m, const VerifyOptions& opt) {
  const Factorization c = factor_nil_adjoined(m, nullptr, opt);
  const Reference ref = matrix_reference(cayley_matrix(m, CayleyMode::Plain).entries, opt);
  Factorization f;
  f.provenance = "nilpotent-adjoined";
  f.notes = c.notes;
  if (c.status == FactorStatus::Zero) {
    f = zero_factorization(f.provenance);
    f.notes = c.notes;
    settle(f, ref, opt);
    return f;
  }
  const Elem z = *m.zero();
  std::map<VarId, LinForm> shift;
  for (Elem s = 0; s < m.size(); ++s) {
    LinForm l = LinForm::variable(s);
    if (s != z) l.add(z, CycNum(-1L));
    shift[s] = l;
  }
  f.factors.push_back({Poly::variable(z), 1});
  for (const Factor& fac : c.factors) f.factors.push_back({substitute_linear(fac.form, shift), fac.multiplicity});
  settle(f, ref, opt, c.constant);
  return f;
}

Factorization direct(const Semigroup& s, CayleyMode mode, const Cocycle* c, const RunConfig& cfg) {
  const Poly p = checked_determinant(cayley_matrix(s, mode, c).entries, cfg.cap);
  Factorization f;
  f.provenance = "direct";
  if (p.is_zero()) {
    f = zero_factorization("direct");
  } else {
    f.factors.push_back({p, 1});
  }
  VerifyOptions opt = cfg.verify();
  opt.mode = VerifyMode::Exact;
  settle(f, poly_reference(p, p.variables(), p.total_degree()), opt);
  f.notes.push_back("no factorization theorem applies; the determinant is reported whole");
  return f;
}

Dispatched dispatch(const Semigroup& s, const RunConfig& cfg) {
  const VerifyOptions opt = cfg.verify();
  Dispatched d;
  if (cfg.contracted || !cfg.twist.empty()) {
    if (!cfg.twist.empty()) {
      const Cocycle c = parse_cocycle(read_input(cfg.twist), s, cfg.order);
      d.factorization = factor_nil_adjoined(s, &c, opt);
      d.explanation = "twisted contracted determinant of a nilpotent semigroup with identity";
      return d;
    }
    if (has_nil_shape(s)) {
      d.factorization = factor_nil_adjoined(s, nullptr, opt);
      d.explanation = "nilpotent semigroup with identity adjoined";
    } else if (has_local_shape(s)) {
      d.factorization = factor_local(s, opt);
      d.explanation = "commutative monoid whose nonunits are nilpotent";
    } else {
      d.factorization = direct(s, CayleyMode::Contracted, nullptr, cfg);
      d.explanation = "contracted determinant expanded directly";
    }
    return d;
  }

  const bool commutative = s.is_commutative();
  const std::size_t idem = s.idempotents().size();
  if (commutative && idem == s.size()) {
    d.factorization = factor_semilattice(s, opt);
    d.explanation = "semilattice";
    return d;
  }
  if (s.is_group()) {
    if (commutative) {
      d.factorization = factor_group_determinant(s, nullptr, opt);
      d.explanation = "abelian group";
      return d;
    }
    if (!cfg.reps.empty()) {
      const RepsFile r = load_reps(cfg.reps, s);
      d.factorization = factor_group_determinant(s, &r.group, opt);
      d.explanation = "group with supplied irreducible representations";
      return d;
    }
  }
  const InverseCheck inv = is_inverse(s);
  if (inv.inverse) {
    const bool central = analyze(s).central_idempotents;
    if (central && (abelian_subgroups(s) || !cfg.reps.empty())) {
      if (cfg.reps.empty()) {
        d.factorization = factor_clifford(s, opt);
      } else {
        const RepsFile r = load_reps(cfg.reps, s);
        d.factorization = factor_clifford(s, opt, &r.by_idempotent);
      }
      d.explanation = "clifford semigroup";
      return d;
    }
    const InverseDeterminant id = inverse_determinant(s, cfg.cap);
    Factorization f;
    f.provenance = "inverse-groupoid";
    if (id.theta.is_zero()) {
      f = zero_factorization(f.provenance);
    } else {
      f.factors.push_back({id.theta, 1});
    }
    VerifyOptions exact = opt;
    exact.mode = VerifyMode::Exact;
    settle(f, poly_reference(id.theta, id.theta.variables(), id.theta.total_degree()), exact);
    f.notes.push_back("groupoid determinant after the Mobius substitution");
    if (id.checked_direct) f.notes.push_back("matches the direct determinant");
    d.factorization = f;
    d.groupoid = groupoid_structure(groupoid_of(s, inv.star));
    d.explanation = "inverse semigroup";
    return d;
  }
  if (has_nil_shape(s)) {
    d.factorization = nil_plain(s, opt);
    d.explanation = "nilpotent semigroup with identity adjoined";
    return d;
  }
  if (commutative) {
    d.factorization = factor_commutative(s, opt);
    d.explanation = "commutative semigroup";
    return d;
  }
  FrobeniusOptions fo;
  fo.seed = cfg.seed;
  fo.cap = cfg.cap;
  d.frobenius = frobenius_test(s, fo);
  d.explanation = "no factorization theorem covers this semigroup (not a semilattice, group, "
                  "inverse, nilpotent-adjoined or commutative); ran the staged Frobenius test";
  return d;
}

// ------------------------------------------------------------ subcommands

int cmd_validate(const RunConfig& cfg) {
  std::cout << to_sgp(load(cfg));
  return 0;
}

Json elem_list(const Semigroup& s, const std::vector<Elem>& xs) {
  Json a = Json::array();
  for (Elem x : xs) a.push_back(s.name(x));
  return a;
}

int cmd_info(const RunConfig& cfg) {
  const Semigroup s = load(cfg);
  const AnalysisReport r = analyze(s);
  Json j;
  j["size"] = s.size();
  j["idempotents"] = elem_list(s, r.idempotents);
  j["is_commutative"] = r.is_commutative;
  j["zero"] = r.zero ? Json(s.name(*r.zero)) : Json(nullptr);
  j["identity"] = r.identity ? Json(s.name(*r.identity)) : Json(nullptr);
  j["square"] = elem_list(s, r.square);
  j["is_idempotent_semigroup"] = r.is_idempotent_semigroup;
  Json fp = Json::object();
  for (Elem x = 0; x < s.size(); ++x) fp[s.name(x)] = {r.fixed_points[x].first, r.fixed_points[x].second};
  j["fixed_points"] = fp;
  j["central_idempotents"] = r.central_idempotents;
  j["group_of_units"] = r.group_of_units ? elem_list(s, *r.group_of_units) : Json(nullptr);
  if (cfg.json) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  auto list = [](const Json& a) {
    std::string out;
    for (const auto& e : a) out += (out.empty() ? "" : " ") + e.get<std::string>();
    return "{" + out + "}";
  };
  std::cout << "size: " << s.size() << "\n"
            << "idempotents: " << list(j["idempotents"]) << "\n"
            << "commutative: " << (r.is_commutative ? "yes" : "no") << "\n"
            << "zero: " << (r.zero ? s.name(*r.zero) : "none") << "\n"
            << "identity: " << (r.identity ? s.name(*r.identity) : "none") << "\n"
            << "S^2 = S: " << (r.is_idempotent_semigroup ? "yes" : "no") << " (" << r.square.size()
            << " products)\n"
            << "central idempotents: " << (r.central_idempotents ? "yes" : "no") << "\n";
  if (r.group_of_units) std::cout << "group of units: " << list(j["group_of_units"]) << "\n";
  std::cout << "fixed points (left, right):\n";
  for (Elem x = 0; x < s.size(); ++x) {
    std::cout << "  " << s.name(x) << ": " << r.fixed_points[x].first << ", " << r.fixed_points[x].second
              << "\n";
  }
  return 0;
}

int cmd_det(const RunConfig& cfg) {
  const Semigroup s = load(cfg);
  std::optional<Cocycle> c;
  if (!cfg.twist.empty()) c = parse_cocycle(read_input(cfg.twist), s, cfg.order);
  const CayleyMode mode = c ? CayleyMode::Twisted : cfg.contracted ? CayleyMode::Contracted : CayleyMode::Plain;
  const Poly p = paratrophic_determinant(s, mode, c ? &*c : nullptr, cfg.cap);
  const unsigned n = std::max(1U, p.order());
  const VarNamer name = namer_for(s);
  if (cfg.json) {
    Json j;
    j["status"] = p.is_zero() ? "zero" : "nonzero";
    j["mode"] = to_string(mode);
    j["cyclotomic_order"] = n;
    j["degree"] = p.total_degree();
    j["terms"] = terms_json(p, n, name);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << embed_poly(p, n).to_string(name) << "\n";
  }
  return 0;
}

int cmd_frobenius(const RunConfig& cfg) {
  const Semigroup s = load(cfg);
  FrobeniusOptions fo;
  fo.seed = cfg.seed;
  fo.cap = cfg.cap;
  const FrobeniusResult r = frobenius_test(s, fo);
  if (cfg.json) {
    std::cout << frobenius_json(r, namer_for(s)).dump(2) << "\n";
  } else {
    print_frobenius(std::cout, r, namer_for(s));
  }
  return 0;
}

int cmd_mobius(const RunConfig& cfg) {
  const Semigroup s = load(cfg);
  OrderMode mode;
  if (cfg.mode == "semilattice") {
    mode = OrderMode::Semilattice;
  } else if (cfg.mode == "inverse") {
    mode = OrderMode::Inverse;
  } else if (cfg.mode == "central") {
    mode = OrderMode::CentralIdempotent;
  } else {
    throw UsageError("--mode must be semilattice, inverse or central");
  }
  const FinitePoset p = natural_order(s, mode);
  const IntMatrix mu = mobius(p);
  if (cfg.json) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < mu.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < mu.cols(); ++j) row.push_back(mu(i, j).get_si());
      rows.push_back(row);
    }
    Json names = Json::array();
    for (Elem x = 0; x < s.size(); ++x) names.push_back(s.name(x));
    std::cout << Json{{"mode", to_string(mode)}, {"elements", names}, {"mu", rows}}.dump(2) << "\n";
    return 0;
  }
  std::cout << "mode: " << to_string(mode) << "\n";
  std::cout << "mu(row, column), rows and columns in element order:\n";
  for (std::size_t i = 0; i < mu.rows(); ++i) {
    std::cout << s.name(static_cast<Elem>(i)) << ":";
    for (std::size_t j = 0; j < mu.cols(); ++j) std::cout << " " << mu(i, j).get_str();
    std::cout << "\n";
  }
  return 0;
}

Json groupoid_json(const Semigroup& s, const GroupoidStructure& g) {
  Json classes = Json::array();
  for (const auto& c : g.classes) {
    classes.push_back(Json{{"objects", elem_list(s, c.objects)},
                           {"automorphism_group", elem_list(s, c.automorphisms)},
                           {"arrows", c.arrows},
                           {"block_dimension", c.block_dimension()}});
  }
  return Json{{"classes", classes},
              {"arrow_count", g.arrow_count},
              {"dimension_identity", g.dimension_identity()}};
}

int cmd_groupoid(const RunConfig& cfg) {
  const Semigroup s = load(cfg);
  const InverseCheck inv = is_inverse(s);
  if (!inv.inverse) {
    throw Error(ErrorCode::NotInverse, s.name(*inv.witness) + " has " +
                                           std::to_string(inv.witness_count) + " inverses");
  }
  const GroupoidStructure g = groupoid_structure(groupoid_of(s, inv.star));
  if (cfg.json) {
    std::cout << groupoid_json(s, g).dump(2) << "\n";
    return 0;
  }
  std::size_t i = 0;
  for (const auto& c : g.classes) {
    std::cout << "class " << i++ << ": " << c.n() << " objects, automorphism group of order "
              << c.automorphisms.size() << ", " << c.arrows << " arrows, block "
              << c.block_dimension() << " x " << c.block_dimension() << "\n";
  }
  std::cout << "sum n^2 |G| = " << g.arrow_count << (g.dimension_identity() ? " (holds)" : " (FAILS)")
            << "\n";
  return 0;
}

int cmd_factor(const RunConfig& cfg) {
  const Semigroup s = load(cfg);
  const Dispatched d = dispatch(s, cfg);
  const VarNamer name = namer_for(s);
  if (cfg.json) {
    Json j = d.factorization ? factorization_json(*d.factorization, name) : frobenius_json(*d.frobenius, name);
    if (!d.factorization) j["provenance"] = "frobenius-test";
    j["explanation"] = d.explanation;
    if (d.groupoid) j["groupoid"] = groupoid_json(s, *d.groupoid);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "dispatch: " << d.explanation << "\n";
  if (d.factorization) {
    print_factorization(std::cout, *d.factorization, name);
  } else {
    print_frobenius(std::cout, *d.frobenius, name);
  }
  return 0;
}

int cmd_gen(const RunConfig& cfg) {
  if (cfg.params.empty()) throw UsageError("gen needs a family name");
  const std::vector<std::string> rest(cfg.params.begin() + 1, cfg.params.end());
  std::cout << to_sgp(build_family(cfg.params[0], rest));
  return 0;
}

unsigned parse_count(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const unsigned long v = std::stoul(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return static_cast<unsigned>(v);
  } catch (const std::exception&) {
    throw UsageError(std::string(what) + " must be a nonnegative integer, got '" + s + "'");
  }
}

int cmd_smith(const RunConfig& cfg) {
  if (cfg.params.size() != 1) throw UsageError("smith takes one argument");
  const SmithReport r = smith_matrix(parse_count(cfg.params[0], "n"));
  if (cfg.json) {
    std::cout << Json{{"determinant", r.direct.get_str()},
                      {"phi", r.phi},
                      {"phi_product", r.phi_product.get_str()}}
                     .dump(2)
              << "\n";
    return 0;
  }
  std::cout << r.direct.get_str() << "\n";
  std::string prod;
  for (unsigned v : r.phi) prod += (prod.empty() ? "" : "*") + std::to_string(v);
  std::cout << "phi(1)...phi(" << r.phi.size() << ") = " << prod << " = " << r.phi_product.get_str()
            << "\n";
  return 0;
}

int cmd_kovacs(const RunConfig& cfg) {
  if (cfg.params.size() != 2) throw UsageError("kovacs takes n and q");
  const KovacsReport r = kovacs_check(parse_count(cfg.params[0], "n"), parse_count(cfg.params[1], "q"));
  if (cfg.json) {
    Json terms = Json::array();
    for (const auto& t : r.terms) {
      terms.push_back(Json{{"r", t.r},
                           {"q_binomial", t.qbinomial.get_str()},
                           {"subspaces", t.subspaces ? Json(t.subspaces->get_str()) : Json(nullptr)},
                           {"gl_order", t.gl_order.get_str()}});
    }
    std::cout << Json{{"n", r.n}, {"q", r.q}, {"total", r.total.get_str()}, {"sum", r.sum.get_str()},
                      {"holds", r.holds}, {"terms", terms}}
                     .dump(2)
              << "\n";
    return r.holds ? 0 : 1;
  }
  std::cout << "q^(n^2) = " << r.total.get_str() << "\n";
  for (const auto& t : r.terms) {
    std::cout << "r=" << t.r << ": binom=" << t.qbinomial.get_str();
    if (t.subspaces) std::cout << " (subspaces counted: " << t.subspaces->get_str() << ")";
    std::cout << " |GL_r|=" << t.gl_order.get_str() << "\n";
  }
  std::cout << "sum = " << r.sum.get_str() << (r.holds ? " (identity holds)" : " (identity FAILS)") << "\n";
  return r.holds ? 0 : 1;
}

int cmd_ringcheck(const RunConfig& cfg) {
  const auto& p = cfg.params;
  RingMonoid r;
  std::string label;
  if (p.size() == 2 && p[0] == "zmod") {
    r = zmod_monoid(parse_count(p[1], "n"));
    label = "Z/" + p[1];
  } else if (p.size() == 3 && p[0] == "matmonoid") {
    r = matrix_monoid(parse_count(p[1], "n"), parse_count(p[2], "q"));
    label = "M_" + p[1] + "(F_" + p[2] + ")";
  } else {
    throw UsageError("ringcheck takes 'zmod <n>' or 'matmonoid <n> <q>'");
  }
  const auto d = frobenius_form_check(r.monoid, r.lambda);
  const unsigned n = r.lambda.order;
  if (cfg.json) {
    std::cout << Json{{"ring", label},
                      {"size", r.monoid.size()},
                      {"status", d ? "nonzero" : "zero"},
                      {"determinant", d ? d->embed(n).to_string() : "0"},
                      {"cyclotomic_order", n}}
                     .dump(2)
              << "\n";
    return 0;
  }
  std::cout << "ring: " << label << " (" << r.monoid.size() << " elements)\n";
  std::cout << "generating character: additive, order " << n << "\n";
  std::cout << "det[lambda(st)] = " << (d ? d->embed(n).to_string() : "0") << "\n";
  std::cout << (d ? "nonzero: the semigroup algebra is Frobenius\n" : "zero: inconclusive\n");
  return 0;
}

/// Polynomial from a terms array, naming variables through `ids`.
Poly poly_from_terms(const Json& terms, unsigned order, std::map<std::string, VarId>& ids) {
  Poly p;
  for (const Json& t : terms) {
    Monomial m;
    for (const auto& [var, e] : t.at("monomial").items()) {
      const auto [it, fresh] = ids.emplace(var, static_cast<VarId>(ids.size()));
      m = m * Monomial(it->second, e.get<std::uint32_t>());
    }
    p += Poly::term(m, CycNum::parse(t.at("coeff").get<std::string>(), order));
  }
  return p;
}

int cmd_verify(const RunConfig& cfg) {
  Json det, fac;
  try {
    det = Json::parse(read_input(cfg.input));
    fac = Json::parse(read_input(cfg.second));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
  std::map<std::string, VarId> ids;
  Poly reference;
  try {
    reference = poly_from_terms(det.at("terms"), det.value("cyclotomic_order", 1U), ids);
    const unsigned order = fac.value("cyclotomic_order", 1U);
    Factorization f;
    f.status = fac.at("status").get<std::string>() == "zero" ? FactorStatus::Zero : FactorStatus::Factored;
    f.constant = f.status == FactorStatus::Zero ? CycNum(0L)
                                                : CycNum::parse(fac.at("constant").get<std::string>(), order);
    for (const Json& e : fac.at("factors")) {
      Poly form;
      if (e.contains("form")) {
        for (const auto& [var, c] : e["form"].items()) {
          const auto [it, fresh] = ids.emplace(var, static_cast<VarId>(ids.size()));
          form += Poly::term(Monomial(it->second), CycNum::parse(c.get<std::string>(), order));
        }
      } else {
        form = poly_from_terms(e.at("terms"), order, ids);
      }
      f.factors.push_back({form, e.at("multiplicity").get<unsigned>()});
    }
    const IdentityMode mode = cfg.randomized ? IdentityMode::Randomized : IdentityMode::Exact;
    const IdentityResult r = verify_factorization(reference, f, mode, cfg.seed);
    std::vector<std::string> names(ids.size());
    for (const auto& [n, v] : ids) names[v] = n;
    const VarNamer name = [&](VarId v) { return names.at(v); };
    if (cfg.json) {
      Json j{{"status", r.equal ? "verified" : "mismatch"},
             {"verification",
              {{"mode", mode == IdentityMode::Exact ? "exact" : "randomized"},
               {"rounds", r.rounds},
               {"seed", r.seed}}}};
      if (r.probabilistic) j["verification"]["failure_bound"] = r.failure_bound;
      if (!r.witness.empty()) j["witness"] = witness_json(r.witness, name);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << (r.equal ? "verified" : "mismatch") << " ("
                << (mode == IdentityMode::Exact ? "exact" : "randomized") << ")\n";
      if (!r.witness.empty()) {
        std::cout << "witness:";
        for (const auto& [v, val] : r.witness) std::cout << " " << name(v) << "=" << val;
        std::cout << "\n";
      }
    }
    if (!r.equal) throw Error(ErrorCode::VerificationFailed, "factorization does not expand to the determinant");
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact factorization of semigroup determinants"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto input = [&](CLI::App* sub) { sub->add_option("input", cfg.input, "semigroup file (.sgp) or - for stdin")->required(); };
  auto json = [&](CLI::App* sub) { sub->add_flag("--json", cfg.json, "machine-readable output"); };
  auto cap = [&](CLI::App* sub) {
    sub->add_option("--cap", cfg.cap, "largest symbolic determinant dimension")->capture_default_str();
  };
  auto seed = [&](CLI::App* sub) { sub->add_option("--seed", cfg.seed, "seed for random points")->capture_default_str(); };
  auto twist = [&](CLI::App* sub) {
    sub->add_flag("--contracted", cfg.contracted, "contracted determinant (drops the zero)");
    sub->add_option("--twist", cfg.twist, "cocycle file for the twisted contracted determinant");
    sub->add_option("--order", cfg.order, "cyclotomic order of the cocycle values")->capture_default_str();
  };

  auto* validate = app.add_subcommand("validate", "check a table and print its canonical form");
  input(validate);
  auto* info = app.add_subcommand("info", "idempotents, zero, identity, S^2, fixed points");
  input(info);
  json(info);
  auto* det = app.add_subcommand("det", "symbolic semigroup determinant");
  input(det);
  twist(det);
  cap(det);
  json(det);
  auto* frob = app.add_subcommand("frobenius", "staged Frobenius test");
  input(frob);
  seed(frob);
  cap(frob);
  json(frob);
  auto* mob = app.add_subcommand("mobius", "Mobius function of the natural order");
  input(mob);
  mob->add_option("--mode", cfg.mode, "semilattice, inverse or central")->capture_default_str();
  json(mob);
  auto* factor = app.add_subcommand("factor", "factor the determinant with the applicable theorem");
  input(factor);
  twist(factor);
  auto* ex = factor->add_flag("--exact", cfg.exact, "always verify symbolically");
  factor->add_flag("--randomized", cfg.randomized, "verify by random evaluation")->excludes(ex);
  seed(factor);
  cap(factor);
  json(factor);
  factor->add_option("--threads", cfg.threads, "worker threads")->capture_default_str()->check(CLI::Range(1U, 256U));
  factor->add_option("--reps", cfg.reps, "irreducible representations (JSON)");
  auto* grp = app.add_subcommand("groupoid", "groupoid of an inverse semigroup");
  input(grp);
  json(grp);
  auto* gen = app.add_subcommand("gen", "emit a family member as .sgp");
  gen->add_option("family", cfg.params, "family name and parameters")->required();
  auto* smith = app.add_subcommand("smith", "gcd matrix determinant");
  smith->add_option("n", cfg.params)->required();
  json(smith);
  auto* kov = app.add_subcommand("kovacs", "dimension identity for M_n(F_q)");
  kov->add_option("args", cfg.params, "n q")->required()->expected(2);
  json(kov);
  auto* ring = app.add_subcommand("ringcheck", "Frobenius form of a ring monoid");
  ring->add_option("ring", cfg.params, "zmod <n> | matmonoid <n> <q>")->required()->expected(2, 3);
  json(ring);
  auto* ver = app.add_subcommand("verify", "check a factorization against a determinant");
  ver->add_option("det", cfg.input, "output of det --json")->required();
  ver->add_option("factorization", cfg.second, "output of factor --json")->required();
  ver->add_flag("--randomized", cfg.randomized, "compare at random points");
  seed(ver);
  json(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (*validate) return cmd_validate(cfg);
    if (*info) return cmd_info(cfg);
    if (*det) return cmd_det(cfg);
    if (*frob) return cmd_frobenius(cfg);
    if (*mob) return cmd_mobius(cfg);
    if (*factor) return cmd_factor(cfg);
    if (*grp) return cmd_groupoid(cfg);
    if (*gen) return cmd_gen(cfg);
    if (*smith) return cmd_smith(cfg);
    if (*kov) return cmd_kovacs(cfg);
    if (*ring) return cmd_ringcheck(cfg);
    if (*ver) return cmd_verify(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
