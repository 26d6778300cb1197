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

// Python bindings: semigroups in, factorizations out as plain dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "frobdet/commutative.hpp"
#include "frobdet/determinant.hpp"
#include "frobdet/error.hpp"
#include "frobdet/inverse.hpp"
#include "frobdet/nilpotent.hpp"
#include "frobdet/order.hpp"
#include "frobdet/ring.hpp"

namespace py = pybind11;
using namespace frobdet;

namespace {

VerifyOptions verify_options(const std::string& mode, std::uint64_t seed, std::size_t cap) {
  VerifyOptions v;
  if (mode == "exact") {
    v.mode = VerifyMode::Exact;
  } else if (mode == "randomized") {
    v.mode = VerifyMode::Randomized;
  } else if (mode == "auto") {
    v.mode = VerifyMode::Auto;
  } else {
    throw py::value_error("verify must be 'auto', 'exact' or 'randomized'");
  }
  v.seed = seed;
  v.cap = cap;
  return v;
}

Poly embedded(const Poly& p, unsigned n) {
  Poly out;
  for (const auto& [m, c] : p.terms()) out += Poly::term(m, c.embed(n));
  return out;
}

py::dict factorization_dict(const Factorization& f, const Semigroup& s) {
  const unsigned n = f.cyclotomic_order();
  const VarNamer name = [&s](VarId v) { return "x_" + s.name(v); };
  py::list factors;
  for (const Factor& fac : f.factors) {
    factors.append(py::make_tuple(embedded(fac.form, n).to_string(name), fac.multiplicity));
  }
  py::dict d;
  d["status"] = f.status == FactorStatus::Zero ? "zero" : "factored";
  d["constant"] = f.constant.embed(n).to_string();
  d["cyclotomic_order"] = n;
  d["factors"] = factors;
  d["verification"] = f.verification.mode;
  d["provenance"] = f.provenance;
  d["notes"] = f.notes;
  return d;
}

template <class Fn>
auto factorizer(Fn fn) {
  return [fn](const Semigroup& s, const std::string& verify, std::uint64_t seed, std::size_t cap) {
    return factorization_dict(fn(s, verify_options(verify, seed, cap)), s);
  };
}

CayleyMode cayley_mode(const std::string& m) {
  if (m == "plain") return CayleyMode::Plain;
  if (m == "contracted") return CayleyMode::Contracted;
  throw py::value_error("mode must be 'plain' or 'contracted'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact factorization of semigroup determinants";

  py::register_exception<Error>(m, "FrobdetError", PyExc_ValueError);

  py::class_<Semigroup>(m, "Semigroup")
      .def_static("parse", [](const std::string& text) { return parse_sgp(text); }, py::arg("text"))
      .def_static("family",
                  [](const std::string& name, const std::vector<std::string>& params) {
                    return build_family(name, params);
                  },
                  py::arg("name"), py::arg("params") = std::vector<std::string>{})
      .def("to_sgp", [](const Semigroup& s) { return to_sgp(s); })
      .def("__len__", &Semigroup::size)
      .def_property_readonly("names", [](const Semigroup& s) {
        std::vector<std::string> out;
        for (Elem x = 0; x < s.size(); ++x) out.push_back(s.name(x));
        return out;
      })
      .def("mul",
           [](const Semigroup& s, const std::string& a, const std::string& b) {
             const auto x = s.find(a), y = s.find(b);
             if (!x || !y) throw py::key_error("unknown element");
             return s.name(s.mul(*x, *y));
           })
      .def_property_readonly("zero", [](const Semigroup& s) -> std::optional<std::string> {
        if (!s.zero()) return std::nullopt;
        return s.name(*s.zero());
      })
      .def_property_readonly("identity", [](const Semigroup& s) -> std::optional<std::string> {
        if (!s.identity()) return std::nullopt;
        return s.name(*s.identity());
      })
      .def("is_commutative", &Semigroup::is_commutative)
      .def("is_group", &Semigroup::is_group)
      .def("__repr__", [](const Semigroup& s) { return "<Semigroup of order " + std::to_string(s.size()) + ">"; });

  m.def("family_names", &family_names);

  m.def("determinant",
        [](const Semigroup& s, const std::string& mode, std::size_t cap) {
          const Poly p = paratrophic_determinant(s, cayley_mode(mode), nullptr, cap);
          return embedded(p, std::max(1U, p.order())).to_string([&s](VarId v) { return "x_" + s.name(v); });
        },
        py::arg("s"), py::arg("mode") = "plain", py::arg("cap") = kDefaultSymbolicCap);

#define FROBDET_FACTOR(pyname, call)                                                          \
  m.def(pyname, factorizer([](const Semigroup& s, const VerifyOptions& o) { return call; }),   \
        py::arg("s"), py::arg("verify") = "auto", py::arg("seed") = 0,                        \
        py::arg("cap") = kDefaultSymbolicCap)
  FROBDET_FACTOR("factor_semilattice", factor_semilattice(s, o));
  FROBDET_FACTOR("factor_group", factor_group_determinant(s, nullptr, o));
  FROBDET_FACTOR("factor_clifford", factor_clifford(s, o));
  FROBDET_FACTOR("factor_nil_adjoined", factor_nil_adjoined(s, nullptr, o));
  FROBDET_FACTOR("factor_local", factor_local(s, o));
  FROBDET_FACTOR("chain_fastpath", chain_fastpath(s, o));
  FROBDET_FACTOR("factor_commutative", factor_commutative(s, o));
#undef FROBDET_FACTOR

  m.def("frobenius_test",
        [](const Semigroup& s, std::uint64_t seed, std::size_t cap) {
          FrobeniusOptions o;
          o.seed = seed;
          o.cap = cap;
          const FrobeniusResult r = frobenius_test(s, o);
          py::dict d;
          d["status"] = to_string(r.verdict);
          d["stage"] = r.stage;
          d["reason"] = r.reason;
          py::dict w;
          for (const auto& [v, val] : r.witness) w[py::str("x_" + s.name(v))] = val;
          d["witness"] = w;
          return d;
        },
        py::arg("s"), py::arg("seed") = 0, py::arg("cap") = kDefaultSymbolicCap);

  m.def("smith", [](unsigned n) {
    const SmithReport r = smith_matrix(n);
    return py::make_tuple(py::int_(py::str(r.direct.get_str())), r.phi);
  });

  m.def("kovacs", [](unsigned n, unsigned q) {
    const KovacsReport r = kovacs_check(n, q);
    py::list terms;
    for (const auto& t : r.terms) {
      terms.append(py::make_tuple(t.r, py::int_(py::str(t.qbinomial.get_str())),
                                  py::int_(py::str(t.gl_order.get_str()))));
    }
    py::dict d;
    d["total"] = py::int_(py::str(r.total.get_str()));
    d["sum"] = py::int_(py::str(r.sum.get_str()));
    d["holds"] = r.holds;
    d["terms"] = terms;
    return d;
  });

  m.def("ringcheck_zmod", [](unsigned n) -> std::optional<std::string> {
    const RingMonoid r = zmod_monoid(n);
    const auto d = frobenius_form_check(r.monoid, r.lambda);
    if (!d) return std::nullopt;
    return d->embed(r.lambda.order).to_string();
  });
  m.def("ringcheck_matmonoid", [](unsigned n, unsigned q) -> std::optional<std::string> {
    const RingMonoid r = matrix_monoid(n, q);
    const auto d = frobenius_form_check(r.monoid, r.lambda);
    if (!d) return std::nullopt;
    return d->embed(r.lambda.order).to_string();
  });
}
