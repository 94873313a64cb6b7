// Copyright 2026 The trisum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "trisum/cli.hpp"
#include "trisum/curve.hpp"
#include "trisum/families.hpp"
#include "trisum/identities.hpp"
#include "trisum/param3.hpp"
#include "trisum/search.hpp"
#include "trisum/triangular.hpp"

namespace py = pybind11;

// Python int <-> mpz_class and fractions.Fraction <-> mpq_class, through
// decimal text so arbitrarily large values survive.
namespace pybind11::detail {

template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value = mpz_class(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const mpz_class& n, return_value_policy, handle) {
    return PyLong_FromString(n.get_str().c_str(), nullptr, 10);
  }
};

template <>
struct type_caster<mpq_class> {
  PYBIND11_TYPE_CASTER(mpq_class, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (PyBool_Check(src.ptr())) return false;
    if (!py::hasattr(src, "numerator") || !py::hasattr(src, "denominator")) return false;
    const py::object num = src.attr("numerator"), den = src.attr("denominator");
    if (!PyLong_Check(num.ptr()) || !PyLong_Check(den.ptr())) return false;
    value = trisum::make_rational(mpz_class(py::str(num).cast<std::string>()),
                                  mpz_class(py::str(den).cast<std::string>()));
    return true;
  }

  static handle cast(const mpq_class& q, return_value_policy, handle) {
    static const py::object fraction = py::module_::import("fractions").attr("Fraction");
    py::object num = py::reinterpret_steal<py::object>(
        PyLong_FromString(q.get_num().get_str().c_str(), nullptr, 10));
    py::object den = py::reinterpret_steal<py::object>(
        PyLong_FromString(q.get_den().get_str().c_str(), nullptr, 10));
    return fraction(num, den).release();
  }
};

}  // namespace pybind11::detail

namespace {

using namespace trisum;

template <typename Tuple>
py::tuple as_tuple(const Tuple& sol) {
  py::tuple out(sol.values().size());
  for (std::size_t i = 0; i < sol.values().size(); ++i) out[i] = py::cast(sol.values()[i]);
  return out;
}

template <typename Tuple>
py::list as_list(const std::vector<Tuple>& rows) {
  py::list out;
  for (const auto& row : rows) out.append(as_tuple(row));
  return out;
}

py::object point(const ECPoint& pt) {
  if (pt.is_infinity()) return py::none();
  return py::make_tuple(pt.x(), pt.y());
}

}  // namespace

PYBIND11_MODULE(_trisum, m) {
  m.doc() = "Exact solver for sums of triangular numbers";

  auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<DegenerateParameters>(m, "DegenerateParameters", domain.ptr());
  auto spec = py::register_exception<DegenerateSpecialization>(m, "DegenerateSpecialization",
                                                               domain.ptr());
  py::register_exception<QuarticDegenerate>(m, "QuarticDegenerate", spec.ptr());
  py::register_exception<UnmappablePoint>(m, "UnmappablePoint", domain.ptr());

  m.def("tri", &tri, py::arg("n"));
  m.def("tri_rational", &tri_rational, py::arg("x"));
  m.def("inv_tri", &inv_tri, py::arg("t"));
  m.def("solve_index", &solve_index, py::arg("value"));

  m.def(
      "solve_system1",
      [](std::uint64_t bound, unsigned workers) {
        std::vector<Solution6> rows;
        {
          py::gil_scoped_release release;
          rows = solve_system1(bound, {workers});
        }
        return as_list(rows);
      },
      py::arg("bound"), py::arg("workers") = 1);
  m.def(
      "solve_system3",
      [](std::uint64_t bound, bool distinct_only, unsigned workers) {
        std::vector<Solution7> rows;
        {
          py::gil_scoped_release release;
          rows = solve_system3(bound, distinct_only, {workers});
        }
        return as_list(rows);
      },
      py::arg("bound"), py::arg("distinct_only") = false, py::arg("workers") = 1);

  m.def(
      "family_eval", [](int id, const mpz_class& u) { return as_tuple(family_eval(id, u)); },
      py::arg("id"), py::arg("u"));
  m.def(
      "closed_form_eval",
      [](const mpq_class& u, const mpq_class& v, const mpq_class& w) {
        return as_tuple(closed_form_eval(u, v, w));
      },
      py::arg("u"), py::arg("v"), py::arg("w"));
  m.def(
      "parametric_linear_solve",
      [](const mpq_class& u, const mpq_class& v, const mpq_class& w) {
        return as_tuple(parametric_linear_solve(u, v, w));
      },
      py::arg("u"), py::arg("v"), py::arg("w"));

  m.def(
      "specialize_curve",
      [](const mpq_class& u, const mpq_class& v) {
        const CurveSpecialization s = specialize_curve(u, v);
        py::dict out;
        out["A"] = s.curve.a();
        out["B"] = s.curve.b();
        out["torsion"] = point(s.torsion);
        out["generator"] = point(s.generator);
        out["quartic"] = py::cast(std::vector<mpq_class>(s.quartic.a.begin(), s.quartic.a.end()));
        return out;
      },
      py::arg("u"), py::arg("v"));
  m.def(
      "generate_solutions",
      [](const mpq_class& u, const mpq_class& v, int k_max, bool with_torsion) {
        const GenerationReport report = generate_solutions(u, v, k_max, with_torsion);
        py::list out;
        for (const GeneratedSolution& g : report.solutions) {
          py::dict row;
          row["k"] = g.multiple;
          row["plus_torsion"] = g.plus_torsion;
          row["point"] = point(g.point);
          row["w"] = g.preimage.point.w;
          row["h"] = g.preimage.point.h;
          row["tuple"] = as_tuple(g.tuple);
          row["verified"] = g.verified;
          out.append(row);
        }
        return out;
      },
      py::arg("u"), py::arg("v"), py::arg("k_max"), py::arg("with_torsion") = true);

  m.def("run_identity_suite", [] {
    py::list out;
    for (const IdentityCheck& c : run_identity_suite()) {
      out.append(py::make_tuple(c.group, c.name, status_label(c.status), c.detail));
    }
    return out;
  });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
