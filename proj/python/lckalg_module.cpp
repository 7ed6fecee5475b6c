#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "lck/analysis.hpp"
#include "lck/construct.hpp"
#include "lck/document.hpp"
#include "lck/errors.hpp"
#include "lck/search.hpp"
#include "lck/verify.hpp"

namespace py = pybind11;

namespace {

py::object fraction_type() { return py::module_::import("fractions").attr("Fraction"); }

py::object to_py(const lck::Scalar& s) {
  if (!s.is_exact()) return py::float_(s.to_double());
  return fraction_type()(s.str());
}

lck::Scalar from_py(const py::handle& h) {
  if (py::isinstance<py::float_>(h)) return lck::Scalar::floating(h.cast<double>());
  return lck::Scalar::parse(py::str(h).cast<std::string>());
}

py::list to_py(const lck::Vector& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

py::list to_py(const lck::Matrix& m) {
  py::list out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(to_py(m(i, j)));
    out.append(row);
  }
  return out;
}

lck::Vector vector_from_py(const py::sequence& s) {
  lck::Vector v;
  for (const auto& x : s) v.push_back(from_py(x));
  return v;
}

lck::Matrix matrix_from_py(const py::sequence& rows) {
  std::vector<lck::Vector> rs;
  for (const auto& r : rows) rs.push_back(vector_from_py(r.cast<py::sequence>()));
  if (rs.empty()) throw lck::ParseError("empty matrix");
  return lck::Matrix::from_rows(rs, rs[0].size());
}

py::dict to_py(const lck::Verdict& v) {
  py::dict d;
  d["state"] = lck::to_string(v.state);
  d["detail"] = lck::describe(v);
  if (v.witness) {
    d["indices"] = v.witness->indices;
    d["residual"] = to_py(v.witness->residual);
  }
  return d;
}

struct Algebra {
  std::vector<std::string> basis;
  lck::HermitianLieAlgebra a;
};

struct Triple {
  std::vector<std::string> basis;
  lck::KahlerTriple t;
};

Algebra algebra_from_json(const std::string& text) {
  lck::AlgebraDocument d = lck::parse_algebra_document(text);
  return {std::move(d.basis), std::move(d.algebra)};
}

Triple triple_from_json(const std::string& text) {
  lck::TripleDocument d = lck::parse_triple_document(text);
  return {std::move(d.basis), std::move(d.triple)};
}

Triple wrap(lck::KahlerTriple t) { return {lck::default_basis_names(t.h().dim()), std::move(t)}; }

py::dict analyze(const Algebra& self) {
  const lck::StructureReport r = lck::analyze(self.a.alg, self.a.h);
  py::dict d;
  d["hermitian"] = to_py(r.hermitian);
  d["kahler"] = to_py(r.kahler);
  d["lck"] = to_py(r.lck);
  d["vaisman"] = to_py(r.vaisman);
  d["integrable_lck"] = to_py(r.integrable_lck);
  d["lcs_first_kind"] = to_py(r.lcs_first_kind);
  d["gauduchon"] = to_py(r.gauduchon);
  d["unimodular"] = to_py(r.unimodular);
  d["solvable"] = to_py(r.solvable);
  py::dict claims;
  for (const auto& c : r.claims) claims[py::str(c.name)] = to_py(c.verdict);
  d["claims"] = claims;
  if (r.delta_residual) d["delta_residual"] = to_py(*r.delta_residual);
  if (r.deta) {
    d["deta_holds"] = r.deta->holds();
    d["deta_coefficient"] = to_py(r.deta->coefficient);
  }
  return d;
}

py::dict lee(const Algebra& self) {
  const lck::LeeData l = lck::lee_data(self.a.alg, self.a.h);
  py::dict d;
  d["theta"] = to_py(l.theta.as_covector());
  d["eta"] = to_py(l.eta.as_covector());
  d["U"] = to_py(l.U);
  d["V"] = to_py(l.V);
  d["norm_sq"] = to_py(l.norm_sq);
  d["n"] = l.n;
  return d;
}

py::dict check(const Triple& self) {
  const lck::TripleReport r = lck::check_triple(self.t);
  py::dict d;
  for (const auto& c : r.conditions) d[py::str(c.name)] = c.holds();
  d["abelian"] = r.abelian;
  d["in_H"] = r.in_H();
  d["in_A"] = r.in_A();
  return d;
}

py::tuple classify4(const Triple& self) {
  const lck::Dim4Class k = lck::classify_dim4(self.t);
  return py::make_tuple(k.tag == lck::Dim4Class::Tag::d4 ? "d4" : "g_b", to_py(k.b));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact LCK Lie algebra toolkit";

  auto base = py::register_exception<lck::Error>(m, "LckError", PyExc_RuntimeError);
  py::register_exception<lck::ParseError>(m, "ParseError", base.ptr());
  py::register_exception<lck::DimensionMismatch>(m, "DimensionMismatch", base.ptr());
  py::register_exception<lck::InvariantViolation>(m, "InvariantViolation", base.ptr());
  py::register_exception<lck::DomainError>(m, "DomainError", base.ptr());
  py::register_exception<lck::InfeasibleSystem>(m, "InfeasibleSystem", base.ptr());

  py::class_<Algebra>(m, "Algebra")
      .def_static("from_json", &algebra_from_json, py::arg("text"))
      .def("to_json", [](const Algebra& s) { return lck::render(lck::AlgebraDocument{s.basis, s.a}); })
      .def_property_readonly("dim", [](const Algebra& s) { return s.a.alg.dim(); })
      .def_property_readonly("basis", [](const Algebra& s) { return s.basis; })
      .def_property_readonly("metric", [](const Algebra& s) { return to_py(s.a.h.g()); })
      .def_property_readonly("J", [](const Algebra& s) { return to_py(s.a.h.J()); })
      .def(
          "bracket",
          [](const Algebra& s, const py::sequence& x, const py::sequence& y) {
            return to_py(s.a.alg.bracket(vector_from_py(x), vector_from_py(y)));
          },
          py::arg("x"), py::arg("y"))
      .def("derived_series", [](const Algebra& s) { return lck::derived_series(s.a.alg); })
      .def("is_unimodular", [](const Algebra& s) { return lck::is_unimodular(s.a.alg); })
      .def("lee", &lee)
      .def("analyze", &analyze);

  py::class_<Triple>(m, "Triple")
      .def(py::init([](const py::sequence& u, const py::sequence& v, const py::object& c) {
             const lck::Matrix mu = matrix_from_py(u);
             const lck::HermitianLieAlgebra h = lck::abelian_kahler(mu.rows());
             return wrap(lck::KahlerTriple(h.alg, h.h, mu, matrix_from_py(v), from_py(c)));
           }),
           py::arg("u"), py::arg("v"), py::arg("c"), "Triple on abelian h with the standard structure.")
      .def_static("from_json", &triple_from_json, py::arg("text"))
      .def("to_json", [](const Triple& s) { return lck::render(lck::TripleDocument{s.basis, s.t}); })
      .def_property_readonly("n", [](const Triple& s) { return s.t.n(); })
      .def_property_readonly("u", [](const Triple& s) { return to_py(s.t.u()); })
      .def_property_readonly("v", [](const Triple& s) { return to_py(s.t.v()); })
      .def_property_readonly("c", [](const Triple& s) { return to_py(s.t.c()); })
      .def("check", &check)
      .def("semidirect",
           [](const Triple& s) { return Algebra{lck::semidirect_basis_names(s.basis), lck::semidirect(s.t)}; })
      .def(
          "correspond",
          [](const Triple& s, const py::object& c) { return Triple{s.basis, lck::correspondence(s.t, from_py(c))}; },
          py::arg("c"))
      .def("classify4", &classify4);

  m.def("gb", [](const py::object& b) { return wrap(lck::build_gb(from_py(b))); }, py::arg("b"));
  m.def("d4", [] { return wrap(lck::build_d4()); });
  m.def("dim", [](long n) { return wrap(lck::build_dim(n)); }, py::arg("n"));
  m.def("counterexample", [] { return wrap(lck::build_counterexample()); });

  m.def(
      "search",
      [](std::size_t n, const py::object& c, std::size_t samples, std::uint64_t seed, std::size_t threads) {
        const lck::HermitianLieAlgebra h = lck::abelian_kahler(2 * n);
        const lck::ConstraintSystem sys(h.alg, h.h, from_py(c));
        lck::SearchOptions o;
        o.samples = samples;
        o.seed = seed;
        o.threads = threads;
        std::vector<lck::SearchHit> hits;
        {
          py::gil_scoped_release release;
          hits = lck::search_bilinear(sys, o);
        }
        std::vector<Triple> out;
        for (auto& hit : hits) out.push_back(wrap(std::move(hit.triple)));
        return out;
      },
      py::arg("n"), py::arg("c"), py::arg("samples") = 1000, py::arg("seed") = 0, py::arg("threads") = 1);

  m.def(
      "verify",
      [](std::optional<std::string> only) {
        lck::VerifyOptions o;
        o.only = std::move(only);
        py::list out;
        for (const auto& r : lck::run_verify_suite(o)) {
          out.append(py::make_tuple(lck::to_string(r.status), r.group, r.name, r.detail));
        }
        return out;
      },
      py::arg("only") = py::none());
}
