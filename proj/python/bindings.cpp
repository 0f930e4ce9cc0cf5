// Python bindings. Integers cross the boundary as Python ints (via their decimal
// text), rationals as "p/q" strings that the package wrapper turns into Fractions.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "k3ord/cohomology.hpp"
#include "k3ord/isometry.hpp"
#include "k3ord/linalg.hpp"
#include "k3ord/orders.hpp"
#include "k3ord/scenario.hpp"

namespace py = pybind11;
using namespace k3ord;

namespace {

Integer to_integer(const py::handle& h) {
  if (!py::isinstance<py::int_>(h)) throw py::type_error("expected an int");
  return Integer(py::str(h).cast<std::string>());
}

py::int_ from_integer(const Integer& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

IntVector to_vector(const py::sequence& s) {
  IntVector v;
  for (auto x : s) v.push_back(to_integer(x));
  return v;
}

IntMatrix to_matrix(const py::sequence& rows) {
  std::vector<IntVector> r;
  for (auto row : rows) r.push_back(to_vector(row.cast<py::sequence>()));
  return IntMatrix::from_rows(r);
}

py::list from_vector(const IntVector& v) {
  py::list out;
  for (const auto& x : v) out.append(from_integer(x));
  return out;
}

py::list from_matrix(const IntMatrix& m) {
  py::list out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.append(from_vector(m.row(i)));
  return out;
}

py::list from_rat_matrix(const RatMatrix& m) {
  py::list out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (const auto& q : m.row(i)) row.append(q.get_str());
    out.append(row);
  }
  return out;
}

py::dict from_coh(const CohResult& r) {
  py::dict d;
  d["invariant_factors"] = from_vector(r.invariant_factors);
  d["free_rank"] = r.free_rank;
  py::list gens;
  for (const auto& g : r.generators) gens.append(from_vector(g));
  d["generators"] = gens;
  return d;
}

GLattice to_glattice(const py::sequence& gram, const py::sequence& sigma, unsigned order) {
  return make_glattice(Lattice(to_matrix(gram)), to_matrix(sigma), order);
}

}  // namespace

PYBIND11_MODULE(_k3ord, m) {
  m.doc() = "Exact integer lattice and group cohomology routines";

  // Messages start with the error code, e.g. "SchemaError: ...".
  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  m.def("snf", [](const py::sequence& a) {
    SmithForm s = snf(to_matrix(a));
    py::dict d;
    d["U"] = from_matrix(s.U);
    d["D"] = from_matrix(s.D);
    d["V"] = from_matrix(s.V);
    d["rank"] = s.rank;
    return d;
  }, py::arg("matrix"), "Smith form: U * A * V = D.");

  m.def("hnf", [](const py::sequence& a) {
    HermiteForm h = hnf(to_matrix(a));
    py::dict d;
    d["H"] = from_matrix(h.H);
    d["U"] = from_matrix(h.U);
    d["rank"] = h.rank;
    return d;
  }, py::arg("matrix"), "Row Hermite form: H = U * A.");

  m.def("det", [](const py::sequence& a) { return from_integer(det(to_matrix(a))); }, py::arg("matrix"));
  m.def("rank", [](const py::sequence& a) { return rank(to_matrix(a)); }, py::arg("matrix"));
  m.def("integer_kernel", [](const py::sequence& a) { return from_matrix(integer_kernel(to_matrix(a))); },
        py::arg("matrix"), "Columns form a saturated basis of the integer kernel.");
  m.def("signature", [](const py::sequence& g) {
    Signature s = signature(to_matrix(g));
    return py::make_tuple(s.positive, s.negative, s.zero);
  }, py::arg("gram"), "(positive, negative, zero) counts.");

  m.def("h1", [](const py::sequence& gram, const py::sequence& sigma, unsigned order) {
    return from_coh(h1(to_glattice(gram, sigma, order)));
  }, py::arg("gram"), py::arg("sigma"), py::arg("order"));

  m.def("half_gram_quotient", [](const py::sequence& gram, const py::sequence& sigma, unsigned order) {
    return from_matrix(half_gram_quotient(to_glattice(gram, sigma, order)).gram());
  }, py::arg("gram"), py::arg("sigma"), py::arg("order"));

  m.def("extend_by_minus_one",
        [](const py::sequence& target_gram, const py::sequence& source_gram, const py::sequence& embedding,
           const py::sequence& action) {
          Lattice target(to_matrix(target_gram));
          Embedding e{Lattice(to_matrix(source_gram)), target, to_matrix(embedding)};
          ExtensionResult r = extend_by_minus_one(target, e, to_matrix(action));
          py::dict d;
          d["phi"] = from_rat_matrix(r.phi);
          d["integral"] = r.integral;
          d["orthogonal"] = r.orthogonal;
          d["involutive"] = r.involutive;
          d["assumptions"] = r.assumptions;
          return d;
        },
        py::arg("target_gram"), py::arg("source_gram"), py::arg("embedding"), py::arg("action"));

  m.def("h0_hirzebruch2", [](long a, long b) { return from_integer(h0_hirzebruch2(a, b)); }, py::arg("a"),
        py::arg("b"));

  m.def("evaluate", [](const std::string& scenario, const std::string& expected) {
    std::optional<scenario::Json> exp;
    if (!expected.empty()) exp = scenario::Json::parse(expected);
    return scenario::to_json(scenario::evaluate(scenario::Json::parse(scenario), exp, "")).dump();
  }, py::arg("scenario"), py::arg("expected") = "", "Evaluates a scenario document; returns the report as JSON text.");

  m.def("run_scenario", [](const std::string& path) { return scenario::to_json(scenario::run_scenario(path)).dump(); },
        py::arg("path"));

  m.def("run_corpus", [](const std::string& root, const std::string& glob) {
    scenario::Json out = scenario::Json::array();
    for (const auto& r : scenario::run_corpus(root, glob)) out.push_back(scenario::to_json(r));
    return out.dump();
  }, py::arg("root"), py::arg("glob") = "*");
}
