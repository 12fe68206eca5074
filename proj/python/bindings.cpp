#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "intaut/graph_aut.hpp"
#include "intaut/orbit_analysis.hpp"
#include "intaut/transform_group.hpp"

namespace py = pybind11;
using namespace intaut;

namespace {

FieldRef field_of(std::uint64_t p, unsigned h, std::optional<std::vector<Residue>> modulus) {
  return make_field(p, h, std::move(modulus));
}

std::string big_to_string(const BigInt& v) { return v.str(); }

py::dict field_info(std::uint64_t p, unsigned h, std::optional<std::vector<Residue>> modulus) {
  const auto f = field_of(p, h, std::move(modulus));
  std::vector<ElemIndex> squares;
  for (ElemIndex x = 0; x < f->q(); ++x)
    if (f->is_square(x)) squares.push_back(x);
  py::dict d;
  d["p"] = f->p();
  d["h"] = f->h();
  d["q"] = f->q();
  d["modulus"] = f->modulus();
  d["primitive_element"] = f->primitive_element();
  d["squares"] = squares;
  return d;
}

struct Classification {
  std::string verdict;
  std::optional<std::string> predicted;
  py::int_ aut_order;
  std::uint64_t semiaffine_order;
  std::uint64_t orthogonal_count;
  bool semiaffine_contained;
  std::size_t extra_generators;
};

}  // namespace

PYBIND11_MODULE(_intaut, m) {
  m.doc() = "Integral-distance graphs over finite affine spaces";

  py::register_exception<Error>(m, "Error");

  py::class_<SphereCardinalities>(m, "SphereCounts")
      .def_readonly("s0", &SphereCardinalities::s0)
      .def_readonly("s_plus", &SphereCardinalities::s_plus)
      .def_readonly("s_minus", &SphereCardinalities::s_minus)
      .def_readonly("epsilon", &SphereCardinalities::epsilon)
      .def("__eq__", [](const SphereCardinalities& a, const SphereCardinalities& b) { return a == b; })
      .def("__repr__", [](const SphereCardinalities& c) {
        std::ostringstream out;
        out << "SphereCounts(s0=" << c.s0 << ", s_plus=" << c.s_plus << ", s_minus=" << c.s_minus << ")";
        return out.str();
      });

  py::class_<Classification>(m, "Classification")
      .def_readonly("verdict", &Classification::verdict)
      .def_readonly("predicted", &Classification::predicted)
      .def_readonly("aut_order", &Classification::aut_order)
      .def_readonly("semiaffine_order", &Classification::semiaffine_order)
      .def_readonly("orthogonal_count", &Classification::orthogonal_count)
      .def_readonly("semiaffine_contained", &Classification::semiaffine_contained)
      .def_readonly("extra_generators", &Classification::extra_generators);

  m.def("field_info", &field_info, py::arg("p"), py::arg("h") = 1, py::arg("modulus") = py::none());

  m.def(
      "sphere_counts_formula", [](std::uint64_t q, unsigned n) { return sphere_counts_formula(q, n); }, py::arg("q"),
      py::arg("n"));
  m.def(
      "sphere_counts_enumerated",
      [](std::uint64_t p, unsigned h, unsigned n) { return sphere_counts_enumerated(field_of(p, h, {}), n); },
      py::arg("p"), py::arg("h"), py::arg("n"));

  m.def(
      "orthogonal_count",
      [](std::uint64_t p, unsigned h, unsigned n) {
        return enumerate_orthogonal(AffineSpace(field_of(p, h, {}), n)).size();
      },
      py::arg("p"), py::arg("h"), py::arg("n"));
  m.def(
      "semiaffine_order",
      [](std::uint64_t p, unsigned h, unsigned n) { return semiaffine_group(AffineSpace(field_of(p, h, {}), n)).size(); },
      py::arg("p"), py::arg("h"), py::arg("n"));

  m.def(
      "automorphism_order",
      [](std::uint64_t p, unsigned h, unsigned n) {
        const AffineSpace s(field_of(p, h, {}), n);
        py::gil_scoped_release release;
        return big_to_string(automorphism_group(build_integral_graph(s).graph).order);
      },
      py::arg("p"), py::arg("h"), py::arg("n"));

  m.def(
      "verify_classification",
      [](std::uint64_t p, unsigned h, unsigned n) {
        const AffineSpace s(field_of(p, h, {}), n);
        ClassificationReport r;
        {
          py::gil_scoped_release release;
          r = verify_classification(s);
        }
        Classification c;
        c.verdict = std::string(to_string(r.verdict));
        if (r.predicted) c.predicted = std::string(to_string(*r.predicted));
        c.aut_order = py::int_(py::str(big_to_string(r.aut_order)));
        c.semiaffine_order = r.semiaffine_order;
        c.orthogonal_count = r.orthogonal_count;
        c.semiaffine_contained = r.semiaffine_contained;
        c.extra_generators = r.extra_generators.size();
        return c;
      },
      py::arg("p"), py::arg("h"), py::arg("n"));

  m.def(
      "m_orbit_sizes",
      [](std::uint64_t p, unsigned h, unsigned n) { return m_orbits(AffineSpace(field_of(p, h, {}), n)).sizes(); },
      py::arg("p"), py::arg("h"), py::arg("n"));

  m.def(
      "recognize",
      [](std::uint64_t p, unsigned h, unsigned n, std::vector<std::uint32_t> images) -> std::optional<py::dict> {
        const AffineSpace s(field_of(p, h, {}), n);
        const auto mp = recognize_semiaffine(PointPermutation(std::move(images)), s);
        if (!mp) return std::nullopt;
        py::dict d;
        d["a"] = mp->a.index();
        d["i"] = mp->i;
        d["A"] = mp->A.entries();
        d["b"] = canonical_index(mp->b);
        return d;
      },
      py::arg("p"), py::arg("h"), py::arg("n"), py::arg("images"));

  m.def(
      "export_graph",
      [](std::uint64_t p, unsigned h, unsigned n, const std::string& format) {
        GraphFormat fmt;
        if (format == "graph6") fmt = GraphFormat::Graph6;
        else if (format == "dimacs") fmt = GraphFormat::Dimacs;
        else throw py::value_error("format must be 'graph6' or 'dimacs'");
        return export_graph(build_integral_graph(AffineSpace(field_of(p, h, {}), n)).graph, fmt);
      },
      py::arg("p"), py::arg("h"), py::arg("n"), py::arg("format") = "graph6");
}
