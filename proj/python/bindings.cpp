#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dualhfk/invariants.hpp"

namespace py = pybind11;
using namespace hfk;

namespace {

TestDomain domain_from_name(const std::string& name) {
  auto d = TestDomain::by_name(name);
  if (!d) throw py::value_error("unknown domain '" + name + "' (try 'hat' or 'line')");
  return *d;
}

py::dict report_to_dict(const HomologyReport& rep) {
  py::dict d;
  d["knot"] = rep.knot;
  d["p"] = rep.p;
  d["q"] = rep.q;
  py::dict ranks;
  for (auto& [cls, r] : rep.ranks) ranks[py::int_(cls)] = r;
  d["ranks"] = ranks;
  d["total"] = rep.total();
  d["stable"] = rep.stable;
  d["truncation_B"] = rep.truncation_bound;
  auto sup = rep.support();
  d["support"] = sup ? py::object(py::make_tuple(sup->first, sup->second)) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(dualhfk, m) {
  m.doc() = "knot Floer homology of dual knots of rational surgeries";
  m.attr("__version__") = DUALHFK_VERSION;

  py::class_<KnotComplex>(m, "KnotComplex")
      .def_readonly("name", &KnotComplex::name)
      .def_readonly("symbols", &KnotComplex::symbols)
      .def_readonly("alexander", &KnotComplex::alexander)
      .def("genus", &KnotComplex::genus)
      .def("validate",
           [](const KnotComplex& k) { return k.validate().violations; })
      .def("__repr__", [](const KnotComplex& k) {
        std::ostringstream os;
        os << "<KnotComplex " << (k.name.empty() ? "?" : k.name) << ", " << k.symbols.size()
           << " generators>";
        return os.str();
      });

  m.def("builtin_names", &builtin_names);
  m.def("builtin", &builtin_knot, py::arg("name"));
  m.def("staircase", &staircase, py::arg("delta_coeffs"),
        "staircase model of an L-space knot from its Alexander polynomial");
  m.def("parse_cfk", &parse_cfk, py::arg("text"), py::arg("name") = "");
  m.def("serialize_cfk", &serialize_cfk, py::arg("knot"));

  m.def(
      "hfk_hat_dual",
      [](const KnotComplex& K, int p, int q) { return report_to_dict(hfk_hat_dual(K, p, q)); },
      py::arg("knot"), py::arg("p"), py::arg("q"),
      "per-class knot Floer homology ranks of the dual knot of p/q surgery");
  m.def(
      "hf_hat_ambient",
      [](const KnotComplex& K, int p, int q) { return report_to_dict(hf_hat_ambient(K, p, q)); },
      py::arg("knot"), py::arg("p"), py::arg("q"),
      "ambient Heegaard Floer ranks of the surgered manifold, per spin-c class");
  m.def(
      "predicted_window",
      [](const KnotComplex& K, int p, int q) {
        auto w = predicted_window(K.genus(), p, q);
        return py::make_tuple(w.first, w.second);
      },
      py::arg("knot"), py::arg("p"), py::arg("q"));
  m.def(
      "cone_rank",
      [](const KnotComplex& K, int p, int q, long long sbar, const std::string& domain) {
        ConeSpec spec{&K, p, q, sbar, domain_from_name(domain), default_truncation(K, p, q)};
        return build_cone(spec).total_homology_rank();
      },
      py::arg("knot"), py::arg("p"), py::arg("q"), py::arg("sbar"), py::arg("domain") = "hat",
      "homology rank of the surgery cone in one spin-c class");
  m.def(
      "crosscheck_large_n",
      [](const KnotComplex& K, int n) {
        auto bad = crosscheck_large_n(K, n);
        return bad ? py::object(py::int_(*bad)) : py::none();
      },
      py::arg("knot"), py::arg("n"),
      "first class where the large-surgery model disagrees with the cone, or None");
  m.def(
      "zeta_profile",
      [](const KnotComplex& K, int n, int s, int max_trunc) {
        return zeta_cone_plus(K, n, s, max_trunc).rank_by_trunc;
      },
      py::arg("knot"), py::arg("n"), py::arg("s") = 0, py::arg("max_trunc") = 6);
  m.def(
      "s3_pattern_check",
      [](const KnotComplex& K, const std::vector<int>& q_list) {
        auto rep = s3_pattern_check(K, q_list);
        py::dict d;
        py::list windows;
        for (auto& w : rep.windows) windows.append(py::make_tuple(w.first, w.second));
        d["q_list"] = rep.q_list;
        d["windows"] = windows;
        d["consistent_with_s3"] = rep.consistent_with_s3;
        return d;
      },
      py::arg("knot"), py::arg("q_list") = std::vector<int>{1, 2, 3});

  py::register_exception<CfkSyntaxError>(m, "CfkSyntaxError");
  py::register_exception<CfkSemanticError>(m, "CfkSemanticError");
  py::register_exception<PreconditionError>(m, "PreconditionError");
}
