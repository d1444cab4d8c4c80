#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wittpack/packets.hpp"
#include "wittpack/selftest.hpp"

namespace py = pybind11;
using namespace wittpack;

namespace {

py::object to_py(const json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::vector<int> poly_coeffs(const Poly& p) {
  std::vector<int> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.coeff(0));
  return out;
}

py::dict tau_poly(const std::string& which, int sample_ext, int validate_ext) {
  TauPolyReport rep;
  Poly poly = [&] {
    if (which == "E7") {
      FieldRef f = Field::make(7, 1);
      CurveW2 curve(f, W2::zero(*f), W2::one(*f));
      return tau_x_poly(curve, sample_ext, validate_ext, &rep);
    }
    if (which == "F5") return quartic_tau_x_poly(5, sample_ext, validate_ext, &rep);
    throw py::value_error("case must be E7 or F5");
  }();
  py::dict out;
  out["polynomial"] = poly.str();
  out["coeffs"] = poly_coeffs(poly);
  out["report"] = to_py(to_json(rep));
  return out;
}

py::object packet(const std::string& which, int max_ext) {
  if (which == "C" || which == "C_at_7")
    return to_py(packet_report(PacketCase::c_at_7, max_ext));
  if (which == "fermat" || which == "fermat_at_5")
    return to_py(packet_report(PacketCase::fermat_at_5, max_ext));
  throw py::value_error("case must be C or fermat");
}

py::list solutions(const std::string& which, int ext_k) {
  std::vector<FieldElement> sols;
  if (which == "C" || which == "C_at_7")
    sols = c_packet_solutions(ext_k);
  else if (which == "fermat" || which == "fermat_at_5")
    sols = fermat_solutions(ext_k);
  else
    throw py::value_error("case must be C or fermat");
  py::list out;
  for (const auto& s : sols) out.append(s.str());
  return out;
}

py::list special_points_py() {
  py::list out;
  for (const auto& p : special_points()) {
    py::dict d;
    d["tag"] = p.tag;
    d["description"] = p.description;
    d["phi_image_orders"] = py::make_tuple(p.phi_image_orders.first, p.phi_image_orders.second);
    d["total_order"] = p.total_order;
    out.append(d);
  }
  return out;
}

py::object selftest(std::uint64_t seed) { return to_py(selftest_report(seed)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Torsion packets on y^2 = x^6 + 1 and the Fermat quartic via "
            "length-2 Witt vectors";

  py::register_exception<Error>(m, "WittpackError");

  m.def("tau_poly", &tau_poly, py::arg("which"), py::arg("sample_ext") = 2,
        py::arg("validate_ext") = 3,
        "Reconstruct the second Witt coordinate of the Teichmuller x-coordinate "
        "as a polynomial; returns polynomial string, coefficient list and the "
        "validation report.");
  m.def("packet_report", &packet, py::arg("which"), py::arg("max_ext") = 0,
        "Full packet report for 'C' (p = 7) or 'fermat' (p = 5).");
  m.def("solutions", &solutions, py::arg("which"), py::arg("ext_k"),
        "Solution abscissas of the packet condition over F_{p^ext_k}.");
  m.def("special_points", &special_points_py,
        "The ten special points with certified torsion orders.");
  m.def("selftest", &selftest, py::arg("seed") = 0,
        "Run the acceptance criteria; returns the deterministic report.");
}
