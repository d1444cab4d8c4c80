#include "wittpack/json_io.hpp"

namespace wittpack {

json to_json(const Field& f) {
  return json{{"p", f.p()}, {"k", f.k()}, {"modulus", f.modulus()}};
}

json to_json(const Poly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
  return json{{"field", to_json(*p.field())}, {"coeffs", coeffs}};
}

json to_json(const LaurentPoly& p) {
  json coeffs = json::array();
  for (int e = p.min_exp(); e <= p.max_exp(); ++e) coeffs.push_back(p.coeff(e).str());
  return json{{"field", to_json(*p.field())}, {"offset", p.min_exp()}, {"coeffs", coeffs}};
}

json to_json(const PointFq& p) {
  if (p.is_infinity()) return json("infinity");
  return json{{"x", p.x().str()}, {"y", p.y().str()}};
}

json to_json(const PointW2& p) {
  auto [X, Y, Z] = p.projective();
  return json::array({X.str(), Y.str(), Z.str()});
}

json to_json(const TauPolyReport& r) {
  json skipped = json::array();
  for (const auto& s : r.skipped) skipped.push_back({{"item", s.item}, {"reason", s.reason}});
  return json{{"p", r.p},
              {"sample_ext", r.sample_k},
              {"validate_ext", r.validate_k},
              {"sample_count", r.sample_count},
              {"degree", r.degree},
              {"coeffs_prime_subfield", r.coeffs_prime_subfield},
              {"holdout_ok", r.holdout_ok},
              {"two_torsion_vanish", r.two_torsion_vanish},
              {"odd_symmetry", r.odd_symmetry},
              {"skipped", skipped}};
}

}  // namespace wittpack
