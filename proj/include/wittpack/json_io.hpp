#pragma once

#include <json.hpp>

#include "wittpack/ec.hpp"
#include "wittpack/lift.hpp"
#include "wittpack/poly.hpp"

namespace wittpack {

// Stable JSON encodings used by reports. nlohmann's default object keeps
// keys sorted, which is what makes the reports byte-reproducible.
using json = nlohmann::json;

json to_json(const Field& f);
json to_json(const Poly& p);
json to_json(const LaurentPoly& p);
json to_json(const PointFq& p);
json to_json(const PointW2& p);
json to_json(const TauPolyReport& r);

}  // namespace wittpack
