#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "wittpack/json_io.hpp"
#include "wittpack/lift.hpp"

namespace wittpack {

// The two torsion-packet computations: the genus-2 curve C: y^2 = x^6 + 1
// mapped into E^2 (E: y^2 = x^3 + 1) at p = 7, and the Fermat quartic
// x^4 + y^4 = 1 mapped into F^2 (F: y^2 = 1 - x^4) at p = 5. Each case has a
// symbolic condition polynomial and an independent pointwise oracle that
// recomputes the condition through actual Teichmuller lifts.

/// (x, y) on C with x a unit maps to ((x^2, y), (x^-2, y x^-3)) on E x E.
std::pair<PointFq, PointFq> phi(const CurveFq& e, const FieldElement& x,
                                const FieldElement& y);

Poly f_poly();  // 4x^10 + x^7 + 2x^4 + 5x over F_7
Poly g_poly();  // 2x^9 - 2x over F_5

/// x^14 f(x^-2) + x^-14 f(x^2) over F_7, by direct substitution.
LaurentPoly c_condition_laurent();

/// The same expression built as the second Witt component of the product
/// (x^2, f(x^2)) (x^-2, f(x^-2)), i.e. a0^p b1 + b0^p a1 with symbolic
/// Laurent entries; must agree with c_condition_laurent().
LaurentPoly c_condition_via_witt_product();

struct IdentityCheckResult {
  bool verified = false;
  FieldElement scalar;     // condition = scalar * (x^6+1)^4 / x^12
  LaurentPoly condition;
  LaurentPoly target;
};

/// Checks the displayed identity up to a unit scalar; IdentityFailed if the
/// two sides are not proportional.
IdentityCheckResult c_identity_check();

/// Nonzero x in F_{7^ext_k} where the condition vanishes.
std::vector<FieldElement> c_packet_solutions(int ext_k,
                                             std::uint32_t ceiling = kEnumerationCeiling);

struct OracleResult {
  std::vector<FieldElement> selected;
  std::vector<FieldElement> skipped_x;  // abscissas the oracle could not evaluate
  std::vector<SkipRecord> skipped;
};

/// Independent oracle: for each nonzero x, lift the two curve points at
/// abscissas x^2 and x^-2 with teichmuller_lift (no polynomial f involved)
/// and select x iff the Witt product of their x-coordinates is 1. Abscissas
/// whose points have order divisible by p are recorded, not dropped.
OracleResult c_pointwise_oracle(int ext_k, std::uint32_t ceiling = kEnumerationCeiling);

struct SpecialPoint {
  std::string tag;          // infinity_plus, infinity_minus, x_zero, y_zero
  std::string description;
  std::pair<int, int> phi_image_orders;
  int total_order = 0;      // lcm of the image orders
};

/// The ten special points of C (2 at infinity, 2 with x = 0, 6 with y = 0)
/// with certified torsion orders of their images.
std::vector<SpecialPoint> special_points();

/// 2x^5 g(x) - g(x^2) over F_5; the 2x^5 factor is the Witt squaring rule.
Poly fermat_condition_poly();

std::vector<FieldElement> fermat_solutions(int ext_k,
                                           std::uint32_t ceiling = kEnumerationCeiling);
OracleResult fermat_pointwise_oracle(int ext_k,
                                     std::uint32_t ceiling = kEnumerationCeiling);

enum class PacketCase { c_at_7, fermat_at_5 };

/// Deterministic report; "verified" requires every agreement flag.
json packet_report(PacketCase which, int max_ext = 0,
                   std::uint32_t ceiling = kEnumerationCeiling);

void emit_report(PacketCase which, std::ostream& out, int max_ext = 0);

}  // namespace wittpack
