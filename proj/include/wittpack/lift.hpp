#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wittpack/ec.hpp"
#include "wittpack/poly.hpp"

namespace wittpack {

/// One evaluation of the elliptic Teichmuller map.
struct TauSample {
  PointFq base;
  std::uint64_t order = 0;
  PointW2 lifted;
  W2 x_witt;

  TauSample(PointFq b, std::uint64_t n, PointW2 l, W2 xw)
      : base(std::move(b)), order(n), lifted(std::move(l)), x_witt(std::move(xw)) {}
};

/// Canonical lift of a prime-to-p order point: [lambda] * (any lift) with
/// lambda = 0 mod p and 1 mod ord(P0). The choice of lift does not matter
/// because the kernel of reduction has exponent p.
PointW2 teichmuller_lift(const CurveW2& curve, const PointFq& P0);
PointW2 teichmuller_lift(const CurveW2& curve, const PointFq& P0, std::uint64_t order);

struct SkipRecord {
  std::string item;
  std::string reason;
};

struct TauPolyReport {
  int p = 0;
  int sample_k = 0;
  int validate_k = 0;
  std::size_t sample_count = 0;
  int degree = -1;
  bool coeffs_prime_subfield = false;
  bool holdout_ok = false;
  bool two_torsion_vanish = false;  // Weierstrass case
  bool odd_symmetry = false;        // quartic case
  std::vector<SkipRecord> skipped;
};

/// Reconstructs the second Witt coordinate of the x-coordinate of the
/// Teichmuller lift as a polynomial over F_p: samples the lift over
/// F_{p^sample_k}, interpolates x1 against x0, and validates on the
/// holdout extension F_{p^validate_k}. The curve coefficients must be
/// Teichmuller images of prime-field constants.
Poly tau_x_poly(const CurveW2& curve, int sample_k, int validate_k,
                TauPolyReport* report = nullptr);

// Transport between y^2 = 1 - x^4 and the Weierstrass model v^2 = u^3 + 4u:
//   forward  (x, y) -> (2(1+y)/x^2, 4(1+y)/x^3)
//   backward (u, v) -> (2u/v, 2u^3/v^2 - 1)
// The maps are mutually inverse where defined, and
//   v^2 - u^3 - 4u = -(8(1+y)/x^6) (y^2 - 1 + x^4),
// so curve points map to curve points whenever the denominators are units.
CurveFq quartic_weierstrass_target(const FieldRef& f);
CurveW2 quartic_weierstrass_target_w2(const FieldRef& f);
std::pair<FieldElement, FieldElement> quartic_to_weierstrass(const FieldElement& x,
                                                             const FieldElement& y);
std::pair<FieldElement, FieldElement> weierstrass_to_quartic(const FieldElement& u,
                                                             const FieldElement& v);
std::pair<W2, W2> weierstrass_to_quartic_w2(const W2& u, const W2& v);

/// x-coordinate of the Teichmuller lift of the quartic point (x0, y0) as a
/// Witt pair: transports to the Weierstrass model, lifts there, and maps
/// back with W2 arithmetic.
W2 quartic_teichmuller_x(const QuarticW2& curve, const FieldElement& x0,
                         const FieldElement& y0);

/// The quartic analogue of tau_x_poly for y^2 = 1 - x^4 at the given prime;
/// validation additionally requires odd symmetry.
Poly quartic_tau_x_poly(int p, int sample_k, int validate_k,
                        TauPolyReport* report = nullptr);

}  // namespace wittpack
