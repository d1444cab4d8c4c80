#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wittpack/gf.hpp"
#include "wittpack/witt2.hpp"

namespace wittpack {

// ---------------------------------------------------------------------------
// Short Weierstrass y^2 = x^3 + a x + b over F_q
// ---------------------------------------------------------------------------

struct CurveFq {
  FieldRef field;
  FieldElement a, b;
  CurveFq(FieldRef f, FieldElement a_, FieldElement b_);  // SingularCurve if 4a^3+27b^2 = 0
};

class PointFq {
 public:
  static PointFq infinity() { return PointFq(); }
  static PointFq affine(FieldElement x, FieldElement y);

  bool is_infinity() const { return inf_; }
  const FieldElement& x() const;
  const FieldElement& y() const;
  std::string str() const;

  friend bool operator==(const PointFq& a, const PointFq& b);
  friend bool operator!=(const PointFq& a, const PointFq& b) { return !(a == b); }

 private:
  PointFq() = default;
  bool inf_ = true;
  FieldElement x_, y_;
};

bool on_curve(const CurveFq& c, const PointFq& P);
PointFq ec_add(const CurveFq& c, const PointFq& P, const PointFq& Q);
PointFq ec_neg(const CurveFq& c, const PointFq& P);
PointFq ec_smul(const CurveFq& c, std::int64_t n, const PointFq& P);
std::uint64_t point_order(const CurveFq& c, const PointFq& P);  // repeated addition

/// All points: x in enumeration order, (x, s) then (x, -s) with s = sqrt,
/// infinity last.
std::vector<PointFq> enumerate_points(const CurveFq& c,
                                      std::uint32_t ceiling = kEnumerationCeiling);

// ---------------------------------------------------------------------------
// Short Weierstrass over W2(F_q): a total group law on E(W2(F_q))
// ---------------------------------------------------------------------------

struct CurveW2 {
  FieldRef field;
  W2 a, b;
  CurveW2(FieldRef f, W2 a_, W2 b_);  // reduction must be nonsingular
  CurveFq reduced() const;
};

/// A point of E(W2(F_q)) in normalized projective form. Points with unit Z
/// are stored affinely as (x : y : 1); points reducing to infinity are
/// kernel points (ver(t) : 1 : 0), with t = 0 the identity.
class PointW2 {
 public:
  static PointW2 identity(const Field& f);
  static PointW2 kernel(const FieldElement& t);  // (ver(t) : 1 : 0)
  static PointW2 affine(W2 x, W2 y);

  bool is_affine() const { return affine_; }
  bool reduces_to_infinity() const { return !affine_; }
  bool is_identity() const { return !affine_ && t_.is_zero(); }

  const W2& x() const;
  const W2& y() const;
  const FieldElement& kernel_param() const;
  std::array<W2, 3> projective() const;  // normalized (X : Y : Z)
  std::string str() const;

  friend bool operator==(const PointW2& a, const PointW2& b);
  friend bool operator!=(const PointW2& a, const PointW2& b) { return !(a == b); }

 private:
  PointW2() = default;
  bool affine_ = false;
  W2 x_, y_;        // affine points
  FieldElement t_;  // kernel points
};

bool on_curve(const CurveW2& c, const PointW2& P);
PointW2 ec_add(const CurveW2& c, const PointW2& P, const PointW2& Q);
PointW2 ec_neg(const CurveW2& c, const PointW2& P);
PointW2 ec_smul(const CurveW2& c, std::int64_t n, const PointW2& P);
std::uint64_t point_order(const CurveW2& c, const PointW2& P);

/// All q * #E0(F_q) points, base points in enumerate_points(reduced) order,
/// each fiber in kernel-parameter order.
std::vector<PointW2> enumerate_points(const CurveW2& c,
                                      std::uint32_t ceiling = kEnumerationCeiling);

PointFq reduce_point(const PointW2& P);

/// Some preimage of P0 under reduction (a section, not the canonical one).
PointW2 lift_point_any(const CurveW2& c, const PointFq& P0);

// ---------------------------------------------------------------------------
// Exact rational arithmetic on integer curves (torsion certification only)
// ---------------------------------------------------------------------------

using Rational = boost::multiprecision::cpp_rational;

struct CurveQ {
  std::int64_t a = 0, b = 0;  // y^2 = x^3 + a x + b over Q
};

class RatPoint {
 public:
  static RatPoint infinity() { return RatPoint(); }
  static RatPoint affine(Rational x, Rational y);
  bool is_infinity() const { return inf_; }
  const Rational& x() const;
  const Rational& y() const;
  friend bool operator==(const RatPoint& a, const RatPoint& b);
  friend bool operator!=(const RatPoint& a, const RatPoint& b) { return !(a == b); }

 private:
  RatPoint() = default;
  bool inf_ = true;
  Rational x_, y_;
};

bool on_curve(const CurveQ& c, const RatPoint& P);
RatPoint rat_add(const CurveQ& c, const RatPoint& P, const RatPoint& Q);
RatPoint rat_neg(const RatPoint& P);

/// Order of P by repeated addition, or nullopt if it exceeds the bound.
std::optional<int> rat_order_up_to(const CurveQ& c, const RatPoint& P,
                                   int bound = kRatOrderBound);

// ---------------------------------------------------------------------------
// Quartic model y^2 = q(x), deg q <= 4 (no group law of its own; group
// operations route through the Weierstrass transport in the lift module)
// ---------------------------------------------------------------------------

struct QuarticFq {
  FieldRef field;
  std::array<FieldElement, 5> c;  // q(x) = c4 x^4 + ... + c0

  static QuarticFq one_minus_x4(const FieldRef& f);
  FieldElement rhs(const FieldElement& x) const;
  bool on_curve(const FieldElement& x, const FieldElement& y) const;
};

struct QuarticPoints {
  std::vector<std::pair<FieldElement, FieldElement>> affine;
  int at_infinity = 0;  // points over x = infinity on the smooth model
};

QuarticPoints enumerate_points(const QuarticFq& c,
                               std::uint32_t ceiling = kEnumerationCeiling);

struct QuarticW2 {
  FieldRef field;
  std::array<W2, 5> c;

  static QuarticW2 one_minus_x4(const FieldRef& f);
  W2 rhs(const W2& x) const;
  QuarticFq reduced() const;
};

}  // namespace wittpack
