#include "wittpack/ec.hpp"

namespace wittpack {

// --------------------------- curves over F_q ------------------------------

CurveFq::CurveFq(FieldRef f, FieldElement a_, FieldElement b_)
    : field(std::move(f)), a(std::move(a_)), b(std::move(b_)) {
  field->check_element(a);
  field->check_element(b);
  FieldElement four = field->from_residue(4), twenty7 = field->from_residue(27);
  if ((four * a * a * a + twenty7 * b * b).is_zero())
    throw SingularCurve("4a^3 + 27b^2 = 0");
}

PointFq PointFq::affine(FieldElement x, FieldElement y) {
  PointFq P;
  P.inf_ = false;
  P.x_ = std::move(x);
  P.y_ = std::move(y);
  P.x_.field().check_element(P.y_);
  return P;
}

const FieldElement& PointFq::x() const {
  if (inf_) throw PointNotOnCurve("coordinate of the point at infinity");
  return x_;
}
const FieldElement& PointFq::y() const {
  if (inf_) throw PointNotOnCurve("coordinate of the point at infinity");
  return y_;
}

std::string PointFq::str() const {
  return inf_ ? "infinity" : "(" + x_.str() + ", " + y_.str() + ")";
}

bool operator==(const PointFq& a, const PointFq& b) {
  if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
  return a.x_ == b.x_ && a.y_ == b.y_;
}

bool on_curve(const CurveFq& c, const PointFq& P) {
  if (P.is_infinity()) return true;
  c.field->check_element(P.x());
  return P.y() * P.y() == P.x() * P.x() * P.x() + c.a * P.x() + c.b;
}

namespace {

void require_on_curve(const CurveFq& c, const PointFq& P) {
  if (!on_curve(c, P)) throw PointNotOnCurve("point " + P.str() + " not on curve");
}

PointFq add_unchecked(const CurveFq& c, const PointFq& P, const PointFq& Q) {
  if (P.is_infinity()) return Q;
  if (Q.is_infinity()) return P;
  const Field& f = *c.field;
  if (P.x() == Q.x()) {
    if (P.y() != Q.y() || P.y().is_zero()) return PointFq::infinity();
    FieldElement lam = (f.from_residue(3) * P.x() * P.x() + c.a) *
                       inv(f.from_residue(2) * P.y());
    FieldElement x3 = lam * lam - P.x() - Q.x();
    return PointFq::affine(x3, lam * (P.x() - x3) - P.y());
  }
  FieldElement lam = (Q.y() - P.y()) * inv(Q.x() - P.x());
  FieldElement x3 = lam * lam - P.x() - Q.x();
  return PointFq::affine(x3, lam * (P.x() - x3) - P.y());
}

}  // namespace

PointFq ec_add(const CurveFq& c, const PointFq& P, const PointFq& Q) {
  require_on_curve(c, P);
  require_on_curve(c, Q);
  return add_unchecked(c, P, Q);
}

PointFq ec_neg(const CurveFq& c, const PointFq& P) {
  require_on_curve(c, P);
  if (P.is_infinity()) return P;
  return PointFq::affine(P.x(), -P.y());
}

PointFq ec_smul(const CurveFq& c, std::int64_t n, const PointFq& P) {
  require_on_curve(c, P);
  PointFq base = n < 0 ? ec_neg(c, P) : P;
  std::uint64_t e = n < 0 ? std::uint64_t(-n) : std::uint64_t(n);
  PointFq acc = PointFq::infinity();
  while (e != 0) {
    if (e & 1) acc = add_unchecked(c, acc, base);
    base = add_unchecked(c, base, base);
    e >>= 1;
  }
  return acc;
}

std::uint64_t point_order(const CurveFq& c, const PointFq& P) {
  require_on_curve(c, P);
  std::uint64_t n = 1;
  PointFq acc = P;
  while (!acc.is_infinity()) {
    acc = add_unchecked(c, acc, P);
    ++n;
  }
  return n;
}

std::vector<PointFq> enumerate_points(const CurveFq& c, std::uint32_t ceiling) {
  std::vector<PointFq> out;
  for (const FieldElement& x : c.field->elements(ceiling)) {
    FieldElement rhs = x * x * x + c.a * x + c.b;
    if (rhs.is_zero()) {
      out.push_back(PointFq::affine(x, c.field->zero()));
    } else if (auto s = sqrt(rhs)) {
      out.push_back(PointFq::affine(x, *s));
      out.push_back(PointFq::affine(x, -*s));
    }
  }
  out.push_back(PointFq::infinity());
  return out;
}

// --------------------------- curves over W2 -------------------------------

CurveW2::CurveW2(FieldRef f, W2 a_, W2 b_)
    : field(std::move(f)), a(std::move(a_)), b(std::move(b_)) {
  field->check_element(a.a0());
  field->check_element(b.a0());
  (void)reduced();  // throws SingularCurve if the reduction is singular
}

CurveFq CurveW2::reduced() const { return CurveFq(field, a.a0(), b.a0()); }

PointW2 PointW2::identity(const Field& f) {
  PointW2 P;
  P.t_ = f.zero();
  return P;
}

PointW2 PointW2::kernel(const FieldElement& t) {
  PointW2 P;
  P.t_ = t;
  P.t_.field();  // reject null
  return P;
}

PointW2 PointW2::affine(W2 x, W2 y) {
  PointW2 P;
  P.affine_ = true;
  P.x_ = std::move(x);
  P.y_ = std::move(y);
  P.x_.field().check_element(P.y_.a0());
  return P;
}

const W2& PointW2::x() const {
  if (!affine_) throw PointNotOnCurve("x() on a point reducing to infinity");
  return x_;
}
const W2& PointW2::y() const {
  if (!affine_) throw PointNotOnCurve("y() on a point reducing to infinity");
  return y_;
}
const FieldElement& PointW2::kernel_param() const {
  if (affine_) throw PointNotOnCurve("kernel_param() on an affine point");
  return t_;
}

std::array<W2, 3> PointW2::projective() const {
  if (affine_) {
    const Field& f = x_.field();
    return {x_, y_, W2::one(f)};
  }
  const Field& f = t_.field();
  return {W2::ver(t_), W2::one(f), W2::zero(f)};
}

std::string PointW2::str() const {
  auto [X, Y, Z] = projective();
  return "(" + X.str() + " : " + Y.str() + " : " + Z.str() + ")";
}

bool operator==(const PointW2& a, const PointW2& b) {
  if (a.affine_ != b.affine_) return false;
  if (a.affine_) return a.x_ == b.x_ && a.y_ == b.y_;
  return a.t_ == b.t_;
}

bool on_curve(const CurveW2& c, const PointW2& P) {
  if (!P.is_affine()) {
    c.field->check_element(P.kernel_param());
    return true;  // Y^2 Z = X^3 + aXZ^2 + bZ^3 is 0 = 0 at (ver t : 1 : 0)
  }
  const W2& x = P.x();
  const W2& y = P.y();
  c.field->check_element(x.a0());
  return y * y == x * x * x + c.a * x + c.b;
}

namespace {

void require_on_curve(const CurveW2& c, const PointW2& P) {
  if (!on_curve(c, P)) throw PointNotOnCurve("point " + P.str() + " not on curve");
}

// (ver(t) : 1 : 0) + (x : y : 1) = (x - 2 ver(t) y : y - ver(t)(3x^2 + a) : 1).
// The third intersection of the line through the two points is read off from
// the cubic form; every correction term lies in the kernel, so no addition
// carries appear and the formula is exact componentwise.
PointW2 kernel_translate(const CurveW2& c, const FieldElement& t, const PointW2& A) {
  if (t.is_zero()) return A;
  const Field& f = *c.field;
  const FieldElement x0 = A.x().a0(), x1 = A.x().a1();
  const FieldElement y0 = A.y().a0(), y1 = A.y().a1();
  FieldElement xs = x1 - f.from_residue(2) * t * frobenius(y0);
  FieldElement ys =
      y1 - t * frobenius(f.from_residue(3) * x0 * x0 + c.a.a0());
  return PointW2::affine(W2(x0, xs), W2(y0, ys));
}

// For affine A, B with equal reductions, A - B is the kernel point ver(t)
// with A = ver(t) + B; t is solved linearly from the translation formula.
FieldElement kernel_difference_param(const CurveW2& c, const PointW2& A, const PointW2& B) {
  const Field& f = *c.field;
  const FieldElement y0 = B.y().a0();
  if (!y0.is_zero()) {
    FieldElement d = A.x().a1() - B.x().a1();
    return -d * inv(f.from_residue(2) * frobenius(y0));
  }
  // 2-torsion reduction: x-coordinates agree identically, use y instead;
  // 3x0^2 + a0 is a unit because x0 is a simple root of the cubic.
  const FieldElement x0 = B.x().a0();
  FieldElement e = A.y().a1() - B.y().a1();
  return -e * inv(frobenius(f.from_residue(3) * x0 * x0 + c.a.a0()));
}

PointW2 chord(const PointW2& P, const PointW2& Q) {
  W2 lam = (Q.y() - P.y()) * w_inv(Q.x() - P.x());
  W2 x3 = lam * lam - P.x() - Q.x();
  return PointW2::affine(x3, lam * (P.x() - x3) - P.y());
}

PointW2 tangent_double(const CurveW2& c, const PointW2& P) {
  const Field& f = *c.field;
  W2 lam = (w_int(3, f) * P.x() * P.x() + c.a) * w_inv(w_int(2, f) * P.y());
  W2 x3 = lam * lam - P.x() - P.x();
  return PointW2::affine(x3, lam * (P.x() - x3) - P.y());
}

PointW2 neg_unchecked(const PointW2& P) {
  if (P.is_affine()) return PointW2::affine(P.x(), -P.y());
  return PointW2::kernel(-P.kernel_param());
}

PointW2 add_unchecked(const CurveW2& c, const PointW2& P, const PointW2& Q) {
  if (P.is_identity()) return Q;
  if (Q.is_identity()) return P;
  if (!P.is_affine() && !Q.is_affine())
    return PointW2::kernel(P.kernel_param() + Q.kernel_param());
  if (!P.is_affine()) return kernel_translate(c, P.kernel_param(), Q);
  if (!Q.is_affine()) return kernel_translate(c, Q.kernel_param(), P);

  // Both affine. Distinct reduced x-coordinates: the chord denominator is a
  // unit. Equal reduced x-coordinates split by reduced y.
  if (P.x().a0() != Q.x().a0()) return chord(P, Q);

  if (P.y().a0() == Q.y().a0()) {
    if (P.y().a0().is_zero())
      // Both reduce to the same 2-torsion point; the sum reduces to
      // infinity: P + Q = P - (-Q) lies in the kernel of reduction.
      return PointW2::kernel(kernel_difference_param(c, P, neg_unchecked(Q)));
    if (P == Q) return tangent_double(c, P);
    // Q = P + ver(t); then P + Q = 2P + ver(t) with 2P in generic position.
    FieldElement t = kernel_difference_param(c, Q, P);
    return kernel_translate(c, t, tangent_double(c, P));
  }
  // Opposite reductions: the sum lies in the kernel of reduction.
  return PointW2::kernel(kernel_difference_param(c, P, neg_unchecked(Q)));
}

}  // namespace

PointW2 ec_add(const CurveW2& c, const PointW2& P, const PointW2& Q) {
  require_on_curve(c, P);
  require_on_curve(c, Q);
  return add_unchecked(c, P, Q);
}

PointW2 ec_neg(const CurveW2& c, const PointW2& P) {
  require_on_curve(c, P);
  return neg_unchecked(P);
}

PointW2 ec_smul(const CurveW2& c, std::int64_t n, const PointW2& P) {
  require_on_curve(c, P);
  PointW2 base = n < 0 ? neg_unchecked(P) : P;
  std::uint64_t e = n < 0 ? std::uint64_t(-n) : std::uint64_t(n);
  PointW2 acc = PointW2::identity(*c.field);
  while (e != 0) {
    if (e & 1) acc = add_unchecked(c, acc, base);
    base = add_unchecked(c, base, base);
    e >>= 1;
  }
  return acc;
}

std::uint64_t point_order(const CurveW2& c, const PointW2& P) {
  require_on_curve(c, P);
  std::uint64_t n = 1;
  PointW2 acc = P;
  while (!acc.is_identity()) {
    acc = add_unchecked(c, acc, P);
    ++n;
  }
  return n;
}

std::vector<PointW2> enumerate_points(const CurveW2& c, std::uint32_t ceiling) {
  std::vector<PointW2> out;
  std::vector<FieldElement> ts = c.field->elements(ceiling);
  for (const PointFq& P0 : enumerate_points(c.reduced(), ceiling)) {
    PointW2 base = lift_point_any(c, P0);
    for (const FieldElement& t : ts) out.push_back(add_unchecked(c, base, PointW2::kernel(t)));
  }
  return out;
}

PointFq reduce_point(const PointW2& P) {
  if (!P.is_affine()) return PointFq::infinity();
  return PointFq::affine(P.x().a0(), P.y().a0());
}

PointW2 lift_point_any(const CurveW2& c, const PointFq& P0) {
  const Field& f = *c.field;
  if (P0.is_infinity()) return PointW2::identity(f);
  if (!on_curve(c.reduced(), P0)) throw PointNotOnCurve("base point not on reduced curve");
  const FieldElement& x0 = P0.x();
  const FieldElement& y0 = P0.y();
  W2 x = W2::teich(x0);
  W2 rhs = x * x * x + c.a * x + c.b;
  if (!y0.is_zero()) {
    // (y0, y1)^2 = (y0^2, 2 y0^p y1), so y1 is a linear solve.
    FieldElement y1 = rhs.a1() * inv(f.from_residue(2) * frobenius(y0));
    return PointW2::affine(x, W2(y0, y1));
  }
  // 2-torsion: take y = (0, 0) and solve the curve equation for x1; the
  // second component is linear in x1 with unit slope (3 x0^2 + a0)^p.
  FieldElement slope = frobenius(f.from_residue(3) * x0 * x0 + c.a.a0());
  FieldElement x1 = -rhs.a1() * inv(slope);
  return PointW2::affine(W2(x0, x1), W2::zero(f));
}

// --------------------------- rational points ------------------------------

RatPoint RatPoint::affine(Rational x, Rational y) {
  RatPoint P;
  P.inf_ = false;
  P.x_ = std::move(x);
  P.y_ = std::move(y);
  return P;
}

const Rational& RatPoint::x() const {
  if (inf_) throw PointNotOnCurve("coordinate of the point at infinity");
  return x_;
}
const Rational& RatPoint::y() const {
  if (inf_) throw PointNotOnCurve("coordinate of the point at infinity");
  return y_;
}

bool operator==(const RatPoint& a, const RatPoint& b) {
  if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
  return a.x_ == b.x_ && a.y_ == b.y_;
}

bool on_curve(const CurveQ& c, const RatPoint& P) {
  if (P.is_infinity()) return true;
  return P.y() * P.y() == P.x() * P.x() * P.x() + c.a * P.x() + c.b;
}

namespace {

void require_on_curve(const CurveQ& c, const RatPoint& P) {
  if (!on_curve(c, P)) throw PointNotOnCurve("rational point not on curve");
}

}  // namespace

RatPoint rat_add(const CurveQ& c, const RatPoint& P, const RatPoint& Q) {
  require_on_curve(c, P);
  require_on_curve(c, Q);
  if (P.is_infinity()) return Q;
  if (Q.is_infinity()) return P;
  Rational lam;
  if (P.x() == Q.x()) {
    if (P.y() != Q.y() || P.y() == 0) return RatPoint::infinity();
    lam = (3 * P.x() * P.x() + c.a) / (2 * P.y());
  } else {
    lam = (Q.y() - P.y()) / (Q.x() - P.x());
  }
  Rational x3 = lam * lam - P.x() - Q.x();
  return RatPoint::affine(x3, lam * (P.x() - x3) - P.y());
}

RatPoint rat_neg(const RatPoint& P) {
  if (P.is_infinity()) return P;
  return RatPoint::affine(P.x(), -P.y());
}

std::optional<int> rat_order_up_to(const CurveQ& c, const RatPoint& P, int bound) {
  require_on_curve(c, P);
  if (P.is_infinity()) return 1;
  RatPoint acc = P;
  for (int n = 2; n <= bound; ++n) {
    acc = rat_add(c, acc, P);
    if (acc.is_infinity()) return n;
  }
  return std::nullopt;
}

// --------------------------- quartic model --------------------------------

QuarticFq QuarticFq::one_minus_x4(const FieldRef& f) {
  QuarticFq q{f, {f->one(), f->zero(), f->zero(), f->zero(), -f->one()}};
  return q;
}

FieldElement QuarticFq::rhs(const FieldElement& x) const {
  FieldElement acc = field->zero();
  for (int i = 4; i >= 0; --i) acc = acc * x + c[i];
  return acc;
}

bool QuarticFq::on_curve(const FieldElement& x, const FieldElement& y) const {
  return y * y == rhs(x);
}

QuarticPoints enumerate_points(const QuarticFq& c, std::uint32_t ceiling) {
  QuarticPoints out;
  for (const FieldElement& x : c.field->elements(ceiling)) {
    FieldElement r = c.rhs(x);
    if (r.is_zero()) {
      out.affine.emplace_back(x, c.field->zero());
    } else if (auto s = sqrt(r)) {
      out.affine.emplace_back(x, *s);
      out.affine.emplace_back(x, -*s);
    }
  }
  // Smooth-model points over x = infinity: z^2 = c4 in the (1/x, y/x^2) chart.
  if (c.c[4].is_zero())
    out.at_infinity = 1;
  else
    out.at_infinity = sqrt(c.c[4]) ? 2 : 0;
  return out;
}

QuarticW2 QuarticW2::one_minus_x4(const FieldRef& f) {
  QuarticW2 q{f,
              {W2::one(*f), W2::zero(*f), W2::zero(*f), W2::zero(*f), -W2::one(*f)}};
  return q;
}

W2 QuarticW2::rhs(const W2& x) const {
  W2 acc = W2::zero(*field);
  for (int i = 4; i >= 0; --i) acc = acc * x + c[i];
  return acc;
}

QuarticFq QuarticW2::reduced() const {
  return QuarticFq{field, {c[0].a0(), c[1].a0(), c[2].a0(), c[3].a0(), c[4].a0()}};
}

}  // namespace wittpack
