#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "wittpack/ec.hpp"

using namespace wittpack;

namespace {

CurveFq e0_f7() {
  FieldRef f = Field::make(7, 1);
  return CurveFq(f, f->zero(), f->one());  // y^2 = x^3 + 1
}

CurveW2 e_w2_f7() {
  FieldRef f = Field::make(7, 1);
  return CurveW2(f, W2::zero(*f), W2::one(*f));
}

}  // namespace

TEST_CASE("curve construction rejects singular curves") {
  FieldRef f = Field::make(7, 1);
  CHECK_THROWS_AS(CurveFq(f, f->zero(), f->zero()), SingularCurve);
  CHECK_THROWS_AS(CurveW2(f, W2::zero(*f), W2::zero(*f)), SingularCurve);
}

TEST_CASE("group law over F_7") {
  CurveFq c = e0_f7();
  FieldRef f = c.field;
  auto pts = enumerate_points(c);
  CHECK(pts.size() == 12);
  CHECK(pts.back().is_infinity());

  PointFq P = PointFq::affine(f->zero(), f->one());
  CHECK(ec_smul(c, 2, P) == PointFq::affine(f->zero(), f->from_residue(6)));
  CHECK(point_order(c, P) == 3);
  CHECK(ec_add(c, P, PointFq::infinity()) == P);
  CHECK(ec_add(c, P, ec_neg(c, P)).is_infinity());
  CHECK_THROWS_AS(ec_add(c, PointFq::affine(f->one(), f->one()), P), PointNotOnCurve);

  for (const auto& Q : pts) {
    std::uint64_t n = point_order(c, Q);
    CHECK(12 % n == 0);
    CHECK(ec_smul(c, std::int64_t(n), Q).is_infinity());
  }
}

TEST_CASE("E(W2(F_7)) has 84 distinct points, all on curve") {
  CurveW2 c = e_w2_f7();
  auto pts = enumerate_points(c);
  REQUIRE(pts.size() == 84);
  std::set<std::string> keys;
  for (const auto& P : pts) {
    CHECK(on_curve(c, P));
    keys.insert(P.str());
  }
  CHECK(keys.size() == 84);
}

TEST_CASE("kernel of reduction is (F_7, +) with exponent 7") {
  CurveW2 c = e_w2_f7();
  FieldRef f = c.field;
  for (const auto& s : f->elements())
    for (const auto& t : f->elements())
      CHECK(ec_add(c, PointW2::kernel(s), PointW2::kernel(t)) == PointW2::kernel(s + t));
  for (const auto& t : f->elements())
    CHECK(ec_smul(c, 7, PointW2::kernel(t)).is_identity());
}

TEST_CASE("reduction is a surjective homomorphism with fibers of size q") {
  CurveW2 c = e_w2_f7();
  CurveFq c0 = c.reduced();
  auto pts = enumerate_points(c);
  std::map<std::string, int> fibers;
  for (const auto& P : pts) {
    CHECK(on_curve(c0, reduce_point(P)));
    fibers[reduce_point(P).str()] += 1;
  }
  CHECK(fibers.size() == 12);
  for (const auto& [k, n] : fibers) CHECK(n == 7);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
  for (int n = 0; n < 5000; ++n) {
    const PointW2 &P = pts[pick(rng)], &Q = pts[pick(rng)];
    CHECK(reduce_point(ec_add(c, P, Q)) == ec_add(c0, reduce_point(P), reduce_point(Q)));
  }
}

TEST_CASE("sampled reduction homomorphism at q = 49") {
  FieldRef f = Field::make(7, 2);
  CurveW2 c(f, W2::zero(*f), W2::one(*f));
  CurveFq c0 = c.reduced();
  auto base = enumerate_points(c0);
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::size_t> pick(0, base.size() - 1);
  std::uniform_int_distribution<std::uint32_t> kpick(0, 48);
  auto random_point = [&] {
    return ec_add(c, lift_point_any(c, base[pick(rng)]), PointW2::kernel(f->element(kpick(rng))));
  };
  for (int n = 0; n < 500; ++n) {
    PointW2 P = random_point(), Q = random_point();
    CHECK(reduce_point(ec_add(c, P, Q)) == ec_add(c0, reduce_point(P), reduce_point(Q)));
  }

  // sampled fiber structure: the 49 kernel translates of a lift are the
  // distinct preimages of the base point
  for (int n = 0; n < 8; ++n) {
    const PointFq& P0 = base[pick(rng)];
    PointW2 L = lift_point_any(c, P0);
    std::set<std::string> fiber;
    for (const auto& t : f->elements()) {
      PointW2 Q = ec_add(c, L, PointW2::kernel(t));
      CHECK(reduce_point(Q) == P0);
      fiber.insert(Q.str());
    }
    CHECK(fiber.size() == 49);
  }
}

TEST_CASE("group axioms over W2(F_7)") {
  CurveW2 c = e_w2_f7();
  auto pts = enumerate_points(c);
  std::set<std::string> keys;
  for (const auto& P : pts) keys.insert(P.str());

  for (const auto& P : pts) {
    CHECK(ec_add(c, P, ec_neg(c, P)).is_identity());
    CHECK(ec_add(c, P, PointW2::identity(*c.field)) == P);
  }
  // commutativity on all pairs, closure via the key set
  for (const auto& P : pts)
    for (const auto& Q : pts) {
      PointW2 S = ec_add(c, P, Q);
      REQUIRE(keys.count(S.str()) == 1);
      REQUIRE(S == ec_add(c, Q, P));
    }
  // associativity on 10^5 seeded random triples
  std::mt19937_64 rng(20240902);
  std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
  for (int n = 0; n < 100000; ++n) {
    const PointW2 &P = pts[pick(rng)], &Q = pts[pick(rng)], &R = pts[pick(rng)];
    REQUIRE(ec_add(c, ec_add(c, P, Q), R) == ec_add(c, P, ec_add(c, Q, R)));
  }
}

TEST_CASE("scalar multiplication composes") {
  CurveW2 c = e_w2_f7();
  auto pts = enumerate_points(c);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
  std::uniform_int_distribution<int> mval(-9, 9);
  for (int n = 0; n < 300; ++n) {
    const PointW2& P = pts[pick(rng)];
    int a = mval(rng), b = mval(rng);
    CHECK(ec_smul(c, std::int64_t(a) * b, P) == ec_smul(c, a, ec_smul(c, b, P)));
  }
}

TEST_CASE("lift_point_any is a section; fibers are kernel cosets") {
  CurveW2 c = e_w2_f7();
  CurveFq c0 = c.reduced();
  FieldRef f = c.field;
  std::set<std::string> all;
  for (const auto& P : enumerate_points(c)) all.insert(P.str());

  for (const auto& P0 : enumerate_points(c0)) {
    PointW2 L = lift_point_any(c, P0);
    CHECK(on_curve(c, L));
    CHECK(reduce_point(L) == P0);
    std::set<std::string> fiber;
    for (const auto& t : f->elements()) {
      PointW2 Q = ec_add(c, L, PointW2::kernel(t));
      CHECK(reduce_point(Q) == P0);
      fiber.insert(Q.str());
      CHECK(all.count(Q.str()) == 1);
    }
    CHECK(fiber.size() == 7);
  }
  CHECK(reduce_point(PointW2::identity(*f)).is_infinity());
  CHECK(lift_point_any(c, PointFq::infinity()).is_identity());

  // 2-torsion abscissa lift solves the curve equation with y = (0, 0)
  PointW2 L = lift_point_any(c, PointFq::affine(f->from_residue(6), f->zero()));
  CHECK(L.x() == W2::teich(f->from_residue(6)));
  CHECK(L.y() == W2::zero(*f));
}

TEST_CASE("rational torsion certification") {
  CurveQ c{0, 1};
  CHECK(rat_order_up_to(c, RatPoint::affine(0, 1)) == 3);
  CHECK(rat_order_up_to(c, RatPoint::affine(-1, 0)) == 2);
  CHECK(rat_order_up_to(c, RatPoint::affine(2, 3)) == 6);
  CHECK_FALSE(rat_order_up_to(c, RatPoint::affine(2, 3), 4).has_value());
  CHECK(rat_order_up_to(c, RatPoint::infinity()) == 1);
  CHECK_THROWS_AS(rat_add(c, RatPoint::affine(1, 1), RatPoint::infinity()), PointNotOnCurve);

  // brute-force confirmation that 6 is exact
  RatPoint P = RatPoint::affine(2, 3), acc = P;
  for (int n = 2; n <= 5; ++n) {
    acc = rat_add(c, acc, P);
    CHECK_FALSE(acc.is_infinity());
  }
  CHECK(rat_add(c, acc, P).is_infinity());
  CHECK(rat_add(c, P, P) == RatPoint::affine(0, 1));
}

TEST_CASE("quartic point enumeration") {
  FieldRef f5 = Field::make(5, 1);
  QuarticFq q = QuarticFq::one_minus_x4(f5);
  auto pts = enumerate_points(q);
  // x = 0 gives y = +-1, x in F_5^* gives y = 0 only
  int x0 = 0, yzero = 0;
  for (const auto& [x, y] : pts.affine) {
    CHECK(q.on_curve(x, y));
    if (x.is_zero()) ++x0;
    if (y.is_zero()) ++yzero;
  }
  CHECK(x0 == 2);
  CHECK(yzero == 4);
  CHECK(pts.affine.size() == 6);
  CHECK(pts.at_infinity == 2);  // -1 is a square mod 5

  FieldRef f7 = Field::make(7, 1);
  CHECK(enumerate_points(QuarticFq::one_minus_x4(f7)).at_infinity == 0);

  FieldRef f25 = Field::make(5, 2);
  auto pts25 = enumerate_points(QuarticFq::one_minus_x4(f25));
  std::set<std::string> abscissas;
  for (const auto& [x, y] : pts25.affine) abscissas.insert(x.str());
  CHECK(abscissas.size() >= 12);  // enough for degree-9 interpolation
}
