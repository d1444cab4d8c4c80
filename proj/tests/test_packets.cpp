#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "wittpack/packets.hpp"

using namespace wittpack;

TEST_CASE("the built-in polynomials") {
  Poly f = f_poly();
  CHECK(f.degree() == 10);
  CHECK(f.coeff(10) == f.field()->from_residue(4));
  CHECK(f.coeff(7) == f.field()->from_residue(1));
  CHECK(f.coeff(4) == f.field()->from_residue(2));
  CHECK(f.coeff(1) == f.field()->from_residue(5));
  Poly g = g_poly();
  CHECK(g == Poly::from_terms(Field::make(5, 1), {{9, 2}, {1, 3}}));
}

TEST_CASE("phi maps C points onto E x E") {
  FieldRef f7 = Field::make(7, 1);
  CurveFq e(f7, f7->zero(), f7->one());
  auto [P, Q] = phi(e, f7->one(), f7->from_residue(3));  // 3^2 = 2 = 1^6 + 1
  CHECK(P == PointFq::affine(f7->one(), f7->from_residue(3)));
  CHECK(Q == PointFq::affine(f7->one(), f7->from_residue(3)));
  CHECK_THROWS_AS(phi(e, f7->zero(), f7->one()), NonUnitX);
  CHECK_THROWS_AS(phi(e, f7->one(), f7->one()), PointNotOnCurve);  // not on C

  // every affine C-point over F_49 with x a unit maps onto the curve
  FieldRef f49 = Field::make(7, 2);
  CurveFq e49(f49, f49->zero(), f49->one());
  int checked = 0;
  for (const auto& x : f49->elements()) {
    if (x.is_zero()) continue;
    auto y = sqrt(pow(x, 6) + f49->one());
    if (!y) continue;
    auto [A, B] = phi(e49, x, *y);  // throws if either lands off curve
    CHECK(A.x() == x * x);
    CHECK(B.x() == inv(x * x));
    ++checked;
  }
  CHECK(checked > 20);
}

TEST_CASE("condition Laurent polynomial") {
  LaurentPoly cond = c_condition_laurent();
  CHECK(cond.support() == std::vector<int>{-12, -6, 0, 6, 12});
  // frozen hand expansion: 5x^-12 + 6x^-6 + 2 + 6x^6 + 5x^12
  FieldRef f7 = cond.field();
  CHECK(cond.coeff(-12) == f7->from_residue(5));
  CHECK(cond.coeff(-6) == f7->from_residue(6));
  CHECK(cond.coeff(0) == f7->from_residue(2));
  CHECK(cond.coeff(6) == f7->from_residue(6));
  CHECK(cond.coeff(12) == f7->from_residue(5));

  // the generic Witt-product second component builds the same expression
  CHECK(cond == c_condition_via_witt_product());

  // value at 1 is 2 f(1) = 3
  CHECK(cond(f7->one()) == f7->from_residue(3));
}

TEST_CASE("identity up to the unit 5") {
  IdentityCheckResult id = c_identity_check();
  CHECK(id.verified);
  CHECK(id.scalar == id.condition.field()->from_residue(5));
  // target = (x^6+1)^4 / x^12 has binomial coefficients 1 4 6 4 1
  CHECK(id.target.coeff(-12) == id.target.field()->one());
  CHECK(id.target.coeff(-6) == id.target.field()->from_residue(4));
  CHECK(id.target.coeff(0) == id.target.field()->from_residue(6));
  // zero sets agree in F_7, F_49, F_343 independently of the scalar
  for (int k = 1; k <= 3; ++k) {
    FieldRef K = Field::make(7, k);
    for (const auto& x : K->elements())
      if (!x.is_zero()) CHECK(id.condition(x).is_zero() == id.target(x).is_zero());
  }
}

TEST_CASE("C packet solutions") {
  CHECK(c_packet_solutions(1).empty());
  auto s2 = c_packet_solutions(2);
  REQUIRE(s2.size() == 6);
  for (const auto& x : s2) CHECK(pow(x, 6) == -x.field().one());
  CHECK(c_packet_solutions(3).empty());
}

TEST_CASE("C pointwise oracle agrees element for element") {
  for (int k = 1; k <= 2; ++k) {
    auto sols = c_packet_solutions(k);
    OracleResult o = c_pointwise_oracle(k);
    CHECK(o.skipped.empty());
    REQUIRE(o.selected.size() == sols.size());
    for (std::size_t i = 0; i < sols.size(); ++i) CHECK(o.selected[i] == sols[i]);
  }
}

TEST_CASE("special points") {
  auto pts = special_points();
  REQUIRE(pts.size() == 10);
  int inf = 0, xz = 0, yz = 0;
  for (const auto& p : pts) {
    CHECK(6 % p.total_order == 0);
    if (p.tag == "infinity_plus" || p.tag == "infinity_minus") {
      ++inf;
      CHECK(p.total_order == 3);
    } else if (p.tag == "x_zero") {
      ++xz;
      CHECK(p.total_order == 3);
    } else {
      CHECK(p.tag == "y_zero");
      ++yz;
      CHECK(p.total_order == 2);
      CHECK(p.phi_image_orders == std::pair{2, 2});
    }
  }
  CHECK(inf == 2);
  CHECK(xz == 2);
  CHECK(yz == 6);
}

TEST_CASE("Fermat condition polynomial and factorization") {
  Poly cond = fermat_condition_poly();
  FieldRef f5 = cond.field();
  CHECK(cond == Poly::from_terms(f5, {{18, 3}, {14, 4}, {6, 1}, {2, 2}}));

  Poly x4m1 = Poly::from_terms(f5, {{4, 1}, {0, -1}});
  Poly x4p1 = Poly::from_terms(f5, {{4, 1}, {0, 1}});
  Poly product =
      f5->from_residue(3) * (Poly::from_terms(f5, {{2, 1}}) * x4m1 * x4m1 * x4m1 * x4p1);
  CHECK(cond == product);
  auto [q, r] = divrem(cond, x4m1 * x4m1 * x4m1 * x4p1);
  CHECK(r.is_zero());
  CHECK(q == Poly::from_terms(f5, {{2, 3}}));

  for (int k = 1; k <= 2; ++k)
    for (const auto& x : roots(cond, k))
      CHECK((x.is_zero() || pow(x, 4) == x.field().one() || pow(x, 4) == -x.field().one()));
}

TEST_CASE("Fermat solution sets") {
  auto s1 = fermat_solutions(1);
  REQUIRE(s1.size() == 5);  // all of F_5
  auto s2 = fermat_solutions(2);
  REQUIRE(s2.size() == 9);  // 0 and the eighth roots of unity
  for (const auto& x : s2)
    if (!x.is_zero()) CHECK(pow(x, 8) == x.field().one());
}

TEST_CASE("Fermat pointwise oracle agrees away from the recorded skips") {
  for (int k = 1; k <= 2; ++k) {
    auto sols = fermat_solutions(k);
    OracleResult o = fermat_pointwise_oracle(k);
    auto skipped = [&](const FieldElement& s) {
      return std::any_of(o.skipped_x.begin(), o.skipped_x.end(),
                         [&](const FieldElement& t) { return t == s; });
    };
    // selected = solutions minus the recorded skips, element for element
    std::vector<FieldElement> expected;
    for (const auto& s : sols)
      if (!skipped(s)) expected.push_back(s);
    REQUIRE(o.selected.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(o.selected[i] == expected[i]);
    // x = 0 is always recorded as a degenerate transport
    CHECK(skipped(Field::make(5, k)->zero()));
  }
  // at k = 1 the auxiliary group order is prime to 5, so x = 0 is the only skip
  CHECK(fermat_pointwise_oracle(1).skipped_x.size() == 1);
  // at k = 2 every nonzero solution abscissa is evaluable and confirmed
  OracleResult o2 = fermat_pointwise_oracle(2);
  CHECK(o2.selected.size() == 8);
}

TEST_CASE("point JSON encodings") {
  FieldRef f = Field::make(7, 1);
  CHECK(to_json(PointFq::infinity()) == json("infinity"));
  json p = to_json(PointFq::affine(f->from_residue(2), f->from_residue(3)));
  CHECK(p["x"] == "2");
  CHECK(p["y"] == "3");
  json k = to_json(PointW2::kernel(f->from_residue(4)));
  CHECK(k == json::array({"(0, 4)", "(1, 0)", "(0, 0)"}));
  json a = to_json(PointW2::affine(W2::teich(f->one()), W2::teich(f->from_residue(3))));
  CHECK(a == json::array({"(1, 0)", "(3, 0)", "(1, 0)"}));
}

TEST_CASE("packet reports") {
  json c = packet_report(PacketCase::c_at_7);
  CHECK(c["case"] == "C_at_7");
  CHECK(c["verified"] == true);
  CHECK(c["unit_scalar"] == "5");
  CHECK(c["solutions"]["1"].size() == 0);
  CHECK(c["solutions"]["2"].size() == 6);
  CHECK(c["solutions"]["3"].size() == 0);
  CHECK(c["special_points"].size() == 10);
  CHECK(c["skipped"].empty());
  CHECK(c["condition"]["offset"] == -12);

  json fm = packet_report(PacketCase::fermat_at_5);
  CHECK(fm["case"] == "fermat_at_5");
  CHECK(fm["verified"] == true);
  CHECK(fm["unit_scalar"].is_null());
  CHECK(fm["solutions"]["1"].size() == 5);
  CHECK(fm["solutions"]["2"].size() == 9);
  CHECK(fm["special_points"].empty());
  CHECK_FALSE(fm["skipped"].empty());

  // stable schema: exactly these keys
  for (const auto& rep : {c, fm}) {
    REQUIRE(rep.size() == 8);
    for (const char* key : {"case", "verified", "unit_scalar", "condition", "target",
                            "solutions", "skipped", "special_points"})
      CHECK(rep.contains(key));
  }

  // byte-identical renders
  CHECK(packet_report(PacketCase::c_at_7).dump(2) == c.dump(2));
  std::ostringstream s1, s2;
  emit_report(PacketCase::fermat_at_5, s1);
  emit_report(PacketCase::fermat_at_5, s2);
  CHECK(s1.str() == s2.str());
}
