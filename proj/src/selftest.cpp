#include "wittpack/selftest.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>

#include "wittpack/packets.hpp"

namespace wittpack {

namespace {

struct Check {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& msg) {
    if (!cond && ok) {
      ok = false;
      detail = msg;
    }
  }
};

std::array<std::uint32_t, 5> point_key(const Field& f, const PointW2& P) {
  if (P.is_affine())
    return {1, f.index_of(P.x().a0()), f.index_of(P.x().a1()), f.index_of(P.y().a0()),
            f.index_of(P.y().a1())};
  return {0, f.index_of(P.kernel_param()), 0, 0, 0};
}

CriterionResult c1_tau_poly_e7() {
  Check c;
  FieldRef f = Field::make(7, 1);
  CurveW2 E(f, W2::zero(*f), W2::one(*f));
  TauPolyReport rep;
  Poly got = tau_x_poly(E, 2, 3, &rep);
  Poly expect = f_poly();
  c.require(got == expect, "reconstructed polynomial is " + got.str());
  c.require(got.degree() <= 10, "degree exceeds 10");
  for (int r : {-1, -2, -4})
    c.require(got(f->from_residue(r)).is_zero(),
              "x1 does not vanish at " + std::to_string(r));
  c.require(rep.holdout_ok && rep.coeffs_prime_subfield && rep.two_torsion_vanish,
            "validation flags not all set");
  return {1, "tau_poly_E7", c.ok, c.ok ? "x1 = " + got.str() : c.detail};
}

CriterionResult c2_tau_poly_f5() {
  Check c;
  TauPolyReport rep;
  Poly got = quartic_tau_x_poly(5, 2, 3, &rep);
  c.require(got == g_poly(), "reconstructed polynomial is " + got.str());
  c.require(is_odd_polynomial(got), "polynomial is not odd");
  c.require(rep.holdout_ok && rep.odd_symmetry, "validation flags not all set");
  return {2, "tau_poly_F5", c.ok, c.ok ? "x1 = " + got.str() : c.detail};
}

CriterionResult c3_c_identity() {
  Check c;
  IdentityCheckResult id = c_identity_check();
  c.require(id.verified, "no unit scalar relates the two sides");
  // Frozen from the independent hand expansion of the five Laurent
  // coefficients: condition = 5 * (x^6+1)^4 / x^12.
  c.require(id.scalar == id.condition.field()->from_residue(5),
            "unit scalar is " + id.scalar.str());
  IdentityCheckResult again = c_identity_check();
  c.require(again.scalar == id.scalar, "scalar not stable across recomputation");
  for (int k = 1; k <= 3; ++k) {
    FieldRef K = Field::make(7, k);
    for (const FieldElement& x : K->elements())
      if (!x.is_zero())
        c.require(id.condition(x).is_zero() == id.target(x).is_zero(),
                  "zero sets differ at ext " + std::to_string(k));
  }
  return {3, "c_identity_scalar", c.ok,
          c.ok ? "condition = " + id.scalar.str() + " * (x^6+1)^4/x^12" : c.detail};
}

CriterionResult c4_c_packet() {
  Check c;
  std::vector<FieldElement> s1 = c_packet_solutions(1);
  std::vector<FieldElement> s2 = c_packet_solutions(2);
  c.require(s1.empty(), "expected no solutions over F_7");
  c.require(s2.size() == 6, "expected 6 solutions over F_49, got " + std::to_string(s2.size()));
  for (const auto& x : s2)
    c.require(pow(x, 6) == -x.field().one(), "solution with x^6 != -1: " + x.str());
  for (int k = 1; k <= 2; ++k) {
    auto sols = c_packet_solutions(k);
    OracleResult o = c_pointwise_oracle(k);
    c.require(o.skipped.empty(), "unexpected oracle skips at ext " + std::to_string(k));
    c.require(sols.size() == o.selected.size() &&
                  std::equal(sols.begin(), sols.end(), o.selected.begin()),
              "oracle disagrees with the symbolic solution set at ext " + std::to_string(k));
  }
  return {4, "c_packet_solutions", c.ok,
          c.ok ? "6 solutions over F_49, all with x^6 = -1; oracle agrees" : c.detail};
}

CriterionResult c5_fermat() {
  Check c;
  Poly cond = fermat_condition_poly();
  FieldRef F = cond.field();
  Poly x4m1 = Poly::from_terms(F, {{4, 1}, {0, -1}});
  Poly x4p1 = Poly::from_terms(F, {{4, 1}, {0, 1}});
  Poly product = F->from_residue(3) *
                 (Poly::from_terms(F, {{2, 1}}) * x4m1 * x4m1 * x4m1 * x4p1);
  c.require(cond == product, "condition polynomial is " + cond.str());
  auto [q, r] = divrem(cond, x4m1 * x4m1 * x4m1 * x4p1);
  c.require(r.is_zero() && q == F->from_residue(3) * Poly::from_terms(F, {{2, 1}}),
            "exact division by (x^4-1)^3 (x^4+1) failed");
  for (int k = 1; k <= 2; ++k) {
    auto sols = fermat_solutions(k);
    FieldRef K = Field::make(5, k);
    for (const auto& x : sols)
      c.require(x.is_zero() || pow(x, 4) == K->one() || pow(x, 4) == -K->one(),
                "nonzero root without x^4 = +-1: " + x.str());
    OracleResult o = fermat_pointwise_oracle(k);
    std::vector<FieldElement> expected;
    for (const auto& s : sols) {
      bool skipped = false;
      for (const auto& t : o.skipped_x) skipped = skipped || t == s;
      if (!skipped) expected.push_back(s);
    }
    c.require(expected.size() == o.selected.size() &&
                  std::equal(expected.begin(), expected.end(), o.selected.begin()),
              "oracle disagrees on evaluable abscissas at ext " + std::to_string(k));
    // difference between solution set and oracle selection is the skip set
    c.require(sols.size() - expected.size() ==
                  std::size_t(std::count_if(o.skipped_x.begin(), o.skipped_x.end(),
                                            [&](const FieldElement& t) {
                                              return std::any_of(sols.begin(), sols.end(),
                                                                 [&](const FieldElement& s) {
                                                                   return s == t;
                                                                 });
                                            })),
              "difference is not exactly the recorded skip set");
  }
  return {5, "fermat_condition", c.ok,
          c.ok ? "condition = 3x^2 (x^4-1)^3 (x^4+1); oracle agrees" : c.detail};
}

CriterionResult c6_special_points() {
  Check c;
  std::vector<SpecialPoint> pts = special_points();
  c.require(pts.size() == 10, "expected 10 special points, got " + std::to_string(pts.size()));
  int order2 = 0, order3 = 0;
  for (const auto& p : pts) {
    c.require(6 % p.total_order == 0, "order does not divide 6: " + p.description);
    if (p.total_order == 2) ++order2;
    if (p.total_order == 3) ++order3;
  }
  c.require(order3 == 4 && order2 == 6, "order multiset is not {3 x4, 2 x6}");
  CurveQ E{0, 1};
  auto n = rat_order_up_to(E, RatPoint::affine(0, 1));
  c.require(n.has_value() && *n == 3, "(0,1) on y^2 = x^3 + 1 is not order 3");
  return {6, "special_points", c.ok,
          c.ok ? "10 points, orders {3,3,3,3,2,2,2,2,2,2}" : c.detail};
}

CriterionResult c7_structural(std::uint64_t seed) {  // see structural_suites
  Check c;

  // W2(F_7) is Z/49: from_integer is a ring isomorphism.
  FieldRef f7 = Field::make(7, 1);
  {
    std::set<std::pair<std::uint32_t, std::uint32_t>> images;
    for (int i = 0; i < 49; ++i) {
      W2 w = W2::from_integer(i, *f7);
      images.insert({f7->index_of(w.a0()), f7->index_of(w.a1())});
    }
    c.require(images.size() == 49, "from_integer is not injective on Z/49");
    for (int i = 0; i < 49 && c.ok; ++i)
      for (int j = 0; j < 49; ++j) {
        c.require(W2::from_integer(i, *f7) + W2::from_integer(j, *f7) ==
                      W2::from_integer(i + j, *f7),
                  "from_integer not additive");
        c.require(W2::from_integer(i, *f7) * W2::from_integer(j, *f7) ==
                      W2::from_integer(i * j, *f7),
                  "from_integer not multiplicative");
      }
  }

  // Field axioms, exhaustive at q = 49.
  {
    FieldRef f49 = Field::make(7, 2);
    auto elems = f49->elements();
    for (const auto& a : elems) {
      c.require(pow(a, 49) == a, "a^q != a");
      if (!a.is_zero()) c.require(pow(a, 48) == f49->one(), "a^(q-1) != 1");
    }
    for (std::size_t i = 0; i < elems.size() && c.ok; ++i)
      for (std::size_t j = i; j < elems.size(); ++j) {
        c.require(elems[i] * elems[j] == elems[j] * elems[i], "multiplication not commutative");
        c.require(elems[i] + elems[j] == elems[j] + elems[i], "addition not commutative");
      }
    for (std::size_t i = 0; i < elems.size() && c.ok; ++i)
      for (std::size_t j = 0; j < elems.size() && c.ok; ++j)
        for (std::size_t k = 0; k < elems.size(); ++k) {
          const FieldElement &a = elems[i], &b = elems[j], &d = elems[k];
          if (!((a + b) + d == a + (b + d))) { c.require(false, "addition not associative"); break; }
          if (!((a * b) * d == a * (b * d))) { c.require(false, "multiplication not associative"); break; }
          if (!(a * (b + d) == a * b + a * d)) { c.require(false, "distributivity fails"); break; }
        }
  }

  // W2(F_7) ring axioms over all triples.
  {
    std::vector<W2> ws;
    for (int i = 0; i < 49; ++i) ws.push_back(W2::from_integer(i, *f7));
    for (const auto& a : ws)
      for (const auto& b : ws) {
        if (!(a + b == b + a)) c.require(false, "W2 addition not commutative");
        if (!(a * b == b * a)) c.require(false, "W2 multiplication not commutative");
      }
    for (std::size_t i = 0; i < ws.size() && c.ok; ++i)
      for (std::size_t j = 0; j < ws.size() && c.ok; ++j)
        for (std::size_t k = 0; k < ws.size(); ++k) {
          const W2 &a = ws[i], &b = ws[j], &d = ws[k];
          if (!((a + b) + d == a + (b + d))) { c.require(false, "W2 addition not associative"); break; }
          if (!((a * b) * d == a * (b * d))) { c.require(false, "W2 mult not associative"); break; }
          if (!(a * (b + d) == a * b + a * d)) { c.require(false, "W2 distributivity fails"); break; }
        }
  }

  // E(W2(F_7)) for the lifted y^2 = x^3 + 1: exactly 84 points, a group,
  // reduction a homomorphism with kernel (F_7, +).
  {
    CurveW2 E(f7, W2::zero(*f7), W2::one(*f7));
    CurveFq E0 = E.reduced();
    auto pts = enumerate_points(E);
    c.require(pts.size() == 84, "expected 84 points, got " + std::to_string(pts.size()));
    std::set<std::array<std::uint32_t, 5>> keys;
    for (const auto& P : pts) {
      c.require(on_curve(E, P), "enumerated point off curve");
      keys.insert(point_key(*f7, P));
    }
    c.require(keys.size() == 84, "enumerated points not distinct");

    for (const auto& P : pts) {
      c.require(ec_add(E, P, ec_neg(E, P)).is_identity(), "P + (-P) != 0");
      if (!c.ok) break;
      for (const auto& Q : pts) {
        PointW2 S = ec_add(E, P, Q);
        if (keys.find(point_key(*f7, S)) == keys.end()) {
          c.require(false, "sum leaves the point set");
          break;
        }
        if (!(S == ec_add(E, Q, P))) {
          c.require(false, "addition not commutative");
          break;
        }
      }
      if (!c.ok) break;
    }

    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
    for (int n = 0; n < 100000 && c.ok; ++n) {
      const PointW2 &P = pts[pick(rng)], &Q = pts[pick(rng)], &R = pts[pick(rng)];
      c.require(ec_add(E, ec_add(E, P, Q), R) == ec_add(E, P, ec_add(E, Q, R)),
                "W2 group law not associative");
    }

    // reduction fibers all have size 7
    std::map<std::string, int> fibers;
    for (const auto& P : pts) fibers[reduce_point(P).str()] += 1;
    c.require(fibers.size() == 12, "reduction image is not all of E0(F_7)");
    for (const auto& [k, v] : fibers)
      c.require(v == 7, "fiber over " + k + " has size " + std::to_string(v));

    // kernel of reduction = (F_7, +), exponent 7
    for (const auto& s : f7->elements())
      for (const auto& t : f7->elements())
        c.require(ec_add(E, PointW2::kernel(s), PointW2::kernel(t)) == PointW2::kernel(s + t),
                  "kernel law violated");
    for (const auto& t : f7->elements())
      c.require(ec_smul(E, 7, PointW2::kernel(t)).is_identity(), "kernel exponent is not 7");

    // tau is a homomorphism on E0(F_7) (all orders are prime to 7), and is
    // independent of the auxiliary lift choice.
    auto base_pts = enumerate_points(E0);
    for (const auto& P0 : base_pts) {
      std::uint64_t n = P0.is_infinity() ? 1 : point_order(E0, P0);
      PointW2 tP = teichmuller_lift(E, P0, n);
      c.require(reduce_point(tP) == P0, "tau does not reduce to its base point");
      c.require(ec_smul(E, std::int64_t(n), tP).is_identity(),
                "tau(P) does not have the base order");
      std::int64_t lambda = 0;  // smallest multiple of p that is 1 mod n
      if (n > 1)
        for (std::int64_t m = 7;; m += 7)
          if (m % std::int64_t(n) == 1) {
            lambda = m;
            break;
          }
      for (const auto& t : f7->elements()) {
        PointW2 shifted = ec_add(E, lift_point_any(E, P0), PointW2::kernel(t));
        c.require(ec_smul(E, lambda, shifted) == tP, "tau depends on the lift choice");
      }
      for (const auto& Q0 : base_pts)
        c.require(ec_add(E, tP, teichmuller_lift(E, Q0)) ==
                      teichmuller_lift(E, ec_add(E0, P0, Q0)),
                  "tau is not a homomorphism");
      if (!c.ok) break;
    }
  }

  return {7, "structural_suites", c.ok,
          c.ok ? "ring/group/homomorphism suites pass (exhaustive at q = 7)" : c.detail};
}

std::vector<CriterionResult> run_1_to_7(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  auto guard = [&](CriterionResult (*fn)(), int id, const std::string& name) {
    try {
      out.push_back(fn());
    } catch (const Error& e) {
      out.push_back({id, name, false, std::string("error: ") + e.what()});
    }
  };
  guard(&c1_tau_poly_e7, 1, "tau_poly_E7");
  guard(&c2_tau_poly_f5, 2, "tau_poly_F5");
  guard(&c3_c_identity, 3, "c_identity_scalar");
  guard(&c4_c_packet, 4, "c_packet_solutions");
  guard(&c5_fermat, 5, "fermat_condition");
  guard(&c6_special_points, 6, "special_points");
  try {
    out.push_back(c7_structural(seed));
  } catch (const Error& e) {
    out.push_back({7, "structural_suites", false, std::string("error: ") + e.what()});
  }
  return out;
}

json criteria_json(const std::vector<CriterionResult>& rs) {
  json arr = json::array();
  for (const auto& r : rs)
    arr.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  return arr;
}

}  // namespace

CriterionResult structural_suites(std::uint64_t seed) {
  try {
    return c7_structural(seed);
  } catch (const Error& e) {
    return {7, "structural_suites", false, std::string("error: ") + e.what()};
  }
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  std::vector<CriterionResult> rs = run_1_to_7(seed);
  // Criterion 8: the whole computation is deterministic for a fixed seed;
  // recompute everything and compare the rendered reports byte for byte.
  std::string first = criteria_json(rs).dump();
  std::string second = criteria_json(run_1_to_7(seed)).dump();
  rs.push_back({8, "determinism", first == second,
                first == second ? "two full runs render identically"
                                : "renders differ between runs"});
  return rs;
}

json selftest_report(std::uint64_t seed) {
  std::vector<CriterionResult> rs = run_acceptance(seed);
  bool all = std::all_of(rs.begin(), rs.end(),
                         [](const CriterionResult& r) { return r.passed; });
  return json{{"command", "selftest"},
              {"seed", seed},
              {"all_passed", all},
              {"criteria", criteria_json(rs)}};
}

}  // namespace wittpack
