#include "wittpack/lift.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>

namespace wittpack {

namespace {

std::int64_t mod_inverse(std::int64_t a, std::int64_t n) {
  std::int64_t t = 0, nt = 1, r = n, nr = ((a % n) + n) % n;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  return ((t % n) + n) % n;
}

// Curve coefficients must lie in W2(F_p) (components in the prime subfield)
// so the curve has a canonical base change to every extension.
std::array<int, 4> prime_coefficients(const CurveW2& curve) {
  const W2 &a = curve.a, &b = curve.b;
  if (!in_prime_subfield(a.a0()) || !in_prime_subfield(a.a1()) ||
      !in_prime_subfield(b.a0()) || !in_prime_subfield(b.a1()))
    throw FieldMismatch("curve coefficients must lie in W2(F_p)");
  return {a.a0().coeff(0), a.a1().coeff(0), b.a0().coeff(0), b.a1().coeff(0)};
}

CurveW2 base_change(int p, const std::array<int, 4>& c, int k) {
  FieldRef f = Field::make(p, k);
  return CurveW2(f, W2(f->from_residue(c[0]), f->from_residue(c[1])),
                 W2(f->from_residue(c[2]), f->from_residue(c[3])));
}

using SampleList = std::vector<std::pair<FieldElement, FieldElement>>;

// Shared interpolation-and-validation tail of the two tau polynomial
// reconstructions. `collect` returns (x0, x1) pairs with distinct x0 over
// F_{p^k} and appends skip records.
Poly reconstruct_tau_poly(int p, int sample_k, int validate_k,
                          const std::function<SampleList(int, std::vector<SkipRecord>&)>& collect,
                          const std::function<void(const Poly&, TauPolyReport&)>& extra_validation,
                          TauPolyReport* report) {
  TauPolyReport local;
  TauPolyReport& rep = report ? *report : local;
  rep = TauPolyReport{};
  rep.p = p;
  rep.sample_k = sample_k;
  rep.validate_k = validate_k;

  FieldRef fs = Field::make(p, sample_k);
  SampleList samples = collect(sample_k, rep.skipped);
  rep.sample_count = samples.size();
  if (samples.empty())
    throw InsufficientSamples("no usable sample abscissas over F_" +
                              std::to_string(fs->size()));
  Poly interp = interpolate(fs, samples);
  rep.degree = interp.degree();

  FieldRef fv = Field::make(p, validate_k);
  SampleList vsamples = collect(validate_k, rep.skipped);

  // When a validation check fails, decide whether the sample extension was
  // simply too small to pin the polynomial down: compare the sample count
  // against the degree observed on the (larger) validation extension.
  auto fail = [&](const std::string& what) -> void {
    int observed = interpolate(fv, vsamples).degree();
    if (int(samples.size()) < observed + 2)
      throw InsufficientSamples(
          "only " + std::to_string(samples.size()) + " distinct abscissas over F_" +
          std::to_string(fs->size()) + "; the lift polynomial has degree " +
          std::to_string(observed) + " and needs at least " + std::to_string(observed + 2));
    throw ValidationFailed(what);
  };

  if (int(samples.size()) < interp.degree() + 2)
    fail("sample count below observed degree + 2");

  if (!coeffs_in_prime_subfield(interp)) {
    rep.coeffs_prime_subfield = false;
    fail("interpolated coefficients leave the prime subfield");
  }
  rep.coeffs_prime_subfield = true;
  Poly result = to_prime_field(interp);

  for (const auto& [x0, x1] : vsamples) {
    if (result(x0) != x1)
      fail("holdout mismatch at x0 = " + x0.str() + ": expected " + x1.str() +
           ", polynomial gives " + result(x0).str());
  }
  rep.holdout_ok = true;

  extra_validation(result, rep);
  return result;
}

}  // namespace

PointW2 teichmuller_lift(const CurveW2& curve, const PointFq& P0, std::uint64_t order) {
  const Field& f = *curve.field;
  if (P0.is_infinity()) return PointW2::identity(f);
  if (order % std::uint64_t(f.p()) == 0)
    throw OrderDivisibleByP("point order " + std::to_string(order) +
                            " is divisible by p = " + std::to_string(f.p()));
  const std::int64_t p = f.p(), n = std::int64_t(order);
  const std::int64_t lambda = n == 1 ? 0 : p * mod_inverse(p, n);
  return ec_smul(curve, lambda, lift_point_any(curve, P0));
}

PointW2 teichmuller_lift(const CurveW2& curve, const PointFq& P0) {
  std::uint64_t n = P0.is_infinity() ? 1 : point_order(curve.reduced(), P0);
  return teichmuller_lift(curve, P0, n);
}

Poly tau_x_poly(const CurveW2& curve, int sample_k, int validate_k, TauPolyReport* report) {
  std::array<int, 4> coeffs = prime_coefficients(curve);
  const int p = curve.field->p();
  const int a = coeffs[0], b = coeffs[2];  // reduced curve coefficients

  auto collect = [&](int k, std::vector<SkipRecord>& skips) -> SampleList {
    CurveW2 ck = base_change(p, coeffs, k);
    CurveFq c0 = ck.reduced();
    std::map<std::uint32_t, std::pair<FieldElement, FieldElement>> by_abscissa;
    for (const PointFq& P0 : enumerate_points(c0)) {
      if (P0.is_infinity()) continue;
      std::uint64_t n = point_order(c0, P0);
      if (n % std::uint64_t(p) == 0) {
        skips.push_back({"x0 = " + P0.x().str() + " over F_" + std::to_string(c0.field->size()),
                         "point order divisible by p"});
        continue;
      }
      PointW2 tau = teichmuller_lift(ck, P0, n);
      TauSample sample(P0, n, tau, tau.x());
      auto [it, fresh] = by_abscissa.try_emplace(c0.field->index_of(P0.x()),
                                                 sample.x_witt.a0(), sample.x_witt.a1());
      if (!fresh && it->second.second != sample.x_witt.a1())
        throw ValidationFailed("x1 is not a function of the abscissa at x0 = " + P0.x().str());
    }
    SampleList out;
    out.reserve(by_abscissa.size());
    for (const auto& [idx, s] : by_abscissa) out.push_back(s);
    return out;
  };

  auto extra = [&](const Poly& result, TauPolyReport& rep) {
    // x1 vanishes at every 2-torsion abscissa (the roots of the cubic).
    FieldRef fp = Field::make(p, 1);
    Poly cubic = Poly::from_terms(fp, {{3, 1}, {1, a}, {0, b}});
    FieldRef fs = Field::make(p, sample_k);
    for (const FieldElement& x : fs->elements())
      if (cubic(x).is_zero() && !result(x).is_zero())
        throw ValidationFailed("x1 does not vanish at the 2-torsion abscissa " + x.str());
    rep.two_torsion_vanish = true;
  };

  return reconstruct_tau_poly(p, sample_k, validate_k, collect, extra, report);
}

// --------------------------- quartic transport ----------------------------

CurveFq quartic_weierstrass_target(const FieldRef& f) {
  return CurveFq(f, f->from_residue(4), f->zero());
}

CurveW2 quartic_weierstrass_target_w2(const FieldRef& f) {
  // the coefficient 4 is the ring image of the integer, not teich(4)
  return CurveW2(f, w_int(4, *f), W2::zero(*f));
}

std::pair<FieldElement, FieldElement> quartic_to_weierstrass(const FieldElement& x,
                                                             const FieldElement& y) {
  const Field& f = x.field();
  if (x.is_zero()) throw DegenerateTransport("transport undefined at x = 0");
  FieldElement w = f.one() + y;
  if (w.is_zero()) throw DegenerateTransport("transport undefined at y = -1");
  FieldElement xi = inv(x);
  FieldElement u = f.from_residue(2) * w * xi * xi;
  return {u, f.from_residue(4) * w * xi * xi * xi};
}

std::pair<FieldElement, FieldElement> weierstrass_to_quartic(const FieldElement& u,
                                                             const FieldElement& v) {
  const Field& f = u.field();
  if (v.is_zero()) throw DegenerateTransport("inverse transport undefined at v = 0");
  FieldElement vi = inv(v);
  FieldElement x = f.from_residue(2) * u * vi;
  FieldElement y = f.from_residue(2) * u * u * u * vi * vi - f.one();
  return {x, y};
}

std::pair<W2, W2> weierstrass_to_quartic_w2(const W2& u, const W2& v) {
  const Field& f = u.field();
  if (!v.is_unit()) throw DegenerateTransport("inverse transport needs unit v");
  W2 vi = w_inv(v);
  W2 x = w_int(2, f) * u * vi;
  W2 y = w_int(2, f) * u * u * u * vi * vi - W2::one(f);
  return {x, y};
}

W2 quartic_teichmuller_x(const QuarticW2& curve, const FieldElement& x0,
                         const FieldElement& y0) {
  const Field& f = *curve.field;
  if (curve.c[0] != W2::one(f) || !curve.c[1].is_zero() || !curve.c[2].is_zero() ||
      !curve.c[3].is_zero() || curve.c[4] != -W2::one(f))
    throw Error("quartic lift is implemented for y^2 = 1 - x^4 only");
  if (!curve.reduced().on_curve(x0, y0))
    throw PointNotOnCurve("(" + x0.str() + ", " + y0.str() + ") not on the quartic");

  auto [u0, v0] = quartic_to_weierstrass(x0, y0);
  CurveW2 target = quartic_weierstrass_target_w2(curve.field);
  PointFq P0 = PointFq::affine(u0, v0);
  std::uint64_t n = point_order(target.reduced(), P0);
  if (n % std::uint64_t(f.p()) == 0)
    throw OrderDivisibleByP("transported point has order divisible by p");
  PointW2 tau = teichmuller_lift(target, P0, n);
  auto [x, y] = weierstrass_to_quartic_w2(tau.x(), tau.y());
  if (x.a0() != x0 || y * y != curve.rhs(x))
    throw Error("transport round trip failed");  // internal consistency
  return x;
}

Poly quartic_tau_x_poly(int p, int sample_k, int validate_k, TauPolyReport* report) {
  auto collect = [&](int k, std::vector<SkipRecord>& skips) -> SampleList {
    FieldRef fk = Field::make(p, k);
    QuarticW2 curve = QuarticW2::one_minus_x4(fk);
    QuarticFq c0 = curve.reduced();
    std::string over = " over F_" + std::to_string(fk->size());
    std::map<std::uint32_t, std::pair<FieldElement, FieldElement>> by_abscissa;
    bool zero_seen = false;
    for (const auto& [x0, y0] : enumerate_points(c0).affine) {
      if (x0.is_zero()) {
        if (!zero_seen) skips.push_back({"x0 = 0" + over, "degenerate transport (x = 0)"});
        zero_seen = true;
        continue;
      }
      if ((fk->one() + y0).is_zero()) continue;  // sibling point covers this abscissa
      std::optional<W2> xw;
      try {
        xw = quartic_teichmuller_x(curve, x0, y0);
      } catch (const OrderDivisibleByP&) {
        skips.push_back({"x0 = " + x0.str() + over, "point order divisible by p"});
        continue;
      }
      auto [it, fresh] = by_abscissa.try_emplace(fk->index_of(x0), xw->a0(), xw->a1());
      if (!fresh && it->second.second != xw->a1())
        throw ValidationFailed("x1 is not a function of the abscissa at x0 = " + x0.str());
    }
    SampleList out;
    out.reserve(by_abscissa.size());
    for (const auto& [idx, s] : by_abscissa) out.push_back(s);
    return out;
  };

  auto extra = [&](const Poly& result, TauPolyReport& rep) {
    if (!is_odd_polynomial(result))
      throw ValidationFailed("quartic lift polynomial has an even-exponent term");
    rep.odd_symmetry = true;
  };

  return reconstruct_tau_poly(p, sample_k, validate_k, collect, extra, report);
}

}  // namespace wittpack
