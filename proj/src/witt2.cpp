#include "wittpack/witt2.hpp"

namespace wittpack {

namespace {

// r^p mod p^2 by square-and-multiply; everything fits in 64 bits for p <= 97.
std::int64_t modpow_pp(std::int64_t base, int e, std::int64_t m) {
  std::int64_t r = 1 % m;
  base %= m;
  while (e != 0) {
    if (e & 1) r = r * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return r;
}

}  // namespace

FieldElement witt_carry(const FieldElement& x, const FieldElement& y) {
  const Field& f = x.field();
  if (x.is_zero() || y.is_zero()) return f.zero();
  const auto& c = f.witt_carry_coeffs();
  FieldElement acc = f.zero();
  FieldElement xp = x;                      // x^i
  FieldElement yp = pow(y, f.p() - 1);      // y^{p-i}
  FieldElement yi = inv(y);
  for (int i = 1; i < f.p(); ++i) {
    if (c[i - 1] != 0) acc = acc + f.from_residue(c[i - 1]) * xp * yp;
    xp = xp * x;
    yp = yp * yi;
  }
  return -acc;
}

W2::W2(FieldElement a0, FieldElement a1) : a0_(std::move(a0)), a1_(std::move(a1)) {
  a0_.field().check_element(a1_);
}

W2 W2::teich(const FieldElement& a) { return W2(a, a.field().zero()); }
W2 W2::ver(const FieldElement& a) { return W2(a.field().zero(), a); }
W2 W2::zero(const Field& f) { return W2(f.zero(), f.zero()); }
W2 W2::one(const Field& f) { return W2(f.one(), f.zero()); }

W2 W2::from_integer(std::int64_t n, const Field& f) {
  if (f.k() != 1)
    throw ExtensionFieldNotSupported("from_integer requires the prime field (k = 1)");
  return w_int(n, f);
}

W2 w_int(std::int64_t n, const Field& f) {
  const std::int64_t p = f.p(), pp = p * p;
  const std::int64_t m = ((n % pp) + pp) % pp;
  const std::int64_t r = m % p;
  // second component: (n - r^p)/p mod p, computed mod p^2 where it is exact
  const std::int64_t s = modpow_pp(r, f.p(), pp);
  const std::int64_t d = ((m - s) % pp + pp) % pp;
  return W2(f.from_residue(r), f.from_residue((d / p) % p));
}

W2 operator+(const W2& a, const W2& b) {
  return W2(a.a0() + b.a0(), a.a1() + b.a1() + witt_carry(a.a0(), b.a0()));
}

W2 operator-(const W2& a) { return W2(-a.a0(), -a.a1()); }

W2 operator-(const W2& a, const W2& b) { return a + (-b); }

W2 operator*(const W2& a, const W2& b) {
  return W2(a.a0() * b.a0(), frobenius(a.a0()) * b.a1() + frobenius(b.a0()) * a.a1());
}

W2 w_inv(const W2& a) {
  if (!a.is_unit()) throw NonUnit("w_inv of a non-unit (a0 = 0)");
  FieldElement i0 = inv(a.a0());
  return W2(i0, -a.a1() * pow(i0, 2 * a.field().p()));
}

W2 w_pow(const W2& a, std::uint64_t n) {
  W2 r = W2::one(a.field());
  W2 base = a;
  while (n != 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

W2 w_frobenius(const W2& a) { return W2(frobenius(a.a0()), frobenius(a.a1())); }

std::string W2::str() const { return "(" + a0_.str() + ", " + a1_.str() + ")"; }

}  // namespace wittpack
