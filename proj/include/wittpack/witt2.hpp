#pragma once

#include <cstdint>
#include <string>

#include "wittpack/gf.hpp"

namespace wittpack {

/// Universal Witt addition carry S1(x, y) = -sum_{i=1}^{p-1} binom(p,i)/p x^i y^{p-i}.
FieldElement witt_carry(const FieldElement& x, const FieldElement& y);

/// A length-2 Witt vector (a0, a1) over F_q. The ring W2(F_q) is the
/// mod-p^2 level of the Witt vectors of F_q; for q = p it is Z/p^2.
class W2 {
 public:
  W2() = default;  // null value, internal use only
  W2(FieldElement a0, FieldElement a1);

  static W2 teich(const FieldElement& a);  // (a, 0), multiplicative section
  static W2 ver(const FieldElement& a);    // (0, a), Verschiebung
  static W2 zero(const Field& f);
  static W2 one(const Field& f);

  /// Ring image of an integer; requires k = 1 and realizes Z/p^2 = W2(F_p).
  static W2 from_integer(std::int64_t n, const Field& f);

  const FieldElement& a0() const { return a0_; }
  const FieldElement& a1() const { return a1_; }
  const Field& field() const { return a0_.field(); }
  FieldElement reduce() const { return a0_; }
  bool is_zero() const { return a0_.is_zero() && a1_.is_zero(); }
  bool is_unit() const { return !a0_.is_zero(); }

  std::string str() const;  // "(a0, a1)"

  friend bool operator==(const W2& a, const W2& b) { return a.a0_ == b.a0_ && a.a1_ == b.a1_; }
  friend bool operator!=(const W2& a, const W2& b) { return !(a == b); }

 private:
  FieldElement a0_, a1_;
};

W2 operator+(const W2& a, const W2& b);  // (a0+b0, a1+b1+S1(a0,b0))
W2 operator-(const W2& a);               // componentwise, valid for odd p
W2 operator-(const W2& a, const W2& b);
W2 operator*(const W2& a, const W2& b);  // (a0 b0, a0^p b1 + b0^p a1)

W2 w_inv(const W2& a);                       // NonUnit when a0 = 0
W2 w_pow(const W2& a, std::uint64_t n);      // square-and-multiply
W2 w_frobenius(const W2& a);                 // componentwise a^p
W2 w_int(std::int64_t n, const Field& f);    // ring image of n in W2(F_q), any k

}  // namespace wittpack
