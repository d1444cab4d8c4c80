#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wittpack/gf.hpp"

namespace wittpack {

/// Dense polynomial over F_q, coefficients low-to-high, no trailing zeros.
class Poly {
 public:
  explicit Poly(FieldRef field);  // zero polynomial
  Poly(FieldRef field, std::vector<FieldElement> coeffs);

  /// Build from {exponent: residue} with residues read mod p.
  static Poly from_terms(const FieldRef& field, const std::map<int, std::int64_t>& terms);
  static Poly monomial(const FieldRef& field, int degree, const FieldElement& c);

  const FieldRef& field() const { return field_; }
  int degree() const { return int(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<FieldElement>& coeffs() const { return c_; }
  FieldElement coeff(int i) const;

  /// Evaluation; x may live in an extension of a prime coefficient field,
  /// in which case coefficients are embedded first.
  FieldElement operator()(const FieldElement& x) const;

  std::string str(const std::string& var = "x") const;  // descending powers

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  FieldRef field_;
  std::vector<FieldElement> c_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const FieldElement& s, const Poly& a);

/// Formal derivative; x^p terms vanish in characteristic p.
Poly derivative(const Poly& a);

/// Unique polynomial of degree < n through n points (Lagrange).
Poly interpolate(const FieldRef& field,
                 const std::vector<std::pair<FieldElement, FieldElement>>& points);

/// All roots in F_{p^ext_k} by exhaustive evaluation, in enumeration order.
/// The coefficient field must be the prime field or have degree ext_k.
std::vector<FieldElement> roots(const Poly& a, int ext_k,
                                std::uint32_t ceiling = kEnumerationCeiling);

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);

bool coeffs_in_prime_subfield(const Poly& a);
Poly to_prime_field(const Poly& a);  // lowers such a polynomial to F_p
bool is_odd_polynomial(const Poly& a);

/// Finite Laurent expansion: coeffs starting at x^offset, first/last nonzero.
class LaurentPoly {
 public:
  explicit LaurentPoly(FieldRef field);
  LaurentPoly(FieldRef field, int offset, std::vector<FieldElement> coeffs);

  static LaurentPoly from_poly(const Poly& p, int shift = 0);

  const FieldRef& field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  int min_exp() const { return offset_; }
  int max_exp() const { return offset_ + int(c_.size()) - 1; }
  FieldElement coeff(int exponent) const;
  std::vector<int> support() const;

  /// Evaluation at a unit (embedding prime-field coefficients as needed).
  FieldElement operator()(const FieldElement& x) const;

  std::string str(const std::string& var = "x") const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

 private:
  FieldRef field_;
  int offset_ = 0;
  std::vector<FieldElement> c_;
};

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

/// x^pre * f(x^scale) as a Laurent polynomial; scale may be negative.
LaurentPoly laurent_substitute(const Poly& f, int scale, int pre);

/// The unique nonzero scalar c with a = c*b, if any; 1 when both are zero.
std::optional<FieldElement> equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace wittpack
