#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "wittpack/config.hpp"
#include "wittpack/errors.hpp"

namespace wittpack {

class Field;
using FieldRef = std::shared_ptr<const Field>;

/// An element of F_{p^k}: k residues mod p, low degree first.
///
/// Elements keep a raw pointer to their Field; whoever builds the field
/// (via Field::make) must keep the FieldRef alive for as long as any of
/// its elements are in use. All values are immutable after construction.
class FieldElement {
 public:
  FieldElement() = default;  // null element; any operation on it throws

  const Field& field() const;
  bool is_zero() const;
  int coeff(int i) const;  // residue of the degree-i coefficient

  /// Canonical encoding: "c0" for prime fields, "c0+c1*t+..." with zero
  /// terms omitted (and "0" for zero) otherwise.
  std::string str() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

 private:
  friend class Field;
  friend FieldElement operator+(const FieldElement&, const FieldElement&);
  friend FieldElement operator-(const FieldElement&, const FieldElement&);
  friend FieldElement operator*(const FieldElement&, const FieldElement&);
  friend FieldElement operator-(const FieldElement&);

  const Field* field_ = nullptr;
  std::array<std::uint8_t, kMaxExtensionDegree> c_{};
};

FieldElement operator+(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a, const FieldElement& b);
FieldElement operator*(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a);

FieldElement inv(const FieldElement& a);                  // DivisionByZero on 0
FieldElement pow(const FieldElement& a, std::int64_t n);  // negative n via inv
FieldElement frobenius(const FieldElement& a);            // a^p

/// First b (in enumeration order) with b*b == a, if a is a square.
std::optional<FieldElement> sqrt(const FieldElement& a);

/// F_{p^k} for a fixed monic irreducible modulus. Immutable and shareable;
/// all element operations are pure, so concurrent use needs no locking.
class Field : public std::enable_shared_from_this<Field> {
 public:
  /// Deterministic default modulus: the lexicographically smallest (by
  /// low-to-high coefficient tuple) monic irreducible of degree k.
  static FieldRef make(int p, int k);
  static FieldRef make(int p, int k, const std::vector<int>& modulus);

  int p() const { return p_; }
  int k() const { return k_; }
  std::uint32_t size() const { return q_; }               // q = p^k
  const std::vector<int>& modulus() const { return modulus_; }

  /// Fields are compared structurally; elements of two F_49 instances with
  /// the same modulus interoperate.
  bool compatible(const Field& other) const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_residue(std::int64_t r) const;        // image of an integer
  FieldElement from_coeffs(const std::vector<std::int64_t>& coeffs) const;

  /// Enumeration order: index i has coefficients c_j = (i / p^j) mod p, so
  /// the first p elements are the prime subfield.
  FieldElement element(std::uint32_t index) const;
  std::uint32_t index_of(const FieldElement& a) const;
  std::vector<FieldElement> elements(std::uint32_t ceiling = kEnumerationCeiling) const;

  /// Witt carry coefficients: entry i-1 is binom(p,i)/p mod p, 1 <= i < p.
  const std::vector<std::uint8_t>& witt_carry_coeffs() const { return carry_; }

  /// FieldMismatch unless a belongs to a structurally equal field.
  void check_element(const FieldElement& a) const;

 private:
  Field(int p, int k, std::vector<int> modulus);

  friend class FieldElement;
  friend FieldElement operator+(const FieldElement&, const FieldElement&);
  friend FieldElement operator-(const FieldElement&, const FieldElement&);
  friend FieldElement operator*(const FieldElement&, const FieldElement&);
  friend FieldElement operator-(const FieldElement&);
  friend FieldElement inv(const FieldElement&);
  friend std::optional<FieldElement> sqrt(const FieldElement&);

  int p_ = 0;
  int k_ = 0;
  std::uint32_t q_ = 0;
  std::vector<int> modulus_;  // k+1 entries, monic
  // t^{k+j} reduced mod modulus, j = 0..k-2
  std::array<std::array<std::uint8_t, kMaxExtensionDegree>, kMaxExtensionDegree - 1> red_{};
  std::vector<std::uint8_t> carry_;
  mutable std::vector<std::uint32_t> sqrt_table_;  // lazily built
  mutable std::once_flag sqrt_once_;
};

/// Embedding of a into a larger field with the same characteristic
/// (source degree must divide the target degree). The modulus root used is
/// the first one in the target's enumeration order, so embeddings are
/// deterministic; the map is a field homomorphism by construction.
FieldElement embed(const FieldElement& a, const Field& target);

/// True when a lies in the prime subfield (all higher coefficients zero).
bool in_prime_subfield(const FieldElement& a);

}  // namespace wittpack
