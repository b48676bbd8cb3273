#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "normcert/rational.hpp"

namespace normcert {

/// Dense integer polynomial, lowest degree first.
using IntPoly = std::vector<Integer>;

/// The level-th cyclotomic polynomial, built as the Moebius product
/// prod_{d | level} (X^{level/d} - 1)^{mu(d)} with exact division.
IntPoly cyclotomic_polynomial(std::uint32_t level);

/// Q(zeta_level) with the power basis 1, zeta, ..., zeta^{phi-1}.
/// Immutable; shared between all elements of the same field.
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> make(std::uint32_t level);

  std::uint32_t level() const { return level_; }
  std::size_t degree() const { return degree_; }
  const IntPoly& modulus() const { return modulus_; }

  /// Reduces an integer polynomial of any length modulo the cyclotomic
  /// polynomial; on return poly.size() == degree().
  void reduce(std::vector<Integer>& poly) const;

 private:
  explicit CyclotomicField(std::uint32_t level);

  std::uint32_t level_;
  std::size_t degree_;
  IntPoly modulus_;
  // Nonzero coefficients of modulus_ below the leading term.
  std::vector<std::pair<std::size_t, Integer>> tail_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

/// An element of Q(zeta_level), stored as an integer numerator vector over
/// a common positive denominator in lowest terms. coords() exposes the
/// rational coordinates in the power basis.
class CyclotomicElement {
 public:
  /// Zero of the given field.
  explicit CyclotomicElement(FieldPtr field);

  static CyclotomicElement from_rational(FieldPtr field, const Rational& r);
  static CyclotomicElement from_coords(FieldPtr field, const std::vector<Rational>& coords);
  /// zeta^k for any integer k (negative allowed).
  static CyclotomicElement zeta_power(FieldPtr field, long long k);

  const FieldPtr& field() const { return field_; }
  std::uint32_t level() const { return field_->level(); }
  std::size_t degree() const { return field_->degree(); }

  std::vector<Rational> coords() const;
  Rational coord(std::size_t i) const;
  const std::vector<Integer>& numerators() const { return num_; }
  const Integer& denominator() const { return den_; }

  bool is_zero() const;
  bool is_rational() const;
  /// All power-basis coordinates are integers, i.e. the element lies in Z[zeta].
  bool is_integral() const;

  CyclotomicElement operator-() const;
  CyclotomicElement& operator+=(const CyclotomicElement& other);
  CyclotomicElement& operator-=(const CyclotomicElement& other);
  CyclotomicElement& operator*=(const CyclotomicElement& other);
  CyclotomicElement& operator*=(const Rational& c);

  friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) { return a += b; }
  friend CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement& b) { return a -= b; }
  friend CyclotomicElement operator*(CyclotomicElement a, const CyclotomicElement& b) { return a *= b; }
  friend CyclotomicElement operator*(CyclotomicElement a, const Rational& c) { return a *= c; }
  friend CyclotomicElement operator*(const Rational& c, CyclotomicElement a) { return a *= c; }

  friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b);

  /// Multiplicative inverse via the extended Euclidean algorithm in Q[X]
  /// against the cyclotomic polynomial. Throws DomainError on zero.
  CyclotomicElement inverse() const;
  CyclotomicElement pow(unsigned long e) const;

  /// Multiplication by zeta^k, cheaper than a general product.
  CyclotomicElement mul_zeta_power(long long k) const;

  /// The automorphism zeta -> zeta^t; t must be coprime to the level.
  CyclotomicElement galois_apply(long long t) const;

  /// Image under zeta_n -> zeta_m^{m/n}; the target level must be a multiple.
  CyclotomicElement lift_to(const FieldPtr& target) const;

 private:
  CyclotomicElement(FieldPtr field, std::vector<Integer> num, Integer den);
  void normalize();
  void require_same_field(const CyclotomicElement& other) const;

  FieldPtr field_;
  std::vector<Integer> num_;
  Integer den_;
};

CyclotomicElement galois_apply(const CyclotomicElement& x, long long t);
CyclotomicElement lift_level(const CyclotomicElement& x, std::uint32_t level);

/// Human-readable form such as "1/2*z^4 + 1/2*z + 1" (z = zeta_level).
std::string to_string(const CyclotomicElement& x);

}  // namespace normcert
