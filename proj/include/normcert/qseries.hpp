#pragma once

#include <map>
#include <optional>
#include <vector>

#include "normcert/cyclotomic.hpp"
#include "normcert/rational.hpp"

namespace normcert {

/// Truncated formal series sum c_e q^e with rational exponents e and
/// coefficients in one cyclotomic field. Coefficients at exponents >=
/// truncation() are unknown; only nonzero known terms are stored.
class QSeries {
 public:
  /// The zero series, known below `truncation`.
  QSeries(FieldPtr field, Rational truncation);

  static QSeries constant(const CyclotomicElement& c, Rational truncation);
  static QSeries monomial(const CyclotomicElement& c, const Rational& exponent, Rational truncation);
  /// coeffs[i] sits at exponent start + i/grid; entries at or beyond the
  /// truncation are dropped.
  static QSeries from_dense(FieldPtr field, const Rational& start, const Integer& grid,
                            const std::vector<CyclotomicElement>& coeffs, Rational truncation);

  const FieldPtr& field() const { return field_; }
  const Rational& truncation() const { return truncation_; }
  const std::map<Rational, CyclotomicElement>& terms() const { return terms_; }

  /// No nonzero coefficient is known below the truncation.
  bool is_zero() const { return terms_.empty(); }

  /// Smallest exponent with a nonzero coefficient. Throws DomainError when
  /// the series vanishes up to its truncation (the order is indeterminate).
  Rational q_order() const;
  const CyclotomicElement& leading_coefficient() const;

  /// truncation() - q_order().
  Rational precision() const;

  /// Coefficient at e; throws DomainError if e >= truncation().
  CyclotomicElement coefficient(const Rational& e) const;

  QSeries operator-() const;
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const CyclotomicElement& c);

  /// Multiplicative inverse of a series with a nonzero leading coefficient.
  QSeries inverse() const;
  /// s^e for any integer e; negative powers go through inverse().
  QSeries pow(long e) const;

  /// First exponent below min(truncations) where the two series differ.
  std::optional<Rational> first_difference(const QSeries& other) const;

 private:
  struct Dense {
    Rational start;
    Integer grid;
    std::vector<CyclotomicElement> coeffs;
  };
  Dense to_dense(const Integer& grid) const;
  Integer grid_denominator() const;
  void require_same_field(const QSeries& other) const;

  FieldPtr field_;
  std::map<Rational, CyclotomicElement> terms_;
  Rational truncation_;
};

}  // namespace normcert
