#pragma once

#include <cstdint>

#include "normcert/cyclotomic.hpp"
#include "normcert/rational.hpp"

namespace normcert {

/// Closed interval [lo, hi] with exact rational endpoints.
struct RealInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }
  /// Enclosure of |v| for v in the interval.
  RealInterval abs() const;
};

/// Rigorous enclosure of a complex value. Endpoints are dyadic rationals on
/// the grid 2^-precision, rounded outward.
struct ComplexInterval {
  RealInterval re;
  RealInterval im;
  unsigned precision = 0;

  Rational width() const { return re.width() > im.width() ? re.width() : im.width(); }
};

/// Enclosures of cos(2 pi k / n) and sin(2 pi k / n). Exact for k = 0.
std::pair<RealInterval, RealInterval> unit_root_enclosure(long long k, std::uint64_t n,
                                                          unsigned precision);

/// Enclosure of the image of x under zeta -> exp(2 pi i s / level).
/// Requires gcd(s, level) = 1.
ComplexInterval numeric_eval(const CyclotomicElement& x, unsigned precision, long long embedding = 1);

/// Rounds an interval outward to the dyadic grid 2^-bits.
RealInterval round_outward(const RealInterval& v, unsigned bits);

}  // namespace normcert
