#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "normcert/normality.hpp"
#include "normcert/qseries.hpp"
#include "normcert/rational.hpp"

namespace normcert {

/// Second Bernoulli polynomial X^2 - X + 1/6.
Rational bernoulli2(const Rational& x);

/// (r1, r2) in (1/N)Z^2 \ Z^2.
struct SiegelIndex {
  Rational r1;
  Rational r2;
  std::uint32_t level = 2;

  friend bool operator==(const SiegelIndex&, const SiegelIndex&) = default;
};

/// Validates the index; throws DomainError if (r1, r2) is not in
/// (1/N)Z^2 or lies in Z^2.
SiegelIndex make_siegel_index(const Rational& r1, const Rational& r2, std::uint32_t level);

/// (<r1>, <r2>): reduction modulo Z^2 only.
SiegelIndex reduce_mod_lattice(const SiegelIndex& idx);

/// Representative of +-(r1, r2) mod Z^2: both reductions are formed and the
/// lexicographically smaller one is returned.
SiegelIndex canonical_index(const SiegelIndex& idx);

struct IntegerMatrix2x2 {
  long long a = 1, b = 0, c = 0, d = 1;

  long long determinant() const { return a * d - b * c; }
  friend IntegerMatrix2x2 operator*(const IntegerMatrix2x2& x, const IntegerMatrix2x2& y);
  friend bool operator==(const IntegerMatrix2x2&, const IntegerMatrix2x2&) = default;
};

/// Throws DomainError unless ad - bc = 1.
IntegerMatrix2x2 make_sl2(long long a, long long b, long long c, long long d);

/// Row action (r1, r2) * alpha = (r1 a + r2 c, r1 b + r2 d), canonically reduced.
SiegelIndex transform_index(const SiegelIndex& idx, const IntegerMatrix2x2& alpha);

/// Coefficient field Q(zeta_{2N^2}) used for Siegel expansions at level N.
FieldPtr siegel_coefficient_field(std::uint32_t level);

/// (1/2) B2(<r1>), the q-order of g_(r1, r2).
Rational siegel_order(const SiegelIndex& idx);

/// Product expansion of g_(r1, r2) to relative precision `precision` past
/// its leading exponent. Requires 0 <= r1 < 1.
QSeries siegel_expansion(const SiegelIndex& idx, const Rational& precision);

/// q^{1-N} prod (1-q^n)^24 / (1-q^{Nn})^24 to relative precision
/// `precision`, with integer coefficients placed in the given field
/// (siegel_coefficient_field(N) by default).
QSeries delta_ratio_expansion(std::uint32_t level, const Rational& precision,
                              FieldPtr field = nullptr);

struct IdentityCheck {
  bool holds = false;
  std::optional<Rational> first_mismatch;
  Rational checked_below;  // exponents strictly below this were compared
};

/// Compares Delta(tau)/Delta(N tau) with N^12 prod_{k=1}^{N-1} g_(0,k/N)^-12.
IdentityCheck verify_delta_identity(std::uint32_t level, const Rational& precision);

/// 6N sum_{k=1}^{N-1} (B2(<kt/N>) - B2(0)).
Rational valuation_exponent_sum(std::uint32_t level, std::uint32_t t);

/// q-order of the conjugate of Delta(tau)/Delta(N tau) under (1 0; t 1),
/// from the Bernoulli sums.
Rational conjugate_order_from_bernoulli(std::uint32_t level, std::uint32_t t);

/// The same order, from actual product expansions of the transformed
/// Siegel functions at the given relative precision.
Rational conjugate_order_from_series(std::uint32_t level, std::uint32_t t,
                                     const Rational& precision = Rational(1));

struct ValuationReport {
  std::uint32_t level = 0;
  std::vector<Rational> exponent_sums;  // index t = 1..N-1 (entry 0 unused)
  bool sums_negative = false;
  Rational order;  // q-order of Delta(tau)/Delta(N tau)
  std::vector<Rational> conjugate_orders_bernoulli;  // index t
  std::vector<Rational> conjugate_orders_series;     // index t
  NormalityCertificate certificate;

  bool passed() const { return sums_negative && certificate.passed(); }
};

/// Nonarchimedean complete-normality check: every nontrivial conjugate in
/// every subgroup of <(1 0; 1 1)> must have strictly larger q-order. The
/// precision applies to the series-based route.
ValuationReport verify_valuation_certificate(std::uint32_t level, const Rational& precision = Rational(1));

}  // namespace normcert
