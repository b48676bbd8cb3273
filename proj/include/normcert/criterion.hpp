#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "normcert/cyclotomic.hpp"
#include "normcert/galois.hpp"
#include "normcert/interval.hpp"

namespace normcert {

/// Interval evaluation starts at start_bits and doubles up to max_bits.
struct PrecisionPolicy {
  unsigned start_bits = 64;
  unsigned max_bits = 1U << 15;
};

/// Exact test that x is fixed by complex conjugation (zeta -> zeta^-1).
bool is_real(const CyclotomicElement& x);

/// Certified enclosure of a real element under the principal embedding.
RealInterval real_enclosure(const CyclotomicElement& x, unsigned precision);

/// Ordering of |a| and |b|. Equality is decided exactly (a = +-b, or equal
/// norms a*conj(a) for non-real input); otherwise enclosures are refined
/// until they separate.
std::strong_ordering compare_abs(const CyclotomicElement& a, const CyclotomicElement& b,
                                 const PrecisionPolicy& policy = {});

enum class Construction { cos_plus_one, cos_half, ax_plus_b, custom };
std::string to_string(Construction c);

/// Exponent data for one subgroup in the dominant-conjugate search.
struct SubgroupExponent {
  std::vector<std::uint32_t> elements;
  std::uint32_t dominant = 1;  // conjugate of largest absolute value
  unsigned long exponent = 1;
  Rational ratio_bound;  // upper bound on |y^g / y^dominant| over g != dominant
  Rational threshold;    // 1 / |H|
};

struct ExponentResult {
  std::uint32_t level = 0;
  Construction construction = Construction::custom;
  unsigned long exponent = 1;
  /// Rational B with max_{g != Id} |x^g / x| <= B and B^exponent <= threshold.
  Rational ratio_bound;
  Rational threshold;
  /// Set when B^(m) = threshold holds exactly for the true ratio, so no
  /// rational enclosure can witness B^m <= threshold; m is then certified
  /// by the exact equality test instead.
  bool boundary_exact = false;
  /// ax+b pipeline only: the dominant conjugate over the whole group
  /// and the per-subgroup exponents whose maximum is `exponent`.
  std::optional<std::uint32_t> dominant;
  std::vector<SubgroupExponent> per_subgroup;
};

/// Rational B < 1 bounding |x^g / x| for every g != Id in g_group.
/// Throws HypothesisError if some ratio is certified >= 1.
Rational ratio_upper_bound(const CyclotomicElement& x, const GaloisGroup& group,
                           const PrecisionPolicy& policy = {});

/// Minimal m with |x^g / x|^m <= 1/|G| for all g != Id.
ExponentResult min_exponent(const CyclotomicElement& x, const GaloisGroup& group,
                            const PrecisionPolicy& policy = {});

/// Minimal m for the closed-form ratio (cos(4pi/l)+1)/(cos(2pi/l)+1) against
/// 2/phi(l); also checks that the closed form dominates every true ratio.
ExponentResult cos_plus_one_exponent(std::uint32_t level, const PrecisionPolicy& policy = {});

/// Minimal m for cos(2pi/l)/cos(pi/l) against 2/phi(l), odd l >= 5.
ExponentResult cos_half_exponent(std::uint32_t level, const PrecisionPolicy& policy = {});

/// Minimal polynomial of x over Q, monic, lowest degree first.
std::vector<Rational> minimal_polynomial(const CyclotomicElement& x);

/// Exponent for a*x + b. Checks that x is an algebraic integer generating
/// the field of `group`, with real conjugates, and that 2 < |a/b|.
/// The exponent is the maximum over subgroups H (|H| >= 2) of the minimal
/// m_H for the conjugate of largest absolute value in H.
ExponentResult ax_plus_b_exponent(const CyclotomicElement& x, long a, long b, const GaloisGroup& group,
                              const PrecisionPolicy& policy = {});

/// Exact check that no two conjugates of y under the group share an absolute
/// value (y^g != +-y^h for g != h). Returns the offending pair if any.
std::optional<std::pair<std::uint32_t, std::uint32_t>> find_abs_tie(const CyclotomicElement& y,
                                                                    const GaloisGroup& group);

}  // namespace normcert
