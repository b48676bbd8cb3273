#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "normcert/cyclotomic.hpp"
#include "normcert/galois.hpp"

namespace normcert {

/// Outcome of both normality tests on one subgroup H = Gal(L/F).
struct SubgroupVerdict {
  std::vector<std::uint32_t> elements;
  bool character_sum_test = false;
  bool determinant_test = false;
  /// Indices (into characters(H)) of vanishing character sums.
  std::vector<std::size_t> vanishing_characters;
  std::vector<std::string> notes;

  bool passed() const { return character_sum_test && determinant_test; }
};

/// What a certificate claims: normality over the whole group only, or
/// normality over every intermediate field.
enum class NormalityClaim { normal, completely_normal };

struct NormalityCertificate {
  std::string kind = "cyclotomic";  // "cyclotomic" | "composite" | "modular"
  std::uint32_t level = 0;
  GroupMode mode = GroupMode::full;
  NormalityClaim claim = NormalityClaim::completely_normal;
  std::optional<CyclotomicElement> element;  // absent for modular certificates
  std::string element_label;
  std::string exponent;  // decimal, or "any positive"
  std::vector<SubgroupVerdict> subgroups;

  bool passed() const;
  /// "completely normal", "normal", "not completely normal" or "not normal".
  std::string verdict() const;
};

/// sum_{gamma in H} chi(gamma^-1) x^gamma, computed at level lcm(level, exponent(H)).
CyclotomicElement character_sum(const CyclotomicElement& x, const Subgroup& h, const Character& chi);

struct NormalityEvidence {
  bool normal = false;
  std::vector<std::size_t> vanishing_characters;
};

/// Character-sum test: x is normal in L/L^H iff no character sum vanishes.
NormalityEvidence is_normal(const CyclotomicElement& x, const Subgroup& h);

/// det[x^{gamma delta}]_{gamma, delta in H}, by fraction-free elimination.
CyclotomicElement group_determinant(const CyclotomicElement& x, const Subgroup& h);

/// Group-determinant test, independent of the character sums.
bool is_normal_determinant(const CyclotomicElement& x, const Subgroup& h);

/// Both tests on every subgroup of g. Throws InternalError if they disagree.
NormalityCertificate is_completely_normal(const CyclotomicElement& x, const GaloisGroup& g,
                                          std::size_t bound = kDefaultSubgroupBound);

/// Data behind the composite-element check.
struct CompositeReport {
  std::uint32_t level = 0;
  std::uint64_t degree_first = 0;
  std::uint64_t degree_second = 0;
  std::uint64_t degree_compositum = 0;
  bool first_normal = false;   // x1 normal in Q(x1)/Q
  bool second_normal = false;  // x2 normal in Q(x2)/Q
  NormalityCertificate certificate;  // product over the full group of Q(zeta_level)
  bool normal() const { return certificate.passed(); }
};

/// Lifts x1, x2 to the given level, checks that Q(x1) and Q(x2) are
/// linearly disjoint with compositum Q(zeta_level), and tests x1*x2 for
/// normality over the full group. Throws DomainError on a failed hypothesis.
CompositeReport composite_normal_check(const CyclotomicElement& x1, const CyclotomicElement& x2,
                                       std::uint32_t level);

/// Rank over Q of a list of rational vectors.
std::size_t rational_rank(std::vector<std::vector<Rational>> rows);

/// x is normal in Q(x)/Q: its distinct conjugates over Q are Q-linearly independent.
bool is_normal_over_generated_field(const CyclotomicElement& x);

/// Number of distinct conjugates of x under Gal(Q(zeta_level)/Q).
std::uint64_t conjugate_count(const CyclotomicElement& x);

}  // namespace normcert
