#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "normcert/numtheory.hpp"

namespace normcert {

/// Which finite abelian group a GaloisGroup models.
///  - full:          (Z/level)^x, the Galois group of Q(zeta_level)/Q.
///  - real_quotient: (Z/level)^x / {+-1}, the group of the maximal real subfield.
///  - unipotent:     the cyclic group {(1 0; t 1) : t mod level} acting on
///                   modular functions; written additively in t.
enum class GroupMode { full, real_quotient, unipotent };

std::string to_string(GroupMode mode);
GroupMode parse_group_mode(const std::string& text);

/// Group law shared by a group and its subgroups. Elements are stored as
/// canonical integer representatives in [0, level).
struct GroupLaw {
  std::uint32_t level = 1;
  GroupMode mode = GroupMode::full;

  std::uint32_t identity() const;
  /// Canonical representative of t; throws DomainError if t is not a unit
  /// (for the multiplicative modes).
  std::uint32_t canonical(long long t) const;
  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inverse(std::uint32_t a) const;
  std::uint32_t power(std::uint32_t a, std::uint64_t k) const;
  std::uint64_t element_order(std::uint32_t a) const;

  friend bool operator==(const GroupLaw&, const GroupLaw&) = default;
};

class GaloisGroup {
 public:
  /// Throws DomainError for level < 3 in real_quotient mode and level < 1 otherwise.
  static GaloisGroup build(std::uint32_t level, GroupMode mode);

  const GroupLaw& law() const { return law_; }
  std::uint32_t level() const { return law_.level; }
  GroupMode mode() const { return law_.mode; }
  const std::vector<std::uint32_t>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(std::uint32_t t) const;

 private:
  GroupLaw law_;
  std::vector<std::uint32_t> elements_;
};

class Subgroup {
 public:
  /// Validates identity, closure and inverses against the parent's law.
  Subgroup(const GaloisGroup& parent, std::vector<std::uint32_t> elements);

  const GroupLaw& law() const { return law_; }
  std::size_t parent_order() const { return parent_order_; }
  const std::vector<std::uint32_t>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(std::uint32_t t) const;
  /// Position of t in elements(); throws if absent.
  std::size_t index_of(std::uint32_t t) const;
  /// Least common multiple of the element orders.
  std::uint64_t exponent() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.law_ == b.law_ && a.elements_ == b.elements_;
  }

 private:
  GroupLaw law_;
  std::size_t parent_order_ = 0;
  std::vector<std::uint32_t> elements_;
};

Subgroup whole_group(const GaloisGroup& g);
Subgroup generated_subgroup(const GaloisGroup& g, const std::vector<std::uint32_t>& generators);

inline constexpr std::size_t kDefaultSubgroupBound = 512;

/// Every subgroup of g, each once, ordered by (order, elements). Cyclic
/// subgroups are generated first and then joined pairwise to a fixpoint.
std::vector<Subgroup> all_subgroups(const GaloisGroup& g,
                                    std::size_t bound = kDefaultSubgroupBound);

/// A character of a subgroup, stored as exponents: gamma maps to
/// zeta_modulus^{exponents[i]} for gamma = subgroup.elements()[i].
struct Character {
  std::uint64_t modulus = 1;
  std::vector<std::uint64_t> exponents;

  bool is_trivial() const;
};

/// The full dual group of h: exactly |h| distinct characters, trivial first.
std::vector<Character> characters(const Subgroup& h, std::size_t bound = kDefaultSubgroupBound);

}  // namespace normcert
