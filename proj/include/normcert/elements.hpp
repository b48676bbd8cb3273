#pragma once

#include <cstdint>

#include "normcert/cyclotomic.hpp"

namespace normcert {

/// Levels whose maximal real cyclotomic subfield is Q itself.
bool is_degenerate_real_level(std::uint32_t level);

/// (zeta + zeta^-1)/2 + 1 = cos(2 pi / level) + 1 at the given level.
/// Throws DomainError for level in {1, 2, 3, 4, 6}.
CyclotomicElement cos_plus_one_element(std::uint32_t level);

/// -(zeta^h + zeta^-h)/2 with h = (level - 1)/2, which is cos(pi / level)
/// under the principal embedding. Requires an odd level >= 5.
CyclotomicElement cos_half_element(std::uint32_t level);

/// (zeta + zeta^-1)/2 = cos(2 pi / level).
CyclotomicElement cos_element(std::uint32_t level);

/// zeta + zeta^-1 = 2 cos(2 pi / level).
CyclotomicElement two_cos_element(std::uint32_t level);

/// A square root of -t inside Q(zeta_t): 2 zeta_4 for t = 4, the quadratic
/// Gauss sum for a prime t = 3 mod 4. Only square = -t is guaranteed.
CyclotomicElement sqrt_minus_t(std::uint32_t t);

/// True when t = 4 or t is a prime congruent to 3 mod 4.
bool is_admissible_quadratic_t(std::uint32_t t);

}  // namespace normcert
