#include "normcert/elements.hpp"

#include "normcert/errors.hpp"
#include "normcert/numtheory.hpp"

namespace normcert {

bool is_degenerate_real_level(std::uint32_t level) {
  return level == 1 || level == 2 || level == 3 || level == 4 || level == 6;
}

CyclotomicElement two_cos_element(std::uint32_t level) {
  const auto field = CyclotomicField::make(level);
  return CyclotomicElement::zeta_power(field, 1) + CyclotomicElement::zeta_power(field, -1);
}

CyclotomicElement cos_element(std::uint32_t level) {
  return two_cos_element(level) * make_rational(1, 2);
}

CyclotomicElement cos_plus_one_element(std::uint32_t level) {
  if (is_degenerate_real_level(level))
    throw DomainError("cos(2pi/l)+1 needs l not in {1,2,3,4,6}; got l=" + std::to_string(level));
  auto x = cos_element(level);
  return x + CyclotomicElement::from_rational(x.field(), 1);
}

CyclotomicElement cos_half_element(std::uint32_t level) {
  if (level % 2 == 0 || level < 5)
    throw DomainError("cos(pi/l) needs an odd l >= 5; got l=" + std::to_string(level));
  const auto field = CyclotomicField::make(level);
  const long long h = (level - 1) / 2;
  auto x = CyclotomicElement::zeta_power(field, h) + CyclotomicElement::zeta_power(field, -h);
  return x * make_rational(-1, 2);
}

bool is_admissible_quadratic_t(std::uint32_t t) {
  return t == 4 || (t % 4 == 3 && is_prime(t));
}

CyclotomicElement sqrt_minus_t(std::uint32_t t) {
  if (!is_admissible_quadratic_t(t))
    throw DomainError("sqrt(-t) needs t = 4 or a prime t = 3 mod 4; got t=" + std::to_string(t));
  const auto field = CyclotomicField::make(t);
  if (t == 4) return CyclotomicElement::zeta_power(field, 1) * Rational(2);
  // Quadratic residues mod t.
  std::vector<bool> residue(t, false);
  for (std::uint64_t a = 1; a < t; ++a) residue[(a * a) % t] = true;
  CyclotomicElement sum(field);
  for (std::uint32_t a = 1; a < t; ++a) {
    const auto term = CyclotomicElement::zeta_power(field, a);
    if (residue[a])
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

}  // namespace normcert
