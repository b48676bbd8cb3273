#pragma once

#include <random>

#include "normcert/cyclotomic.hpp"

namespace normcert::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20260419);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational random_rational(long span = 9, long max_den = 5) {
  return make_rational(uniform(-span, span), uniform(1, max_den));
}

// Random element with small rational coordinates; `density` in [0,1] is the
// chance a coordinate is nonzero.
inline CyclotomicElement random_element(const FieldPtr& field, double density = 0.7) {
  std::bernoulli_distribution keep(density);
  std::vector<Rational> c(field->degree(), Rational(0));
  for (auto& v : c)
    if (keep(rng())) v = random_rational();
  return CyclotomicElement::from_coords(field, c);
}

inline CyclotomicElement random_nonzero(const FieldPtr& field) {
  while (true) {
    auto x = random_element(field);
    if (!x.is_zero()) return x;
  }
}

}  // namespace normcert::testing
