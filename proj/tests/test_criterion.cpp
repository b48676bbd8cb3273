#include <gtest/gtest.h>

#include <cmath>

#include "normcert/criterion.hpp"
#include "normcert/elements.hpp"
#include "normcert/errors.hpp"
#include "normcert/normality.hpp"
#include "normcert/numtheory.hpp"
#include "support.hpp"

using namespace normcert;
using normcert::testing::random_element;
using normcert::testing::uniform;

namespace {

const long double kPi = std::acos(-1.0L);

long double ld(const Rational& r) { return static_cast<long double>(r.get_d()); }

// Max over g != 1 of |x^g / x| in long double.
long double float_max_ratio(const CyclotomicElement& x, const GaloisGroup& g) {
  auto value = [&](long long t) {
    long double s = 0;
    const auto c = x.coords();
    for (std::size_t i = 0; i < c.size(); ++i) s += ld(c[i]) * std::cos(2 * kPi * t * i / x.level());
    return std::fabs(s);
  };
  long double best = 0;
  for (auto t : g.elements())
    if (t != 1) best = std::max(best, value(t) / value(1));
  return best;
}

// Smallest m with r^m <= thr, or 0 when too close to a boundary to trust.
unsigned long float_min_m(long double r, long double thr) {
  const long double q = std::log(thr) / std::log(r);
  const long double m = std::ceil(q);
  if (std::fabs(q - std::round(q)) < 1e-9L) return 0;
  return static_cast<unsigned long>(std::max(1.0L, m));
}

void expect_invariants(const ExponentResult& r) {
  EXPECT_LT(r.ratio_bound, 1);
  EXPECT_LE(pow(r.ratio_bound, r.exponent), r.threshold);
  if (r.exponent > 1) EXPECT_GT(pow(r.ratio_bound, r.exponent - 1), r.threshold);
}

}  // namespace

TEST(CompareAbs, ExactTiesAndStrictOrder) {
  const auto f = CyclotomicField::make(5);
  EXPECT_EQ(compare_abs(CyclotomicElement::zeta_power(f, 1), CyclotomicElement::zeta_power(f, 2)),
            std::strong_ordering::equal);
  const auto x = two_cos_element(5);
  EXPECT_EQ(compare_abs(x, -x), std::strong_ordering::equal);
  EXPECT_EQ(compare_abs(x, galois_apply(x, 2)), std::strong_ordering::less);
  EXPECT_EQ(compare_abs(galois_apply(x, 2), x), std::strong_ordering::greater);
  // |1 + zeta_5| = 2cos(pi/5) > 1 = |zeta_5|
  const auto z = CyclotomicElement::zeta_power(f, 1);
  EXPECT_EQ(compare_abs(z + CyclotomicElement::from_rational(f, 1), z), std::strong_ordering::greater);
}

TEST(CompareAbs, NearlyEqualValuesSeparate) {
  // 1 + 2^-200 vs 1 needs refinement past the starting precision
  const auto f = CyclotomicField::make(7);
  const Rational tiny = Rational(1) / Rational(Integer(1) << 200);
  const auto a = CyclotomicElement::from_rational(f, 1 + tiny) * cos_plus_one_element(7);
  EXPECT_EQ(compare_abs(a, cos_plus_one_element(7)), std::strong_ordering::greater);
}

TEST(RatioBound, Examples) {
  const auto b5 = ratio_upper_bound(cos_plus_one_element(5), GaloisGroup::build(5, GroupMode::real_quotient));
  EXPECT_GT(b5, make_rational(1458, 10000));
  EXPECT_LT(b5, make_rational(1460, 10000));
  const auto b7 = ratio_upper_bound(cos_plus_one_element(7), GaloisGroup::build(7, GroupMode::real_quotient));
  EXPECT_GT(b7, make_rational(4788, 10000));
  EXPECT_LT(b7, make_rational(4790, 10000));
  EXPECT_THROW(ratio_upper_bound(two_cos_element(5), GaloisGroup::build(5, GroupMode::real_quotient)),
               HypothesisError);
}

TEST(RatioBound, CertifiedAboveTrueMaximum) {
  for (std::uint32_t l : {5U, 7U, 8U, 9U, 11U, 13U, 16U, 20U, 21U}) {
    const auto g = GaloisGroup::build(l, GroupMode::real_quotient);
    const auto x = cos_plus_one_element(l);
    const long double truth = float_max_ratio(x, g);
    const auto b = ld(ratio_upper_bound(x, g));
    EXPECT_GE(b, truth - 1e-15L) << l;
    EXPECT_LT(b, truth + 1e-9L) << l;
  }
}

TEST(MinExponent, Examples) {
  const auto r5 = min_exponent(cos_plus_one_element(5), GaloisGroup::build(5, GroupMode::real_quotient));
  EXPECT_EQ(r5.exponent, 1U);
  EXPECT_EQ(r5.threshold, make_rational(1, 2));
  const auto r7 = min_exponent(cos_plus_one_element(7), GaloisGroup::build(7, GroupMode::real_quotient));
  EXPECT_EQ(r7.exponent, 2U);
  EXPECT_EQ(r7.threshold, make_rational(1, 3));
  expect_invariants(r5);
  expect_invariants(r7);
  // n = 1: any admissible element needs m = 1
  const auto r12 = min_exponent(CyclotomicElement::from_rational(CyclotomicField::make(3), 2),
                                GaloisGroup::build(3, GroupMode::real_quotient));
  EXPECT_EQ(r12.exponent, 1U);
  EXPECT_EQ(r12.threshold, 1);
}

TEST(ClosedForm, CosPlusOneExamples) {
  EXPECT_EQ(cos_plus_one_exponent(5).exponent, 1U);
  EXPECT_EQ(cos_plus_one_exponent(7).exponent, 2U);
  EXPECT_EQ(cos_plus_one_exponent(5).construction, Construction::cos_plus_one);
  EXPECT_THROW(cos_plus_one_exponent(6), DomainError);
  EXPECT_THROW(cos_plus_one_exponent(4), DomainError);
}

TEST(ClosedForm, CosHalfExamples) {
  EXPECT_EQ(cos_half_exponent(5).exponent, 1U);
  EXPECT_THROW(cos_half_exponent(6), DomainError);
  EXPECT_THROW(cos_half_exponent(3), DomainError);
}

TEST(ClosedForm, CosPlusOneMatchesFloatingOracle) {
  for (std::uint32_t l = 5; l <= 60; ++l) {
    if (is_degenerate_real_level(l)) continue;
    const auto r = cos_plus_one_exponent(l);
    expect_invariants(r);
    EXPECT_EQ(r.threshold, make_rational(2, static_cast<long>(phi(l))));
    const long double closed = (std::cos(4 * kPi / l) + 1) / (std::cos(2 * kPi / l) + 1);
    const auto m = float_min_m(closed, 2.0L / phi(l));
    if (m != 0) EXPECT_EQ(r.exponent, m) << l;
    // the closed form dominates every true conjugate ratio
    EXPECT_LE(float_max_ratio(cos_plus_one_element(l), GaloisGroup::build(l, GroupMode::real_quotient)),
              closed + 1e-15L);
  }
}

TEST(ClosedForm, CosHalfMatchesFloatingOracle) {
  for (std::uint32_t l = 5; l <= 41; l += 2) {
    const auto r = cos_half_exponent(l);
    expect_invariants(r);
    const long double closed = std::cos(2 * kPi / l) / std::cos(kPi / l);
    const auto m = float_min_m(closed, 2.0L / phi(l));
    if (m != 0) EXPECT_EQ(r.exponent, m) << l;
  }
}

TEST(ClosedForm, PrecisionIndependent) {
  for (std::uint32_t l : {5U, 7U, 9U, 11U, 13U, 15U, 16U, 20U, 25U}) {
    for (unsigned bits : {32U, 256U}) {
      PrecisionPolicy p;
      p.start_bits = bits;
      EXPECT_EQ(cos_plus_one_exponent(l, p).exponent, cos_plus_one_exponent(l).exponent) << l << " " << bits;
      if (l % 2 == 1) EXPECT_EQ(cos_half_exponent(l, p).exponent, cos_half_exponent(l).exponent) << l << " " << bits;
      const auto g = GaloisGroup::build(l, GroupMode::real_quotient);
      EXPECT_EQ(min_exponent(cos_plus_one_element(l), g, p).exponent,
                min_exponent(cos_plus_one_element(l), g).exponent);
    }
  }
}

TEST(Soundness, ClosedFormPowersAreCompletelyNormal) {
  for (std::uint32_t l : {5U, 7U, 8U, 9U, 10U, 11U, 12U, 13U, 14U}) {
    const auto m = cos_plus_one_exponent(l).exponent;
    EXPECT_TRUE(is_completely_normal(cos_plus_one_element(l).pow(m), GaloisGroup::build(l, GroupMode::real_quotient))
                    .passed())
        << l;
  }
  for (std::uint32_t l : {5U, 7U, 9U, 11U}) {
    const auto m = cos_half_exponent(l).exponent;
    EXPECT_TRUE(is_completely_normal(cos_half_element(l).pow(m), GaloisGroup::build(l, GroupMode::real_quotient))
                    .passed())
        << l;
  }
}

TEST(Soundness, RandomDominantElements) {
  int checked = 0;
  for (std::uint32_t l : {5U, 7U, 8U, 9U, 12U}) {
    const auto g = GaloisGroup::build(l, GroupMode::real_quotient);
    const auto f = CyclotomicField::make(l);
    for (int k = 0; k < 12; ++k) {
      auto y = random_element(f);
      y = y + galois_apply(y, static_cast<long long>(l) - 1);
      if (y.is_zero() || find_abs_tie(y, g)) continue;
      // move the largest conjugate to the identity slot
      auto best = y;
      for (auto t : g.elements())
        if (compare_abs(galois_apply(y, t), best) == std::strong_ordering::greater) best = galois_apply(y, t);
      const auto r = min_exponent(best, g);
      expect_invariants(r);
      EXPECT_TRUE(is_completely_normal(best.pow(r.exponent), g).passed()) << to_string(best);
      ++checked;
    }
  }
  EXPECT_GT(checked, 20);
}

TEST(MinimalPolynomial, Examples) {
  // 2cos(2pi/7): X^3 + X^2 - 2X - 1
  EXPECT_EQ(minimal_polynomial(two_cos_element(7)),
            (std::vector<Rational>{-1, -2, 1, 1}));
  EXPECT_EQ(minimal_polynomial(sqrt_minus_t(3)), (std::vector<Rational>{3, 0, 1}));
  EXPECT_EQ(minimal_polynomial(CyclotomicElement::from_rational(CyclotomicField::make(9), make_rational(2, 3))),
            (std::vector<Rational>{make_rational(-2, 3), 1}));
}

TEST(AxPlusB, SevenFiveTwo) {
  const auto g = GaloisGroup::build(7, GroupMode::real_quotient);
  const auto x = two_cos_element(7);
  const auto r = ax_plus_b_exponent(x, 5, 2, g);
  EXPECT_EQ(r.construction, Construction::ax_plus_b);
  EXPECT_GE(r.exponent, 1U);
  EXPECT_EQ(r.per_subgroup.size(), 1U);  // the trivial subgroup imposes nothing
  unsigned long mx = 0;
  for (const auto& s : r.per_subgroup) {
    EXPECT_LE(pow(s.ratio_bound, s.exponent), s.threshold);
    mx = std::max(mx, s.exponent);
  }
  EXPECT_EQ(r.exponent, mx);
  const auto y = x * Rational(5) + CyclotomicElement::from_rational(x.field(), 2);
  EXPECT_FALSE(find_abs_tie(y, g).has_value());
  EXPECT_TRUE(is_completely_normal(y.pow(r.exponent), g).passed());
}

TEST(AxPlusB, Preconditions) {
  const auto g7 = GaloisGroup::build(7, GroupMode::real_quotient);
  EXPECT_THROW(ax_plus_b_exponent(two_cos_element(7), 1, 1, g7), DomainError);
  EXPECT_THROW(ax_plus_b_exponent(two_cos_element(7), 4, 2, g7), DomainError);
  EXPECT_THROW(ax_plus_b_exponent(cos_element(7), 5, 2, g7), DomainError);  // not integral
  EXPECT_THROW(ax_plus_b_exponent(CyclotomicElement::from_rational(CyclotomicField::make(7), 3), 5, 2, g7),
               DomainError);  // does not generate
  EXPECT_THROW(ax_plus_b_exponent(CyclotomicElement::zeta_power(CyclotomicField::make(7), 1), 5, 2,
                              GaloisGroup::build(7, GroupMode::full)),
               DomainError);  // not real
}

TEST(AxPlusB, NoTiesForAdmissibleInputs) {
  for (int k = 0; k < 40; ++k) {
    const std::uint32_t l = std::vector<std::uint32_t>{5, 7, 9, 11, 13, 16}[static_cast<std::size_t>(uniform(0, 5))];
    const long b = uniform(1, 6) * (uniform(0, 1) ? 1 : -1);
    const long a = (2 * std::abs(b) + uniform(1, 9)) * (uniform(0, 1) ? 1 : -1);
    const auto g = GaloisGroup::build(l, GroupMode::real_quotient);
    const auto x = two_cos_element(l);
    const auto y = x * Rational(a) + CyclotomicElement::from_rational(x.field(), Rational(b));
    EXPECT_FALSE(find_abs_tie(y, g).has_value()) << l << " " << a << " " << b;
    EXPECT_NO_THROW(ax_plus_b_exponent(x, a, b, g));
  }
}

TEST(AxPlusB, TieDetection) {
  // x = 2cos(2pi/8) = sqrt(2): conjugates +-sqrt(2) tie in absolute value
  const auto g = GaloisGroup::build(8, GroupMode::real_quotient);
  EXPECT_TRUE(find_abs_tie(two_cos_element(8), g).has_value());
}
