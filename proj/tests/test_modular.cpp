#include <gtest/gtest.h>

#include "normcert/errors.hpp"
#include "normcert/galois.hpp"
#include "normcert/modular.hpp"
#include "support.hpp"

using namespace normcert;
using normcert::testing::uniform;

namespace {

using IntSeries = std::vector<Integer>;

IntSeries mul(const IntSeries& a, const IntSeries& b, std::size_t len) {
  IntSeries out(len, 0);
  for (std::size_t i = 0; i < std::min(len, a.size()); ++i)
    for (std::size_t j = 0; i + j < len && j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

IntSeries inv(const IntSeries& a, std::size_t len) {
  IntSeries out(len, 0);
  out[0] = 1;  // a[0] = 1 here
  for (std::size_t k = 1; k < len; ++k) {
    Integer acc = 0;
    for (std::size_t j = 1; j <= k && j < a.size(); ++j) acc += a[j] * out[k - j];
    out[k] = -acc;
  }
  return out;
}

// prod (1 - q^{step n})^24 from Jacobi's identity for the cube.
IntSeries eta24_jacobi(std::size_t step, std::size_t len) {
  IntSeries cube(len, 0);
  for (long k = 0;; ++k) {
    const std::size_t e = step * static_cast<std::size_t>(k * (k + 1) / 2);
    if (e >= len) break;
    cube[e] = (k % 2 == 0 ? 1 : -1) * (2 * k + 1);
  }
  IntSeries out = cube;
  for (int i = 1; i < 8; ++i) out = mul(out, cube, len);
  return out;
}

// coefficients of prod_{n>=1} (1 + q^n)^2
IntSeries plus_product_squared(std::size_t len) {
  IntSeries p(len, 0);
  p[0] = 1;
  for (std::size_t n = 1; n < len; ++n)
    for (int rep = 0; rep < 2; ++rep)
      for (std::size_t i = len; i-- > n;) p[i] += p[i - n];
  return p;
}

IntegerMatrix2x2 random_sl2() {
  const IntegerMatrix2x2 t{1, 1, 0, 1}, s{0, -1, 1, 0}, ti{1, -1, 0, 1};
  IntegerMatrix2x2 m{};
  for (int i = 0; i < 6; ++i) {
    const long k = uniform(0, 2);
    m = m * (k == 0 ? t : k == 1 ? s : ti);
  }
  return m;
}

SiegelIndex random_index(std::uint32_t n) {
  while (true) {
    const long a = uniform(-2L * n, 2L * n), b = uniform(-2L * n, 2L * n);
    if (a % static_cast<long>(n) == 0 && b % static_cast<long>(n) == 0) continue;
    return make_siegel_index(make_rational(a, n), make_rational(b, n), n);
  }
}

Rational b2(const Rational& x) { return x * x - x + make_rational(1, 6); }

}  // namespace

TEST(Bernoulli, Values) {
  EXPECT_EQ(bernoulli2(Rational(0)), make_rational(1, 6));
  EXPECT_EQ(bernoulli2(make_rational(1, 2)), make_rational(-1, 12));
  for (int i = 0; i < 100; ++i) {
    const auto x = normcert::testing::random_rational(50, 31);
    EXPECT_EQ(bernoulli2(x), bernoulli2(1 - x));
  }
}

TEST(SiegelIndex, Validation) {
  EXPECT_THROW(make_siegel_index(Rational(1), Rational(0), 3), DomainError);
  EXPECT_THROW(make_siegel_index(make_rational(1, 2), Rational(0), 3), DomainError);
  EXPECT_THROW(make_siegel_index(make_rational(1, 3), Rational(0), 1), DomainError);
  EXPECT_NO_THROW(make_siegel_index(make_rational(2, 3), make_rational(-4, 3), 3));
}

TEST(SiegelIndex, CanonicalExamples) {
  const auto a = canonical_index(make_siegel_index(Rational(0), make_rational(3, 2), 2));
  EXPECT_EQ(a.r1, 0);
  EXPECT_EQ(a.r2, make_rational(1, 2));
  const auto b = canonical_index(make_siegel_index(make_rational(-1, 5), Rational(0), 5));
  EXPECT_EQ(b.r1, make_rational(1, 5));
  EXPECT_EQ(b.r2, 0);
  for (std::uint32_t n = 2; n <= 9; ++n)
    for (int i = 0; i < 30; ++i) {
      const auto c = canonical_index(random_index(n));
      EXPECT_EQ(canonical_index(c), c);
      EXPECT_GE(c.r1, 0);
      EXPECT_LT(c.r1, 1);
    }
}

TEST(Transform, IdentityAndExample) {
  const IntegerMatrix2x2 id{};
  for (int i = 0; i < 30; ++i) {
    const auto idx = random_index(6);
    EXPECT_EQ(transform_index(idx, id), canonical_index(idx));
  }
  for (std::uint32_t n = 2; n <= 7; ++n)
    for (std::uint32_t k = 1; k < n; ++k)
      for (std::uint32_t t = 0; t < n; ++t) {
        const auto got = transform_index(make_siegel_index(Rational(0), make_rational(k, n), n),
                                         make_sl2(1, 0, t, 1));
        const auto want = canonical_index(SiegelIndex{make_rational(k * t, n), make_rational(k, n), n});
        EXPECT_EQ(got, want);
      }
  EXPECT_THROW(make_sl2(2, 0, 0, 1), DomainError);
}

TEST(Transform, RightActionComposition) {
  for (std::uint32_t n : {3U, 5U, 8U}) {
    for (int i = 0; i < 50; ++i) {
      const auto idx = random_index(n);
      const auto alpha = random_sl2(), beta = random_sl2();
      EXPECT_EQ((alpha * beta).determinant(), 1);
      EXPECT_EQ(transform_index(transform_index(idx, alpha), beta), transform_index(idx, alpha * beta));
    }
  }
}

TEST(Siegel, HalfExpansion) {
  const auto s = siegel_expansion(make_siegel_index(Rational(0), make_rational(1, 2), 2), Rational(3));
  const auto f = siegel_coefficient_field(2);
  EXPECT_EQ(f->level(), 8U);
  EXPECT_EQ(s.q_order(), make_rational(1, 12));
  const auto two_i = CyclotomicElement::zeta_power(f, 2) * Rational(2);
  const auto p = plus_product_squared(3);
  EXPECT_EQ(p[1], 2);
  EXPECT_EQ(p[2], 3);
  for (int k = 0; k < 3; ++k)
    EXPECT_EQ(s.coefficient(make_rational(1, 12) + Rational(k)), two_i * Rational(p[static_cast<std::size_t>(k)]));
  EXPECT_EQ(s.terms().size(), 3U);
  EXPECT_EQ(s.truncation(), make_rational(1, 12) + 3);
}

TEST(Siegel, LeadingExponentIsHalfBernoulli) {
  for (std::uint32_t n = 2; n <= 6; ++n)
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b) {
        if (a == 0 && b == 0) continue;
        const auto idx = canonical_index(make_siegel_index(make_rational(a, n), make_rational(b, n), n));
        const auto s = siegel_expansion(idx, Rational(1));
        EXPECT_EQ(s.q_order(), b2(idx.r1) / 2) << n << " " << a << " " << b;
        EXPECT_EQ(siegel_order(idx), b2(idx.r1) / 2);
      }
  const auto h = siegel_expansion(make_siegel_index(make_rational(1, 2), Rational(0), 2), Rational(1));
  EXPECT_EQ(h.q_order(), make_rational(-1, 24));
}

TEST(Siegel, TwelveNthPowerIsWellDefined) {
  for (std::uint32_t n : {2U, 3U, 4U}) {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b) {
        if (a == 0 && b == 0) continue;
        const Rational r1 = make_rational(a, n), r2 = make_rational(b, n);
        const Rational prec(2);
        const auto base = siegel_expansion(make_siegel_index(r1, r2, n), prec).pow(12 * n);
        // shift r2 by an integer, and negate mod Z^2
        const auto shifted = siegel_expansion(make_siegel_index(r1, r2 + 1, n), prec).pow(12 * n);
        const auto neg = siegel_expansion(
            make_siegel_index(a == 0 ? Rational(0) : 1 - r1, 1 - r2, n), prec).pow(12 * n);
        EXPECT_FALSE(base.first_difference(shifted).has_value()) << n << " " << a << " " << b;
        EXPECT_FALSE(base.first_difference(neg).has_value()) << n << " " << a << " " << b;
      }
  }
}

TEST(DeltaRatio, MatchesJacobiOracle) {
  for (std::uint32_t n = 2; n <= 8; ++n) {
    const std::size_t len = 40;
    const auto ratio = mul(eta24_jacobi(1, len), inv(eta24_jacobi(n, len), len), len);
    const auto s = delta_ratio_expansion(n, Rational(40));
    EXPECT_EQ(s.q_order(), 1 - static_cast<long>(n));
    for (std::size_t k = 0; k < len; ++k) {
      const auto c = s.coefficient(Rational(1 - static_cast<long>(n) + static_cast<long>(k)));
      EXPECT_TRUE(c.is_rational());
      EXPECT_EQ(c.coord(0), Rational(ratio[k])) << n << " " << k;
    }
  }
  const auto s2 = delta_ratio_expansion(2, Rational(3));
  EXPECT_EQ(s2.coefficient(Rational(-1)).coord(0), 1);
  EXPECT_EQ(s2.coefficient(Rational(0)).coord(0), -24);
  EXPECT_EQ(s2.coefficient(Rational(1)).coord(0), 276);
}

TEST(DeltaIdentity, HoldsThroughLevelEight) {
  for (std::uint32_t n = 2; n <= 8; ++n) {
    const auto r = verify_delta_identity(n, Rational(40));
    EXPECT_TRUE(r.holds) << n;
    EXPECT_EQ(r.checked_below, Rational(41 - static_cast<long>(n)));
  }
  EXPECT_TRUE(verify_delta_identity(3, Rational(30)).holds);
  EXPECT_THROW(verify_delta_identity(3, Rational(0)), DomainError);
}

TEST(DeltaIdentity, ProductOfSinesGivesN) {
  // leading coefficients: prod_k (1 - zeta_N^k) = N
  for (std::uint32_t n = 2; n <= 9; ++n) {
    const auto f = CyclotomicField::make(n);
    auto p = CyclotomicElement::from_rational(f, 1);
    for (std::uint32_t k = 1; k < n; ++k)
      p *= CyclotomicElement::from_rational(f, 1) - CyclotomicElement::zeta_power(f, k);
    EXPECT_EQ(p, CyclotomicElement::from_rational(f, Rational(n)));
  }
}

TEST(Valuation, ExponentSums) {
  EXPECT_EQ(valuation_exponent_sum(2, 1), -3);
  for (std::uint32_t n = 2; n <= 60; ++n)
    for (std::uint32_t t = 1; t < n; ++t) {
      Rational s = 0;
      for (std::uint32_t k = 1; k < n; ++k) s += b2(frac(make_rational(k * t, n))) - b2(Rational(0));
      EXPECT_EQ(valuation_exponent_sum(n, t), Rational(6 * n) * s);
      EXPECT_LT(valuation_exponent_sum(n, t), 0) << n << " " << t;
      EXPECT_EQ(valuation_exponent_sum(n, t), valuation_exponent_sum(n, n - t));
    }
  EXPECT_EQ(valuation_exponent_sum(3, 1), -8);
}

TEST(Valuation, ConjugateOrdersAgree) {
  for (std::uint32_t n = 2; n <= 8; ++n) {
    EXPECT_EQ(conjugate_order_from_bernoulli(n, 0), 1 - static_cast<long>(n));
    for (std::uint32_t t = 0; t < n; ++t)
      EXPECT_EQ(conjugate_order_from_bernoulli(n, t), conjugate_order_from_series(n, t)) << n << " " << t;
  }
  EXPECT_EQ(conjugate_order_from_bernoulli(2, 1), make_rational(1, 2));
}

TEST(Valuation, Certificates) {
  const auto r2 = verify_valuation_certificate(2);
  EXPECT_TRUE(r2.passed());
  EXPECT_EQ(r2.order, -1);
  EXPECT_EQ(r2.conjugate_orders_series[1], make_rational(1, 2));
  const auto r6 = verify_valuation_certificate(6);
  EXPECT_TRUE(r6.passed());
  EXPECT_EQ(r6.certificate.subgroups.size(), 4U);
  EXPECT_EQ(r6.certificate.mode, GroupMode::unipotent);
  EXPECT_EQ(r6.certificate.verdict(), "completely normal");
  EXPECT_THROW(verify_valuation_certificate(1), DomainError);
}
