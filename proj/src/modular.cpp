#include "normcert/modular.hpp"

#include "normcert/errors.hpp"
#include "normcert/galois.hpp"

namespace normcert {

namespace {

bool less_lex(const SiegelIndex& x, const SiegelIndex& y) {
  if (x.r1 != y.r1) return x.r1 < y.r1;
  return x.r2 < y.r2;
}

// n * r for an index coordinate known to lie in (1/n)Z.
long long scaled(const Rational& r, std::uint32_t n) {
  const Rational s = r * Rational(static_cast<unsigned long>(n));
  if (s.get_den() != 1) throw DomainError("index coordinate not in (1/N)Z");
  return s.get_num().get_si();
}

void require_level(std::uint32_t level) {
  if (level < 2) throw DomainError("modular level N must be >= 2; got " + std::to_string(level));
}

}  // namespace

Rational bernoulli2(const Rational& x) { return x * x - x + Rational(1, 6); }

SiegelIndex make_siegel_index(const Rational& r1, const Rational& r2, std::uint32_t level) {
  require_level(level);
  scaled(r1, level);
  scaled(r2, level);
  if (r1.get_den() == 1 && r2.get_den() == 1) throw DomainError("Siegel index lies in Z^2");
  return SiegelIndex{r1, r2, level};
}

SiegelIndex reduce_mod_lattice(const SiegelIndex& idx) {
  return SiegelIndex{frac(idx.r1), frac(idx.r2), idx.level};
}

SiegelIndex canonical_index(const SiegelIndex& idx) {
  const auto plus = reduce_mod_lattice(idx);
  if (plus.r1 == 0 && plus.r2 == 0) throw DomainError("index reduces into Z^2");
  const auto minus = reduce_mod_lattice(SiegelIndex{-idx.r1, -idx.r2, idx.level});
  return less_lex(minus, plus) ? minus : plus;
}

IntegerMatrix2x2 operator*(const IntegerMatrix2x2& x, const IntegerMatrix2x2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

IntegerMatrix2x2 make_sl2(long long a, long long b, long long c, long long d) {
  IntegerMatrix2x2 m{a, b, c, d};
  if (m.determinant() != 1) throw DomainError("matrix determinant is not 1");
  return m;
}

SiegelIndex transform_index(const SiegelIndex& idx, const IntegerMatrix2x2& alpha) {
  if (alpha.determinant() != 1) throw DomainError("matrix determinant is not 1");
  const Rational ra(Integer(static_cast<long>(alpha.a))), rb(Integer(static_cast<long>(alpha.b)));
  const Rational rc(Integer(static_cast<long>(alpha.c))), rd(Integer(static_cast<long>(alpha.d)));
  SiegelIndex out{idx.r1 * ra + idx.r2 * rc, idx.r1 * rb + idx.r2 * rd, idx.level};
  if (frac(out.r1) == 0 && frac(out.r2) == 0)
    throw InternalError("transformed Siegel index lies in Z^2");
  return canonical_index(out);
}

FieldPtr siegel_coefficient_field(std::uint32_t level) {
  require_level(level);
  return CyclotomicField::make(2 * level * level);
}

Rational siegel_order(const SiegelIndex& idx) { return bernoulli2(frac(idx.r1)) / 2; }

QSeries siegel_expansion(const SiegelIndex& idx, const Rational& precision) {
  const std::uint32_t n = idx.level;
  require_level(n);
  if (idx.r1 < 0 || idx.r1 >= 1) throw DomainError("siegel_expansion needs 0 <= r1 < 1");
  if (precision <= 0) throw DomainError("expansion precision must be positive");
  const long long a = scaled(idx.r1, n);
  const long long b = scaled(idx.r2, n);
  if (a == 0 && b % n == 0) throw DomainError("Siegel index lies in Z^2");

  const auto field = siegel_coefficient_field(n);
  const long long two_n = 2LL * n;
  const Integer grid(static_cast<unsigned long>(n));
  const Rational lead = siegel_order(idx);
  const std::size_t len = ceil(precision * Rational(grid)).get_ui();

  // Exponents relative to the lead, in units of 1/N: r1 = a, n + r1 = nN + a,
  // n - r1 = nN - a.
  std::vector<CyclotomicElement> c(len, CyclotomicElement(field));
  c[0] = CyclotomicElement::from_rational(field, 1);
  auto apply_factor = [&](std::size_t shift, long long zeta_exp) {
    for (std::size_t i = len; i-- > shift;) {
      if (c[i - shift].is_zero()) continue;
      c[i] -= c[i - shift].mul_zeta_power(zeta_exp);
    }
  };
  const long long w = two_n * b;  // e^{2 pi i r2} = zeta_{2N^2}^{2Nb}
  if (a > 0 && static_cast<std::size_t>(a) < len) apply_factor(static_cast<std::size_t>(a), w);
  for (long long k = 1;; ++k) {
    const long long up = k * n + a, down = k * n - a;
    if (static_cast<std::size_t>(down) >= len) break;
    if (static_cast<std::size_t>(up) < len) apply_factor(static_cast<std::size_t>(up), w);
    apply_factor(static_cast<std::size_t>(down), -w);
  }

  // -e^{pi i r2 (r1 - 1)} = -zeta_{2N^2}^{b (a - N)}, times (1 - e^{2 pi i r2}) when r1 = 0.
  auto prefactor = -CyclotomicElement::zeta_power(field, b * (a - static_cast<long long>(n)));
  if (a == 0)
    prefactor *= CyclotomicElement::from_rational(field, 1) - CyclotomicElement::zeta_power(field, w);
  for (auto& v : c)
    if (!v.is_zero()) v *= prefactor;
  return QSeries::from_dense(field, lead, grid, c, lead + precision);
}

QSeries delta_ratio_expansion(std::uint32_t level, const Rational& precision, FieldPtr field) {
  require_level(level);
  if (precision <= 0) throw DomainError("expansion precision must be positive");
  if (!field) field = siegel_coefficient_field(level);
  const std::size_t len = ceil(precision).get_ui();

  auto eta24 = [len](std::size_t step) {
    std::vector<Integer> p(len, 0);
    p[0] = 1;
    for (std::size_t s = step; s < len; s += step)
      for (int rep = 0; rep < 24; ++rep)
        for (std::size_t i = len; i-- > s;) p[i] -= p[i - s];
    return p;
  };
  const auto num = eta24(1);
  const auto den = eta24(level);
  std::vector<Integer> quot(len, 0);
  for (std::size_t k = 0; k < len; ++k) {
    Integer acc = num[k];
    for (std::size_t j = 1; j <= k; ++j)
      if (den[j] != 0) acc -= den[j] * quot[k - j];
    quot[k] = acc;
  }
  std::vector<CyclotomicElement> coeffs;
  coeffs.reserve(len);
  for (const auto& v : quot) coeffs.push_back(CyclotomicElement::from_rational(field, Rational(v)));
  const Rational start(1 - static_cast<long>(level));
  return QSeries::from_dense(field, start, Integer(1), coeffs, start + precision);
}

IdentityCheck verify_delta_identity(std::uint32_t level, const Rational& precision) {
  require_level(level);
  if (precision <= 0) throw DomainError("truncation must be positive");
  const auto field = siegel_coefficient_field(level);
  const Rational step(1, static_cast<unsigned long>(level));
  QSeries product = siegel_expansion(make_siegel_index(Rational(0), step, level), precision);
  for (std::uint32_t k = 2; k < level; ++k)
    product = product * siegel_expansion(
                            make_siegel_index(Rational(0), step * Rational(static_cast<unsigned long>(k)), level),
                            precision);
  Integer n12;
  mpz_ui_pow_ui(n12.get_mpz_t(), level, 12);
  const auto rhs = product.pow(-12) * CyclotomicElement::from_rational(field, Rational(n12));
  const auto lhs = delta_ratio_expansion(level, precision, field);

  IdentityCheck out;
  out.checked_below = std::min(lhs.truncation(), rhs.truncation());
  out.first_mismatch = lhs.first_difference(rhs);
  out.holds = !out.first_mismatch.has_value();
  return out;
}

Rational valuation_exponent_sum(std::uint32_t level, std::uint32_t t) {
  require_level(level);
  Rational sum(0);
  const Rational b0 = bernoulli2(Rational(0));
  for (std::uint32_t k = 1; k < level; ++k) {
    Rational x(static_cast<unsigned long>(k) * t, level);
    x.canonicalize();
    sum += bernoulli2(frac(x)) - b0;
  }
  return Rational(6UL * level) * sum;
}

Rational conjugate_order_from_bernoulli(std::uint32_t level, std::uint32_t t) {
  require_level(level);
  Rational sum(0);
  for (std::uint32_t k = 1; k < level; ++k) {
    Rational x(static_cast<unsigned long>(k) * t, level);
    x.canonicalize();
    sum += bernoulli2(frac(x));
  }
  return Rational(-6) * sum;
}

Rational conjugate_order_from_series(std::uint32_t level, std::uint32_t t, const Rational& precision) {
  require_level(level);
  const auto alpha = make_sl2(1, 0, static_cast<long long>(t), 1);
  Rational order(0);
  for (std::uint32_t k = 1; k < level; ++k) {
    Rational r2(k, level);
    r2.canonicalize();
    const auto idx = transform_index(make_siegel_index(Rational(0), r2, level), alpha);
    order += Rational(-12) * siegel_expansion(idx, precision).q_order();
  }
  return order;
}

ValuationReport verify_valuation_certificate(std::uint32_t level, const Rational& precision) {
  require_level(level);
  ValuationReport report;
  report.level = level;
  report.exponent_sums.assign(level, Rational(0));
  report.conjugate_orders_bernoulli.assign(level, Rational(0));
  report.conjugate_orders_series.assign(level, Rational(0));
  report.sums_negative = true;
  for (std::uint32_t t = 1; t < level; ++t) {
    report.exponent_sums[t] = valuation_exponent_sum(level, t);
    if (report.exponent_sums[t] >= 0) report.sums_negative = false;
  }

  report.order = conjugate_order_from_bernoulli(level, 0);
  const auto series_order = delta_ratio_expansion(level, Rational(1)).q_order();
  if (series_order != report.order)
    throw InternalError("q-order of Delta(tau)/Delta(N tau) disagrees with the Bernoulli sum");
  for (std::uint32_t t = 0; t < level; ++t) {
    report.conjugate_orders_bernoulli[t] = conjugate_order_from_bernoulli(level, t);
    report.conjugate_orders_series[t] = conjugate_order_from_series(level, t, precision);
    if (report.conjugate_orders_series[t] != report.conjugate_orders_bernoulli[t])
      throw InternalError("conjugate q-orders from Bernoulli sums and from expansions disagree at t=" +
                          std::to_string(t));
  }

  const auto group = GaloisGroup::build(level, GroupMode::unipotent);
  NormalityCertificate& cert = report.certificate;
  cert.kind = "modular";
  cert.level = level;
  cert.mode = GroupMode::unipotent;
  cert.claim = NormalityClaim::completely_normal;
  cert.element_label = "Delta(tau)/Delta(" + std::to_string(level) + " tau)";
  cert.exponent = "any positive";
  for (const auto& h : all_subgroups(group)) {
    SubgroupVerdict v;
    v.elements = h.elements();
    v.character_sum_test = true;
    v.determinant_test = true;
    for (const auto t : h.elements()) {
      if (t == 0) continue;
      if (report.conjugate_orders_bernoulli[t] <= report.order) v.character_sum_test = false;
      if (report.conjugate_orders_series[t] <= report.order) v.determinant_test = false;
    }
    v.notes.push_back("valuation dominance: ord_q(x^g) > ord_q(x) = " + to_string(report.order) +
                      " for all g != Id");
    cert.subgroups.push_back(std::move(v));
  }
  return report;
}

}  // namespace normcert
