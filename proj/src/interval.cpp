#include "normcert/interval.hpp"

#include <mpfr.h>

#include <algorithm>

#include "normcert/errors.hpp"
#include "normcert/numtheory.hpp"

namespace normcert {

namespace {

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

  Rational to_rational() const {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
  }

 private:
  mpfr_t v_;
};

}  // namespace

RealInterval RealInterval::abs() const {
  if (lo >= 0) return *this;
  if (hi <= 0) return {-hi, -lo};
  return {Rational(0), -lo > hi ? Rational(-lo) : hi};
}

RealInterval round_outward(const RealInterval& v, unsigned bits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
  const Rational s(scale);
  Rational lo(floor(v.lo * s), scale);
  Rational hi(ceil(v.hi * s), scale);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

std::pair<RealInterval, RealInterval> unit_root_enclosure(long long k, std::uint64_t n,
                                                          unsigned precision) {
  const auto kk = mod(k, n);
  if (kk == 0) return {{Rational(1), Rational(1)}, {Rational(0), Rational(0)}};
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(precision) + 16;

  // theta = 2 pi kk / n enclosed in [theta_lo, theta_hi].
  Mpfr theta_lo(prec), theta_hi(prec);
  mpfr_const_pi(theta_lo.get(), MPFR_RNDD);
  mpfr_const_pi(theta_hi.get(), MPFR_RNDU);
  mpfr_mul_ui(theta_lo.get(), theta_lo.get(), 2 * kk, MPFR_RNDD);
  mpfr_mul_ui(theta_hi.get(), theta_hi.get(), 2 * kk, MPFR_RNDU);
  mpfr_div_ui(theta_lo.get(), theta_lo.get(), n, MPFR_RNDD);
  mpfr_div_ui(theta_hi.get(), theta_hi.get(), n, MPFR_RNDU);

  // cos and sin are 1-Lipschitz, so any theta in the enclosure lies within
  // (theta_hi - theta_lo) of the directed-rounded values at theta_lo.
  const Rational slack = theta_hi.to_rational() - theta_lo.to_rational();
  Mpfr c_lo(prec), c_hi(prec), s_lo(prec), s_hi(prec);
  mpfr_cos(c_lo.get(), theta_lo.get(), MPFR_RNDD);
  mpfr_cos(c_hi.get(), theta_lo.get(), MPFR_RNDU);
  mpfr_sin(s_lo.get(), theta_lo.get(), MPFR_RNDD);
  mpfr_sin(s_hi.get(), theta_lo.get(), MPFR_RNDU);

  auto clamp = [](RealInterval v) {
    if (v.lo < -1) v.lo = -1;
    if (v.hi > 1) v.hi = 1;
    return v;
  };
  RealInterval cos_enc{c_lo.to_rational() - slack, c_hi.to_rational() + slack};
  RealInterval sin_enc{s_lo.to_rational() - slack, s_hi.to_rational() + slack};
  return {clamp(round_outward(cos_enc, precision + 8)), clamp(round_outward(sin_enc, precision + 8))};
}

ComplexInterval numeric_eval(const CyclotomicElement& x, unsigned precision, long long embedding) {
  const auto level = x.level();
  if (gcd(mod(embedding, level), level) != 1)
    throw DomainError("embedding index must be coprime to the level");
  RealInterval re{Rational(0), Rational(0)}, im{Rational(0), Rational(0)};
  const auto& num = x.numerators();
  // Per-term errors scale with |numerator| / denominator, so work with
  // enough extra bits to make the final error about 2^-precision.
  std::size_t max_bits = 0;
  for (const auto& c : num) max_bits = std::max(max_bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  const std::size_t den_bits = mpz_sizeinbase(x.denominator().get_mpz_t(), 2);
  const unsigned extra =
      max_bits + 8 > den_bits ? static_cast<unsigned>(max_bits + 8 - den_bits) : 0U;
  for (std::size_t j = 0; j < num.size(); ++j) {
    if (num[j] == 0) continue;
    const auto [c, s] =
        unit_root_enclosure(static_cast<long long>(j) * embedding, level, precision + extra);
    const Rational a(num[j]);
    if (a > 0) {
      re.lo += a * c.lo;
      re.hi += a * c.hi;
      im.lo += a * s.lo;
      im.hi += a * s.hi;
    } else {
      re.lo += a * c.hi;
      re.hi += a * c.lo;
      im.lo += a * s.hi;
      im.hi += a * s.lo;
    }
  }
  const Rational d(x.denominator());
  re.lo /= d;
  re.hi /= d;
  im.lo /= d;
  im.hi /= d;
  ComplexInterval out;
  out.re = round_outward(re, precision);
  out.im = round_outward(im, precision);
  out.precision = precision;
  return out;
}

}  // namespace normcert
