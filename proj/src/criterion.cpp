#include "normcert/criterion.hpp"

#include <algorithm>

#include "normcert/elements.hpp"
#include "normcert/errors.hpp"
#include "normcert/numtheory.hpp"

namespace normcert {

namespace {

constexpr unsigned long kMaxExponent = 1UL << 20;

struct RatioEnclosure {
  Rational lo;
  Rational hi;
};

// Enclosure of |v / v0| at the given precision, or nullopt if |v0| is not
// yet separated from zero.
std::optional<RatioEnclosure> ratio_enclosure(const CyclotomicElement& v, const CyclotomicElement& v0,
                                              unsigned precision) {
  const auto a = real_enclosure(v, precision).abs();
  const auto b = real_enclosure(v0, precision).abs();
  if (b.lo <= 0) return std::nullopt;
  return RatioEnclosure{a.lo / b.hi, a.hi / b.lo};
}

unsigned long smallest_power_below(const Rational& r, const Rational& threshold) {
  if (r <= 0) return 1;
  Rational p = r;
  for (unsigned long m = 1; m <= kMaxExponent; ++m) {
    if (p <= threshold) return m;
    p *= r;
  }
  throw InternalError("exponent search exceeded its limit");
}

// |v|^m * n <= |v0|^m, decided exactly.
bool power_condition_holds(const CyclotomicElement& v, const CyclotomicElement& v0, std::uint64_t n,
                           unsigned long m, const PrecisionPolicy& policy) {
  const auto lhs = v.pow(m) * Rational(static_cast<unsigned long>(n));
  const auto rhs = v0.pow(m);
  return compare_abs(lhs, rhs, policy) != std::strong_ordering::greater;
}

struct DominanceResult {
  unsigned long exponent = 1;
  Rational ratio_bound{0};
  bool boundary_exact = false;
};

// Minimal m with |v / v0|^m <= 1/n for every v in values, with a certified
// rational bound B on the largest ratio. All values must already be
// certified strictly smaller than v0 in absolute value.
DominanceResult dominance_exponent(const std::vector<CyclotomicElement>& values,
                                   const CyclotomicElement& v0, std::uint64_t n,
                                   const PrecisionPolicy& policy) {
  DominanceResult out;
  if (values.empty()) return out;
  const Rational threshold(1, static_cast<unsigned long>(n));

  for (const auto& v : values) {
    std::optional<RatioEnclosure> enc;
    for (unsigned p = policy.start_bits;; p *= 2) {
      if (p > policy.max_bits) throw InternalError("ratio enclosure did not separate from 1");
      enc = ratio_enclosure(v, v0, p);
      if (enc && enc->hi < 1) break;
    }
    const unsigned long upper = smallest_power_below(enc->hi, threshold);
    const unsigned long lower = std::min(upper, smallest_power_below(enc->lo, threshold));
    unsigned long m = upper;
    for (unsigned long k = lower; k < upper; ++k)
      if (power_condition_holds(v, v0, n, k, policy)) {
        m = k;
        break;
      }
    out.exponent = std::max(out.exponent, m);
  }

  for (unsigned p = policy.start_bits; p <= policy.max_bits; p *= 2) {
    Rational bound(0);
    bool resolved = true;
    for (const auto& v : values) {
      const auto enc = ratio_enclosure(v, v0, p);
      if (!enc) {
        resolved = false;
        break;
      }
      if (enc->hi > bound) bound = enc->hi;
    }
    if (!resolved) continue;
    out.ratio_bound = bound;
    if (pow(bound, out.exponent) <= threshold) return out;
  }
  // Only possible when some ratio meets the threshold exactly.
  for (const auto& v : values) {
    const auto lhs = v.pow(out.exponent) * Rational(static_cast<unsigned long>(n));
    const auto rhs = v0.pow(out.exponent);
    if (lhs == rhs || lhs == -rhs) {
      out.boundary_exact = true;
      return out;
    }
  }
  throw InternalError("could not certify the ratio bound at maximum precision");
}

void require_real_nonzero(const CyclotomicElement& x) {
  if (x.is_zero()) throw DomainError("element must be nonzero");
  if (!is_real(x)) throw DomainError("element must be real (fixed by complex conjugation)");
}

void require_group_level(const CyclotomicElement& x, const GaloisGroup& group) {
  if (group.mode() == GroupMode::unipotent)
    throw DomainError("archimedean criterion applies to cyclotomic groups only");
  if (x.level() != group.level()) throw DomainError("element and group levels differ");
}

std::vector<CyclotomicElement> nontrivial_conjugates(const CyclotomicElement& x,
                                                     const GaloisGroup& group) {
  std::vector<CyclotomicElement> out;
  const auto id = group.law().identity();
  for (const auto g : group.elements())
    if (g != id) out.push_back(x.galois_apply(g));
  return out;
}

void require_strictly_dominated(const std::vector<CyclotomicElement>& values,
                                const CyclotomicElement& v0, const PrecisionPolicy& policy) {
  for (const auto& v : values)
    if (compare_abs(v, v0, policy) != std::strong_ordering::less)
      throw HypothesisError("some conjugate ratio |x^g / x| is >= 1");
}

ExponentResult closed_form_exponent(std::uint32_t level, Construction tag, const CyclotomicElement& x,
                                    const CyclotomicElement& numerator, const PrecisionPolicy& policy) {
  const auto group = GaloisGroup::build(level, GroupMode::real_quotient);
  const std::vector<CyclotomicElement> closed{numerator};
  require_strictly_dominated(closed, x, policy);
  const auto dom = dominance_exponent(closed, x, group.order(), policy);

  // The closed form must dominate every true conjugate ratio.
  for (const auto& c : nontrivial_conjugates(x, group))
    if (compare_abs(c, numerator, policy) == std::strong_ordering::greater)
      throw InternalError("closed-form ratio does not dominate a conjugate ratio at level " +
                          std::to_string(level));

  ExponentResult r;
  r.level = level;
  r.construction = tag;
  r.exponent = dom.exponent;
  r.ratio_bound = dom.ratio_bound;
  r.threshold = Rational(2, static_cast<unsigned long>(phi(level)));
  r.threshold.canonicalize();
  r.boundary_exact = dom.boundary_exact;
  return r;
}

}  // namespace

bool is_real(const CyclotomicElement& x) { return x.galois_apply(-1) == x; }

RealInterval real_enclosure(const CyclotomicElement& x, unsigned precision) {
  const auto ci = numeric_eval(x, precision, 1);
  if (!ci.im.contains_zero()) throw DomainError("element has nonzero imaginary part");
  return ci.re;
}

std::strong_ordering compare_abs(const CyclotomicElement& a, const CyclotomicElement& b,
                                 const PrecisionPolicy& policy) {
  if (a == b || a == -b) return std::strong_ordering::equal;
  if (!is_real(a) || !is_real(b))
    return compare_abs(a * a.galois_apply(-1), b * b.galois_apply(-1), policy);
  for (unsigned p = policy.start_bits; p <= policy.max_bits; p *= 2) {
    const auto ea = real_enclosure(a, p).abs();
    const auto eb = real_enclosure(b, p).abs();
    if (ea.hi < eb.lo) return std::strong_ordering::less;
    if (ea.lo > eb.hi) return std::strong_ordering::greater;
  }
  throw InternalError("absolute values did not separate at maximum precision");
}

std::string to_string(Construction c) {
  switch (c) {
    case Construction::cos_plus_one:
      return "cos-plus-one";
    case Construction::cos_half:
      return "cos-half";
    case Construction::ax_plus_b:
      return "ax-plus-b";
    case Construction::custom:
      return "custom";
  }
  return "custom";
}

Rational ratio_upper_bound(const CyclotomicElement& x, const GaloisGroup& group,
                           const PrecisionPolicy& policy) {
  require_group_level(x, group);
  require_real_nonzero(x);
  const auto values = nontrivial_conjugates(x, group);
  require_strictly_dominated(values, x, policy);
  if (values.empty()) return Rational(0);
  for (unsigned p = policy.start_bits; p <= policy.max_bits; p *= 2) {
    Rational bound(0);
    bool ok = true;
    for (const auto& v : values) {
      const auto enc = ratio_enclosure(v, x, p);
      if (!enc || enc->hi >= 1) {
        ok = false;
        break;
      }
      if (enc->hi > bound) bound = enc->hi;
    }
    if (ok) return bound;
  }
  throw InternalError("ratio bound did not separate from 1 at maximum precision");
}

ExponentResult min_exponent(const CyclotomicElement& x, const GaloisGroup& group,
                            const PrecisionPolicy& policy) {
  require_group_level(x, group);
  require_real_nonzero(x);
  const auto values = nontrivial_conjugates(x, group);
  require_strictly_dominated(values, x, policy);
  const auto dom = dominance_exponent(values, x, group.order(), policy);
  ExponentResult r;
  r.level = x.level();
  r.construction = Construction::custom;
  r.exponent = dom.exponent;
  r.ratio_bound = dom.ratio_bound;
  r.threshold = Rational(1, static_cast<unsigned long>(group.order()));
  r.boundary_exact = dom.boundary_exact;
  return r;
}

ExponentResult cos_plus_one_exponent(std::uint32_t level, const PrecisionPolicy& policy) {
  const auto x = cos_plus_one_element(level);
  const auto field = x.field();
  auto numerator = (CyclotomicElement::zeta_power(field, 2) + CyclotomicElement::zeta_power(field, -2)) *
                   make_rational(1, 2);
  numerator += CyclotomicElement::from_rational(field, 1);
  return closed_form_exponent(level, Construction::cos_plus_one, x, numerator, policy);
}

ExponentResult cos_half_exponent(std::uint32_t level, const PrecisionPolicy& policy) {
  const auto x = cos_half_element(level);
  return closed_form_exponent(level, Construction::cos_half, x, cos_element(level), policy);
}

std::vector<Rational> minimal_polynomial(const CyclotomicElement& x) {
  const auto group = GaloisGroup::build(x.level(), GroupMode::full);
  std::vector<CyclotomicElement> roots;
  for (const auto t : group.elements()) {
    auto c = x.galois_apply(t);
    if (std::find(roots.begin(), roots.end(), c) == roots.end()) roots.push_back(std::move(c));
  }
  const auto field = x.field();
  std::vector<CyclotomicElement> poly{CyclotomicElement::from_rational(field, 1)};
  for (const auto& r : roots) {
    std::vector<CyclotomicElement> next(poly.size() + 1, CyclotomicElement(field));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * r;
    }
    poly = std::move(next);
  }
  std::vector<Rational> out;
  out.reserve(poly.size());
  for (const auto& c : poly) {
    if (!c.is_rational()) throw InternalError("minimal polynomial has a non-rational coefficient");
    out.push_back(c.coord(0));
  }
  return out;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> find_abs_tie(const CyclotomicElement& y,
                                                                    const GaloisGroup& group) {
  const auto& elems = group.elements();
  std::vector<CyclotomicElement> conj;
  conj.reserve(elems.size());
  for (const auto g : elems) conj.push_back(y.galois_apply(g));
  for (std::size_t i = 0; i < conj.size(); ++i)
    for (std::size_t j = i + 1; j < conj.size(); ++j)
      if (conj[i] == conj[j] || conj[i] == -conj[j]) return std::make_pair(elems[i], elems[j]);
  return std::nullopt;
}

ExponentResult ax_plus_b_exponent(const CyclotomicElement& x, long a, long b, const GaloisGroup& group,
                              const PrecisionPolicy& policy) {
  require_group_level(x, group);
  if (a == 0 || b == 0) throw DomainError("a and b must be nonzero integers");
  if (std::abs(a) <= 2 * std::abs(b)) throw DomainError("ax+b construction needs 2 < |a/b|");
  if (!is_real(x)) throw DomainError("x must have real conjugates");
  for (const auto& c : minimal_polynomial(x))
    if (c.get_den() != 1) throw DomainError("x is not an algebraic integer");
  {
    std::vector<CyclotomicElement> seen;
    for (const auto g : group.elements()) {
      auto c = x.galois_apply(g);
      if (std::find(seen.begin(), seen.end(), c) != seen.end())
        throw DomainError("x does not generate the field of the given group");
      seen.push_back(std::move(c));
    }
  }

  const auto field = x.field();
  const auto y = x * Rational(a) + CyclotomicElement::from_rational(field, Rational(b));
  if (const auto tie = find_abs_tie(y, group))
    throw InternalError("two conjugates of a*x+b share an absolute value");

  auto dominant_in = [&](const std::vector<std::uint32_t>& elems) {
    std::uint32_t best = elems.front();
    auto best_value = y.galois_apply(best);
    for (const auto g : elems) {
      auto v = y.galois_apply(g);
      if (compare_abs(v, best_value, policy) == std::strong_ordering::greater) {
        best = g;
        best_value = std::move(v);
      }
    }
    return best;
  };

  ExponentResult r;
  r.level = x.level();
  r.construction = Construction::ax_plus_b;
  r.dominant = dominant_in(group.elements());
  r.exponent = 1;
  r.threshold = 1;
  r.ratio_bound = 0;

  for (const auto& h : all_subgroups(group)) {
    if (h.order() < 2) continue;
    SubgroupExponent se;
    se.elements = h.elements();
    se.dominant = dominant_in(h.elements());
    const auto v0 = y.galois_apply(se.dominant);
    std::vector<CyclotomicElement> values;
    for (const auto g : h.elements())
      if (g != se.dominant) values.push_back(y.galois_apply(g));
    require_strictly_dominated(values, v0, policy);
    const auto dom = dominance_exponent(values, v0, h.order(), policy);
    se.exponent = dom.exponent;
    se.ratio_bound = dom.ratio_bound;
    se.threshold = Rational(1, static_cast<unsigned long>(h.order()));
    if (r.per_subgroup.empty() || se.exponent > r.exponent) {
      r.exponent = se.exponent;
      r.ratio_bound = se.ratio_bound;
      r.threshold = se.threshold;
      r.boundary_exact = dom.boundary_exact;
    }
    r.per_subgroup.push_back(std::move(se));
  }
  return r;
}

}  // namespace normcert
