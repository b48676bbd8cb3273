#include "normcert/qseries.hpp"

#include <algorithm>

#include "normcert/errors.hpp"
#include "normcert/kernels.hpp"

namespace normcert {

namespace {

// Number of grid points start + i/grid strictly below the truncation.
std::size_t grid_length(const Rational& start, const Integer& grid, const Rational& truncation) {
  const Rational span = (truncation - start) * Rational(grid);
  if (span <= 0) return 0;
  return ceil(span).get_ui();
}

}  // namespace

QSeries::QSeries(FieldPtr field, Rational truncation)
    : field_(std::move(field)), truncation_(std::move(truncation)) {}

QSeries QSeries::constant(const CyclotomicElement& c, Rational truncation) {
  return monomial(c, Rational(0), std::move(truncation));
}

QSeries QSeries::monomial(const CyclotomicElement& c, const Rational& exponent, Rational truncation) {
  QSeries s(c.field(), std::move(truncation));
  if (!c.is_zero() && exponent < s.truncation_) s.terms_.emplace(exponent, c);
  return s;
}

QSeries QSeries::from_dense(FieldPtr field, const Rational& start, const Integer& grid,
                            const std::vector<CyclotomicElement>& coeffs, Rational truncation) {
  QSeries s(std::move(field), std::move(truncation));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    if (coeffs[i].level() != s.field_->level()) throw DomainError("coefficient level mismatch");
    Rational e = start + Rational(Integer(static_cast<unsigned long>(i)), grid);
    e.canonicalize();
    if (e >= s.truncation_) break;
    s.terms_.emplace(std::move(e), coeffs[i]);
  }
  return s;
}

Rational QSeries::q_order() const {
  if (terms_.empty()) throw DomainError("series vanishes up to its truncation; order is indeterminate");
  return terms_.begin()->first;
}

const CyclotomicElement& QSeries::leading_coefficient() const {
  if (terms_.empty()) throw DomainError("series vanishes up to its truncation");
  return terms_.begin()->second;
}

Rational QSeries::precision() const { return truncation_ - q_order(); }

CyclotomicElement QSeries::coefficient(const Rational& e) const {
  if (e >= truncation_) throw DomainError("coefficient at " + to_string(e) + " lies beyond truncation");
  const auto it = terms_.find(e);
  return it == terms_.end() ? CyclotomicElement(field_) : it->second;
}

void QSeries::require_same_field(const QSeries& other) const {
  if (field_->level() != other.field_->level())
    throw DomainError("series coefficient fields differ");
}

Integer QSeries::grid_denominator() const {
  Integer grid = 1;
  if (terms_.empty()) return grid;
  const Rational& start = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    Rational d = e - start;
    d.canonicalize();
    grid = lcm(grid, Integer(d.get_den()));
  }
  return grid;
}

QSeries::Dense QSeries::to_dense(const Integer& grid) const {
  Dense d{q_order(), grid, {}};
  d.coeffs.assign(grid_length(d.start, grid, truncation_), CyclotomicElement(field_));
  for (const auto& [e, c] : terms_) {
    const Rational pos = (e - d.start) * Rational(grid);
    if (pos.get_den() != 1) throw InternalError("series exponent off its grid");
    d.coeffs[pos.get_num().get_ui()] = c;
  }
  return d;
}

QSeries QSeries::operator-() const {
  QSeries out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  a.require_same_field(b);
  QSeries out(a.field_, std::min(a.truncation_, b.truncation_));
  for (const auto* s : {&a, &b})
    for (const auto& [e, c] : s->terms_) {
      if (e >= out.truncation_) break;
      auto [it, inserted] = out.terms_.emplace(e, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) out.terms_.erase(it);
      }
    }
  return out;
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const CyclotomicElement& c) {
  if (c.is_zero()) return QSeries(a.field_, a.truncation_);
  QSeries out = a;
  for (auto& [e, v] : out.terms_) v *= c;
  return out;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  a.require_same_field(b);
  if (a.is_zero() || b.is_zero()) {
    const Rational trunc = a.is_zero() ? a.truncation_ + (b.is_zero() ? b.truncation_ : b.q_order())
                                       : b.truncation_ + a.q_order();
    return QSeries(a.field_, trunc);
  }
  const Integer grid = lcm(a.grid_denominator(), b.grid_denominator());
  const auto da = a.to_dense(grid);
  const auto db = b.to_dense(grid);
  const Rational start = da.start + db.start;
  const Rational precision = std::min(a.precision(), b.precision());
  const Rational truncation = start + precision;
  const std::size_t len = grid_length(start, grid, truncation);
  const auto coeffs = kernels::omp::convolve(da.coeffs, db.coeffs, len);
  return QSeries::from_dense(a.field_, start, grid, coeffs, truncation);
}

QSeries QSeries::inverse() const {
  const auto d = to_dense(grid_denominator());
  const Rational start = -d.start;
  const Rational truncation = start + precision();
  const std::size_t len = grid_length(start, d.grid, truncation);
  const auto lead_inv = d.coeffs.front().inverse();
  std::vector<CyclotomicElement> out(len, CyclotomicElement(field_));
  if (len > 0) out[0] = lead_inv;
  for (std::size_t k = 1; k < len; ++k) {
    CyclotomicElement acc(field_);
    for (std::size_t j = 1; j <= k && j < d.coeffs.size(); ++j) {
      if (d.coeffs[j].is_zero() || out[k - j].is_zero()) continue;
      acc += d.coeffs[j] * out[k - j];
    }
    out[k] = -(acc * lead_inv);
  }
  return from_dense(field_, start, d.grid, out, truncation);
}

QSeries QSeries::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  const Rational prec = is_zero() ? truncation_ : precision();
  QSeries result = constant(CyclotomicElement::from_rational(field_, 1), prec);
  QSeries base = *this;
  auto k = static_cast<unsigned long>(e);
  while (k > 0) {
    if (k & 1UL) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

std::optional<Rational> QSeries::first_difference(const QSeries& other) const {
  require_same_field(other);
  const Rational limit = std::min(truncation_, other.truncation_);
  auto ia = terms_.begin();
  auto ib = other.terms_.begin();
  while (true) {
    const bool a_done = ia == terms_.end() || ia->first >= limit;
    const bool b_done = ib == other.terms_.end() || ib->first >= limit;
    if (a_done && b_done) return std::nullopt;
    if (a_done) return ib->first;
    if (b_done) return ia->first;
    if (ia->first < ib->first) return ia->first;
    if (ib->first < ia->first) return ib->first;
    if (ia->second != ib->second) return ia->first;
    ++ia;
    ++ib;
  }
}

}  // namespace normcert
