#include "normcert/cyclotomic.hpp"

#include <algorithm>
#include <sstream>

#include "normcert/errors.hpp"
#include "normcert/numtheory.hpp"

namespace normcert {

namespace {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return out;
}

// Exact quotient of a by a monic divisor; throws if the remainder is nonzero.
IntPoly divide_exact_monic(IntPoly a, const IntPoly& divisor) {
  const std::size_t db = divisor.size() - 1;
  if (a.size() < divisor.size()) throw InternalError("polynomial division degree underflow");
  IntPoly quotient(a.size() - db, 0);
  for (std::size_t k = a.size(); k-- > db;) {
    const Integer c = a[k];
    if (c == 0) continue;
    quotient[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= c * divisor[j];
  }
  trim(a);
  if (!a.empty()) throw InternalError("cyclotomic product division left a remainder");
  return quotient;
}

IntPoly x_power_minus_one(std::uint64_t n) {
  IntPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  return p;
}

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder in Q[X]; b must be nonzero after trimming.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {{}, a};
  QPoly q(a.size() - db, 0);
  const Rational lead_inv = 1 / b.back();
  for (std::size_t k = a.size(); k-- > db;) {
    if (a[k] == 0) continue;
    const Rational c = a[k] * lead_inv;
    q[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

QPoly sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

IntPoly cyclotomic_polynomial(std::uint32_t level) {
  if (level == 0) throw DomainError("cyclotomic polynomial requires level >= 1");
  IntPoly numerator{1}, denominator{1};
  for (const auto d : divisors(level)) {
    const int mu = mobius(d);
    if (mu == 1) numerator = multiply(numerator, x_power_minus_one(level / d));
    if (mu == -1) denominator = multiply(denominator, x_power_minus_one(level / d));
  }
  // The denominator is a product of monic polynomials up to sign (-1)^k.
  if (denominator.back() < 0) {
    for (auto& c : denominator) c = -c;
    for (auto& c : numerator) c = -c;
  }
  return divide_exact_monic(numerator, denominator);
}

CyclotomicField::CyclotomicField(std::uint32_t level)
    : level_(level), modulus_(cyclotomic_polynomial(level)) {
  degree_ = modulus_.size() - 1;
  for (std::size_t j = 0; j < degree_; ++j)
    if (modulus_[j] != 0) tail_.emplace_back(j, modulus_[j]);
}

std::shared_ptr<const CyclotomicField> CyclotomicField::make(std::uint32_t level) {
  if (level == 0) throw DomainError("cyclotomic field requires level >= 1");
  return std::shared_ptr<const CyclotomicField>(new CyclotomicField(level));
}

void CyclotomicField::reduce(std::vector<Integer>& poly) const {
  for (std::size_t k = poly.size(); k-- > degree_;) {
    if (poly[k] == 0) continue;
    const std::size_t shift = k - degree_;
    for (const auto& [j, c] : tail_)
      mpz_submul(poly[shift + j].get_mpz_t(), poly[k].get_mpz_t(), c.get_mpz_t());
    poly[k] = 0;
  }
  poly.resize(degree_, 0);
}

CyclotomicElement::CyclotomicElement(FieldPtr field)
    : field_(std::move(field)), num_(field_->degree(), 0), den_(1) {}

CyclotomicElement::CyclotomicElement(FieldPtr field, std::vector<Integer> num, Integer den)
    : field_(std::move(field)), num_(std::move(num)), den_(std::move(den)) {
  field_->reduce(num_);
  normalize();
}

CyclotomicElement CyclotomicElement::from_rational(FieldPtr field, const Rational& r) {
  std::vector<Integer> num(field->degree(), 0);
  num[0] = r.get_num();
  return CyclotomicElement(std::move(field), std::move(num), r.get_den());
}

CyclotomicElement CyclotomicElement::from_coords(FieldPtr field, const std::vector<Rational>& coords) {
  if (coords.size() != field->degree())
    throw DomainError("coordinate vector length " + std::to_string(coords.size()) +
                      " does not match field degree " + std::to_string(field->degree()));
  Integer den = 1;
  for (const auto& c : coords) den = lcm(den, Integer(c.get_den()));
  std::vector<Integer> num(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i)
    num[i] = coords[i].get_num() * (den / coords[i].get_den());
  return CyclotomicElement(std::move(field), std::move(num), std::move(den));
}

CyclotomicElement CyclotomicElement::zeta_power(FieldPtr field, long long k) {
  const auto level = field->level();
  std::vector<Integer> num(level, 0);
  num[mod(k, level)] = 1;
  return CyclotomicElement(std::move(field), std::move(num), 1);
}

std::vector<Rational> CyclotomicElement::coords() const {
  std::vector<Rational> out(num_.size());
  for (std::size_t i = 0; i < num_.size(); ++i) out[i] = coord(i);
  return out;
}

Rational CyclotomicElement::coord(std::size_t i) const {
  Rational r(num_.at(i), den_);
  r.canonicalize();
  return r;
}

bool CyclotomicElement::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](const Integer& c) { return c == 0; });
}

bool CyclotomicElement::is_rational() const {
  return std::all_of(num_.begin() + 1, num_.end(), [](const Integer& c) { return c == 0; });
}

bool CyclotomicElement::is_integral() const { return den_ == 1; }

void CyclotomicElement::normalize() {
  Integer g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (den_ < 0) g = -g;
  if (g != 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
  if (is_zero()) den_ = 1;
}

void CyclotomicElement::require_same_field(const CyclotomicElement& other) const {
  if (level() != other.level())
    throw DomainError("level mismatch: " + std::to_string(level()) + " vs " +
                      std::to_string(other.level()));
}

CyclotomicElement CyclotomicElement::operator-() const {
  CyclotomicElement out = *this;
  for (auto& c : out.num_) c = -c;
  return out;
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& other) {
  require_same_field(other);
  if (den_ == other.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += other.num_[i];
  } else {
    const Integer l = lcm(den_, other.den_);
    const Integer fa = l / den_, fb = l / other.den_;
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * fa + other.num_[i] * fb;
    den_ = l;
  }
  normalize();
  return *this;
}

CyclotomicElement& CyclotomicElement::operator-=(const CyclotomicElement& other) {
  return *this += -other;
}

CyclotomicElement& CyclotomicElement::operator*=(const CyclotomicElement& other) {
  require_same_field(other);
  const std::size_t n = num_.size();
  std::vector<Integer> product(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (num_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (other.num_[j] == 0) continue;
      mpz_addmul(product[i + j].get_mpz_t(), num_[i].get_mpz_t(), other.num_[j].get_mpz_t());
    }
  }
  field_->reduce(product);
  num_ = std::move(product);
  den_ *= other.den_;
  normalize();
  return *this;
}

CyclotomicElement& CyclotomicElement::operator*=(const Rational& c) {
  for (auto& v : num_) v *= c.get_num();
  den_ *= c.get_den();
  normalize();
  return *this;
}

bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
  a.require_same_field(b);
  return a.den_ == b.den_ && a.num_ == b.num_;
}

CyclotomicElement CyclotomicElement::inverse() const {
  if (is_zero()) throw DomainError("inversion of zero");
  const auto& phi_poly = field_->modulus();
  QPoly r0(phi_poly.begin(), phi_poly.end());
  QPoly r1(num_.begin(), num_.end());
  trim(r1);
  QPoly s0, s1{Rational(1)};
  while (r1.size() > 1) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    QPoly s = sub(s0, mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r1 is now a nonzero constant c with s1 * num = c (mod modulus).
  const Rational scale = Rational(den_) / r1[0];
  std::vector<Rational> coords(degree(), 0);
  auto [unused, reduced] = divmod(s1, QPoly(phi_poly.begin(), phi_poly.end()));
  for (std::size_t i = 0; i < reduced.size(); ++i) coords[i] = reduced[i] * scale;
  return from_coords(field_, coords);
}

CyclotomicElement CyclotomicElement::pow(unsigned long e) const {
  CyclotomicElement result = from_rational(field_, 1);
  CyclotomicElement base = *this;
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

CyclotomicElement CyclotomicElement::mul_zeta_power(long long k) const {
  const auto level = field_->level();
  const auto shift = mod(k, level);
  std::vector<Integer> out(level, 0);
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    out[(i + shift) % level] = num_[i];
  }
  return CyclotomicElement(field_, std::move(out), den_);
}

CyclotomicElement CyclotomicElement::galois_apply(long long t) const {
  const auto level = field_->level();
  const auto tt = mod(t, level);
  if (gcd(tt, level) != 1)
    throw DomainError("galois_apply: " + std::to_string(t) + " is not coprime to level " +
                      std::to_string(level));
  std::vector<Integer> out(level, 0);
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    out[(i * tt) % level] += num_[i];
  }
  return CyclotomicElement(field_, std::move(out), den_);
}

CyclotomicElement CyclotomicElement::lift_to(const FieldPtr& target) const {
  const auto from = level(), to = target->level();
  if (to % from != 0)
    throw DomainError("cannot lift level " + std::to_string(from) + " into level " +
                      std::to_string(to));
  const std::size_t step = to / from;
  std::vector<Integer> out(std::max<std::size_t>(step * (num_.size() - 1) + 1, target->degree()), 0);
  for (std::size_t i = 0; i < num_.size(); ++i) out[i * step] = num_[i];
  return CyclotomicElement(target, std::move(out), den_);
}

CyclotomicElement galois_apply(const CyclotomicElement& x, long long t) { return x.galois_apply(t); }

CyclotomicElement lift_level(const CyclotomicElement& x, std::uint32_t level) {
  if (level == x.level()) return x;
  return x.lift_to(CyclotomicField::make(level));
}

std::string to_string(const CyclotomicElement& x) {
  std::ostringstream os;
  bool first = true;
  const auto coords = x.coords();
  for (std::size_t i = coords.size(); i-- > 0;) {
    if (coords[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << to_string(coords[i]);
    } else {
      if (coords[i] != 1) os << to_string(coords[i]) << '*';
      os << 'z';
      if (i > 1) os << '^' << i;
    }
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace normcert
