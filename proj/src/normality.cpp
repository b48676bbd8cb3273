#include "normcert/normality.hpp"

#include <algorithm>
#include <exception>
#include <set>

#include "normcert/errors.hpp"
#include "normcert/kernels.hpp"

namespace normcert {

namespace {

void require_compatible(const CyclotomicElement& x, const Subgroup& h) {
  const auto& law = h.law();
  if (law.mode == GroupMode::unipotent)
    throw DomainError("cyclotomic elements are not acted on by the unipotent group");
  if (x.level() != law.level)
    throw DomainError("element level " + std::to_string(x.level()) + " does not match group level " +
                      std::to_string(law.level));
  if (law.mode == GroupMode::real_quotient && x.galois_apply(-1) != x)
    throw DomainError("real-quotient group acts only on real elements");
}

std::vector<CyclotomicElement> lifted_conjugates(const CyclotomicElement& x, const Subgroup& h,
                                                 const FieldPtr& target) {
  std::vector<CyclotomicElement> out;
  out.reserve(h.order());
  for (const auto g : h.elements()) out.push_back(x.galois_apply(g).lift_to(target));
  return out;
}

}  // namespace

bool NormalityCertificate::passed() const {
  if (subgroups.empty()) return false;
  return std::all_of(subgroups.begin(), subgroups.end(), [](const auto& v) { return v.passed(); });
}

std::string NormalityCertificate::verdict() const {
  if (claim == NormalityClaim::normal) return passed() ? "normal" : "not normal";
  return passed() ? "completely normal" : "not completely normal";
}

CyclotomicElement character_sum(const CyclotomicElement& x, const Subgroup& h, const Character& chi) {
  require_compatible(x, h);
  if (chi.exponents.size() != h.order()) throw DomainError("character does not belong to subgroup");
  const auto target = CyclotomicField::make(static_cast<std::uint32_t>(lcm(x.level(), chi.modulus)));
  const auto conj = lifted_conjugates(x, h, target);
  return kernels::serial::character_sums(conj, std::span<const Character>(&chi, 1)).front();
}

NormalityEvidence is_normal(const CyclotomicElement& x, const Subgroup& h) {
  require_compatible(x, h);
  const auto chars = characters(h);
  const auto target = CyclotomicField::make(static_cast<std::uint32_t>(lcm(x.level(), h.exponent())));
  const auto conj = lifted_conjugates(x, h, target);
  const auto sums = kernels::omp::character_sums(conj, chars);
  NormalityEvidence ev;
  for (std::size_t i = 0; i < sums.size(); ++i)
    if (sums[i].is_zero()) ev.vanishing_characters.push_back(i);
  ev.normal = ev.vanishing_characters.empty();
  return ev;
}

CyclotomicElement group_determinant(const CyclotomicElement& x, const Subgroup& h) {
  require_compatible(x, h);
  const auto& law = h.law();
  const auto& elems = h.elements();
  kernels::ElementMatrix m;
  m.reserve(elems.size());
  for (const auto g : elems) {
    std::vector<CyclotomicElement> row;
    row.reserve(elems.size());
    for (const auto d : elems) row.push_back(x.galois_apply(law.multiply(g, d)));
    m.push_back(std::move(row));
  }
  return kernels::omp::determinant(std::move(m));
}

bool is_normal_determinant(const CyclotomicElement& x, const Subgroup& h) {
  return !group_determinant(x, h).is_zero();
}

NormalityCertificate is_completely_normal(const CyclotomicElement& x, const GaloisGroup& g,
                                          std::size_t bound) {
  const auto subgroups = all_subgroups(g, bound);
  NormalityCertificate cert;
  cert.kind = "cyclotomic";
  cert.level = g.level();
  cert.mode = g.mode();
  cert.claim = NormalityClaim::completely_normal;
  cert.element = x;
  cert.subgroups.resize(subgroups.size());

  std::exception_ptr failure;
  const auto n = static_cast<long long>(subgroups.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < n; ++i) {
    try {
      const auto& h = subgroups[static_cast<std::size_t>(i)];
      SubgroupVerdict v;
      v.elements = h.elements();
      const auto ev = is_normal(x, h);
      v.character_sum_test = ev.normal;
      v.vanishing_characters = ev.vanishing_characters;
      v.determinant_test = is_normal_determinant(x, h);
      cert.subgroups[static_cast<std::size_t>(i)] = std::move(v);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  for (const auto& v : cert.subgroups)
    if (v.character_sum_test != v.determinant_test)
      throw InternalError("character-sum and determinant tests disagree on a subgroup of level " +
                          std::to_string(g.level()));
  return cert;
}

std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

namespace {

std::vector<CyclotomicElement> distinct_conjugates(const CyclotomicElement& x) {
  const auto g = GaloisGroup::build(x.level(), GroupMode::full);
  std::vector<CyclotomicElement> out;
  for (const auto t : g.elements()) {
    auto c = x.galois_apply(t);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::uint32_t> stabilizer(const CyclotomicElement& x, const GaloisGroup& g) {
  std::vector<std::uint32_t> out;
  for (const auto t : g.elements())
    if (x.galois_apply(t) == x) out.push_back(t);
  return out;
}

}  // namespace

std::uint64_t conjugate_count(const CyclotomicElement& x) { return distinct_conjugates(x).size(); }

bool is_normal_over_generated_field(const CyclotomicElement& x) {
  const auto conj = distinct_conjugates(x);
  std::vector<std::vector<Rational>> rows;
  rows.reserve(conj.size());
  for (const auto& c : conj) rows.push_back(c.coords());
  return rational_rank(std::move(rows)) == conj.size();
}

CompositeReport composite_normal_check(const CyclotomicElement& x1, const CyclotomicElement& x2,
                                       std::uint32_t level) {
  if (level % x1.level() != 0 || level % x2.level() != 0)
    throw DomainError("factor levels must divide the compositum level");
  const auto field = CyclotomicField::make(level);
  const auto y1 = x1.lift_to(field);
  const auto y2 = x2.lift_to(field);
  const auto g = GaloisGroup::build(level, GroupMode::full);

  const auto s1 = stabilizer(y1, g);
  const auto s2 = stabilizer(y2, g);
  std::vector<std::uint32_t> both;
  std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(both));

  CompositeReport report;
  report.level = level;
  report.degree_first = g.order() / s1.size();
  report.degree_second = g.order() / s2.size();
  report.degree_compositum = g.order() / both.size();
  if (report.degree_compositum != report.degree_first * report.degree_second)
    throw DomainError("disjointness hypothesis fails: [L1L2:Q] = " +
                      std::to_string(report.degree_compositum) + " but [L1:Q][L2:Q] = " +
                      std::to_string(report.degree_first * report.degree_second));
  if (report.degree_compositum != g.order())
    throw DomainError("compositum Q(x1, x2) is a proper subfield of Q(zeta_" + std::to_string(level) +
                      ")");
  report.first_normal = is_normal_over_generated_field(x1);
  report.second_normal = is_normal_over_generated_field(x2);

  const auto product = y1 * y2;
  const auto h = whole_group(g);
  NormalityCertificate cert;
  cert.kind = "composite";
  cert.level = level;
  cert.mode = GroupMode::full;
  cert.claim = NormalityClaim::normal;
  cert.element = product;
  SubgroupVerdict v;
  v.elements = h.elements();
  const auto ev = is_normal(product, h);
  v.character_sum_test = ev.normal;
  v.vanishing_characters = ev.vanishing_characters;
  v.determinant_test = is_normal_determinant(product, h);
  if (v.character_sum_test != v.determinant_test)
    throw InternalError("character-sum and determinant tests disagree on the composite element");
  cert.subgroups.push_back(std::move(v));
  report.certificate = std::move(cert);
  return report;
}

}  // namespace normcert
