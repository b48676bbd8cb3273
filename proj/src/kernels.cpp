#include "normcert/kernels.hpp"

#include <omp.h>

#include <algorithm>

#include "normcert/errors.hpp"

namespace normcert::kernels {

namespace {

CyclotomicElement convolve_entry(std::span<const CyclotomicElement> a,
                                 std::span<const CyclotomicElement> b, std::size_t k) {
  CyclotomicElement acc(a.front().field());
  const std::size_t lo = k >= b.size() ? k - b.size() + 1 : 0;
  const std::size_t hi = std::min(k, a.size() - 1);
  for (std::size_t i = lo; i <= hi; ++i) {
    if (a[i].is_zero() || b[k - i].is_zero()) continue;
    acc += a[i] * b[k - i];
  }
  return acc;
}

// Chooses a nonzero pivot in column k at or below row k; returns false if
// the column is zero (singular matrix).
bool pivot(ElementMatrix& m, std::size_t k, bool& negate) {
  for (std::size_t r = k; r < m.size(); ++r) {
    if (m[r][k].is_zero()) continue;
    if (r != k) {
      std::swap(m[r], m[k]);
      negate = !negate;
    }
    return true;
  }
  return false;
}

void bareiss_row(ElementMatrix& m, std::size_t k, std::size_t i, const CyclotomicElement& prev_inv) {
  const std::size_t n = m.size();
  for (std::size_t j = k + 1; j < n; ++j)
    m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) * prev_inv;
}

CyclotomicElement finish(const ElementMatrix& m, bool negate) {
  CyclotomicElement det = m.back().back();
  return negate ? -det : det;
}

void require_square(const ElementMatrix& m) {
  if (m.empty()) throw DomainError("determinant of an empty matrix");
  for (const auto& row : m)
    if (row.size() != m.size()) throw DomainError("determinant of a non-square matrix");
}

CyclotomicElement character_sum_one(std::span<const CyclotomicElement> conjugates,
                                    const Character& chi) {
  const auto level = conjugates.front().level();
  if (level % chi.modulus != 0) throw DomainError("character modulus does not divide the level");
  const long long step = static_cast<long long>(level / chi.modulus);
  CyclotomicElement acc(conjugates.front().field());
  for (std::size_t i = 0; i < conjugates.size(); ++i)
    acc += conjugates[i].mul_zeta_power(-static_cast<long long>(chi.exponents[i]) * step);
  return acc;
}

}  // namespace

namespace serial {

std::vector<CyclotomicElement> convolve(std::span<const CyclotomicElement> a,
                                        std::span<const CyclotomicElement> b, std::size_t len) {
  if (a.empty() || b.empty()) throw DomainError("convolution of empty sequences");
  std::vector<CyclotomicElement> out;
  out.reserve(len);
  for (std::size_t k = 0; k < len; ++k) out.push_back(convolve_entry(a, b, k));
  return out;
}

CyclotomicElement determinant(ElementMatrix m) {
  require_square(m);
  const std::size_t n = m.size();
  bool negate = false;
  CyclotomicElement prev_inv = CyclotomicElement::from_rational(m[0][0].field(), 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (!pivot(m, k, negate)) return CyclotomicElement(m[0][0].field());
    for (std::size_t i = k + 1; i < n; ++i) bareiss_row(m, k, i, prev_inv);
    prev_inv = m[k][k].inverse();
  }
  return finish(m, negate);
}

std::vector<CyclotomicElement> character_sums(std::span<const CyclotomicElement> conjugates,
                                              std::span<const Character> chars) {
  std::vector<CyclotomicElement> out;
  out.reserve(chars.size());
  for (const auto& chi : chars) out.push_back(character_sum_one(conjugates, chi));
  return out;
}

}  // namespace serial

namespace omp {

std::vector<CyclotomicElement> convolve(std::span<const CyclotomicElement> a,
                                        std::span<const CyclotomicElement> b, std::size_t len) {
  if (a.empty() || b.empty()) throw DomainError("convolution of empty sequences");
  std::vector<CyclotomicElement> out(len, CyclotomicElement(a.front().field()));
  const auto n = static_cast<long long>(len);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long k = 0; k < n; ++k) out[k] = convolve_entry(a, b, static_cast<std::size_t>(k));
  return out;
}

CyclotomicElement determinant(ElementMatrix m) {
  require_square(m);
  const std::size_t n = m.size();
  bool negate = false;
  CyclotomicElement prev_inv = CyclotomicElement::from_rational(m[0][0].field(), 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (!pivot(m, k, negate)) return CyclotomicElement(m[0][0].field());
    const auto rows = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = static_cast<long long>(k) + 1; i < rows; ++i)
      bareiss_row(m, k, static_cast<std::size_t>(i), prev_inv);
    prev_inv = m[k][k].inverse();
  }
  return finish(m, negate);
}

std::vector<CyclotomicElement> character_sums(std::span<const CyclotomicElement> conjugates,
                                              std::span<const Character> chars) {
  if (conjugates.empty()) throw DomainError("character sum over an empty set");
  std::vector<CyclotomicElement> out(chars.size(), CyclotomicElement(conjugates.front().field()));
  const auto n = static_cast<long long>(chars.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long c = 0; c < n; ++c) out[c] = character_sum_one(conjugates, chars[c]);
  return out;
}

}  // namespace omp

int worker_count() { return omp_get_max_threads(); }

}  // namespace normcert::kernels
