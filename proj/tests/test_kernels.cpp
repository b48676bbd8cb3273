#include <gtest/gtest.h>

#include <omp.h>

#include <numeric>

#include "normcert/errors.hpp"
#include "normcert/galois.hpp"
#include "normcert/kernels.hpp"
#include "support.hpp"

using namespace normcert;
using normcert::testing::random_element;
using normcert::testing::uniform;

namespace {

using Matrix = kernels::ElementMatrix;

// Laplace expansion along the first row.
CyclotomicElement cofactor_det(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  CyclotomicElement acc(m[0][0].field());
  for (std::size_t j = 0; j < n; ++j) {
    Matrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<CyclotomicElement> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(row);
    }
    const auto term = m[0][j] * cofactor_det(minor);
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

Matrix random_matrix(const FieldPtr& f, std::size_t n, double density) {
  Matrix m(n);
  for (auto& row : m)
    for (std::size_t j = 0; j < n; ++j) row.push_back(random_element(f, density));
  return m;
}

std::vector<CyclotomicElement> random_sequence(const FieldPtr& f, std::size_t n) {
  std::vector<CyclotomicElement> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_element(f, 0.5));
  return v;
}

}  // namespace

TEST(Kernels, DeterminantMatchesCofactorExpansion) {
  for (std::uint32_t level : {1U, 5U, 12U}) {
    const auto f = CyclotomicField::make(level);
    for (std::size_t n = 1; n <= 5; ++n)
      for (int rep = 0; rep < 6; ++rep) {
        // sparse matrices exercise the pivot search
        const auto m = random_matrix(f, n, rep % 2 == 0 ? 0.8 : 0.25);
        const auto expected = cofactor_det(m);
        EXPECT_EQ(kernels::serial::determinant(m), expected);
        EXPECT_EQ(kernels::omp::determinant(m), expected);
      }
  }
}

TEST(Kernels, DeterminantOfSingularMatrixIsZero) {
  const auto f = CyclotomicField::make(7);
  auto m = random_matrix(f, 4, 0.9);
  m[3] = m[0];
  for (auto& v : m[3]) v *= Rational(3);
  EXPECT_TRUE(kernels::serial::determinant(m).is_zero());
  EXPECT_TRUE(kernels::omp::determinant(m).is_zero());
}

TEST(Kernels, ConvolutionSerialEqualsParallel) {
  const auto f = CyclotomicField::make(9);
  for (int workers : {1, 2, 4}) {
    omp_set_num_threads(workers);
    for (int rep = 0; rep < 5; ++rep) {
      const auto a = random_sequence(f, static_cast<std::size_t>(uniform(1, 30)));
      const auto b = random_sequence(f, static_cast<std::size_t>(uniform(1, 30)));
      const auto len = static_cast<std::size_t>(uniform(1, 70));
      const auto s = kernels::serial::convolve(a, b, len);
      EXPECT_EQ(s, kernels::omp::convolve(a, b, len));
      for (std::size_t k = 0; k < len; ++k) {
        CyclotomicElement naive(f);
        for (std::size_t i = 0; i < a.size(); ++i)
          if (k >= i && k - i < b.size()) naive += a[i] * b[k - i];
        EXPECT_EQ(s[k], naive);
      }
    }
  }
  omp_set_num_threads(omp_get_num_procs());
}

TEST(Kernels, CharacterSumsSerialEqualsParallel) {
  const auto g = GaloisGroup::build(21, GroupMode::full);
  for (const auto& h : all_subgroups(g)) {
    const auto chars = characters(h);
    const auto f = CyclotomicField::make(static_cast<std::uint32_t>(std::lcm<std::uint64_t>(21, chars[0].modulus)));
    std::vector<CyclotomicElement> conj;
    for (std::size_t i = 0; i < h.order(); ++i) conj.push_back(random_element(f));
    EXPECT_EQ(kernels::serial::character_sums(conj, chars), kernels::omp::character_sums(conj, chars));
  }
}

TEST(Kernels, RejectsEmptyOrRagged) {
  const auto f = CyclotomicField::make(5);
  EXPECT_THROW(kernels::serial::convolve({}, random_sequence(f, 2), 3), DomainError);
  Matrix ragged{{random_element(f), random_element(f)}, {random_element(f)}};
  EXPECT_THROW(kernels::serial::determinant(ragged), DomainError);
}
