#pragma once

#include <span>
#include <vector>

#include "normcert/cyclotomic.hpp"
#include "normcert/galois.hpp"

namespace normcert::kernels {

using ElementMatrix = std::vector<std::vector<CyclotomicElement>>;

/// Reference implementations. These define the results; the OpenMP
/// variants must reproduce them exactly.
namespace serial {

/// out[k] = sum_{i+j=k} a[i] b[j] for k < len. Missing entries count as zero.
std::vector<CyclotomicElement> convolve(std::span<const CyclotomicElement> a,
                                        std::span<const CyclotomicElement> b, std::size_t len);

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
CyclotomicElement determinant(ElementMatrix m);

/// sum_i chi(gamma_i^-1) * conjugates[i] for every character, where the
/// conjugates already live at a level divisible by every character modulus.
std::vector<CyclotomicElement> character_sums(std::span<const CyclotomicElement> conjugates,
                                              std::span<const Character> chars);

}  // namespace serial

namespace omp {

std::vector<CyclotomicElement> convolve(std::span<const CyclotomicElement> a,
                                        std::span<const CyclotomicElement> b, std::size_t len);
CyclotomicElement determinant(ElementMatrix m);
std::vector<CyclotomicElement> character_sums(std::span<const CyclotomicElement> conjugates,
                                              std::span<const Character> chars);

}  // namespace omp

/// Number of OpenMP workers currently configured.
int worker_count();

}  // namespace normcert::kernels
