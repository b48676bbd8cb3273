#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace normcert {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

/// Euclidean residue in [0, m).
std::uint64_t mod(long long a, std::uint64_t m);

/// Prime factorization by trial division, as (prime, exponent) pairs.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// Euler's totient, computed from the factorization.
std::uint64_t phi(std::uint64_t n);

int mobius(std::uint64_t n);

/// Positive divisors in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// Inverse of a modulo m; requires gcd(a, m) = 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

}  // namespace normcert
