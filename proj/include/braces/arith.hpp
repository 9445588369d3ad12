#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace braces {

bool is_prime(std::uint64_t n);

// Prime factorization as (prime, exponent) pairs with increasing primes.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

// Multiplicative order of a modulo m (gcd(a, m) must be 1).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

// Smallest generator of (Z/qZ)^x for prime q.
std::uint64_t smallest_primitive_root(std::uint64_t q);

// Inverse of a modulo m; throws std::invalid_argument when gcd(a, m) != 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

// All lists of prime powers describing the abelian groups of order n, each
// grouped by increasing prime with non-increasing powers inside a prime.
std::vector<std::vector<std::uint32_t>> abelian_invariant_lists(std::uint32_t n);

}  // namespace braces
