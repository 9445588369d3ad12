#pragma once

// Exhaustive enumeration of brace structures on a finite abelian group, found
// as regular subgroups {(a, lambda_a)} of the holomorph A ⋊ Aut(A).

#include <cstdint>
#include <map>
#include <random>
#include <unordered_map>
#include <vector>

#include "braces/abelian.hpp"
#include "braces/brace.hpp"
#include "braces/limits.hpp"

namespace braces {

struct LambdaEnumeration {
  AbelianGroup group;
  std::vector<GroupMap> automorphisms;  // canonical generator-image order
  // solutions[k][a]: index into `automorphisms` of lambda_a.
  std::vector<std::vector<std::uint32_t>> solutions;
  std::map<std::vector<std::uint32_t>, std::size_t> solution_index;
  // Permutation tables of `automorphisms`, their inverses, and a lookup from
  // generator images (packed base |A|) to the index.
  std::vector<std::vector<Index>> aut_tables;
  std::vector<std::uint32_t> aut_inverse;
  std::unordered_map<std::uint64_t, std::uint32_t> aut_lookup;
  // One solution per orbit of Aut(A) acting by conjugation, in discovery order.
  std::vector<std::size_t> representatives;
  std::vector<std::size_t> orbit_sizes;

  // Index of automorphisms[i] after automorphisms[j].
  std::uint32_t compose(std::uint32_t i, std::uint32_t j) const;

  // a.b = lambda_a(b) - b, table-backed.
  Brace brace(std::size_t k) const;
  // Index of the solution equal to `lambda`, or -1.
  std::ptrdiff_t find(const std::vector<std::uint32_t>& lambda) const;
  // (psi . lambda)_{psi(b)} = psi lambda_b psi^{-1}.
  std::vector<std::uint32_t> conjugate(const std::vector<std::uint32_t>& lambda,
                                       std::size_t psi) const;
};

// Throws GuardExceeded above limits.max_enumeration_order or the automorphism guard.
LambdaEnumeration enumerate_lambda_maps(const AbelianGroup& g, const Limits& limits = {});

// Every brace structure on g, each exactly once as a function.
std::vector<Brace> enumerate_braces_on(const AbelianGroup& g, const Limits& limits = {});

// One brace per isomorphism class over all abelian groups of order n.
std::vector<Brace> enumerate_braces(std::uint32_t n, const Limits& limits = {});

// Number of isomorphism classes of braces of order n.
std::uint64_t brace_count(std::uint32_t n, const Limits& limits = {});

// Twists `trials` random solutions by random automorphisms and checks the
// result is again among the solutions.
bool twist_closed(const LambdaEnumeration& e, std::mt19937_64& rng, std::size_t trials);

}  // namespace braces
