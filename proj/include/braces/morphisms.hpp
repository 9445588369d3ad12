#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "braces/abelian.hpp"
#include "braces/brace.hpp"
#include "braces/limits.hpp"

namespace braces {

// f(a.b) = f(a).f(b) on all pairs. Throws std::invalid_argument when f does
// not map A's additive group to B's.
bool is_brace_homomorphism(const GroupMap& f, const Brace& a, const Brace& b);

// Same, for an arbitrary element map given as a table: false unless the map is
// additive and multiplicative.
bool is_brace_homomorphism(std::span<const Index> f, const Brace& a, const Brace& b);

// Isomorphism invariants used as pre-filters before any search.
struct BraceInvariants {
  std::vector<std::uint32_t> additive;  // prime-power invariants of A⁺
  std::uint64_t socle_order = 0;
  AdjointInvariants adjoint;
  // Sorted multiset of |{(a, b) : a.b = c}| over c.
  std::vector<std::uint64_t> fingerprint;

  friend bool operator==(const BraceInvariants&, const BraceInvariants&) = default;
};

BraceInvariants brace_invariants(const Brace& b);

// Name of the first invariant that separates A from B, if any.
std::optional<std::string> distinguishing_invariant(const BraceInvariants& a,
                                                    const BraceInvariants& b);

// First additive isomorphism A⁺ -> B⁺ (canonical generator-image order) that is
// multiplicative. The identity is tried first when A⁺ and B⁺ coincide.
std::optional<GroupMap> find_isomorphism(const Brace& a, const Brace& b,
                                         const Limits& limits = {});

// Variant reusing precomputed invariants; skips the search when they differ.
std::optional<GroupMap> find_isomorphism(const Brace& a, const BraceInvariants& ia,
                                         const Brace& b, const BraceInvariants& ib,
                                         const Limits& limits = {});

std::vector<GroupMap> automorphism_group(const Brace& a, const Limits& limits = {});

struct DedupeResult {
  // Indices into the input of the first-seen member of each class.
  std::vector<std::size_t> representatives;
  // class_of[i] is the position in `representatives` of input i's class.
  std::vector<std::size_t> class_of;
  std::vector<std::size_t> class_sizes;
};

DedupeResult dedupe_up_to_iso(std::span<const Brace> braces, const Limits& limits = {});

}  // namespace braces
