#pragma once

// Finite abelian groups given as direct sums of cyclic groups Z_{n_1} + ... + Z_{n_k}.
//
// Elements are addressed by their mixed-radix index, coords[0] being the most
// significant digit. Every table and file format in the library uses this order.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "braces/limits.hpp"

namespace braces {

using Index = std::uint32_t;

class AbelianGroup {
 public:
  // The trivial group.
  AbelianGroup() = default;

  // Throws std::invalid_argument if some invariant is < 2.
  explicit AbelianGroup(std::vector<std::uint32_t> invariants);

  const std::vector<std::uint32_t>& invariants() const { return invariants_; }
  std::size_t rank() const { return invariants_.size(); }
  Index order() const { return order_; }
  bool contains(Index a) const { return a < order_; }

  std::vector<std::uint32_t> coords(Index a) const;
  std::uint32_t coord(Index a, std::size_t i) const { return (a / strides_[i]) % invariants_[i]; }
  // Throws std::out_of_range for a coordinate outside [0, n_i).
  Index index(std::span<const std::uint32_t> coords) const;

  Index zero() const { return 0; }
  Index add(Index a, Index b) const;
  Index neg(Index a) const;
  Index sub(Index a, Index b) const { return add(a, neg(b)); }
  Index scale(Index a, std::int64_t k) const;
  std::uint64_t element_order(Index a) const;

  // Canonical generator e_i.
  Index generator(std::size_t i) const { return strides_[i]; }
  std::uint64_t exponent() const;

  // Elements of order dividing m.
  std::vector<Index> torsion(std::uint64_t m) const;

  // Sorted prime-power invariants; equal lists iff the groups are isomorphic.
  std::vector<std::uint32_t> primary_invariants() const;
  bool isomorphic_to(const AbelianGroup& other) const {
    return primary_invariants() == other.primary_invariants();
  }

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.invariants_ == b.invariants_;
  }

 private:
  std::vector<std::uint32_t> invariants_;
  std::vector<Index> strides_;
  Index order_ = 1;
};

inline AbelianGroup make_group(std::vector<std::uint32_t> invariants) {
  return AbelianGroup(std::move(invariants));
}

// Direct sum with the factors of `left` first.
AbelianGroup direct_sum(const AbelianGroup& left, const AbelianGroup& right);

// Additive homomorphism, determined by the images of the canonical generators.
class GroupMap {
 public:
  // Throws std::invalid_argument unless images[i] has order dividing n_i.
  GroupMap(AbelianGroup domain, AbelianGroup codomain, std::vector<Index> images);

  static GroupMap identity(const AbelianGroup& g);
  static GroupMap zero(const AbelianGroup& domain, const AbelianGroup& codomain);

  const AbelianGroup& domain() const { return domain_; }
  const AbelianGroup& codomain() const { return codomain_; }
  const std::vector<Index>& images() const { return images_; }

  Index operator()(Index a) const;
  std::vector<Index> table() const;

  // (*this) after `inner`.
  GroupMap compose(const GroupMap& inner) const;
  bool is_bijective() const;
  // Empty when the map is not bijective.
  std::optional<GroupMap> inverse() const;

  friend bool operator==(const GroupMap& a, const GroupMap& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.images_ == b.images_;
  }

 private:
  AbelianGroup domain_;
  AbelianGroup codomain_;
  std::vector<Index> images_;
};

struct PrimaryComponent {
  AbelianGroup subgroup;
  GroupMap inclusion;   // subgroup -> g
  GroupMap projection;  // g -> subgroup
};

// The elements of p-power order, with the CRT inclusion and projection.
PrimaryComponent primary_component(const AbelianGroup& g, std::uint64_t p);

// All additive homomorphisms g -> h in generator-image order.
std::vector<GroupMap> enumerate_homomorphisms(const AbelianGroup& g, const AbelianGroup& h,
                                              const Limits& limits = {});

// All additive isomorphisms g -> h in generator-image order (empty when g, h
// are not isomorphic). Throws GuardExceeded past limits.max_automorphisms.
std::vector<GroupMap> enumerate_isomorphisms(const AbelianGroup& g, const AbelianGroup& h,
                                             const Limits& limits = {});

inline std::vector<GroupMap> enumerate_automorphisms(const AbelianGroup& g,
                                                     const Limits& limits = {}) {
  return enumerate_isomorphisms(g, g, limits);
}

// |Aut(g)| from the prime-power invariants.
std::uint64_t automorphism_count(const AbelianGroup& g);

// Every subgroup as a sorted element list, ordered by size then lexicographically.
std::vector<std::vector<Index>> enumerate_subgroups(const AbelianGroup& g,
                                                    const Limits& limits = {});

// Subgroup generated by `gens`, as a sorted element list.
std::vector<Index> generated_subgroup(const AbelianGroup& g, std::span<const Index> gens);

}  // namespace braces
