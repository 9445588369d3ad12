#pragma once

// Named braces and the classification of braces of order p^2 q (q > p + 1).

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "braces/abelian.hpp"
#include "braces/brace.hpp"
#include "braces/limits.hpp"

namespace braces {

Brace trivial_brace(const AbelianGroup& g);

// The four braces of order p^2.
enum class SmallKind { Tpp, Tp2, Bpp, Bp2 };

// Tpp/Tp2: trivial on Z_p^2 / Z_{p^2}; Bpp: (x1,y1).(x2,y2) = (y1 y2, 0);
// Bp2: x1.x2 = p x1 x2.
Brace bachiller_p2(std::uint64_t p, SmallKind kind);

std::int64_t binomial_c2(std::int64_t x);

// A brace acting on an abelian group, stored as the homomorphism A° -> Aut(C).
// dot(a, c) = psi(a)(c) - c.
class ModuleAction {
 public:
  // Throws std::invalid_argument unless every psi(a) is an automorphism of
  // `carrier` and psi(a∘b) = psi(a) psi(b) for all a, b.
  static ModuleAction from_hom(Brace actor, AbelianGroup carrier,
                               const std::function<GroupMap(Index)>& psi);

  const Brace& actor() const { return data_->actor; }
  const AbelianGroup& carrier() const { return data_->carrier; }
  // psi(a) as a permutation table of the carrier.
  const std::vector<Index>& psi(Index a) const { return data_->psi[a]; }
  Index dot(Index a, Index c) const { return data_->carrier.sub(data_->psi[a][c], c); }

  // M1-M3 over all tuples.
  bool satisfies_module_axioms() const;
  bool is_trivial() const;

 private:
  struct Data {
    Brace actor;
    AbelianGroup carrier;
    std::vector<std::vector<Index>> psi;
  };
  explicit ModuleAction(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

// (a1, c1).(a2, c2) = (a1.a2, a1.c2) on direct_sum(A⁺, C).
Brace semidirect_product(const ModuleAction& action);

struct SemidirectDecomposition {
  Brace p_part;
  ModuleAction action;
  GroupMap p_inclusion;
  GroupMap q_inclusion;
};

// Splits a brace of order p^2 q as A_p ⋉ A_q. Throws std::invalid_argument on
// an order or prime condition violation and std::logic_error if A_q is not a
// trivial ideal.
SemidirectDecomposition semidirect_decompose(const Brace& b, std::uint64_t p, std::uint64_t q,
                                             bool relaxed = false);

// Bijections between adjoint groups of the non-trivial order-p^2 braces and
// abelian groups: gamma (B^{p^2} -> Z_{p^2}), delta (B^{p,p} -> Z_p^2) for odd
// p, and alpha (B^{2,2} -> Z_4), beta (B^4 -> Z_2^2).
enum class AdjointIsoKind { Gamma, Delta, Alpha, Beta };

struct AdjointIso {
  Brace source;
  AbelianGroup target;
  std::vector<Index> forward;
  std::vector<Index> backward;

  // Bijective and f(a∘b) = f(a) + f(b) on all pairs.
  bool is_adjoint_isomorphism() const;
};

AdjointIso explicit_adjoint_iso(std::uint64_t p, AdjointIsoKind kind);

struct UnitRoots {
  std::uint64_t omega = 1;             // generator of the roots of order dividing k
  std::vector<std::uint64_t> elements;  // sorted
};

// omega = g^{(q-1)/d}, d = gcd(k, q-1), g the smallest primitive root mod q.
UnitRoots unit_roots(std::uint64_t q, std::uint64_t k);

std::uint64_t quadratic_nonresidue(std::uint64_t p);

enum class Family { Tppq, Tp2q, Bppq, Bp2q };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

struct ClassificationEntry {
  Family family;
  std::uint64_t p;
  std::uint64_t q;
  std::vector<std::uint64_t> params;  // omega[, mu] as residues mod q
  std::string label;
  Brace brace;
};

// The coarse families. params: (omega, mu) for T^{p,p,q}, B^{p,p,q} (p odd),
// B^{4,q}; (omega) for T^{p^2,q}, B^{p^2,q} (p odd), B^{2,2,q}. Throws
// std::invalid_argument when a parameter violates its order condition.
ClassificationEntry coarse_family(std::uint64_t p, std::uint64_t q, Family family,
                                  std::vector<std::uint64_t> params);

// Throws std::invalid_argument unless p, q are primes with q > p + 1 (or, when
// relaxed, p != q and q divides none of p - 1, p, p + 1).
void require_order_condition(std::uint64_t p, std::uint64_t q, bool relaxed = false);

// The fine classification: one entry per isomorphism class.
std::vector<ClassificationEntry> classify(std::uint64_t p, std::uint64_t q, bool relaxed = false);

std::uint64_t count_formula(std::uint64_t p, std::uint64_t q, bool relaxed = false);

struct OrbitClassification {
  std::uint64_t root_order = 1;  // d = gcd(|A_p|, q - 1)
  std::uint64_t root = 1;        // canonical primitive d-th root of unity mod q
  // Every homomorphism A_p° -> Z_d as a value table, in canonical order.
  std::vector<std::vector<std::uint32_t>> homs;
  // Indices into homs: the first member of each Aut(A_p)-orbit.
  std::vector<std::size_t> representatives;
  std::vector<std::size_t> orbit_sizes;
};

OrbitClassification orbit_classification(const Brace& ap, std::uint64_t q,
                                          const Limits& limits = {});

// A_p ⋉ Z_q with A_p acting through x -> root^{f(x)}.
Brace semidirect_from_hom(const Brace& ap, std::uint64_t q, std::uint64_t root,
                          const std::vector<std::uint32_t>& f);

// Semidirect products from all orbit representatives over the four braces of
// order p^2: the classification recomputed from group actions alone.
std::vector<Brace> orbit_semidirect_products(std::uint64_t p, std::uint64_t q,
                                             const Limits& limits = {});

}  // namespace braces
