#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "braces/abelian.hpp"
#include "braces/limits.hpp"

namespace braces {

// Family tag carried by braces built from a closed-form rule. `params` lists
// the integers that reproduce the rule, in the order used by brace files.
struct RuleTag {
  std::string family;
  std::vector<std::int64_t> params;

  friend bool operator==(const RuleTag&, const RuleTag&) = default;
};

// A finite left brace (A, +, .). The multiplication is backed either by a dense
// row-major table (entry a*n + b holds a.b) or by a closed-form rule; rules
// can be materialized into a table on demand.
class Brace {
 public:
  using Rule = std::function<Index(Index, Index)>;

  // Throws std::invalid_argument on a wrong size or an entry outside [0, n).
  static Brace from_table(AbelianGroup group, std::vector<Index> table);
  static Brace from_rule(AbelianGroup group, Rule rule, std::optional<RuleTag> tag = {});

  const AbelianGroup& group() const { return group_; }
  Index order() const { return group_.order(); }

  Index mul(Index a, Index b) const {
    return table_ ? (*table_)[static_cast<std::size_t>(a) * group_.order() + b] : rule_(a, b);
  }
  Index circle(Index a, Index b) const { return group_.add(group_.add(a, b), mul(a, b)); }
  // The adjoint action a . x + x.
  Index act(Index a, Index x) const { return group_.add(mul(a, x), x); }

  bool has_table() const { return static_cast<bool>(table_); }
  // Requires has_table().
  std::span<const Index> table() const { return *table_; }
  // Same brace, table-backed. Keeps the rule tag.
  Brace materialize() const;

  const std::optional<RuleTag>& tag() const { return tag_; }
  Brace with_tag(std::optional<RuleTag> tag) const;

  // Table-backed copy with one cell overwritten.
  Brace with_cell(Index a, Index b, Index value) const;

  // Same group and identical products on all pairs.
  bool same_multiplication(const Brace& other) const;

 private:
  Brace(AbelianGroup group, std::shared_ptr<const std::vector<Index>> table, Rule rule,
        std::optional<RuleTag> tag)
      : group_(std::move(group)), table_(std::move(table)), rule_(std::move(rule)),
        tag_(std::move(tag)) {}

  AbelianGroup group_;
  std::shared_ptr<const std::vector<Index>> table_;
  Rule rule_;
  std::optional<RuleTag> tag_;
};

// ---------------------------------------------------------------------------
// Axioms

struct AxiomCheck {
  bool pass = true;
  // False when only a necessary subset of tuples was examined.
  bool exhaustive = true;
  // First counterexample tuple (a, b, c) / (a, b) / (a) depending on the axiom.
  std::vector<Index> counterexample;
};

struct AxiomReport {
  AxiomCheck b1;
  AxiomCheck b2;
  AxiomCheck b3;
  AxiomCheck zero_laws;
  bool all_pass() const { return b1.pass && b2.pass && b3.pass && zero_laws.pass; }
};

// Throws GuardExceeded for orders above the table/rule guards.
AxiomReport check_axioms(const Brace& b, const Limits& limits = {});

// The identity map A° -> A⁺ is a bijective 1-cocycle: every lambda_a is an
// additive bijection, lambda_{a∘b} = lambda_a lambda_b, and a∘b = a + a•b.
bool verify_cocycle(const Brace& b, const Limits& limits = {});

// Right distributivity (B4), i.e. the brace comes from a radical ring.
bool is_radical_ring(const Brace& b);

// ---------------------------------------------------------------------------
// Adjoint group

// The unique z with x∘z = 0. Linear scan.
Index circle_inverse(const Brace& b, Index x);
std::vector<Index> circle_inverse_table(const Brace& b);

// x -> a.x + x as a permutation table.
std::vector<Index> adjoint_lambda(const Brace& b, Index a);
// The same map as an additive endomorphism (given by generator images).
GroupMap adjoint_lambda_map(const Brace& b, Index a);

// Full check that (A, ∘) is a group: identity 0, associativity, inverses.
bool adjoint_is_group(const Brace& b, const Limits& limits = {});

struct AdjointInvariants {
  std::uint64_t exponent = 1;
  // (element order, count) sorted by order.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> order_statistics;
  std::uint64_t derived_order = 1;
  std::uint64_t abelianization_order = 1;
  bool abelian = true;

  friend bool operator==(const AdjointInvariants&, const AdjointInvariants&) = default;
};

AdjointInvariants adjoint_invariants(const Brace& b);

// ---------------------------------------------------------------------------
// Substructures

// An additive subgroup of a brace, as a sorted element list.
class SubgroupWitness {
 public:
  // Throws std::invalid_argument unless `elements` is an additive subgroup.
  SubgroupWitness(const AbelianGroup& group, std::vector<Index> elements);

  const std::vector<Index>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(Index a) const;

 private:
  std::vector<Index> elements_;
};

SubgroupWitness socle(const Brace& b);

struct IdealReport {
  bool left_ideal = false;
  bool right_ideal = false;
  bool ideal = false;
  bool trivial_ideal = false;
  // Contained in Soc(A) and normal in A°: equivalent to trivial_ideal.
  bool socle_normal_subgroup = false;
};

IdealReport ideal_predicates(const Brace& b, const SubgroupWitness& s);

struct PrimaryPart {
  std::uint64_t prime;
  Brace brace;
  GroupMap inclusion;
  GroupMap projection;
  bool left_ideal;
  // A_p need not be a right ideal; reported, not an error.
  bool right_ideal;
};

std::vector<PrimaryPart> primary_decomposition(const Brace& b);

// a ._phi b := phi^{-1}(phi(a) . phi(b)). Throws std::invalid_argument when phi
// is not an automorphism of b.group().
Brace twist(const Brace& b, const GroupMap& phi);

}  // namespace braces
