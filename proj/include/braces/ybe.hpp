#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "braces/brace.hpp"
#include "braces/limits.hpp"

namespace braces {

// Linear cycle set on the additive group of a brace: cs(a, x) = lambda_a^{-1}(x).
struct CycleSetTable {
  AbelianGroup group;
  std::vector<Index> cs;  // row-major, cs[a*n + x]

  Index op(Index a, Index x) const { return cs[static_cast<std::size_t>(a) * group.order() + x]; }
};

CycleSetTable cycle_set_from_brace(const Brace& b);

struct CycleSetReport {
  bool l1 = true;
  bool l2 = true;
  bool bijective = true;
  // b∘a = ᵇa + b with ᵇa the unique x such that cs(b, x) = a.
  bool brace_identity = true;
  std::vector<Index> counterexample;
  bool all_pass() const { return l1 && l2 && bijective && brace_identity; }
};

CycleSetReport check_cycle_set(const CycleSetTable& c, const Brace& b);

// r(x, y) = (sigma_x(y), tau_y(x)), stored as row-major tables
// sigma[x*n + y] and tau[y*n + x].
struct YbeSolution {
  Index n = 0;
  std::vector<Index> sigma;
  std::vector<Index> tau;

  Index s(Index x, Index y) const { return sigma[static_cast<std::size_t>(x) * n + y]; }
  Index t(Index y, Index x) const { return tau[static_cast<std::size_t>(y) * n + x]; }
};

// sigma_x(y) = lambda_x(y), tau_y(x) = sigma_x(y)^{-1} ∘ x ∘ y. Throws
// std::logic_error if this disagrees with tau_y(x) = lambda_{sigma_x(y)}^{-1}(x).
YbeSolution ybe_solution_from_brace(const Brace& b);

YbeSolution flip_solution(Index n);

struct YbeCheck {
  bool pass = true;
  std::vector<Index> counterexample;  // (x, y, z) for YB, (x, y) otherwise
};

// r12 r13 r23 = r23 r13 r12 on all n^3 triples. Throws GuardExceeded above
// limits.max_ybe_order.
YbeCheck verify_yang_baxter(const YbeSolution& s, const Limits& limits = {});
YbeCheck check_involutive(const YbeSolution& s);
YbeCheck check_nondegenerate(const YbeSolution& s);

// sigma_x(y) ∘ tau_y(x) = x ∘ y for all pairs.
YbeCheck check_multiplicative(const YbeSolution& s, const Brace& b);

// `ybe v1`, n, then n^2 lines `x y sigma tau`.
void write_ybe(std::ostream& out, const YbeSolution& s);

}  // namespace braces
