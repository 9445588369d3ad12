#include "braces/brace.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "braces/arith.hpp"

namespace braces {

Brace Brace::from_table(AbelianGroup group, std::vector<Index> table) {
  const std::size_t n = group.order();
  if (table.size() != n * n) throw std::invalid_argument("Brace: table must have n*n entries");
  for (Index v : table)
    if (v >= n) throw std::invalid_argument("Brace: table entry out of range");
  return Brace(std::move(group), std::make_shared<const std::vector<Index>>(std::move(table)), {},
               std::nullopt);
}

Brace Brace::from_rule(AbelianGroup group, Rule rule, std::optional<RuleTag> tag) {
  if (!rule) throw std::invalid_argument("Brace: empty rule");
  return Brace(std::move(group), nullptr, std::move(rule), std::move(tag));
}

Brace Brace::materialize() const {
  if (table_) return *this;
  const Index n = order();
  std::vector<Index> t(static_cast<std::size_t>(n) * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = rule_(a, b);
  return Brace(group_, std::make_shared<const std::vector<Index>>(std::move(t)), rule_, tag_);
}

Brace Brace::with_tag(std::optional<RuleTag> tag) const {
  Brace copy = *this;
  copy.tag_ = std::move(tag);
  return copy;
}

Brace Brace::with_cell(Index a, Index b, Index value) const {
  if (a >= order() || b >= order() || value >= order())
    throw std::out_of_range("Brace::with_cell: index out of range");
  const Brace m = materialize();
  auto t = *m.table_;
  t[static_cast<std::size_t>(a) * order() + b] = value;
  return from_table(group_, std::move(t));
}

bool Brace::same_multiplication(const Brace& other) const {
  if (!(group_ == other.group_)) return false;
  for (Index a = 0; a < order(); ++a)
    for (Index b = 0; b < order(); ++b)
      if (mul(a, b) != other.mul(a, b)) return false;
  return true;
}

// ---------------------------------------------------------------------------

namespace {

void require_checkable(const Brace& b, const Limits& limits) {
  const std::uint32_t cap =
      b.has_table() ? limits.max_table_check_order : limits.max_rule_check_order;
  require_guard(b.order() <= cap, "order " + std::to_string(b.order()) +
                                      " exceeds the exhaustive-check guard " +
                                      std::to_string(cap));
}

// Whether x -> f(x) is additive, where f is given as a full table. Uses the
// recurrence f(b) = f(b - e_j) + f(e_j) along the mixed radix, plus the
// order condition n_j f(e_j) = 0 on generators.
template <typename F>
bool row_is_additive(const AbelianGroup& g, F&& f) {
  const Index n = g.order();
  for (std::size_t j = 0; j < g.rank(); ++j)
    if (g.scale(f(g.generator(j)), g.invariants()[j]) != 0) return false;
  if (f(0) != 0) return false;
  std::vector<Index> expected(n, 0);
  for (Index b = 1; b < n; ++b) {
    std::size_t j = g.rank() - 1;
    while (g.coord(b, j) == 0) --j;
    const Index gen = g.generator(j);
    expected[b] = g.add(expected[b - gen], f(gen));
    if (expected[b] != f(b)) return false;
  }
  return true;
}

std::vector<Index> find_b1_counterexample(const Brace& br, Index a) {
  const auto& g = br.group();
  for (Index b = 0; b < g.order(); ++b)
    for (Index c = 0; c < g.order(); ++c)
      if (br.mul(a, g.add(b, c)) != g.add(br.mul(a, b), br.mul(a, c))) return {a, b, c};
  return {};
}

bool b2_holds(const Brace& br, Index a, Index b, Index c) {
  const auto& g = br.group();
  const Index lhs = br.mul(g.add(g.add(br.mul(a, b), a), b), c);
  const Index rhs = g.add(g.add(br.mul(a, br.mul(b, c)), br.mul(a, c)), br.mul(b, c));
  return lhs == rhs;
}

constexpr std::uint64_t kBruteForceTriples = 30'000'000;

}  // namespace

AxiomReport check_axioms(const Brace& input, const Limits& limits) {
  require_checkable(input, limits);
  const Brace b = input.materialize();
  const auto& g = b.group();
  const Index n = g.order();
  AxiomReport report;

  for (Index a = 0; a < n && report.b1.pass; ++a) {
    if (!row_is_additive(g, [&](Index x) { return b.mul(a, x); })) {
      report.b1.pass = false;
      report.b1.counterexample = find_b1_counterexample(b, a);
    }
  }

  // With B1 both sides of B2 are additive in c, so generators suffice.
  std::vector<Index> cs;
  const auto triples = static_cast<std::uint64_t>(n) * n * n;
  if (report.b1.pass || triples > kBruteForceTriples) {
    for (std::size_t j = 0; j < g.rank(); ++j) cs.push_back(g.generator(j));
    report.b2.exhaustive = report.b1.pass;
  } else {
    for (Index c = 0; c < n; ++c) cs.push_back(c);
  }
  for (Index a = 0; a < n && report.b2.pass; ++a)
    for (Index bb = 0; bb < n && report.b2.pass; ++bb)
      for (Index c : cs)
        if (!b2_holds(b, a, bb, c)) {
          report.b2.pass = false;
          report.b2.counterexample = {a, bb, c};
          break;
        }

  std::vector<char> hit(n);
  for (Index a = 0; a < n && report.b3.pass; ++a) {
    std::fill(hit.begin(), hit.end(), 0);
    for (Index x = 0; x < n; ++x) {
      const Index y = b.act(a, x);
      if (hit[y]) {
        report.b3.pass = false;
        report.b3.counterexample = {a, x};
        break;
      }
      hit[y] = 1;
    }
  }

  for (Index a = 0; a < n; ++a) {
    if (b.mul(a, 0) != 0) {
      report.zero_laws.pass = false;
      report.zero_laws.counterexample = {a, 0};
      break;
    }
    if (b.mul(0, a) != 0) {
      report.zero_laws.pass = false;
      report.zero_laws.counterexample = {0, a};
      break;
    }
  }
  return report;
}

bool verify_cocycle(const Brace& input, const Limits& limits) {
  require_checkable(input, limits);
  const Brace b = input.materialize();
  const auto& g = b.group();
  const Index n = g.order();

  std::vector<char> hit(n);
  for (Index a = 0; a < n; ++a) {
    if (!row_is_additive(g, [&](Index x) { return b.act(a, x); })) return false;
    std::fill(hit.begin(), hit.end(), 0);
    for (Index x = 0; x < n; ++x) {
      const Index y = b.act(a, x);
      if (hit[y]) return false;
      hit[y] = 1;
    }
  }
  // Action law on generators; both sides are additive in x by now.
  for (Index a = 0; a < n; ++a)
    for (Index c = 0; c < n; ++c) {
      const Index ac = b.circle(a, c);
      for (std::size_t j = 0; j < g.rank(); ++j) {
        const Index x = g.generator(j);
        if (b.act(ac, x) != b.act(a, b.act(c, x))) return false;
      }
      if (ac != g.add(a, b.act(a, c))) return false;
    }
  return true;
}

bool is_radical_ring(const Brace& b) {
  const auto& g = b.group();
  for (Index a = 0; a < b.order(); ++a)
    for (Index c = 0; c < b.order(); ++c)
      for (std::size_t j = 0; j < g.rank(); ++j) {
        // Right distributivity in the first slot, checked against generators.
        const Index e = g.generator(j);
        if (b.mul(g.add(a, e), c) != g.add(b.mul(a, c), b.mul(e, c))) return false;
      }
  return true;
}

// ---------------------------------------------------------------------------

Index circle_inverse(const Brace& b, Index x) {
  for (Index z = 0; z < b.order(); ++z)
    if (b.circle(x, z) == 0) return z;
  throw std::logic_error("circle_inverse: no inverse, not a brace");
}

std::vector<Index> circle_inverse_table(const Brace& b) {
  std::vector<Index> inv(b.order());
  for (Index x = 0; x < b.order(); ++x) inv[x] = circle_inverse(b, x);
  return inv;
}

std::vector<Index> adjoint_lambda(const Brace& b, Index a) {
  std::vector<Index> perm(b.order());
  for (Index x = 0; x < b.order(); ++x) perm[x] = b.act(a, x);
  return perm;
}

GroupMap adjoint_lambda_map(const Brace& b, Index a) {
  const auto& g = b.group();
  std::vector<Index> images(g.rank());
  for (std::size_t j = 0; j < g.rank(); ++j) images[j] = b.act(a, g.generator(j));
  return GroupMap(g, g, std::move(images));
}

bool adjoint_is_group(const Brace& b, const Limits& limits) {
  require_guard(b.order() <= limits.max_ybe_order,
                "adjoint_is_group: order " + std::to_string(b.order()) + " exceeds guard");
  const Index n = b.order();
  for (Index a = 0; a < n; ++a)
    if (b.circle(a, 0) != a || b.circle(0, a) != a) return false;
  for (Index a = 0; a < n; ++a)
    for (Index c = 0; c < n; ++c) {
      const Index ac = b.circle(a, c);
      for (Index d = 0; d < n; ++d)
        if (b.circle(ac, d) != b.circle(a, b.circle(c, d))) return false;
    }
  for (Index a = 0; a < n; ++a) {
    bool found = false;
    for (Index z = 0; z < n && !found; ++z) found = b.circle(a, z) == 0 && b.circle(z, a) == 0;
    if (!found) return false;
  }
  return true;
}

namespace {

// Subgroup of A° generated by `gens` (closure under right multiplication).
std::vector<char> circle_closure(const Brace& b, const std::vector<Index>& gens) {
  std::vector<char> member(b.order(), 0);
  std::vector<Index> elems{0};
  member[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (Index s : gens) {
      const Index y = b.circle(elems[i], s);
      if (!member[y]) {
        member[y] = 1;
        elems.push_back(y);
      }
    }
  return member;
}

}  // namespace

AdjointInvariants adjoint_invariants(const Brace& b) {
  const Index n = b.order();
  AdjointInvariants inv;
  std::map<std::uint64_t, std::uint64_t> counts;
  for (Index a = 0; a < n; ++a) {
    std::uint64_t ord = 1;
    for (Index x = a; x != 0; x = b.circle(x, a)) ++ord;
    if (a == 0) ord = 1;
    ++counts[ord];
    inv.exponent = std::lcm(inv.exponent, ord);
  }
  inv.order_statistics.assign(counts.begin(), counts.end());

  // Greedy generating set of A°.
  std::vector<Index> gens;
  std::vector<char> member = circle_closure(b, gens);
  for (Index a = 0; a < n; ++a)
    if (!member[a]) {
      gens.push_back(a);
      member = circle_closure(b, gens);
    }
  std::vector<Index> ginv(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) ginv[i] = circle_inverse(b, gens[i]);

  // Derived subgroup: normal closure of the generator commutators.
  std::vector<Index> dgens;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const Index c = b.circle(b.circle(gens[i], gens[j]), b.circle(ginv[i], ginv[j]));
      if (c != 0) dgens.push_back(c);
    }
  std::vector<char> derived = circle_closure(b, dgens);
  for (bool grown = true; grown;) {
    grown = false;
    for (std::size_t k = 0; k < dgens.size(); ++k)
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const Index c = b.circle(b.circle(gens[i], dgens[k]), ginv[i]);
        if (!derived[c]) {
          dgens.push_back(c);
          derived = circle_closure(b, dgens);
          grown = true;
        }
      }
  }
  inv.derived_order = static_cast<std::uint64_t>(std::count(derived.begin(), derived.end(), 1));
  inv.abelianization_order = n / inv.derived_order;
  inv.abelian = inv.derived_order == 1;
  return inv;
}

// ---------------------------------------------------------------------------

SubgroupWitness::SubgroupWitness(const AbelianGroup& group, std::vector<Index> elements)
    : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (elements_.empty() || elements_.front() != 0)
    throw std::invalid_argument("SubgroupWitness: must contain 0");
  for (Index x : elements_) {
    if (!group.contains(x)) throw std::invalid_argument("SubgroupWitness: element out of range");
    if (!contains(group.neg(x))) throw std::invalid_argument("SubgroupWitness: not closed under negation");
    for (Index y : elements_)
      if (!contains(group.add(x, y)))
        throw std::invalid_argument("SubgroupWitness: not closed under addition");
  }
}

bool SubgroupWitness::contains(Index a) const {
  return std::binary_search(elements_.begin(), elements_.end(), a);
}

SubgroupWitness socle(const Brace& b) {
  std::vector<Index> out;
  for (Index a = 0; a < b.order(); ++a) {
    bool zero = true;
    for (Index x = 0; x < b.order() && zero; ++x) zero = b.mul(a, x) == 0;
    if (zero) out.push_back(a);
  }
  return SubgroupWitness(b.group(), std::move(out));
}

IdealReport ideal_predicates(const Brace& b, const SubgroupWitness& s) {
  IdealReport r;
  r.left_ideal = r.right_ideal = true;
  for (Index a = 0; a < b.order(); ++a)
    for (Index x : s.elements()) {
      if (r.left_ideal && !s.contains(b.mul(a, x))) r.left_ideal = false;
      if (r.right_ideal && !s.contains(b.mul(x, a))) r.right_ideal = false;
    }
  r.ideal = r.left_ideal && r.right_ideal;

  const auto soc = socle(b);
  const bool in_socle = std::all_of(s.elements().begin(), s.elements().end(),
                                    [&](Index x) { return soc.contains(x); });
  r.trivial_ideal = r.ideal && in_socle;

  bool normal = true;
  for (Index a = 0; a < b.order() && normal; ++a) {
    const Index ainv = circle_inverse(b, a);
    for (Index x : s.elements())
      if (!s.contains(b.circle(b.circle(a, x), ainv))) {
        normal = false;
        break;
      }
  }
  r.socle_normal_subgroup = in_socle && normal;
  return r;
}

std::vector<PrimaryPart> primary_decomposition(const Brace& b) {
  std::vector<PrimaryPart> parts;
  const auto& g = b.group();
  for (auto [p, e] : factorize(b.order())) {
    auto pc = primary_component(g, p);
    const auto inc = pc.inclusion.table();
    const Index m = pc.subgroup.order();
    std::vector<char> in_part(g.order(), 0);
    for (Index x : inc) in_part[x] = 1;

    std::vector<Index> t(static_cast<std::size_t>(m) * m);
    for (Index x = 0; x < m; ++x)
      for (Index y = 0; y < m; ++y)
        t[static_cast<std::size_t>(x) * m + y] = pc.projection(b.mul(inc[x], inc[y]));

    bool left = true, right = true;
    for (Index a = 0; a < g.order(); ++a)
      for (Index x : inc) {
        left = left && in_part[b.mul(a, x)];
        right = right && in_part[b.mul(x, a)];
      }
    parts.push_back({p, Brace::from_table(pc.subgroup, std::move(t)), pc.inclusion,
                     pc.projection, left, right});
  }
  return parts;
}

Brace twist(const Brace& b, const GroupMap& phi) {
  if (!(phi.domain() == b.group()) || !(phi.codomain() == b.group()))
    throw std::invalid_argument("twist: phi must be an endomorphism of the additive group");
  const auto inv = phi.inverse();
  if (!inv) throw std::invalid_argument("twist: phi is not bijective");
  const auto f = phi.table();
  const auto finv = inv->table();
  const Index n = b.order();
  std::vector<Index> t(static_cast<std::size_t>(n) * n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) t[static_cast<std::size_t>(x) * n + y] = finv[b.mul(f[x], f[y])];
  return Brace::from_table(b.group(), std::move(t));
}

}  // namespace braces
