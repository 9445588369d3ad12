#include "braces/morphisms.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace braces {

bool is_brace_homomorphism(const GroupMap& f, const Brace& a, const Brace& b) {
  if (!(f.domain() == a.group()) || !(f.codomain() == b.group()))
    throw std::invalid_argument("is_brace_homomorphism: domain/codomain mismatch");
  return is_brace_homomorphism(f.table(), a, b);
}

bool is_brace_homomorphism(std::span<const Index> f, const Brace& a, const Brace& b) {
  if (f.size() != a.order())
    throw std::invalid_argument("is_brace_homomorphism: map size differs from |A|");
  for (Index v : f)
    if (v >= b.order()) throw std::invalid_argument("is_brace_homomorphism: image out of range");
  const auto& ga = a.group();
  const auto& gb = b.group();
  for (Index x = 0; x < a.order(); ++x)
    for (Index y = 0; y < a.order(); ++y) {
      if (f[ga.add(x, y)] != gb.add(f[x], f[y])) return false;
      if (f[a.mul(x, y)] != b.mul(f[x], f[y])) return false;
    }
  return true;
}

BraceInvariants brace_invariants(const Brace& b) {
  BraceInvariants inv;
  inv.additive = b.group().primary_invariants();
  inv.socle_order = socle(b).size();
  inv.adjoint = adjoint_invariants(b);
  std::vector<std::uint64_t> counts(b.order(), 0);
  for (Index x = 0; x < b.order(); ++x)
    for (Index y = 0; y < b.order(); ++y) ++counts[b.mul(x, y)];
  std::sort(counts.begin(), counts.end());
  inv.fingerprint = std::move(counts);
  return inv;
}

std::optional<std::string> distinguishing_invariant(const BraceInvariants& a,
                                                    const BraceInvariants& b) {
  if (a.additive != b.additive) return "additive-group";
  if (a.socle_order != b.socle_order) return "socle-order";
  if (a.adjoint.exponent != b.adjoint.exponent) return "adjoint-exponent";
  if (a.adjoint.abelianization_order != b.adjoint.abelianization_order)
    return "adjoint-abelianization";
  if (a.adjoint.order_statistics != b.adjoint.order_statistics) return "adjoint-element-orders";
  if (a.fingerprint != b.fingerprint) return "fingerprint";
  return std::nullopt;
}

namespace {

// Rows with many non-zero products first: candidates tend to fail there.
std::vector<Index> row_order(const Brace& a) {
  std::vector<std::pair<Index, Index>> weight;
  for (Index x = 0; x < a.order(); ++x) {
    Index nz = 0;
    for (std::size_t j = 0; j < a.group().rank(); ++j) nz += a.mul(x, a.group().generator(j)) != 0;
    weight.emplace_back(nz, x);
  }
  std::stable_sort(weight.begin(), weight.end(),
                   [](const auto& l, const auto& r) { return l.first > r.first; });
  std::vector<Index> order;
  for (auto [w, x] : weight) order.push_back(x);
  return order;
}

// Multiplicativity against additive generators; exact when both braces satisfy B1.
bool multiplicative_on_generators(const GroupMap& phi, const Brace& a, const Brace& b,
                                  std::span<const Index> rows,
                                  std::span<const Index> generator_images) {
  const auto& g = a.group();
  for (Index x : rows) {
    const Index fx = phi(x);
    for (std::size_t j = 0; j < g.rank(); ++j)
      if (phi(a.mul(x, g.generator(j))) != b.mul(fx, generator_images[j])) return false;
  }
  return true;
}

std::optional<GroupMap> search(const Brace& a, const Brace& b, const std::vector<GroupMap>& isos) {
  const auto rows = row_order(a);
  if (a.group() == b.group()) {
    auto id = GroupMap::identity(a.group());
    if (multiplicative_on_generators(id, a, b, rows, id.images()) && is_brace_homomorphism(id, a, b))
      return id;
  }
  for (const auto& phi : isos) {
    if (!multiplicative_on_generators(phi, a, b, rows, phi.images())) continue;
    if (is_brace_homomorphism(phi, a, b)) return phi;
  }
  return std::nullopt;
}

}  // namespace

std::optional<GroupMap> find_isomorphism(const Brace& a, const BraceInvariants& ia,
                                         const Brace& b, const BraceInvariants& ib,
                                         const Limits& limits) {
  if (a.order() != b.order()) return std::nullopt;
  if (distinguishing_invariant(ia, ib)) return std::nullopt;
  return search(a, b, enumerate_isomorphisms(a.group(), b.group(), limits));
}

std::optional<GroupMap> find_isomorphism(const Brace& a, const Brace& b, const Limits& limits) {
  if (a.order() != b.order() || !a.group().isomorphic_to(b.group())) return std::nullopt;
  return find_isomorphism(a, brace_invariants(a), b, brace_invariants(b), limits);
}

std::vector<GroupMap> automorphism_group(const Brace& a, const Limits& limits) {
  const auto rows = row_order(a);
  std::vector<GroupMap> out;
  for (auto& phi : enumerate_automorphisms(a.group(), limits))
    if (multiplicative_on_generators(phi, a, a, rows, phi.images()) &&
        is_brace_homomorphism(phi, a, a))
      out.push_back(std::move(phi));
  return out;
}

DedupeResult dedupe_up_to_iso(std::span<const Brace> braces, const Limits& limits) {
  DedupeResult result;
  std::vector<BraceInvariants> inv;
  inv.reserve(braces.size());
  for (const auto& b : braces) inv.push_back(brace_invariants(b));

  std::map<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>,
           std::vector<GroupMap>>
      iso_cache;
  for (std::size_t i = 0; i < braces.size(); ++i) {
    std::optional<std::size_t> cls;
    for (std::size_t r = 0; r < result.representatives.size() && !cls; ++r) {
      const std::size_t j = result.representatives[r];
      if (braces[i].order() != braces[j].order()) continue;
      if (distinguishing_invariant(inv[i], inv[j])) continue;
      auto key = std::make_pair(braces[i].group().invariants(), braces[j].group().invariants());
      auto it = iso_cache.find(key);
      if (it == iso_cache.end())
        it = iso_cache
                 .emplace(key, enumerate_isomorphisms(braces[i].group(), braces[j].group(), limits))
                 .first;
      if (search(braces[i], braces[j], it->second)) cls = r;
    }
    if (!cls) {
      cls = result.representatives.size();
      result.representatives.push_back(i);
      result.class_sizes.push_back(0);
    }
    result.class_of.push_back(*cls);
    ++result.class_sizes[*cls];
  }
  return result;
}

}  // namespace braces
