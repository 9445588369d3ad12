#include "braces/abelian.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "braces/arith.hpp"

namespace braces {

AbelianGroup::AbelianGroup(std::vector<std::uint32_t> invariants)
    : invariants_(std::move(invariants)), strides_(invariants_.size()) {
  std::uint64_t order = 1;
  for (std::size_t i = invariants_.size(); i-- > 0;) {
    if (invariants_[i] < 2)
      throw std::invalid_argument("AbelianGroup: invariant " + std::to_string(invariants_[i]) +
                                  " < 2");
    strides_[i] = static_cast<Index>(order);
    order *= invariants_[i];
    if (order > 0xffffffffULL) throw std::invalid_argument("AbelianGroup: order too large");
  }
  order_ = static_cast<Index>(order);
}

std::vector<std::uint32_t> AbelianGroup::coords(Index a) const {
  std::vector<std::uint32_t> c(rank());
  for (std::size_t i = 0; i < rank(); ++i) c[i] = coord(a, i);
  return c;
}

Index AbelianGroup::index(std::span<const std::uint32_t> c) const {
  if (c.size() != rank()) throw std::out_of_range("AbelianGroup::index: wrong rank");
  Index a = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (c[i] >= invariants_[i]) throw std::out_of_range("AbelianGroup::index: coordinate out of range");
    a += c[i] * strides_[i];
  }
  return a;
}

Index AbelianGroup::add(Index a, Index b) const {
  Index out = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    const std::uint32_t n = invariants_[i];
    std::uint32_t s = (a / strides_[i]) % n + (b / strides_[i]) % n;
    if (s >= n) s -= n;
    out += s * strides_[i];
  }
  return out;
}

Index AbelianGroup::neg(Index a) const {
  Index out = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    const std::uint32_t n = invariants_[i];
    const std::uint32_t c = (a / strides_[i]) % n;
    out += (c == 0 ? 0 : n - c) * strides_[i];
  }
  return out;
}

Index AbelianGroup::scale(Index a, std::int64_t k) const {
  Index out = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    const auto n = static_cast<std::int64_t>(invariants_[i]);
    const auto c = static_cast<std::int64_t>((a / strides_[i]) % invariants_[i]);
    const std::int64_t km = ((k % n) + n) % n;
    out += static_cast<Index>((c * km) % n) * strides_[i];
  }
  return out;
}

std::uint64_t AbelianGroup::element_order(Index a) const {
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < rank(); ++i) {
    const std::uint64_t n = invariants_[i];
    const std::uint64_t c = coord(a, i);
    ord = std::lcm(ord, n / std::gcd(n, c));
  }
  return ord;
}

std::uint64_t AbelianGroup::exponent() const {
  std::uint64_t e = 1;
  for (auto n : invariants_) e = std::lcm(e, static_cast<std::uint64_t>(n));
  return e;
}

std::vector<Index> AbelianGroup::torsion(std::uint64_t m) const {
  std::vector<Index> out;
  for (Index a = 0; a < order_; ++a)
    if (m % element_order(a) == 0) out.push_back(a);
  return out;
}

std::vector<std::uint32_t> AbelianGroup::primary_invariants() const {
  std::vector<std::uint32_t> out;
  for (auto n : invariants_) {
    for (auto [p, e] : factorize(n)) {
      std::uint32_t q = 1;
      for (unsigned i = 0; i < e; ++i) q *= static_cast<std::uint32_t>(p);
      out.push_back(q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

AbelianGroup direct_sum(const AbelianGroup& left, const AbelianGroup& right) {
  auto inv = left.invariants();
  inv.insert(inv.end(), right.invariants().begin(), right.invariants().end());
  return AbelianGroup(std::move(inv));
}

// ---------------------------------------------------------------------------

GroupMap::GroupMap(AbelianGroup domain, AbelianGroup codomain, std::vector<Index> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (images_.size() != domain_.rank())
    throw std::invalid_argument("GroupMap: need one image per generator");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (!codomain_.contains(images_[i]))
      throw std::invalid_argument("GroupMap: image outside codomain");
    if (domain_.invariants()[i] % codomain_.element_order(images_[i]) != 0)
      throw std::invalid_argument("GroupMap: image order does not divide generator order");
  }
}

GroupMap GroupMap::identity(const AbelianGroup& g) {
  std::vector<Index> images(g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i) images[i] = g.generator(i);
  return GroupMap(g, g, std::move(images));
}

GroupMap GroupMap::zero(const AbelianGroup& domain, const AbelianGroup& codomain) {
  return GroupMap(domain, codomain, std::vector<Index>(domain.rank(), 0));
}

Index GroupMap::operator()(Index a) const {
  Index out = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const std::uint32_t c = domain_.coord(a, i);
    if (c != 0) out = codomain_.add(out, codomain_.scale(images_[i], c));
  }
  return out;
}

std::vector<Index> GroupMap::table() const {
  std::vector<Index> t(domain_.order());
  for (Index a = 0; a < domain_.order(); ++a) t[a] = (*this)(a);
  return t;
}

GroupMap GroupMap::compose(const GroupMap& inner) const {
  if (!(inner.codomain_ == domain_)) throw std::invalid_argument("GroupMap::compose: mismatch");
  std::vector<Index> images(inner.images_.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = (*this)(inner.images_[i]);
  return GroupMap(inner.domain_, codomain_, std::move(images));
}

bool GroupMap::is_bijective() const {
  if (domain_.order() != codomain_.order()) return false;
  std::vector<bool> hit(codomain_.order(), false);
  for (Index a = 0; a < domain_.order(); ++a) {
    const Index b = (*this)(a);
    if (hit[b]) return false;
    hit[b] = true;
  }
  return true;
}

std::optional<GroupMap> GroupMap::inverse() const {
  if (domain_.order() != codomain_.order()) return std::nullopt;
  std::vector<Index> inv(codomain_.order(), 0);
  std::vector<bool> hit(codomain_.order(), false);
  for (Index a = 0; a < domain_.order(); ++a) {
    const Index b = (*this)(a);
    if (hit[b]) return std::nullopt;
    hit[b] = true;
    inv[b] = a;
  }
  std::vector<Index> images(codomain_.rank());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = inv[codomain_.generator(i)];
  return GroupMap(codomain_, domain_, std::move(images));
}

// ---------------------------------------------------------------------------

PrimaryComponent primary_component(const AbelianGroup& g, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("primary_component: p not prime");
  struct Part {
    std::size_t factor;
    std::uint32_t prime_power;
    std::uint32_t cofactor;
  };
  std::vector<Part> parts;
  std::vector<std::uint32_t> sub_inv;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    std::uint32_t n = g.invariants()[i];
    std::uint32_t pp = 1;
    while (n % p == 0) {
      n /= static_cast<std::uint32_t>(p);
      pp *= static_cast<std::uint32_t>(p);
    }
    if (pp > 1) {
      parts.push_back({i, pp, n});
      sub_inv.push_back(pp);
    }
  }
  AbelianGroup sub(sub_inv);

  std::vector<Index> inc_images(sub.rank());
  for (std::size_t j = 0; j < parts.size(); ++j)
    inc_images[j] = g.scale(g.generator(parts[j].factor), parts[j].cofactor);

  std::vector<Index> proj_images(g.rank(), 0);
  for (std::size_t j = 0; j < parts.size(); ++j) {
    // x -> (m^{-1} x mod p^e) where m is the cofactor of the p-part.
    const auto minv = inverse_mod(parts[j].cofactor % parts[j].prime_power, parts[j].prime_power);
    proj_images[parts[j].factor] = sub.scale(sub.generator(j), static_cast<std::int64_t>(minv));
  }
  return {sub, GroupMap(sub, g, std::move(inc_images)), GroupMap(g, sub, std::move(proj_images))};
}

// ---------------------------------------------------------------------------

std::vector<GroupMap> enumerate_homomorphisms(const AbelianGroup& g, const AbelianGroup& h,
                                              const Limits& limits) {
  std::vector<std::vector<Index>> choices(g.rank());
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    choices[i] = h.torsion(g.invariants()[i]);
    total *= choices[i].size();
    require_guard(total <= limits.max_homomorphisms,
                  "enumerate_homomorphisms: more than " +
                      std::to_string(limits.max_homomorphisms) + " maps");
  }
  std::vector<GroupMap> out;
  out.reserve(total);
  std::vector<std::size_t> pos(g.rank(), 0);
  std::vector<Index> images(g.rank());
  while (true) {
    for (std::size_t i = 0; i < g.rank(); ++i) images[i] = choices[i][pos[i]];
    out.emplace_back(g, h, images);
    std::size_t i = g.rank();
    while (i > 0) {
      --i;
      if (++pos[i] < choices[i].size()) break;
      pos[i] = 0;
      if (i == 0) return out;
    }
    if (g.rank() == 0) return out;
  }
}

namespace {

struct IsoSearch {
  const AbelianGroup& g;
  const AbelianGroup& h;
  const Limits& limits;
  std::vector<std::vector<Index>> choices;
  std::vector<Index> images;
  std::vector<GroupMap> out;

  // member[x]: x lies in the subgroup spanned by the images chosen so far.
  void run(std::size_t depth, std::vector<char>& member, std::vector<Index>& span) {
    if (depth == g.rank()) {
      require_guard(out.size() < limits.max_automorphisms,
                    "enumerate_isomorphisms: more than " +
                        std::to_string(limits.max_automorphisms) + " maps");
      out.emplace_back(g, h, images);
      return;
    }
    const std::uint32_t n = g.invariants()[depth];
    for (Index x : choices[depth]) {
      // The new cyclic part must meet the current span trivially.
      bool independent = true;
      Index y = x;
      for (std::uint32_t k = 1; k < n; ++k, y = h.add(y, x)) {
        if (member[y]) {
          independent = false;
          break;
        }
      }
      if (!independent) continue;
      std::vector<Index> grown;
      grown.reserve(span.size() * n);
      Index mult = 0;
      for (std::uint32_t k = 0; k < n; ++k, mult = h.add(mult, x))
        for (Index s : span) grown.push_back(h.add(s, mult));
      for (Index z : grown) member[z] = 1;
      images[depth] = x;
      run(depth + 1, member, grown);
      for (Index z : grown) member[z] = 0;
      for (Index s : span) member[s] = 1;
    }
  }
};

}  // namespace

std::vector<GroupMap> enumerate_isomorphisms(const AbelianGroup& g, const AbelianGroup& h,
                                             const Limits& limits) {
  if (!g.isomorphic_to(h)) return {};
  IsoSearch search{g, h, limits, std::vector<std::vector<Index>>(g.rank()),
                   std::vector<Index>(g.rank()), {}};
  for (std::size_t i = 0; i < g.rank(); ++i)
    for (Index x = 0; x < h.order(); ++x)
      if (h.element_order(x) == g.invariants()[i]) search.choices[i].push_back(x);
  std::vector<char> member(h.order(), 0);
  member[0] = 1;
  std::vector<Index> span{0};
  search.run(0, member, span);
  return std::move(search.out);
}

std::uint64_t automorphism_count(const AbelianGroup& g) {
  std::map<std::uint64_t, std::vector<unsigned>> exps;
  for (auto q : g.primary_invariants()) {
    const auto f = factorize(q);
    exps[f[0].first].push_back(f[0].second);
  }
  std::uint64_t total = 1;
  for (auto& [p, e] : exps) {
    std::sort(e.begin(), e.end());
    const std::size_t m = e.size();
    auto pw = [p = p](std::uint64_t k) {
      std::uint64_t r = 1;
      for (std::uint64_t i = 0; i < k; ++i) r *= p;
      return r;
    };
    for (std::size_t k = 0; k < m; ++k) {
      std::size_t d = k, c = k;
      while (d + 1 < m && e[d + 1] == e[k]) ++d;
      while (c > 0 && e[c - 1] == e[k]) --c;
      // 1-based d_k = d + 1 and c_k = c + 1.
      total *= pw(d + 1) - pw(k);
      total *= pw(static_cast<std::uint64_t>(e[k]) * (m - (d + 1)));
      total *= pw(static_cast<std::uint64_t>(e[k] - 1) * (m - (c + 1) + 1));
    }
  }
  return total;
}

std::vector<Index> generated_subgroup(const AbelianGroup& g, std::span<const Index> gens) {
  std::vector<char> member(g.order(), 0);
  std::vector<Index> elems{0};
  member[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (Index x : gens) {
      const Index y = g.add(elems[i], x);
      if (!member[y]) {
        member[y] = 1;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<std::vector<Index>> enumerate_subgroups(const AbelianGroup& g, const Limits& limits) {
  require_guard(g.order() <= limits.max_subgroup_order,
                "enumerate_subgroups: order " + std::to_string(g.order()) + " exceeds guard");
  std::set<std::vector<Index>> seen;
  std::vector<std::vector<Index>> frontier{{0}};
  seen.insert({0});
  while (!frontier.empty()) {
    std::vector<std::vector<Index>> next;
    for (const auto& s : frontier) {
      std::vector<char> member(g.order(), 0);
      for (Index x : s) member[x] = 1;
      for (Index x = 0; x < g.order(); ++x) {
        if (member[x]) continue;
        std::vector<Index> gens = s;
        gens.push_back(x);
        auto t = generated_subgroup(g, gens);
        if (seen.insert(t).second) next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<Index>> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

}  // namespace braces
