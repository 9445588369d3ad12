#include "braces/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "braces/arith.hpp"
#include "braces/morphisms.hpp"

namespace braces {

namespace {

std::uint32_t u32(std::uint64_t v) { return static_cast<std::uint32_t>(v); }

void require_prime(std::uint64_t p, const char* what) {
  if (!is_prime(p)) throw std::invalid_argument(std::string(what) + ": " + std::to_string(p) + " is not prime");
}

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

}  // namespace

Brace trivial_brace(const AbelianGroup& g) {
  return Brace::from_rule(g, [](Index, Index) -> Index { return 0; }, RuleTag{"trivial", {}});
}

Brace bachiller_p2(std::uint64_t p, SmallKind kind) {
  require_prime(p, "bachiller_p2");
  const AbelianGroup vec({u32(p), u32(p)});
  const AbelianGroup cyc({u32(p * p)});
  switch (kind) {
    case SmallKind::Tpp:
      return trivial_brace(vec);
    case SmallKind::Tp2:
      return trivial_brace(cyc);
    case SmallKind::Bpp: {
      const auto pp = u32(p);
      // Index of (x, y) is x*p + y.
      return Brace::from_rule(
          vec, [pp](Index a, Index b) -> Index { return ((a % pp) * (b % pp) % pp) * pp; },
          RuleTag{"Bpp", {static_cast<std::int64_t>(p)}});
    }
    case SmallKind::Bp2: {
      const std::uint64_t n = p * p;
      return Brace::from_rule(
          cyc, [p, n](Index a, Index b) -> Index { return u32(p * a % n * b % n); },
          RuleTag{"Bp2", {static_cast<std::int64_t>(p)}});
    }
  }
  throw std::invalid_argument("bachiller_p2: unknown kind");
}

std::int64_t binomial_c2(std::int64_t x) {
  if (x < 0) throw std::invalid_argument("binomial_c2: negative argument");
  return x * (x - 1) / 2;
}

// ---------------------------------------------------------------------------

ModuleAction ModuleAction::from_hom(Brace actor, AbelianGroup carrier,
                                    const std::function<GroupMap(Index)>& psi) {
  const Index n = actor.order();
  std::vector<std::vector<Index>> tables(n);
  for (Index a = 0; a < n; ++a) {
    const GroupMap m = psi(a);
    if (!(m.domain() == carrier) || !(m.codomain() == carrier))
      throw std::invalid_argument("ModuleAction: psi(a) must be an endomorphism of the carrier");
    if (!m.is_bijective())
      throw std::invalid_argument("ModuleAction: psi(" + std::to_string(a) + ") not bijective");
    tables[a] = m.table();
  }
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      const auto& ab = tables[actor.circle(a, b)];
      for (std::size_t j = 0; j < carrier.rank(); ++j) {
        const Index e = carrier.generator(j);
        if (ab[e] != tables[a][tables[b][e]])
          throw std::invalid_argument("ModuleAction: psi is not a homomorphism from the adjoint group");
      }
    }
  return ModuleAction(std::make_shared<const Data>(Data{std::move(actor), std::move(carrier),
                                                        std::move(tables)}));
}

bool ModuleAction::satisfies_module_axioms() const {
  const auto& a = actor();
  const auto& c = carrier();
  for (Index x = 0; x < c.order(); ++x)
    if (dot(0, x) != 0) return false;
  for (Index s = 0; s < a.order(); ++s)
    for (Index x = 0; x < c.order(); ++x)
      for (Index y = 0; y < c.order(); ++y)
        if (dot(s, c.add(x, y)) != c.add(dot(s, x), dot(s, y))) return false;
  for (Index s = 0; s < a.order(); ++s)
    for (Index t = 0; t < a.order(); ++t) {
      const Index st = a.circle(s, t);
      for (Index x = 0; x < c.order(); ++x)
        if (dot(st, x) != c.add(c.add(dot(s, x), dot(t, x)), dot(s, dot(t, x)))) return false;
    }
  return true;
}

bool ModuleAction::is_trivial() const {
  for (const auto& t : data_->psi)
    for (Index x = 0; x < t.size(); ++x)
      if (t[x] != x) return false;
  return true;
}

Brace semidirect_product(const ModuleAction& action) {
  if (!action.satisfies_module_axioms())
    throw std::invalid_argument("semidirect_product: module axioms M1-M3 fail");
  const Brace a = action.actor().materialize();
  const Index m = action.carrier().order();
  auto rule = [a, action, m](Index x, Index y) -> Index {
    const Index xa = x / m;
    const Index ya = y / m;
    const Index yc = y % m;
    return a.mul(xa, ya) * m + action.dot(xa, yc);
  };
  return Brace::from_rule(direct_sum(a.group(), action.carrier()), rule);
}

void require_order_condition(std::uint64_t p, std::uint64_t q, bool relaxed) {
  require_prime(p, "order condition");
  require_prime(q, "order condition");
  if (relaxed) {
    if (p == q || (p - 1) % q == 0 || p % q == 0 || (p + 1) % q == 0)
      throw std::invalid_argument("q must divide none of p-1, p, p+1");
  } else if (q <= p + 1) {
    throw std::invalid_argument("q > p + 1 is required (q = " + std::to_string(q) +
                                ", p = " + std::to_string(p) + ")");
  }
}

SemidirectDecomposition semidirect_decompose(const Brace& b, std::uint64_t p, std::uint64_t q,
                                             bool relaxed) {
  require_order_condition(p, q, relaxed);
  if (b.order() != p * p * q)
    throw std::invalid_argument("semidirect_decompose: order is not p^2 q");
  auto parts = primary_decomposition(b);
  const auto find = [&](std::uint64_t r) -> const PrimaryPart& {
    for (const auto& part : parts)
      if (part.prime == r) return part;
    throw std::logic_error("semidirect_decompose: missing primary component");
  };
  const PrimaryPart& pp = find(p);
  const PrimaryPart& qp = find(q);

  const SubgroupWitness aq(b.group(), qp.inclusion.table());
  if (!ideal_predicates(b, aq).trivial_ideal)
    throw std::logic_error("semidirect_decompose: A_q is not a trivial ideal");

  const AbelianGroup& carrier = qp.brace.group();
  auto psi = [&](Index x) {
    std::vector<Index> images(carrier.rank());
    for (std::size_t j = 0; j < carrier.rank(); ++j)
      images[j] = qp.projection(b.act(pp.inclusion(x), qp.inclusion(carrier.generator(j))));
    return GroupMap(carrier, carrier, std::move(images));
  };
  auto action = ModuleAction::from_hom(pp.brace, carrier, psi);
  return {pp.brace, std::move(action), pp.inclusion, qp.inclusion};
}

// ---------------------------------------------------------------------------

bool AdjointIso::is_adjoint_isomorphism() const {
  const Index n = source.order();
  if (forward.size() != n || target.order() != n) return false;
  std::vector<char> hit(n, 0);
  for (Index v : forward) {
    if (v >= n || hit[v]) return false;
    hit[v] = 1;
  }
  for (Index x = 0; x < n; ++x) {
    if (backward[forward[x]] != x) return false;
    for (Index y = 0; y < n; ++y)
      if (forward[source.circle(x, y)] != target.add(forward[x], forward[y])) return false;
  }
  return true;
}

AdjointIso explicit_adjoint_iso(std::uint64_t p, AdjointIsoKind kind) {
  require_prime(p, "explicit_adjoint_iso");
  const bool binary = kind == AdjointIsoKind::Alpha || kind == AdjointIsoKind::Beta;
  if (!binary && p == 2)
    throw std::invalid_argument("explicit_adjoint_iso: gamma/delta are not defined for p = 2");
  if (binary && p != 2) throw std::invalid_argument("explicit_adjoint_iso: alpha/beta need p = 2");

  const auto sp = static_cast<std::int64_t>(p);
  AdjointIso iso{bachiller_p2(p, SmallKind::Bp2), AbelianGroup({u32(p * p)}), {}, {}};
  switch (kind) {
    case AdjointIsoKind::Gamma:
      iso.forward.resize(p * p);
      for (std::int64_t x = 0; x < sp * sp; ++x)
        iso.forward[x] = u32(mod(x - sp * binomial_c2(x), sp * sp));
      break;
    case AdjointIsoKind::Delta:
      iso.source = bachiller_p2(p, SmallKind::Bpp);
      iso.target = AbelianGroup({u32(p), u32(p)});
      iso.forward.resize(p * p);
      for (std::int64_t x = 0; x < sp; ++x)
        for (std::int64_t y = 0; y < sp; ++y)
          iso.forward[x * sp + y] = u32(mod(x - binomial_c2(y), sp) * sp + y);
      break;
    case AdjointIsoKind::Alpha:
      // (x, y) -> binary string xy read in Z_4; index of (x, y) is 2x + y.
      iso.source = bachiller_p2(2, SmallKind::Bpp);
      iso.target = AbelianGroup({4});
      iso.forward = {0, 1, 2, 3};
      break;
    case AdjointIsoKind::Beta:
      // xy in Z_4 -> (x, y) in Z_2^2, whose index is again 2x + y.
      iso.target = AbelianGroup({2, 2});
      iso.forward = {0, 1, 2, 3};
      break;
  }
  iso.backward.assign(iso.forward.size(), 0);
  for (Index x = 0; x < iso.forward.size(); ++x) iso.backward[iso.forward[x]] = x;
  return iso;
}

UnitRoots unit_roots(std::uint64_t q, std::uint64_t k) {
  require_prime(q, "unit_roots");
  if (k == 0) throw std::invalid_argument("unit_roots: k must be positive");
  const std::uint64_t d = std::gcd(k, q - 1);
  UnitRoots r;
  r.omega = d == 1 ? 1 : pow_mod(smallest_primitive_root(q), (q - 1) / d, q);
  for (std::uint64_t i = 0; i < d; ++i) r.elements.push_back(pow_mod(r.omega, i, q));
  std::sort(r.elements.begin(), r.elements.end());
  return r;
}

std::uint64_t quadratic_nonresidue(std::uint64_t p) {
  require_prime(p, "quadratic_nonresidue");
  if (p == 2) throw std::invalid_argument("quadratic_nonresidue: p must be odd");
  for (std::uint64_t eta = 2; eta < p; ++eta)
    if (pow_mod(eta, (p - 1) / 2, p) == p - 1) return eta;
  throw std::logic_error("quadratic_nonresidue: none found");
}

// ---------------------------------------------------------------------------

std::string family_name(Family f) {
  switch (f) {
    case Family::Tppq: return "Tppq";
    case Family::Tp2q: return "Tp2q";
    case Family::Bppq: return "Bppq";
    case Family::Bp2q: return "Bp2q";
  }
  return "?";
}

Family family_from_name(const std::string& name) {
  for (Family f : {Family::Tppq, Family::Tp2q, Family::Bppq, Family::Bp2q})
    if (family_name(f) == name) return f;
  throw std::invalid_argument("unknown family '" + name + "'");
}

namespace {

bool two_params(std::uint64_t p, Family family) {
  switch (family) {
    case Family::Tppq: return true;
    case Family::Tp2q: return false;
    case Family::Bppq: return p != 2;
    case Family::Bp2q: return p == 2;
  }
  return false;
}

// Exponent of the adjoint group of A_p, i.e. the order every parameter must divide.
std::uint64_t parameter_order(std::uint64_t p, Family family) {
  switch (family) {
    case Family::Tppq: return p;
    case Family::Tp2q: return p * p;
    case Family::Bppq: return p == 2 ? 4 : p;
    case Family::Bp2q: return p == 2 ? 2 : p * p;
  }
  return 1;
}

std::string superscript(std::uint64_t p, std::uint64_t q, Family family) {
  const bool vec = family == Family::Tppq || family == Family::Bppq;
  const std::string letter = (family == Family::Tppq || family == Family::Tp2q) ? "T" : "B";
  const std::string ap = vec ? std::to_string(p) + "," + std::to_string(p) : std::to_string(p * p);
  return letter + "^{" + ap + "," + std::to_string(q) + "}";
}

}  // namespace

ClassificationEntry coarse_family(std::uint64_t p, std::uint64_t q, Family family,
                                  std::vector<std::uint64_t> params) {
  require_prime(p, "coarse_family");
  require_prime(q, "coarse_family");
  if (p == q) throw std::invalid_argument("coarse_family: p and q must differ");
  const std::size_t want = two_params(p, family) ? 2 : 1;
  if (params.size() != want)
    throw std::invalid_argument("coarse_family: " + family_name(family) + " takes " +
                                std::to_string(want) + " parameter(s)");
  const std::uint64_t ord = parameter_order(p, family);
  for (auto w : params) {
    if (w == 0 || w >= q) throw std::invalid_argument("coarse_family: parameter must be a unit mod q");
    if (pow_mod(w, ord, q) != 1)
      throw std::invalid_argument("coarse_family: parameter " + std::to_string(w) +
                                  " violates w^" + std::to_string(ord) + " = 1 mod " +
                                  std::to_string(q));
  }
  const std::uint64_t w = params[0];
  const std::uint64_t mu = want == 2 ? params[1] : 1;
  const auto sp = static_cast<std::int64_t>(p);

  SmallKind kind{};
  std::function<std::uint64_t(Index)> multiplier;
  switch (family) {
    case Family::Tppq:
      kind = SmallKind::Tpp;
      multiplier = [=](Index a) { return pow_mod(w, a / p, q) * pow_mod(mu, a % p, q) % q; };
      break;
    case Family::Tp2q:
      kind = SmallKind::Tp2;
      multiplier = [=](Index a) { return pow_mod(w, a, q); };
      break;
    case Family::Bppq:
      kind = SmallKind::Bpp;
      if (p == 2) {
        // Exponent alpha(x, y) = 2x + y, which is the index itself.
        multiplier = [=](Index a) { return pow_mod(w, a, q); };
      } else {
        multiplier = [=](Index a) {
          const std::int64_t x = a / p, y = a % p;
          const auto u = static_cast<std::uint64_t>(mod(x - binomial_c2(y), sp));
          return pow_mod(w, u, q) * pow_mod(mu, static_cast<std::uint64_t>(y), q) % q;
        };
      }
      break;
    case Family::Bp2q:
      kind = SmallKind::Bp2;
      if (p == 2) {
        // Exponents beta(xy) = (x, y).
        multiplier = [=](Index a) { return pow_mod(w, a >> 1U, q) * pow_mod(mu, a & 1U, q) % q; };
      } else {
        multiplier = [=](Index a) {
          const std::int64_t x = a;
          const auto u = static_cast<std::uint64_t>(mod(x - sp * binomial_c2(x), sp * sp));
          return pow_mod(w, u, q);
        };
      }
      break;
  }
  const Brace ap = bachiller_p2(p, kind).materialize();
  const AbelianGroup zq({u32(q)});
  auto action = ModuleAction::from_hom(
      ap, zq, [&](Index a) { return GroupMap(zq, zq, {u32(multiplier(a))}); });

  std::vector<std::int64_t> tag_params{sp, static_cast<std::int64_t>(q)};
  for (auto v : params) tag_params.push_back(static_cast<std::int64_t>(v));
  Brace brace = semidirect_product(action).with_tag(RuleTag{family_name(family), tag_params});

  std::string label = superscript(p, q, family) + "_{";
  for (std::size_t i = 0; i < params.size(); ++i)
    label += (i ? "," : "") + std::to_string(params[i]);
  label += "}";
  return {family, p, q, std::move(params), std::move(label), std::move(brace)};
}

std::uint64_t count_formula(std::uint64_t p, std::uint64_t q, bool relaxed) {
  require_order_condition(p, q, relaxed);
  if (p == 2) return (q - 1) % 4 == 0 ? 11 : 9;
  if ((q - 1) % (p * p) == 0) return 2 * p + 8;
  if ((q - 1) % p == 0) return p + 8;
  return 4;
}

std::vector<ClassificationEntry> classify(std::uint64_t p, std::uint64_t q, bool relaxed) {
  require_order_condition(p, q, relaxed);
  std::vector<ClassificationEntry> out;
  auto add = [&](Family f, std::vector<std::uint64_t> params, const std::string& sub) {
    auto e = coarse_family(p, q, f, std::move(params));
    e.label = superscript(p, q, f) + "_{" + sub + "}";
    out.push_back(std::move(e));
  };
  auto power_label = [](const std::string& base, std::uint64_t i) {
    return i == 1 ? base : base + "^" + std::to_string(i);
  };

  if (p == 2) {
    const std::uint64_t m1 = q - 1;
    add(Family::Tppq, {1, 1}, "1,1");
    add(Family::Tppq, {m1, 1}, "-1,1");
    add(Family::Tp2q, {1}, "1");
    add(Family::Tp2q, {m1}, "-1");
    add(Family::Bppq, {1}, "1");
    add(Family::Bppq, {m1}, "-1");
    add(Family::Bp2q, {1, 1}, "1,1");
    add(Family::Bp2q, {1, m1}, "1,-1");
    add(Family::Bp2q, {m1, 1}, "-1,1");
    if ((q - 1) % 4 == 0) {
      const std::uint64_t w = unit_roots(q, 4).omega;
      add(Family::Tp2q, {w}, "w");
      add(Family::Bppq, {w}, "w");
    }
    return out;
  }

  add(Family::Tppq, {1, 1}, "1,1");
  add(Family::Tp2q, {1}, "1");
  add(Family::Bppq, {1, 1}, "1,1");
  add(Family::Bp2q, {1}, "1");
  if ((q - 1) % p == 0) {
    const std::uint64_t w = unit_roots(q, p).omega;
    const std::uint64_t eta = quadratic_nonresidue(p);
    add(Family::Tppq, {w, 1}, "w,1");
    add(Family::Tp2q, {w}, "w");
    add(Family::Bppq, {1, w}, "1,w");
    add(Family::Bppq, {w, 1}, "w,1");
    add(Family::Bppq, {pow_mod(w, eta, q), 1}, power_label("w", eta) + ",1");
    for (std::uint64_t i = 1; i < p; ++i) add(Family::Bp2q, {pow_mod(w, i, q)}, power_label("w", i));
  }
  if ((q - 1) % (p * p) == 0) {
    const std::uint64_t wt = unit_roots(q, p * p).omega;
    add(Family::Tp2q, {wt}, "w~");
    for (std::uint64_t i = 1; i < p; ++i)
      add(Family::Bp2q, {pow_mod(wt, i, q)}, power_label("w~", i));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// All homomorphisms (A°) -> Z_d, by assigning values on a greedy generating
// set and propagating along right multiplication.
std::vector<std::vector<std::uint32_t>> adjoint_homs(const Brace& a, std::uint32_t d) {
  const Index n = a.order();
  std::vector<Index> gens;
  {
    std::vector<char> member(n, 0);
    member[0] = 1;
    std::vector<Index> elems{0};
    for (Index x = 0; x < n; ++x) {
      if (member[x]) continue;
      gens.push_back(x);
      for (std::size_t i = 0; i < elems.size(); ++i)
        for (Index s : gens) {
          const Index y = a.circle(elems[i], s);
          if (!member[y]) {
            member[y] = 1;
            elems.push_back(y);
          }
        }
    }
  }

  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> assign(gens.size(), 0);
  constexpr std::uint32_t kUnset = 0xffffffffU;
  while (true) {
    std::vector<std::uint32_t> f(n, kUnset);
    f[0] = 0;
    std::vector<Index> queue{0};
    bool ok = true;
    for (std::size_t i = 0; i < queue.size() && ok; ++i)
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const Index y = a.circle(queue[i], gens[k]);
        const std::uint32_t v = (f[queue[i]] + assign[k]) % d;
        if (f[y] == kUnset) {
          f[y] = v;
          queue.push_back(y);
        } else if (f[y] != v) {
          ok = false;
          break;
        }
      }
    if (ok) out.push_back(std::move(f));
    std::size_t k = gens.size();
    while (k > 0) {
      --k;
      if (++assign[k] < d) break;
      assign[k] = 0;
      if (k == 0) return out;
    }
    if (gens.empty()) return out;
  }
}

}  // namespace

OrbitClassification orbit_classification(const Brace& ap, std::uint64_t q, const Limits& limits) {
  require_prime(q, "orbit_classification");
  OrbitClassification oc;
  oc.root_order = std::gcd(static_cast<std::uint64_t>(ap.order()), q - 1);
  oc.root = unit_roots(q, oc.root_order).omega;
  oc.homs = adjoint_homs(ap, u32(oc.root_order));

  std::map<std::vector<std::uint32_t>, std::size_t> index;
  for (std::size_t i = 0; i < oc.homs.size(); ++i) index[oc.homs[i]] = i;
  std::vector<std::vector<Index>> autos;
  for (const auto& phi : automorphism_group(ap, limits)) autos.push_back(phi.table());

  std::vector<char> seen(oc.homs.size(), 0);
  for (std::size_t i = 0; i < oc.homs.size(); ++i) {
    if (seen[i]) continue;
    oc.representatives.push_back(i);
    std::size_t size = 0;
    for (const auto& phi : autos) {
      std::vector<std::uint32_t> g(ap.order());
      for (Index x = 0; x < ap.order(); ++x) g[x] = oc.homs[i][phi[x]];
      const std::size_t j = index.at(g);
      if (!seen[j]) {
        seen[j] = 1;
        ++size;
      }
    }
    oc.orbit_sizes.push_back(size);
  }
  return oc;
}

Brace semidirect_from_hom(const Brace& ap, std::uint64_t q, std::uint64_t root,
                          const std::vector<std::uint32_t>& f) {
  const AbelianGroup zq({u32(q)});
  auto action = ModuleAction::from_hom(ap.materialize(), zq, [&](Index a) {
    return GroupMap(zq, zq, {u32(pow_mod(root, f[a], q))});
  });
  return semidirect_product(action);
}

std::vector<Brace> orbit_semidirect_products(std::uint64_t p, std::uint64_t q,
                                             const Limits& limits) {
  std::vector<Brace> out;
  for (SmallKind kind : {SmallKind::Tpp, SmallKind::Tp2, SmallKind::Bpp, SmallKind::Bp2}) {
    const Brace ap = bachiller_p2(p, kind).materialize();
    const auto oc = orbit_classification(ap, q, limits);
    for (std::size_t r : oc.representatives)
      out.push_back(semidirect_from_hom(ap, q, oc.root, oc.homs[r]));
  }
  return out;
}

}  // namespace braces
