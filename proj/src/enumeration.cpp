#include "braces/enumeration.hpp"

#include <optional>
#include <string>

#include "braces/arith.hpp"

namespace braces {

namespace {

constexpr std::uint32_t kUnset = 0xffffffffU;

std::uint64_t pack(const AbelianGroup& g, const std::vector<Index>& table) {
  std::uint64_t key = 0;
  for (std::size_t k = g.rank(); k-- > 0;) key = key * g.order() + table[g.generator(k)];
  return key;
}

class Search {
 public:
  explicit Search(LambdaEnumeration& e) : e_(e), n_(e.group.order()), lam_(n_, kUnset) {
    const auto m = static_cast<std::uint32_t>(e.aut_tables.size());
    if (m <= 2048) {
      comp_.resize(static_cast<std::size_t>(m) * m);
      for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < m; ++j) comp_[i * m + j] = e.compose(i, j);
    }
    for (std::uint32_t i = 0; i < m; ++i)
      if (e.automorphisms[i] == GroupMap::identity(e.group)) id_ = i;
    candidates_.resize(n_);
  }

  void run() {
    lam_[0] = id_;
    elems_.push_back(0);
    recurse();
  }

 private:
  std::uint32_t comp(std::uint32_t i, std::uint32_t j) const {
    return comp_.empty() ? e_.compose(i, j) : comp_[i * e_.aut_tables.size() + j];
  }

  // Automorphisms alpha for which <(x, alpha)> moves 0 injectively.
  const std::vector<std::uint32_t>& candidates(Index x) {
    auto& c = candidates_[x];
    if (c) return *c;
    c.emplace();
    std::vector<char> seen(n_, 0);
    for (std::uint32_t a = 0; a < e_.aut_tables.size(); ++a) {
      std::fill(seen.begin(), seen.end(), 0);
      seen[0] = 1;
      Index t = x;
      std::uint32_t beta = a;
      bool ok = true;
      for (Index steps = 0; ok && !(t == 0 && beta == id_); ++steps) {
        if (steps > n_ || seen[t]) {
          ok = false;
          break;
        }
        seen[t] = 1;
        t = e_.group.add(t, e_.aut_tables[beta][x]);
        beta = comp(beta, a);
      }
      if (ok) c->push_back(a);
    }
    return *c;
  }

  bool insert(Index t, std::uint32_t l) {
    if (lam_[t] == kUnset) {
      lam_[t] = l;
      elems_.push_back(t);
      return true;
    }
    return lam_[t] == l;
  }

  // Adds generator (x, alpha) and closes under right multiplication by generators.
  bool extend(Index x, std::uint32_t alpha) {
    const std::size_t old = elems_.size();
    gens_.emplace_back(x, alpha);
    for (std::size_t i = 0; i < old; ++i) {
      const Index e = elems_[i];
      if (!insert(e_.group.add(e, e_.aut_tables[lam_[e]][x]), comp(lam_[e], alpha))) return false;
    }
    for (std::size_t i = old; i < elems_.size(); ++i) {
      const Index e = elems_[i];
      for (auto [g, gl] : gens_)
        if (!insert(e_.group.add(e, e_.aut_tables[lam_[e]][g]), comp(lam_[e], gl))) return false;
    }
    return true;
  }

  void undo(std::size_t old) {
    for (std::size_t i = old; i < elems_.size(); ++i) lam_[elems_[i]] = kUnset;
    elems_.resize(old);
    gens_.pop_back();
  }

  void recurse() {
    if (elems_.size() == n_) {
      e_.solution_index.emplace(lam_, e_.solutions.size());
      e_.solutions.push_back(lam_);
      return;
    }
    Index x = 0;
    while (lam_[x] != kUnset) ++x;
    const auto cands = candidates(x);
    for (std::uint32_t a : cands) {
      const std::size_t old = elems_.size();
      if (extend(x, a)) recurse();
      undo(old);
    }
  }

  LambdaEnumeration& e_;
  Index n_;
  std::uint32_t id_ = 0;
  std::vector<std::uint32_t> lam_;
  std::vector<Index> elems_;
  std::vector<std::pair<Index, std::uint32_t>> gens_;
  std::vector<std::uint32_t> comp_;
  std::vector<std::optional<std::vector<std::uint32_t>>> candidates_;
};

}  // namespace

std::uint32_t LambdaEnumeration::compose(std::uint32_t i, std::uint32_t j) const {
  std::uint64_t key = 0;
  for (std::size_t k = group.rank(); k-- > 0;)
    key = key * group.order() + aut_tables[i][aut_tables[j][group.generator(k)]];
  return aut_lookup.at(key);
}

Brace LambdaEnumeration::brace(std::size_t k) const {
  const Index n = group.order();
  std::vector<Index> table(static_cast<std::size_t>(n) * n);
  for (Index a = 0; a < n; ++a) {
    const auto& l = aut_tables[solutions[k][a]];
    for (Index b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = group.sub(l[b], b);
  }
  return Brace::from_table(group, std::move(table));
}

std::ptrdiff_t LambdaEnumeration::find(const std::vector<std::uint32_t>& lambda) const {
  auto it = solution_index.find(lambda);
  return it == solution_index.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
}

std::vector<std::uint32_t> LambdaEnumeration::conjugate(const std::vector<std::uint32_t>& lambda,
                                                        std::size_t psi) const {
  const auto p = static_cast<std::uint32_t>(psi);
  std::vector<std::uint32_t> out(lambda.size());
  for (Index b = 0; b < lambda.size(); ++b)
    out[aut_tables[p][b]] = compose(compose(p, lambda[b]), aut_inverse[p]);
  return out;
}

LambdaEnumeration enumerate_lambda_maps(const AbelianGroup& g, const Limits& limits) {
  require_guard(g.order() <= limits.max_enumeration_order,
                "enumeration: order " + std::to_string(g.order()) + " exceeds guard " +
                    std::to_string(limits.max_enumeration_order));
  require_guard(automorphism_count(g) <= limits.max_automorphisms,
                "enumeration: |Aut| = " + std::to_string(automorphism_count(g)) +
                    " exceeds guard");
  LambdaEnumeration e;
  e.group = g;
  e.automorphisms = enumerate_automorphisms(g, limits);
  for (std::uint32_t i = 0; i < e.automorphisms.size(); ++i) {
    e.aut_tables.push_back(e.automorphisms[i].table());
    e.aut_lookup.emplace(pack(g, e.aut_tables.back()), i);
  }
  for (std::uint32_t i = 0; i < e.automorphisms.size(); ++i)
    e.aut_inverse.push_back(e.aut_lookup.at(pack(g, e.automorphisms[i].inverse()->table())));

  Search(e).run();

  std::vector<char> seen(e.solutions.size(), 0);
  for (std::size_t k = 0; k < e.solutions.size(); ++k) {
    if (seen[k]) continue;
    e.representatives.push_back(k);
    std::size_t size = 0;
    for (std::size_t psi = 0; psi < e.automorphisms.size(); ++psi) {
      const auto j = e.find(e.conjugate(e.solutions[k], psi));
      if (j < 0) throw std::logic_error("enumeration: solution set not closed under Aut(A)");
      if (!seen[j]) {
        seen[j] = 1;
        ++size;
      }
    }
    e.orbit_sizes.push_back(size);
  }
  return e;
}

std::vector<Brace> enumerate_braces_on(const AbelianGroup& g, const Limits& limits) {
  const auto e = enumerate_lambda_maps(g, limits);
  std::vector<Brace> out;
  out.reserve(e.solutions.size());
  for (std::size_t k = 0; k < e.solutions.size(); ++k) out.push_back(e.brace(k));
  return out;
}

std::vector<Brace> enumerate_braces(std::uint32_t n, const Limits& limits) {
  require_guard(n <= limits.max_enumeration_order,
                "enumeration: order " + std::to_string(n) + " exceeds guard " +
                    std::to_string(limits.max_enumeration_order));
  std::vector<Brace> out;
  if (n == 1) {
    out.push_back(Brace::from_table(AbelianGroup(), {0}));
    return out;
  }
  for (const auto& inv : abelian_invariant_lists(n)) {
    const auto e = enumerate_lambda_maps(AbelianGroup(inv), limits);
    for (std::size_t k : e.representatives) out.push_back(e.brace(k));
  }
  return out;
}

std::uint64_t brace_count(std::uint32_t n, const Limits& limits) {
  return enumerate_braces(n, limits).size();
}

bool twist_closed(const LambdaEnumeration& e, std::mt19937_64& rng, std::size_t trials) {
  if (e.solutions.empty()) return false;
  std::uniform_int_distribution<std::size_t> pick_sol(0, e.solutions.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_aut(0, e.automorphisms.size() - 1);
  for (std::size_t t = 0; t < trials; ++t)
    if (e.find(e.conjugate(e.solutions[pick_sol(rng)], pick_aut(rng))) < 0) return false;
  return true;
}

}  // namespace braces
