#include "braces/ybe.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace braces {

CycleSetTable cycle_set_from_brace(const Brace& b) {
  const Index n = b.order();
  CycleSetTable c{b.group(), std::vector<Index>(static_cast<std::size_t>(n) * n)};
  for (Index a = 0; a < n; ++a)
    for (Index x = 0; x < n; ++x) c.cs[static_cast<std::size_t>(a) * n + b.act(a, x)] = x;
  return c;
}

CycleSetReport check_cycle_set(const CycleSetTable& c, const Brace& b) {
  CycleSetReport r;
  const auto& g = c.group;
  const Index n = g.order();
  auto fail = [&](bool& flag, std::vector<Index> ce) {
    if (flag) {
      flag = false;
      if (r.counterexample.empty()) r.counterexample = std::move(ce);
    }
  };
  for (Index a = 0; a < n && r.l1; ++a)
    for (Index x = 0; x < n && r.l1; ++x)
      for (Index y = 0; y < n; ++y)
        if (c.op(a, g.add(x, y)) != g.add(c.op(a, x), c.op(a, y))) {
          fail(r.l1, {a, x, y});
          break;
        }
  for (Index a = 0; a < n && r.l2; ++a)
    for (Index x = 0; x < n && r.l2; ++x) {
      const Index ax = c.op(a, x);
      for (Index y = 0; y < n; ++y)
        if (c.op(g.add(a, x), y) != c.op(ax, c.op(a, y))) {
          fail(r.l2, {a, x, y});
          break;
        }
    }
  // Left-multiplication inverses give ᵇa.
  std::vector<Index> inv(static_cast<std::size_t>(n) * n, n);
  for (Index a = 0; a < n; ++a)
    for (Index x = 0; x < n; ++x) {
      auto& slot = inv[static_cast<std::size_t>(a) * n + c.op(a, x)];
      if (slot != n) fail(r.bijective, {a, x});
      slot = x;
    }
  if (r.bijective)
    for (Index bb = 0; bb < n && r.brace_identity; ++bb)
      for (Index a = 0; a < n; ++a)
        if (b.circle(bb, a) != g.add(inv[static_cast<std::size_t>(bb) * n + a], bb)) {
          fail(r.brace_identity, {bb, a});
          break;
        }
  return r;
}

YbeSolution ybe_solution_from_brace(const Brace& b) {
  const Index n = b.order();
  const auto inv = circle_inverse_table(b);
  YbeSolution s{n, std::vector<Index>(static_cast<std::size_t>(n) * n),
                std::vector<Index>(static_cast<std::size_t>(n) * n)};
  // lambda_u^{-1} as tables
  std::vector<Index> lam_inv(static_cast<std::size_t>(n) * n);
  for (Index u = 0; u < n; ++u)
    for (Index x = 0; x < n; ++x) lam_inv[static_cast<std::size_t>(u) * n + b.act(u, x)] = x;
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      const Index u = b.act(x, y);
      const Index t = b.circle(b.circle(inv[u], x), y);
      if (t != lam_inv[static_cast<std::size_t>(u) * n + x])
        throw std::logic_error("ybe: the two forms of tau disagree at (" + std::to_string(x) +
                               ", " + std::to_string(y) + ")");
      s.sigma[static_cast<std::size_t>(x) * n + y] = u;
      s.tau[static_cast<std::size_t>(y) * n + x] = t;
    }
  return s;
}

YbeSolution flip_solution(Index n) {
  YbeSolution s{n, std::vector<Index>(static_cast<std::size_t>(n) * n),
                std::vector<Index>(static_cast<std::size_t>(n) * n)};
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      s.sigma[static_cast<std::size_t>(x) * n + y] = y;
      s.tau[static_cast<std::size_t>(y) * n + x] = x;
    }
  return s;
}

YbeCheck verify_yang_baxter(const YbeSolution& s, const Limits& limits) {
  require_guard(s.n <= limits.max_ybe_order, "ybe: order " + std::to_string(s.n) +
                                                 " exceeds triple-check guard " +
                                                 std::to_string(limits.max_ybe_order));
  // R = flip after r, i.e. R(x, y) = (tau_y(x), sigma_x(y)).
  auto apply = [&](Index v[3], int i, int j) {
    const Index x = v[i], y = v[j];
    v[i] = s.t(y, x);
    v[j] = s.s(x, y);
  };
  YbeCheck c;
  for (Index x = 0; x < s.n; ++x)
    for (Index y = 0; y < s.n; ++y)
      for (Index z = 0; z < s.n; ++z) {
        Index l[3] = {x, y, z};
        Index r[3] = {x, y, z};
        apply(l, 1, 2);
        apply(l, 0, 2);
        apply(l, 0, 1);
        apply(r, 0, 1);
        apply(r, 0, 2);
        apply(r, 1, 2);
        if (l[0] != r[0] || l[1] != r[1] || l[2] != r[2]) return {false, {x, y, z}};
      }
  return c;
}

YbeCheck check_involutive(const YbeSolution& s) {
  for (Index x = 0; x < s.n; ++x)
    for (Index y = 0; y < s.n; ++y) {
      const Index u = s.s(x, y), v = s.t(y, x);
      if (s.s(u, v) != x || s.t(v, u) != y) return {false, {x, y}};
    }
  return {};
}

YbeCheck check_nondegenerate(const YbeSolution& s) {
  std::vector<char> seen(s.n);
  for (Index x = 0; x < s.n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Index y = 0; y < s.n; ++y) {
      if (seen[s.s(x, y)]) return {false, {x, y}};
      seen[s.s(x, y)] = 1;
    }
  }
  for (Index y = 0; y < s.n; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Index x = 0; x < s.n; ++x) {
      if (seen[s.t(y, x)]) return {false, {x, y}};
      seen[s.t(y, x)] = 1;
    }
  }
  return {};
}

YbeCheck check_multiplicative(const YbeSolution& s, const Brace& b) {
  for (Index x = 0; x < s.n; ++x)
    for (Index y = 0; y < s.n; ++y)
      if (b.circle(s.s(x, y), s.t(y, x)) != b.circle(x, y)) return {false, {x, y}};
  return {};
}

void write_ybe(std::ostream& out, const YbeSolution& s) {
  out << "ybe v1\n" << s.n << '\n';
  for (Index x = 0; x < s.n; ++x)
    for (Index y = 0; y < s.n; ++y) out << x << ' ' << y << ' ' << s.s(x, y) << ' ' << s.t(y, x) << '\n';
}

}  // namespace braces
