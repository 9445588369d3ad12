#include "braces/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace braces {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  unsigned __int128 result = 1;
  unsigned __int128 b = base % mod;
  while (exp > 0) {
    if (exp & 1U) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1U;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (std::gcd(a % m, m) != 1) throw std::invalid_argument("multiplicative_order: not a unit");
  std::uint64_t x = a % m;
  std::uint64_t k = 1;
  while (x != 1 % m) {
    x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * a % m);
    ++k;
  }
  return k;
}

std::uint64_t smallest_primitive_root(std::uint64_t q) {
  if (!is_prime(q)) throw std::invalid_argument("smallest_primitive_root: modulus not prime");
  if (q == 2) return 1;
  const auto factors = factorize(q - 1);
  for (std::uint64_t g = 2; g < q; ++g) {
    bool generator = true;
    for (auto [r, e] : factors) {
      if (pow_mod(g, (q - 1) / r, q) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return g;
  }
  throw std::logic_error("no primitive root found");
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  std::int64_t old_r = static_cast<std::int64_t>(a % m), r = static_cast<std::int64_t>(m);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - quot * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - quot * s);
  }
  if (old_r != 1 && m != 1) throw std::invalid_argument("inverse_mod: not invertible");
  const auto mm = static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(((old_s % mm) + mm) % mm);
}

namespace {

void partitions(unsigned remaining, unsigned max_part, std::vector<unsigned>& cur,
                std::vector<std::vector<unsigned>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::uint32_t>> abelian_invariant_lists(std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> result{{}};
  for (auto [p, e] : factorize(n)) {
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> cur;
    partitions(e, e, cur, parts);
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& prefix : result) {
      for (const auto& part : parts) {
        auto extended = prefix;
        for (unsigned k : part) {
          std::uint32_t power = 1;
          for (unsigned i = 0; i < k; ++i) power *= static_cast<std::uint32_t>(p);
          extended.push_back(power);
        }
        next.push_back(std::move(extended));
      }
    }
    result = std::move(next);
  }
  return result;
}

}  // namespace braces
