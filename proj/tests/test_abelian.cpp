#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "braces/abelian.hpp"
#include "braces/arith.hpp"

using namespace braces;

namespace {

// Additive bijections found by trying every permutation of the elements.
std::uint64_t brute_force_aut_count(const AbelianGroup& g) {
  std::vector<Index> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = perm[0] == 0;
    for (Index a = 0; a < g.order() && ok; ++a)
      for (Index b = 0; b < g.order() && ok; ++b) ok = perm[g.add(a, b)] == g.add(perm[a], perm[b]);
    count += ok;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return count;
}

}  // namespace

TEST_CASE("arith helpers") {
  CHECK(is_prime(101));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(factorize(360) == std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(smallest_primitive_root(7) == 3);
  CHECK(smallest_primitive_root(5) == 2);
  CHECK(smallest_primitive_root(101) == 2);
  CHECK(multiplicative_order(2, 7) == 3);
  CHECK(inverse_mod(4, 9) == 7);
  CHECK_THROWS_AS(inverse_mod(3, 9), std::invalid_argument);
  // Number of abelian groups of order n is the product of partition numbers.
  CHECK(abelian_invariant_lists(16).size() == 5);
  CHECK(abelian_invariant_lists(72).size() == 6);
  CHECK(abelian_invariant_lists(100).size() == 4);
  CHECK(abelian_invariant_lists(63) ==
        std::vector<std::vector<std::uint32_t>>{{9, 7}, {3, 3, 7}});
}

TEST_CASE("group construction") {
  AbelianGroup trivial;
  CHECK(trivial.order() == 1);
  CHECK(make_group({2, 2}).order() == 4);
  CHECK(make_group({2, 2}).exponent() == 2);
  CHECK(make_group({9, 7}).order() == 63);
  CHECK_THROWS_AS(make_group({1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(make_group({0}), std::invalid_argument);
}

TEST_CASE("element arithmetic") {
  const auto z4 = make_group({4});
  CHECK(z4.add(3, 3) == 2);
  const auto z33 = make_group({3, 3});
  const std::uint32_t c[] = {1, 2};
  const Index x = z33.index(c);
  CHECK(z33.coords(z33.neg(x)) == std::vector<std::uint32_t>{2, 1});
  CHECK(make_group({9}).element_order(3) == 3);
  const std::uint32_t bad[] = {3, 0};
  CHECK_THROWS_AS(z33.index(bad), std::out_of_range);

  const auto g = make_group({4, 6, 5});
  for (Index a = 0; a < g.order(); ++a) {
    CHECK(g.index(g.coords(a)) == a);
    CHECK(g.add(a, g.neg(a)) == 0);
    CHECK(g.scale(a, static_cast<std::int64_t>(g.element_order(a))) == 0);
  }
  CHECK(g.primary_invariants() == std::vector<std::uint32_t>{2, 3, 4, 5});
  CHECK(g.isomorphic_to(make_group({60, 2})));
  CHECK_FALSE(g.isomorphic_to(make_group({120})));
}

TEST_CASE("primary components split the group") {
  auto check = [](std::vector<std::uint32_t> inv, std::uint64_t p,
                  std::vector<std::uint32_t> expected) {
    const auto g = make_group(inv);
    const auto c = primary_component(g, p);
    CHECK(c.subgroup.primary_invariants() == expected);
    for (Index a = 0; a < c.subgroup.order(); ++a) CHECK(c.projection(c.inclusion(a)) == a);
    for (Index a = 0; a < g.order(); ++a) {
      auto ord = g.element_order(c.inclusion(c.projection(a)));
      while (ord % p == 0) ord /= p;
      CHECK(ord == 1);
    }
  };
  check({9, 7}, 3, {9});
  check({9, 7}, 7, {7});
  check({2, 2, 5}, 2, {2, 2});
  check({63}, 3, {9});
}

TEST_CASE("automorphism counts: examples") {
  CHECK(enumerate_automorphisms(make_group({4})).size() == 2);
  CHECK(enumerate_automorphisms(make_group({2, 2})).size() == 6);
  CHECK(enumerate_automorphisms(make_group({3, 3})).size() == 48);
}

TEST_CASE("automorphism counts agree with brute-force permutation search") {
  for (std::uint32_t n = 2; n <= 9; ++n)
    for (const auto& inv : abelian_invariant_lists(n)) {
      const AbelianGroup g(inv);
      const auto brute = brute_force_aut_count(g);
      CAPTURE(n);
      CHECK(enumerate_automorphisms(g).size() == brute);
      CHECK(automorphism_count(g) == brute);
    }
}

TEST_CASE("automorphisms form a group and match the closed form for |g| <= 100") {
  for (std::uint32_t n = 2; n <= 100; ++n)
    for (const auto& inv : abelian_invariant_lists(n)) {
      const AbelianGroup g(inv);
      const auto expected = automorphism_count(g);
      if (expected > 20'000) continue;
      const auto autos = enumerate_automorphisms(g);
      CAPTURE(n);
      REQUIRE(autos.size() == expected);
      if (expected > 400) continue;
      std::set<std::vector<Index>> images;
      for (const auto& a : autos) images.insert(a.images());
      CHECK(images.count(GroupMap::identity(g).images()) == 1);
      for (const auto& a : autos) {
        CHECK(images.count(a.inverse()->images()) == 1);
        for (const auto& b : autos) CHECK(images.count(a.compose(b).images()) == 1);
      }
    }
}

TEST_CASE("automorphism guard") {
  Limits l;
  l.max_automorphisms = 100;
  CHECK_THROWS_AS(enumerate_automorphisms(make_group({2, 2, 2}), l), GuardExceeded);
}

TEST_CASE("homomorphism counts: product of gcds") {
  CHECK(enumerate_homomorphisms(make_group({9}), make_group({3})).size() == 3);
  CHECK(enumerate_homomorphisms(make_group({4}), make_group({5})).size() == 1);
  CHECK(enumerate_homomorphisms(make_group({3, 3}), make_group({3})).size() == 9);
  const std::vector<std::vector<std::uint32_t>> groups{{4}, {2, 2}, {6}, {4, 2}, {3, 9}, {12}};
  for (const auto& a : groups)
    for (const auto& b : groups) {
      std::uint64_t expected = 1;
      for (auto m : a)
        for (auto n : b) expected *= std::gcd(m, n);
      const auto homs = enumerate_homomorphisms(make_group(a), make_group(b));
      CHECK(homs.size() == expected);
      for (const auto& h : homs) {
        const auto& g = h.domain();
        for (Index x = 0; x < g.order(); ++x)
          for (Index y = 0; y < g.order(); ++y) CHECK(h(g.add(x, y)) == h.codomain().add(h(x), h(y)));
      }
    }
}

TEST_CASE("group maps") {
  const auto g = make_group({4, 2});
  CHECK_THROWS_AS(GroupMap(g, g, {1, 2}), std::invalid_argument);  // order-4 image of an order-2 generator
  const GroupMap m(g, g, {3, 1});
  CHECK(m.is_bijective());
  CHECK(m.compose(*m.inverse()) == GroupMap::identity(g));
  CHECK_FALSE(GroupMap::zero(g, g).is_bijective());
  CHECK_FALSE(GroupMap::zero(g, g).inverse().has_value());
}

TEST_CASE("subgroups") {
  CHECK(enumerate_subgroups(make_group({2, 2})).size() == 5);
  CHECK(enumerate_subgroups(make_group({3, 3})).size() == 6);
  CHECK(enumerate_subgroups(make_group({5, 5})).size() == 8);
  CHECK(enumerate_subgroups(make_group({12})).size() == 6);  // one per divisor
  CHECK(enumerate_subgroups(make_group({60})).size() == 12);
  const auto g = make_group({4, 2});
  const Index gens[] = {2};
  CHECK(generated_subgroup(g, gens).size() == 4);
  Limits l;
  l.max_subgroup_order = 10;
  CHECK_THROWS_AS(enumerate_subgroups(make_group({4, 4}), l), GuardExceeded);
}
