#include <doctest.h>

#include <random>

#include "braces/arith.hpp"
#include "braces/constructions.hpp"
#include "braces/enumeration.hpp"
#include "braces/morphisms.hpp"

using namespace braces;

TEST_CASE("prime orders have only the trivial brace") {
  for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u, 29u, 47u}) {
    const auto all = enumerate_braces_on(make_group({q}));
    REQUIRE(all.size() == 1);
    CHECK(all[0].same_multiplication(trivial_brace(make_group({q}))));
    CHECK(brace_count(q) == 1);
  }
}

TEST_CASE("braces on Z_4 as functions") {
  const auto all = enumerate_braces_on(make_group({4}));
  CHECK(all.size() == 2);
  CHECK(dedupe_up_to_iso(all).representatives.size() == 2);
}

TEST_CASE("order p^2: four classes, one per named brace") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto found = enumerate_braces(p * p);
    REQUIRE(found.size() == 4);
    for (auto k : {SmallKind::Tpp, SmallKind::Tp2, SmallKind::Bpp, SmallKind::Bp2})
      found.push_back(bachiller_p2(p, k).materialize());
    const auto d = dedupe_up_to_iso(found);
    CHECK(d.representatives.size() == 4);
    for (auto s : d.class_sizes) CHECK(s == 2);
  }
}

TEST_CASE("known small counts") {
  // Independent counts of braces of small order.
  CHECK(brace_count(6) == 2);
  CHECK(brace_count(8) == 27);
  CHECK(brace_count(12) == 10);
  CHECK(brace_count(20) == 11);
  CHECK(brace_count(28) == 9);
  CHECK(brace_count(45) == 4);
  CHECK(brace_count(63) == 11);
}

TEST_CASE("every enumerated brace is a brace; orbit data is consistent") {
  for (std::uint32_t n : {8u, 12u, 18u, 20u}) {
    for (const auto& inv : abelian_invariant_lists(n)) {
      const auto e = enumerate_lambda_maps(AbelianGroup(inv));
      std::size_t total = 0;
      for (auto s : e.orbit_sizes) {
        CHECK(e.automorphisms.size() % s == 0);
        total += s;
      }
      CHECK(total == e.solutions.size());
      for (std::size_t k = 0; k < e.solutions.size(); ++k) {
        const auto b = e.brace(k);
        CHECK(check_axioms(b).all_pass());
        CHECK(verify_cocycle(b));
      }
      // Orbit representatives are pairwise non-isomorphic, and orbit-stabilizers
      // match the brace automorphism groups.
      std::vector<Brace> reps;
      for (std::size_t r = 0; r < e.representatives.size(); ++r) {
        reps.push_back(e.brace(e.representatives[r]));
        CHECK(automorphism_group(reps.back()).size() * e.orbit_sizes[r] == e.automorphisms.size());
      }
      CHECK(dedupe_up_to_iso(reps).representatives.size() == reps.size());
    }
  }
}

TEST_CASE("twist closure") {
  std::mt19937_64 rng(3);
  for (const auto& inv : abelian_invariant_lists(63)) {
    const auto e = enumerate_lambda_maps(AbelianGroup(inv));
    CHECK(twist_closed(e, rng, 200));
    // Same check through the brace-level twist.
    const auto k = rng() % e.solutions.size();
    const auto& phi = e.automorphisms[rng() % e.automorphisms.size()];
    const auto t = twist(e.brace(k), phi);
    bool found = false;
    for (std::size_t j = 0; j < e.solutions.size() && !found; ++j)
      found = e.brace(j).same_multiplication(t);
    CHECK(found);
  }
}

TEST_CASE("enumeration agrees with the fine list on Z_9 + Z_7") {
  // Cyclic p-part with p | q - 1, p^2 not dividing q - 1: T_1, T_w, B_1, B_w, B_w^2.
  const auto e = enumerate_lambda_maps(make_group({9, 7}));
  CHECK(e.representatives.size() == 5);
  std::vector<Brace> all;
  for (auto k : e.representatives) all.push_back(e.brace(k));
  std::size_t cyclic = 0;
  for (const auto& entry : classify(3, 7))
    if (entry.family == Family::Tp2q || entry.family == Family::Bp2q) {
      all.push_back(entry.brace.materialize());
      ++cyclic;
    }
  CHECK(cyclic == 5);
  const auto d = dedupe_up_to_iso(all);
  CHECK(d.representatives.size() == 5);
  for (auto s : d.class_sizes) CHECK(s == 2);
}

TEST_CASE("guards") {
  Limits l;
  l.max_enumeration_order = 30;
  CHECK_THROWS_AS(enumerate_braces(63, l), GuardExceeded);
  l = Limits{};
  l.max_automorphisms = 10;
  CHECK_THROWS_AS(enumerate_braces_on(make_group({3, 3}), l), GuardExceeded);
}
