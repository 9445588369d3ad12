#include <doctest.h>

#include <random>

#include "braces/brace.hpp"
#include "braces/constructions.hpp"
#include "braces/enumeration.hpp"
#include "braces/morphisms.hpp"

using namespace braces;

namespace {

std::vector<Brace> small_braces(std::uint64_t p) {
  std::vector<Brace> out;
  for (auto k : {SmallKind::Tpp, SmallKind::Tp2, SmallKind::Bpp, SmallKind::Bp2})
    out.push_back(bachiller_p2(p, k).materialize());
  return out;
}

Index idx2(std::uint64_t p, std::uint64_t x, std::uint64_t y) { return static_cast<Index>(x * p + y); }

}  // namespace

TEST_CASE("order-p^2 braces satisfy the axioms and are radical rings") {
  for (std::uint64_t p : {2, 3, 5, 7})
    for (const auto& b : small_braces(p)) {
      CAPTURE(p);
      const auto r = check_axioms(b);
      CHECK(r.all_pass());
      CHECK(r.b1.exhaustive);
      CHECK(verify_cocycle(b));
      CHECK(adjoint_is_group(b));
      CHECK(is_radical_ring(b));
    }
}

TEST_CASE("named products") {
  const auto bpp = bachiller_p2(3, SmallKind::Bpp);
  CHECK(bpp.mul(idx2(3, 1, 2), idx2(3, 0, 1)) == idx2(3, 2, 0));
  CHECK(bachiller_p2(3, SmallKind::Bp2).mul(2, 2) == 3);
  CHECK(bachiller_p2(2, SmallKind::Bp2).mul(1, 1) == 2);
  CHECK(bachiller_p2(3, SmallKind::Bp2).circle(1, 1) == 5);
  CHECK(binomial_c2(3) == 3);
  CHECK(binomial_c2(0) == 0);
  CHECK(binomial_c2(1) == 0);
  CHECK(binomial_c2(5) == binomial_c2(2) + binomial_c2(3) + 2 * 3);
}

TEST_CASE("trivial braces") {
  const auto t = trivial_brace(make_group({4}));
  CHECK(check_axioms(t).all_pass());
  for (Index x = 0; x < 4; ++x) {
    CHECK(circle_inverse(t, x) == t.group().neg(x));
    CHECK(t.circle(x, 0) == x);
  }
  CHECK(socle(t).size() == 4);
  const auto one = trivial_brace(AbelianGroup());
  CHECK(check_axioms(one).all_pass());
}

TEST_CASE("non-braces are rejected with a counterexample") {
  const auto g = make_group({4});
  const auto sum = Brace::from_rule(g, [&](Index a, Index b) { return g.add(a, b); });
  const auto r = check_axioms(sum);
  CHECK_FALSE(r.b1.pass);
  CHECK(r.b1.counterexample.size() == 3);
  const auto& c = r.b1.counterexample;
  CHECK(sum.mul(c[0], g.add(c[1], c[2])) != g.add(sum.mul(c[0], c[1]), sum.mul(c[0], c[2])));
  CHECK_THROWS_AS(Brace::from_table(g, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Brace::from_table(g, std::vector<Index>(16, 4)), std::invalid_argument);
}

TEST_CASE("a single corrupted cell is caught") {
  const auto b = bachiller_p2(3, SmallKind::Bp2).materialize();
  const auto bad = b.with_cell(1, 2, (b.mul(1, 2) + 1) % 9);
  CHECK_FALSE(check_axioms(bad).all_pass());
  CHECK_FALSE(verify_cocycle(bad));

  std::mt19937_64 rng(7);
  for (const auto& base : small_braces(3)) {
    int caught = 0;
    for (int t = 0; t < 200; ++t) {
      const Index a = rng() % 9, c = rng() % 9, shift = 1 + rng() % 8;
      const auto m = base.with_cell(a, c, (base.mul(a, c) + shift) % 9);
      caught += !check_axioms(m).all_pass() || !verify_cocycle(m);
    }
    CHECK(caught == 200);
  }
}

TEST_CASE("guards") {
  Limits l;
  l.max_rule_check_order = 50;
  l.max_table_check_order = 50;
  const auto t = trivial_brace(make_group({101}));
  CHECK_THROWS_AS(check_axioms(t, l), GuardExceeded);
}

TEST_CASE("adjoint lambda is a homomorphism into Aut") {
  for (std::uint32_t n : {8u, 12u, 18u})
    for (const auto& b : enumerate_braces(n)) {
      for (Index a = 0; a < n; ++a) {
        const auto la = adjoint_lambda_map(b, a);
        CHECK(la.is_bijective());
        for (Index c = 0; c < n; ++c) {
          const auto lc = adjoint_lambda(b, c);
          const auto lac = adjoint_lambda(b, b.circle(a, c));
          for (Index x = 0; x < n; ++x) CHECK(lac[x] == la(lc[x]));
        }
      }
      const auto inv = circle_inverse_table(b);
      for (Index a = 0; a < n; ++a) CHECK(b.circle(a, inv[a]) == 0);
    }
}

TEST_CASE("socles") {
  const auto bpp = bachiller_p2(3, SmallKind::Bpp);
  CHECK(socle(bpp).elements() == std::vector<Index>{0, idx2(3, 1, 0), idx2(3, 2, 0)});
  CHECK(socle(bachiller_p2(3, SmallKind::Bp2)).elements() == std::vector<Index>{0, 3, 6});
  CHECK(ideal_predicates(bpp, socle(bpp)).trivial_ideal);
  const auto tpp = bachiller_p2(3, SmallKind::Tpp);
  const SubgroupWitness xaxis(tpp.group(), {0, idx2(3, 1, 0), idx2(3, 2, 0)});
  CHECK(ideal_predicates(tpp, xaxis).trivial_ideal);
  CHECK_THROWS_AS(SubgroupWitness(tpp.group(), {0, 1}), std::invalid_argument);
}

TEST_CASE("ideal predicates agree: trivial ideal iff normal subgroup of A° inside Soc") {
  for (const auto& b : enumerate_braces(8)) {
    for (const auto& s : enumerate_subgroups(b.group())) {
      const SubgroupWitness w(b.group(), s);
      const auto r = ideal_predicates(b, w);
      CHECK(r.trivial_ideal == r.socle_normal_subgroup);
      if (!r.ideal) continue;
      // Two-sided ideals are normal in the adjoint group.
      for (Index a = 0; a < b.order(); ++a)
        for (Index x : s) CHECK(w.contains(b.circle(b.circle(a, x), circle_inverse(b, a))));
    }
  }
}

TEST_CASE("primary decomposition") {
  const auto t6 = trivial_brace(make_group({6}));
  const auto parts = primary_decomposition(t6);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].prime == 2);
  CHECK(parts[0].brace.order() == 2);
  CHECK(parts[1].brace.order() == 3);

  const auto w = unit_roots(7, 3).omega;
  const auto t = coarse_family(3, 7, Family::Tppq, {w, 1}).brace;
  for (const auto& part : primary_decomposition(t)) {
    CHECK(part.left_ideal);
    CHECK(check_axioms(part.brace).all_pass());
    if (part.prime == 3) CHECK_FALSE(part.right_ideal);
    if (part.prime == 7) CHECK(part.right_ideal);
  }

  const auto b4 = coarse_family(2, 5, Family::Bp2q, {1, 1}).brace;
  for (const auto& part : primary_decomposition(b4)) {
    if (part.prime == 2) CHECK(find_isomorphism(part.brace, bachiller_p2(2, SmallKind::Bp2)));
    if (part.prime == 5) CHECK(socle(part.brace).size() == 5);
  }
}

TEST_CASE("twists") {
  const auto b = bachiller_p2(3, SmallKind::Bp2).materialize();
  const auto g = b.group();
  CHECK(twist(b, GroupMap::identity(g)).same_multiplication(b));
  const auto t4 = twist(b, GroupMap(g, g, {4}));
  CHECK(check_axioms(t4).all_pass());
  CHECK(find_isomorphism(t4, b));
  const auto t2 = twist(b, GroupMap(g, g, {2}));
  for (Index x = 0; x < 9; ++x)
    for (Index y = 0; y < 9; ++y) CHECK(t2.mul(x, y) == 6 * x * y % 9);
  CHECK_THROWS_AS(twist(b, GroupMap(g, g, {3})), std::invalid_argument);
}

TEST_CASE("adjoint invariants") {
  const auto inv = adjoint_invariants(bachiller_p2(3, SmallKind::Bpp));
  CHECK(inv.exponent == 3);
  CHECK(inv.abelian);
  const auto w = unit_roots(7, 3).omega;
  const auto t = adjoint_invariants(coarse_family(3, 7, Family::Tp2q, {w}).brace);
  CHECK_FALSE(t.abelian);
  CHECK(t.derived_order == 7);
  CHECK(t.abelianization_order == 9);
}
