#include <doctest.h>

#include <random>
#include <set>

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

std::set<std::vector<Index>> image_set(const std::vector<GroupMap>& maps) {
  std::set<std::vector<Index>> out;
  for (const auto& m : maps) out.insert(m.table());
  return out;
}

}  // namespace

TEST_CASE("homomorphism predicate") {
  const auto g = make_group({3, 3});
  CHECK(is_brace_homomorphism(GroupMap::zero(g, g), trivial_brace(g), trivial_brace(g)));
  const auto bpp = bachiller_p2(3, SmallKind::Bpp);
  CHECK(is_brace_homomorphism(GroupMap::identity(g), bpp, bpp));
  // gamma only preserves the adjoint group.
  const auto gamma = explicit_adjoint_iso(3, AdjointIsoKind::Gamma);
  CHECK_FALSE(is_brace_homomorphism(gamma.forward, gamma.source,
                                    bachiller_p2(3, SmallKind::Tp2)));
  CHECK_THROWS_AS(is_brace_homomorphism(GroupMap::identity(make_group({9})), bpp, bpp),
                  std::invalid_argument);
}

TEST_CASE("isomorphism search") {
  const auto tpp = bachiller_p2(3, SmallKind::Tpp);
  const auto bpp = bachiller_p2(3, SmallKind::Bpp);
  CHECK_FALSE(find_isomorphism(tpp, bpp));
  for (const auto& b : small_braces(3)) {
    const auto id = find_isomorphism(b, b);
    REQUIRE(id);
    CHECK(*id == GroupMap::identity(b.group()));
  }
  const auto w = unit_roots(7, 3).omega;
  const auto b1 = coarse_family(3, 7, Family::Bp2q, {w}).brace;
  const auto b2 = coarse_family(3, 7, Family::Bp2q, {w * w % 7}).brace;
  CHECK_FALSE(find_isomorphism(b1, b2));
}

TEST_CASE("invariants separate T^9 and B^9") {
  const auto t = brace_invariants(bachiller_p2(3, SmallKind::Tp2));
  const auto b = brace_invariants(bachiller_p2(3, SmallKind::Bp2));
  CHECK(distinguishing_invariant(t, b).has_value());
  CHECK(t.fingerprint != b.fingerprint);
  CHECK_FALSE(distinguishing_invariant(t, t).has_value());
}

TEST_CASE("twisting preserves the class and the witness is a brace isomorphism") {
  std::mt19937_64 rng(11);
  for (std::uint32_t n : {8u, 12u, 20u})
    for (const auto& b : enumerate_braces(n)) {
      const auto autos = enumerate_automorphisms(b.group());
      const auto& phi = autos[rng() % autos.size()];
      const auto t = twist(b, phi);
      const auto f = find_isomorphism(b, t);
      REQUIRE(f);
      CHECK(f->is_bijective());
      CHECK(is_brace_homomorphism(*f, b, t));
      const auto g = find_isomorphism(t, b);
      REQUIRE(g);
      CHECK(is_brace_homomorphism(*g, t, b));
      // phi itself is an isomorphism A^phi -> A.
      CHECK(is_brace_homomorphism(phi, t, b));
    }
}

TEST_CASE("automorphism groups of the order-p^2 braces") {
  for (std::uint64_t p : {2, 3, 5}) {
    const auto b = small_braces(p);
    const std::uint64_t gl2 = (p * p - 1) * (p * p - p);
    CHECK(automorphism_group(b[0]).size() == gl2);
    CHECK(automorphism_group(b[1]).size() == p * (p - 1));
    CHECK(automorphism_group(b[2]).size() == p * (p - 1));
    CHECK(automorphism_group(b[3]).size() == p);

    // Element sets: upper triangular (a b; 0 d) with a = d^2 on B^{p,p}; 1 + pZ on B^{p^2}.
    std::set<std::vector<Index>> expected_bpp, expected_bp2;
    const auto g = b[2].group();
    for (std::uint64_t d = 1; d < p; ++d)
      for (std::uint64_t c = 0; c < p; ++c) {
        const std::uint64_t a = d * d % p;
        // (x, y) -> (a x + c y, d y); generator images of (1,0) and (0,1).
        expected_bpp.insert(GroupMap(g, g, {static_cast<Index>(a * p), static_cast<Index>(c * p + d)}).table());
      }
    const auto z = b[3].group();
    for (std::uint64_t k = 0; k < p; ++k)
      expected_bp2.insert(GroupMap(z, z, {static_cast<Index>(1 + k * p)}).table());
    CHECK(image_set(automorphism_group(b[2])) == expected_bpp);
    CHECK(image_set(automorphism_group(b[3])) == expected_bp2);
  }
  CHECK(automorphism_group(trivial_brace(make_group({2, 2}))).size() == 6);
}

TEST_CASE("dedupe") {
  const auto t = bachiller_p2(3, SmallKind::Tpp);
  const auto b = bachiller_p2(3, SmallKind::Bp2);
  const std::vector<Brace> list{t, t, b};
  const auto d = dedupe_up_to_iso(list);
  CHECK(d.representatives == std::vector<std::size_t>{0, 2});
  CHECK(d.class_of == std::vector<std::size_t>{0, 0, 1});
  CHECK(d.class_sizes == std::vector<std::size_t>{2, 1});
  const auto four = small_braces(3);
  CHECK(dedupe_up_to_iso(four).representatives.size() == 4);
  std::vector<Brace> fine;
  for (auto& e : classify(3, 7)) fine.push_back(e.brace);
  CHECK(dedupe_up_to_iso(fine).representatives.size() == 11);
}
