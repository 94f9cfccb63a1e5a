#include <doctest.h>

#include "holobrace/catalog.hpp"
#include "holobrace/error.hpp"
#include "holobrace/group.hpp"
#include "support.hpp"

using namespace holobrace;

namespace {

FiniteGroup cyclic_mod(unsigned n) {
  std::vector<Elem> t(n * n);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  return FiniteGroup::from_table(t, "C" + std::to_string(n));
}

}  // namespace

TEST_CASE("from_table rejects malformed tables") {
  // Latin square of order 5 that is not associative.
  const std::vector<Elem> latin = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  CHECK_THROWS_AS(FiniteGroup::from_table(latin, "L"), Error);
  try {
    FiniteGroup::from_table(latin, "L");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAssociative);
  }
  const std::vector<Elem> no_identity = {1, 1, 1, 1};
  CHECK_THROWS_AS(FiniteGroup::from_table(no_identity, "X"), Error);
  CHECK_THROWS_AS(FiniteGroup::from_table({0, 1, 2}, "bad size"), Error);
}

TEST_CASE("group basics agree with brute force") {
  const auto g = build(GroupSpec::dihedral(6));
  REQUIRE(g.order() == 12);
  CHECK(oracle::associative(g));
  for (Elem x = 0; x < g.order(); ++x) {
    CHECK(element_order(g, x) == oracle::order_of(g, x));
    CHECK(g.mul(x, g.inv(x)) == g.identity());
  }
  CHECK(center(g).elements == oracle::center(g));
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); b += 5) {
      const std::vector<Elem> gens{a, b};
      CHECK(closure(g, gens).elements == oracle::closure(g, gens));
    }
  CHECK(closure(g, generating_set(g)).size() == g.order());
}

TEST_CASE("normality and subgroups") {
  const auto d = build(GroupSpec::dihedral(4));
  const std::vector<Elem> rot{2};
  const auto r = closure(d, rot);
  CHECK(r.size() == 4);
  CHECK(is_subgroup(d, r));
  CHECK(is_normal(d, r));
  const std::vector<Elem> refl{1};
  const auto s = closure(d, refl);
  CHECK(s.size() == 2);
  CHECK_FALSE(is_normal(d, s));
  CHECK_FALSE(is_subgroup(d, Subgroup{{0, 1, 2}}));
  CHECK(intersect(r, s).elements == std::vector<Elem>{d.identity()});
}

TEST_CASE("isomorphism search") {
  CHECK(find_isomorphisms(cyclic_mod(12), cyclic_mod(12)).size() == oracle::euler_phi(12));
  CHECK(find_isomorphisms(build(GroupSpec::dihedral(3)), cyclic_mod(6)).empty());
  const auto c6 = cyclic_mod(6);
  const auto c2c3 = build(GroupSpec::direct({GroupSpec::cyclic(2), GroupSpec::cyclic(3)}));
  const auto isos = find_isomorphisms(c2c3, c6);
  CHECK(isos.size() == 2);
  for (const auto& m : isos) CHECK(is_homomorphism(c2c3, c6, m));
  const auto d4 = build(GroupSpec::dihedral(4));
  CHECK(find_isomorphisms(d4, d4).size() == oracle::automorphism_count(d4, generating_set(d4)));
}

TEST_CASE("pair isomorphism distinguishes subgroup embeddings") {
  const auto d = build(GroupSpec::dihedral(4));
  const std::vector<Elem> s_gen{1}, z_gen{4};
  const auto s = closure(d, s_gen), z = closure(d, z_gen);
  REQUIRE(s.size() == 2);
  REQUIRE(z.size() == 2);
  CHECK_FALSE(pair_isomorphic(d, s, d, z));
  const std::vector<Elem> rs_gen{3};
  CHECK(pair_isomorphic(d, s, d, closure(d, rs_gen)) == true);
}

TEST_CASE("odd primes") {
  CHECK(is_odd_prime(3));
  CHECK(is_odd_prime(7));
  CHECK_FALSE(is_odd_prime(2));
  CHECK_FALSE(is_odd_prime(1));
  CHECK_FALSE(is_odd_prime(9));
  CHECK_FALSE(is_odd_prime(4));
}
