#include <doctest.h>

#include "holobrace/catalog.hpp"
#include "holobrace/error.hpp"
#include "holobrace/holomorph.hpp"
#include "support.hpp"

using namespace holobrace;

namespace {

std::vector<Elem> compose_perms(const std::vector<Elem>& a, const std::vector<Elem>& b) {
  std::vector<Elem> out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = a[b[x]];
  return out;
}

}  // namespace

TEST_CASE("holomorph multiplication matches composition of permutations") {
  for (auto v : {Variant2p2::Cyclic, Variant2p2::CpxD2p}) {
    const auto hol = build_holomorph(build_2p2(v, 3));
    CAPTURE(hol.base().label());
    std::set<std::vector<Elem>> images;
    for (Elem a = 0; a < hol.order(); ++a) {
      const auto pa = oracle::as_permutation(hol, a);
      images.insert(pa);
      CHECK(oracle::as_permutation(hol, hol.inv(a)) ==
            [&] {
              std::vector<Elem> inv(pa.size());
              for (Elem x = 0; x < pa.size(); ++x) inv[pa[x]] = x;
              return inv;
            }());
      for (Elem b = 0; b < hol.order(); b += 7)
        CHECK(oracle::as_permutation(hol, hol.mul(a, b)) == compose_perms(pa, oracle::as_permutation(hol, b)));
    }
    CHECK(images.size() == hol.order());
  }
}

TEST_CASE("encoding and powers") {
  const auto hol = build_holomorph(build_2p2(Variant2p2::Dihedral, 3));
  CHECK(hol.order() == 18 * 54);
  for (Elem h = 0; h < hol.order(); h += 13) {
    CHECK(hol.encode(hol.point(h), hol.aut(h)) == h);
    Elem acc = hol.identity();
    for (std::uint64_t k = 0; k < 5; ++k) {
      CHECK(hol.power(h, k) == acc);
      acc = hol.mul(acc, h);
    }
    std::uint64_t ord = 1;
    for (Elem y = h; y != hol.identity(); y = hol.mul(y, h)) ++ord;
    CHECK(hol.element_order(h) == ord);
  }
}

TEST_CASE("lambda embedding is regular and normal") {
  const auto hol = build_holomorph(build_2p2(Variant2p2::CpxC2p, 3));
  const auto lam = lambda_embed(hol);
  CHECK(lam.size() == 18);
  const auto prof = action_profile(hol, lam);
  CHECK(prof.regular);
  CHECK(prof.transitive);
  CHECK(prof.semiregular);
  CHECK(prof.stabilizer_order == 1);
  CHECK(normalizer_in_hol(hol, lam).size() == hol.order());
}

TEST_CASE("closure inside the holomorph agrees with the materialized table") {
  const auto hol = build_holomorph(build_2p2(Variant2p2::Cyclic, 3));
  const auto table = hol.materialize();
  CHECK(table.order() == hol.order());
  for (Elem a = 0; a < hol.order(); a += 11)
    for (Elem b = 0; b < hol.order(); b += 17) {
      const std::vector<Elem> gens{a, b};
      const auto h = hol_closure(hol, gens);
      REQUIRE(h.has_value());
      CHECK(h->elements == oracle::closure(table, gens));
      CHECK(hol_closure(hol, hol_subgroup_generators(hol, *h)) == h);
    }
  const std::vector<Elem> all = hol.generators();
  CHECK(hol_closure(hol, all)->size() == hol.order());
  CHECK_FALSE(hol_closure(hol, all, 10).has_value());
}

TEST_CASE("action profile against explicit orbits") {
  const auto hol = build_holomorph(build_2p2(Variant2p2::CpxD2p, 3));
  const std::vector<Elem> gens{hol.encode(0, 1)};
  const auto h = *hol_closure(hol, gens);
  std::vector<std::size_t> sizes;
  std::vector<bool> seen(hol.degree(), false);
  for (Elem x = 0; x < hol.degree(); ++x) {
    if (seen[x]) continue;
    std::set<Elem> orbit;
    for (Elem g : h.elements) orbit.insert(hol.act(g, x));
    for (Elem y : orbit) seen[y] = true;
    sizes.push_back(orbit.size());
  }
  std::sort(sizes.begin(), sizes.end());
  const auto prof = action_profile(hol, h);
  CHECK(prof.orbit_sizes == sizes);
  std::size_t stab = 0;
  for (Elem g : h.elements) stab += hol.act(g, hol.base().identity()) == hol.base().identity();
  CHECK(prof.stabilizer_order == stab);
}

TEST_CASE("conjugation by automorphisms") {
  const auto hol = build_holomorph(build_2p2(Variant2p2::Dihedral, 3));
  const auto& a = hol.auts();
  for (AutGroup::Index phi = 0; phi < a.size(); phi += 5)
    for (Elem h = 0; h < hol.order(); h += 31) {
      const Elem phi_el = hol.encode(hol.base().identity(), phi);
      CHECK(hol.conjugate_by_aut(phi, h) == hol.mul(hol.mul(phi_el, h), hol.inv(phi_el)));
    }
}

TEST_CASE("fixed points and subgroup tables") {
  const auto hol = build_holomorph(build_2p2(Variant2p2::Cyclic, 3));
  for (Elem h = 0; h < hol.order(); ++h) {
    bool moves_all = true;
    for (Elem x = 0; x < hol.degree(); ++x) moves_all = moves_all && hol.act(h, x) != x;
    CHECK(hol.fixes_no_point(h) == moves_all);
  }
  const auto lam = lambda_embed(hol);
  const auto g = hol_subgroup_as_group(hol, lam, "L");
  CHECK(find_isomorphisms(g, hol.base(), 1).size() == 1);
  for (Elem h = 0; h < hol.order(); h += 9) {
    const auto& gens = hol_subgroup_generators(hol, lam);
    CHECK(normalizes(hol, h, lam, gens));
  }
}

TEST_CASE("materialize guard") {
  const auto hol = build_holomorph(build_2p2(Variant2p2::Dihedral, 5));
  CHECK(hol.order() == 50 * 500);
  CHECK_THROWS_AS(hol.materialize(), Error);
}
