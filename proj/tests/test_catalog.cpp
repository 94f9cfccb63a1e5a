#include <doctest.h>

#include "holobrace/catalog.hpp"
#include "holobrace/error.hpp"
#include "support.hpp"

using namespace holobrace;

namespace {

std::size_t count_order(const FiniteGroup& g, std::uint64_t k) {
  const auto prof = oracle::order_profile(g);
  const auto it = prof.find(k);
  return it == prof.end() ? 0 : it->second;
}

}  // namespace

TEST_CASE("the five groups have the expected element statistics") {
  for (unsigned p : {3u, 5u}) {
    CAPTURE(p);
    const std::size_t p2 = p * p;
    struct Expect {
      Variant2p2 v;
      std::size_t involutions, order_p2, center;
      bool abelian;
    };
    const Expect rows[] = {
        {Variant2p2::Cyclic, 1, p2 - p, 2 * p2, true},
        {Variant2p2::Dihedral, p2, p2 - p, 1, false},
        {Variant2p2::CpxC2p, 1, 0, 2 * p2, true},
        {Variant2p2::CpxD2p, p, 0, p, false},
        {Variant2p2::CpCpC2, p2, 0, 1, false},
    };
    for (const auto& e : rows) {
      const auto g = build_2p2(e.v, p);
      CAPTURE(g.label());
      CHECK(g.order() == 2 * p2);
      if (p == 3) CHECK(oracle::associative(g));
      CHECK(count_order(g, 2) == e.involutions);
      CHECK(count_order(g, p2) == e.order_p2);
      CHECK(oracle::center(g).size() == e.center);
      CHECK(g.is_abelian() == e.abelian);
      CHECK(oracle::closure(g, {g.generators().begin(), g.generators().end()}).size() == g.order());
      CHECK(g.label() == type_label(e.v, p));
    }
  }
}

TEST_CASE("generating set sizes") {
  const std::size_t expected[] = {1, 2, 2, 2, 3};
  for (auto v : kAllVariants) CHECK(build_2p2(v, 3).generators().size() == expected[variant_index(v)]);
}

TEST_CASE("classifier agrees with isomorphism testing") {
  const unsigned p = 3;
  for (auto v : kAllVariants) {
    const auto g = build_2p2(v, p);
    CHECK(classify_2p2(g, p).variant == v);
    for (auto w : kAllVariants) CHECK(find_isomorphisms(g, build_2p2(w, p), 1).empty() == (v != w));
  }
  CHECK_THROWS_AS(classify_2p2(build(GroupSpec::cyclic(12)), 3), Error);
}

TEST_CASE("labels and tokens") {
  CHECK(type_label(Variant2p2::Cyclic, 3) == "C18");
  CHECK(type_label(Variant2p2::Dihedral, 5) == "D50");
  CHECK(type_label(Variant2p2::CpxC2p, 3) == "C3xC6");
  CHECK(type_label(Variant2p2::CpxD2p, 3) == "C3xD6");
  CHECK(type_label(Variant2p2::CpCpC2, 3) == "(C3xC3):C2");
  CHECK(variant_token(Variant2p2::Dihedral) == "D2p2");
}

TEST_CASE("generic constructions") {
  const auto c18 = build(GroupSpec::cyclic(18));
  CHECK(oracle::order_of(c18, 1) == 18);
  const auto d = build(GroupSpec::dihedral(9));
  CHECK(d.order() == 18);
  CHECK(count_order(d, 2) == 9);
  const auto prod = build(GroupSpec::direct({GroupSpec::cyclic(3), GroupSpec::dihedral(3)}));
  CHECK(prod.order() == 18);
  CHECK(find_isomorphisms(prod, build_2p2(Variant2p2::CpxD2p, 3), 1).size() == 1);
  const auto sd = build(GroupSpec::semidirect(GroupSpec::cyclic(7), GroupSpec::cyclic(3), {power_map(7, 2)}));
  CHECK(sd.order() == 21);
  CHECK(oracle::associative(sd));
  CHECK(oracle::center(sd).size() == 1);
}

TEST_CASE("semidirect product rejects a non-automorphism action") {
  try {
    build(GroupSpec::semidirect(GroupSpec::cyclic(7), GroupSpec::cyclic(2), {power_map(7, 2)}));
    FAIL("expected InvalidAction");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidAction);
  }
}

TEST_CASE("cyclic semidirect families") {
  const auto g = build_cyclic_semidirect(3, 18, 2);
  CHECK(g.order() == 36);
  CHECK(find_isomorphisms(g, build(GroupSpec::dihedral(18)), 1).size() == 1);
  const auto h = build_cyclic_semidirect(3, 9, 6);
  CHECK(h.order() == 54);
  CHECK(oracle::center(h).size() == 1);
  CHECK(count_order(h, 9) > 0);
  CHECK(build_cyclic_semidirect(3, 18, 1).is_abelian());
  try {
    build_cyclic_semidirect(3, 18, 4);
    FAIL("expected NoSuchTwist");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoSuchTwist);
  }
}
