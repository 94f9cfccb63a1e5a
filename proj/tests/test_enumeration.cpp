#include <doctest.h>

#include "holobrace/catalog.hpp"
#include "holobrace/enumeration.hpp"
#include "holobrace/error.hpp"
#include "support.hpp"

using namespace holobrace;

namespace {

// Every subgroup of a group whose subgroups are all 2-generated.
std::set<std::vector<Elem>> two_generated_subgroups(const FiniteGroup& g) {
  std::set<std::vector<Elem>> out;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = a; b < g.order(); ++b) out.insert(oracle::closure(g, {a, b}));
  return out;
}

std::set<std::vector<Elem>> as_sets(const std::vector<Subgroup>& subs) {
  std::set<std::vector<Elem>> out;
  for (const auto& s : subs) out.insert(s.elements);
  return out;
}

}  // namespace

TEST_CASE("subgroup lattice by cyclic extension") {
  for (const auto& spec : {GroupSpec::dihedral(4), GroupSpec::dihedral(9), GroupSpec::cyclic(12),
                           GroupSpec::dihedral(6)}) {
    const auto g = build(spec);
    CAPTURE(g.order());
    const auto subs = all_subgroups(g);
    CHECK(as_sets(subs) == two_generated_subgroups(g));
    CHECK(std::is_sorted(subs.begin(), subs.end()));
  }
  CHECK(all_subgroups(build(GroupSpec::dihedral(4))).size() == 10);
  const auto e8 = build(GroupSpec::direct({GroupSpec::cyclic(2), GroupSpec::cyclic(2), GroupSpec::cyclic(2)}));
  CHECK(all_subgroups(e8).size() == 16);
}

TEST_CASE("semiregular p^2 subgroups at p = 3 by lattice scan") {
  for (auto v : {Variant2p2::Cyclic, Variant2p2::CpxD2p, Variant2p2::CpxC2p}) {
    const auto hol = build_holomorph(build_2p2(v, 3));
    CAPTURE(hol.base().label());
    const auto table = hol.materialize();
    const auto sylow_type = classify_2p2(hol.base(), 3).variant;
    const bool cyclic_sylow = sylow_type == Variant2p2::Cyclic || sylow_type == Variant2p2::Dihedral;
    std::vector<Subgroup> expected;
    for (const auto& s : all_subgroups(table)) {
      if (s.size() != 9 || !action_profile(hol, s).semiregular) continue;
      bool has_order_9 = false;
      for (Elem x : s.elements) has_order_9 = has_order_9 || oracle::order_of(table, x) == 9;
      if (has_order_9 == cyclic_sylow) expected.push_back(s);
    }
    CHECK(semiregular_p2_subgroups(hol) == expected);
  }
}

TEST_CASE("semiregular counts at p = 3") {
  const std::size_t expected[] = {3, 18, 9, 6, 144};
  for (auto v : kAllVariants)
    CHECK(semiregular_p2_subgroups(build_holomorph(build_2p2(v, 3))).size() == expected[variant_index(v)]);
}

TEST_CASE("regular subgroups agree with the unpruned oracle at p = 3") {
  for (auto v : kAllVariants) {
    const auto hol = build_holomorph(build_2p2(v, 3));
    CAPTURE(hol.base().label());
    const auto regs = regular_subgroups(hol);
    std::vector<HolSubgroup> subs;
    for (const auto& r : regs) {
      subs.push_back(r.subgroup);
      CHECK(action_profile(hol, r.subgroup).regular);
      CHECK(r.iso_type == classify_2p2(hol_subgroup_as_group(hol, r.subgroup, "G"), 3));
      CHECK(hol.element_order(r.extending_involution) == 2);
    }
    CHECK(subs == regular_subgroups_oracle(hol));
  }
}

TEST_CASE("regular subgroups of Hol(C18) by lattice scan") {
  const auto hol = build_holomorph(build_2p2(Variant2p2::Cyclic, 3));
  const auto table = hol.materialize();
  std::vector<HolSubgroup> expected;
  for (const auto& s : all_subgroups(table))
    if (s.size() == 18 && action_profile(hol, s).regular) expected.push_back(s);
  std::vector<HolSubgroup> got;
  for (const auto& r : regular_subgroups(hol)) got.push_back(r.subgroup);
  CHECK(got == expected);
  CHECK(got.size() == 4);
}

TEST_CASE("Sylow subgroups and involutions") {
  const auto hol = build_holomorph(build_2p2(Variant2p2::Dihedral, 3));
  const auto syl = sylow_subgroup(hol, 3);
  CHECK(syl.size() == 9 * 27);
  for (Elem x : syl.elements) CHECK(27 * 9 % hol.element_order(x) == 0);
  const auto conj = sylow_conjugates(hol, syl);
  CHECK(std::binary_search(conj.begin(), conj.end(), syl));
  CHECK(hol.order() / syl.size() % conj.size() == 0);
  const auto inv = involutions(hol);
  std::size_t brute = 0;
  for (Elem h = 0; h < hol.order(); ++h) brute += hol.element_order(h) == 2;
  CHECK(inv.size() == brute);
}

TEST_CASE("prime extraction") {
  CHECK(prime_of(build_holomorph(build_2p2(Variant2p2::Cyclic, 5))) == 5);
  CHECK_THROWS_AS(prime_of(build_holomorph(build(GroupSpec::cyclic(12)))), Error);
}

TEST_CASE("transitive subgroups of Hol(C18)") {
  const auto ts = transitive_subgroups_cyclic_hol(3);
  CHECK(ts.hol.order() == 108);
  CHECK(ts.class_count == 6);
  const auto table = ts.hol.materialize();
  std::size_t expected = 0;
  for (const auto& s : all_subgroups(table)) expected += action_profile(ts.hol, s).transitive;
  CHECK(ts.records.size() == expected);
  for (const auto& r : ts.records) {
    CHECK(action_profile(ts.hol, r.subgroup).transitive);
    CHECK(r.order == r.subgroup.size());
    CHECK(r.stabilizer.size() * 18 == r.order);
    CHECK(r.pair_class_id < ts.class_count);
  }
}
