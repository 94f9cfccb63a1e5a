#include <doctest.h>

#include "holobrace/aut.hpp"
#include "holobrace/catalog.hpp"
#include "holobrace/error.hpp"
#include "holobrace/hgs.hpp"
#include "holobrace/tables.hpp"
#include "support.hpp"

using namespace holobrace;

TEST_CASE("core of a subgroup") {
  const auto d = build(GroupSpec::dihedral(4));
  const std::vector<Elem> s_gen{1}, r_gen{2};
  CHECK(core(d, closure(d, s_gen)).size() == 1);
  CHECK(core(d, closure(d, r_gen)).size() == 4);
}

TEST_CASE("Galois counts at p = 3") {
  std::array<std::vector<RegularSubgroupRecord>, 5> regs;
  std::array<std::uint64_t, 5> aut{};
  for (auto v : kAllVariants) {
    const auto hol = build_holomorph(build_2p2(v, 3));
    regs[variant_index(v)] = regular_subgroups(hol);
    aut[variant_index(v)] = hol.auts().size();
  }
  const auto t = galois_table(3, regs, aut);
  const VariantMatrix expected_a = {{{3, 6, 0, 0, 0},
                                     {9, 2, 0, 0, 0},
                                     {0, 0, 9, 24, 30},
                                     {0, 0, 9, 24, 30},
                                     {0, 0, 9, 72, 62}}};
  const VariantMatrix expected_b = {{{3, 54, 0, 0, 0},
                                     {1, 2, 0, 0, 0},
                                     {0, 0, 9, 6, 270},
                                     {0, 0, 36, 24, 1080},
                                     {0, 0, 1, 2, 62}}};
  CHECK(t.a == expected_a);
  CHECK(t.b == expected_b);
  CHECK(closed_form_hgs_counts(3) == expected_a);
  CHECK(closed_form_regular_counts(3) == expected_b);
  CHECK_NOTHROW(require_closed_form(t));
  auto broken = t;
  broken.a[0][0] = 4;
  CHECK_THROWS_AS(require_closed_form(broken), Error);
  auto skewed = aut;
  skewed[1] = 7;
  CHECK_THROWS_AS(galois_table(3, regs, skewed), Error);
}

TEST_CASE("Byott count for the regular classes") {
  const auto ts = transitive_subgroups_cyclic_hol(3);
  const auto c18 = build_2p2(Variant2p2::Cyclic, 3);
  const auto c = byott_count(ts, {c18, Subgroup{{c18.identity()}}});
  CHECK(c.aut_pair == 6);
  CHECK(c.b == 3);
  CHECK(c.aut_n == 6);
  CHECK(c.a == 3);
  const auto d18 = build_2p2(Variant2p2::Dihedral, 3);
  const auto d = byott_count(ts, {d18, Subgroup{{d18.identity()}}});
  CHECK(d.b == 1);
  CHECK(d.a == 9);
}

TEST_CASE("Byott count input validation") {
  const auto ts = transitive_subgroups_cyclic_hol(3);
  const auto c9 = build(GroupSpec::cyclic(9));
  try {
    byott_count(ts, {c9, Subgroup{{c9.identity()}}});
    FAIL("expected DegreeMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegreeMismatch);
  }
  const auto c36 = build(GroupSpec::cyclic(36));
  const std::vector<Elem> half{18};
  try {
    byott_count(ts, {c36, closure(c36, half)});
    FAIL("expected InvalidArgument");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidArgument);
  }
}

TEST_CASE("cyclic-type report at p = 3") {
  const auto ts = transitive_subgroups_cyclic_hol(3);
  const auto rep = cyclic_type_report(ts);
  REQUIRE(rep.entries.size() == 6);
  std::size_t regular = 0;
  for (const auto& e : rep.entries) {
    CAPTURE(e.order);
    if (e.family == 0) {
      ++regular;
      CHECK(e.stabilizer_order == 1);
      continue;
    }
    CHECK(e.count.a == (e.order == 54 ? 3u : 1u));
    CHECK(e.m * e.k == e.order);
    CHECK((e.family == 1 || e.family == 3) == (e.m == 18));
    CHECK(e.count.a * e.count.aut_n == e.count.aut_pair * e.count.b);
  }
  CHECK(regular == 2);
}
