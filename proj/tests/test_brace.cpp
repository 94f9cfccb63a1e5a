#include <doctest.h>

#include "holobrace/brace.hpp"
#include "holobrace/catalog.hpp"
#include "holobrace/error.hpp"
#include "support.hpp"

using namespace holobrace;

namespace {

bool skew_brace_law(const SkewBrace& b) {
  const auto& a = b.add;
  const auto& c = b.circ;
  for (Elem x = 0; x < a.order(); ++x)
    for (Elem y = 0; y < a.order(); ++y)
      for (Elem z = 0; z < a.order(); ++z)
        if (c.mul(x, a.mul(y, z)) != a.mul(a.mul(c.mul(x, y), a.inv(x)), c.mul(x, z))) return false;
  return true;
}

// ker(lambda) meets Z(B, .)
std::vector<Elem> socle_oracle(const Holomorph& hol, const SkewBrace& b) {
  std::vector<Elem> out;
  const auto z = oracle::center(b.add);
  for (Elem x : z)
    if (b.lambda[x] == hol.auts().identity()) out.push_back(x);
  return out;
}

}  // namespace

TEST_CASE("trivial brace from the left regular representation") {
  const auto hol = build_holomorph(build_2p2(Variant2p2::CpxD2p, 3));
  const auto b = brace_from_regular(hol, lambda_embed(hol));
  for (Elem x = 0; x < 18; ++x)
    for (Elem y = 0; y < 18; ++y) CHECK(b.circ.mul(x, y) == b.add.mul(x, y));
  CHECK(socle(b).elements == oracle::center(b.add));
  CHECK(annihilator(b).elements == oracle::center(b.add));
  CHECK(brace_aut_order(hol, lambda_embed(hol)) == hol.auts().size());
}

TEST_CASE("braces from every regular subgroup at p = 3") {
  for (auto v : kAllVariants) {
    const auto hol = build_holomorph(build_2p2(v, 3));
    CAPTURE(hol.base().label());
    for (const auto& r : regular_subgroups(hol)) {
      const auto b = brace_from_regular(hol, r.subgroup);
      CHECK(oracle::associative(b.circ));
      CHECK(skew_brace_law(b));
      CHECK(brace_law_holds(b));
      const auto soc = socle(b);
      CHECK(soc.elements == socle_oracle(hol, b));
      const auto zc = oracle::center(b.circ);
      std::vector<Elem> ann;
      std::set_intersection(soc.elements.begin(), soc.elements.end(), zc.begin(), zc.end(),
                            std::back_inserter(ann));
      CHECK(annihilator(b).elements == ann);
      CHECK(is_normal(b.circ, soc));
      CHECK(classify_2p2(b.circ, 3) == r.iso_type);
    }
  }
}

TEST_CASE("brace automorphism counts by two routes") {
  const auto hol = build_holomorph(build_2p2(Variant2p2::Dihedral, 3));
  for (const auto& r : regular_subgroups(hol)) {
    const auto b = brace_from_regular(hol, r.subgroup);
    std::uint64_t brute = 0;
    for (AutGroup::Index f = 0; f < hol.auts().size(); ++f) {
      bool ok = true;
      for (Elem x = 0; x < 18 && ok; ++x)
        for (Elem y = 0; y < 18 && ok; ++y)
          ok = hol.auts().apply(f, b.circ.mul(x, y)) == b.circ.mul(hol.auts().apply(f, x), hol.auts().apply(f, y));
      brute += ok;
    }
    CHECK(brace_aut_order(hol, r.subgroup) == brute);
    CHECK(brace_aut_order_direct(hol, b) == brute);
  }
}

TEST_CASE("classification into Aut(N)-orbits") {
  for (auto v : kAllVariants) {
    const auto hol = build_holomorph(build_2p2(v, 3));
    const auto regs = regular_subgroups(hol);
    const auto classes = classify_braces(hol, regs);
    std::size_t covered = 0;
    for (const auto& c : classes) {
      covered += c.orbit_size();
      CHECK(c.orbit_size() * c.invariants.aut_order == hol.auts().size());
      CHECK(std::binary_search(c.members.begin(), c.members.end(), c.representative));
      // Brute-force orbit of the representative.
      std::set<std::vector<Elem>> orbit;
      for (AutGroup::Index f = 0; f < hol.auts().size(); ++f) {
        std::vector<Elem> img;
        for (Elem h : regs[c.representative].subgroup.elements) img.push_back(hol.conjugate_by_aut(f, h));
        std::sort(img.begin(), img.end());
        orbit.insert(img);
      }
      CHECK(orbit.size() == c.orbit_size());
      for (auto m : c.members) CHECK(orbit.count(regs[m].subgroup.elements) == 1);
    }
    CHECK(covered == regs.size());
  }
}

TEST_CASE("non-regular input is rejected") {
  const auto hol = build_holomorph(build_2p2(Variant2p2::Cyclic, 3));
  try {
    brace_from_regular(hol, Subgroup{{hol.identity()}});
    FAIL("expected NotRegular");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotRegular);
  }
}
