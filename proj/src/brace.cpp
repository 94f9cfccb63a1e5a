#include "holobrace/brace.hpp"

#include <algorithm>
#include <map>

#include "parallel.hpp"

namespace holobrace {

SkewBrace brace_from_regular(const Holomorph& hol, const HolSubgroup& g) {
  const FiniteGroup& n = hol.base();
  const std::size_t deg = n.order();
  if (g.size() != deg) throw Error(ErrorKind::NotRegular, "subgroup order differs from the degree");
  const auto unset = AutGroup::Index(hol.auts().size());
  std::vector<AutGroup::Index> lambda(deg, unset);
  for (Elem h : g.elements) {
    const Elem x = hol.point(h);
    if (lambda[x] != unset)
      throw Error(ErrorKind::NotRegular, "two elements lie over " + n.element_label(x));
    lambda[x] = hol.aut(h);
  }
  std::vector<Elem> t(deg * deg);
  for (Elem x = 0; x < deg; ++x)
    for (Elem y = 0; y < deg; ++y) t[std::size_t(x) * deg + y] = n.mul(x, hol.auts().apply(lambda[x], y));
  FiniteGroup circ = FiniteGroup::from_table(std::move(t), "(B,o)");
  return SkewBrace{n, std::move(circ), std::move(lambda)};
}

bool brace_law_holds(const SkewBrace& b) {
  const auto& a = b.add;
  const auto& c = b.circ;
  if (c.identity() != a.identity()) return false;
  for (Elem x = 0; x < a.order(); ++x) {
    const Elem xi = a.inv(x);
    for (Elem y = 0; y < a.order(); ++y) {
      const Elem left = a.mul(c.mul(x, y), xi);
      for (Elem z = 0; z < a.order(); ++z)
        if (c.mul(x, a.mul(y, z)) != a.mul(left, c.mul(x, z))) return false;
    }
  }
  return true;
}

Subgroup socle(const SkewBrace& b) {
  const auto& a = b.add;
  const auto& c = b.circ;
  Subgroup out;
  for (Elem x = 0; x < a.order(); ++x) {
    bool in = true;
    for (Elem y = 0; y < a.order() && in; ++y) {
      const Elem yx = c.mul(y, x);
      in = c.mul(x, y) == a.mul(x, y) && a.mul(y, yx) == a.mul(yx, y);
    }
    if (in) out.elements.push_back(x);
  }
  return out;
}

Subgroup annihilator(const SkewBrace& b) { return intersect(socle(b), center(b.circ)); }

std::uint64_t brace_aut_order(const Holomorph& hol, const HolSubgroup& g) {
  const auto gens = hol_subgroup_generators(hol, g);
  std::uint64_t count = 0;
  for (AutGroup::Index phi = 0; phi < hol.auts().size(); ++phi) {
    bool keeps = true;
    for (Elem x : gens)
      if (!g.contains(hol.conjugate_by_aut(phi, x))) {
        keeps = false;
        break;
      }
    if (keeps) ++count;
  }
  return count;
}

std::uint64_t brace_aut_order_direct(const Holomorph& hol, const SkewBrace& b) {
  const auto& auts = hol.auts();
  const auto& c = b.circ;
  std::uint64_t count = 0;
  for (AutGroup::Index phi = 0; phi < auts.size(); ++phi) {
    bool ok = true;
    for (Elem x = 0; x < c.order() && ok; ++x)
      for (Elem y = 0; y < c.order() && ok; ++y)
        ok = auts.apply(phi, c.mul(x, y)) == c.mul(auts.apply(phi, x), auts.apply(phi, y));
    if (ok) ++count;
  }
  return count;
}

std::vector<BraceClass> classify_braces(const Holomorph& hol, const std::vector<RegularSubgroupRecord>& regular) {
  const unsigned p = prime_of(hol);
  const IsoType2p2 additive = classify_2p2(hol.base(), p);
  std::map<std::vector<Elem>, std::size_t> index;
  for (std::size_t i = 0; i < regular.size(); ++i) index.emplace(regular[i].subgroup.elements, i);

  const auto& auts = hol.auts();
  constexpr std::size_t kNone = ~std::size_t{0};
  std::vector<std::size_t> class_of(regular.size(), kNone);
  std::vector<BraceClass> classes;
  std::vector<Elem> image;
  for (std::size_t r = 0; r < regular.size(); ++r) {
    if (class_of[r] != kNone) continue;
    const std::size_t id = classes.size();
    BraceClass cls;
    cls.representative = r;
    std::uint64_t stabilizer = 0;
    for (AutGroup::Index phi = 0; phi < auts.size(); ++phi) {
      image.clear();
      for (Elem h : regular[r].subgroup.elements) image.push_back(hol.conjugate_by_aut(phi, h));
      std::sort(image.begin(), image.end());
      const auto it = index.find(image);
      if (it == index.end())
        throw Error(ErrorKind::InvalidArgument, "a conjugate of a regular subgroup is missing from the list");
      if (it->second == r) ++stabilizer;
      if (class_of[it->second] == kNone) {
        class_of[it->second] = id;
        cls.members.push_back(it->second);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    cls.invariants.aut_order = stabilizer;
    classes.push_back(std::move(cls));
  }

  detail::parallel_for(classes.size(), [&](std::size_t i) {
    auto& cls = classes[i];
    const auto& rec = regular[cls.representative];
    cls.brace = brace_from_regular(hol, rec.subgroup);
    cls.invariants.additive_type = additive;
    cls.invariants.multiplicative_type = rec.iso_type;
    cls.invariants.socle = socle(cls.brace);
    cls.invariants.annihilator = annihilator(cls.brace);
  });
  return classes;
}

}  // namespace holobrace
