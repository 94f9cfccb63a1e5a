#include "holobrace/holomorph.hpp"

#include <algorithm>
#include <unordered_set>

namespace holobrace {

Holomorph::Holomorph(AutGroup auts) : auts_(std::move(auts)) {
  if (base().order() * auts_.size() > std::numeric_limits<Elem>::max())
    throw Error(ErrorKind::TooLarge, "holomorph does not fit the element encoding");
}

Elem Holomorph::mul(Elem a, Elem b) const {
  const auto fa = aut(a);
  return encode(base().mul(point(a), auts_.apply(fa, point(b))), auts_.compose(fa, aut(b)));
}

Elem Holomorph::inv(Elem a) const {
  // (n, f)^-1 = (f^-1(n^-1), f^-1)
  const auto fi = auts_.inverse(aut(a));
  return encode(auts_.apply(fi, base().inv(point(a))), fi);
}

Elem Holomorph::power(Elem a, std::uint64_t k) const {
  Elem result = identity();
  Elem base_elem = a;
  while (k) {
    if (k & 1) result = mul(result, base_elem);
    base_elem = mul(base_elem, base_elem);
    k >>= 1;
  }
  return result;
}

std::uint64_t Holomorph::element_order(Elem a) const {
  std::uint64_t k = 1;
  for (Elem x = a; x != identity(); x = mul(x, a)) ++k;
  return k;
}

Elem Holomorph::conjugate_by_aut(AutGroup::Index phi, Elem h) const {
  const auto f = auts_.compose(auts_.compose(phi, aut(h)), auts_.inverse(phi));
  return encode(auts_.apply(phi, point(h)), f);
}

bool Holomorph::fixes_no_point(Elem h) const noexcept {
  for (Elem x = 0; x < degree(); ++x)
    if (act(h, x) == x) return false;
  return true;
}

std::vector<Elem> Holomorph::generators() const {
  std::vector<Elem> gens;
  for (Elem g : generating_set(base())) gens.push_back(encode(g, auts_.identity()));
  for (auto f : auts_.generators()) gens.push_back(encode(base().identity(), f));
  return gens;
}

FiniteGroup Holomorph::materialize() const {
  const std::size_t m = order();
  if (m > kMaterializeBound)
    throw Error(ErrorKind::TooLarge, "holomorph of order " + std::to_string(m) + " is too large to tabulate");
  std::vector<Elem> t(m * m);
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b) t[std::size_t(a) * m + b] = mul(a, b);
  return FiniteGroup::from_table(std::move(t), "Hol(" + base().label() + ")", generators());
}

Holomorph build_holomorph(const FiniteGroup& n, bool force) {
  return Holomorph(automorphism_group(n, kAutOrderBound, force));
}

std::optional<HolSubgroup> hol_closure(const Holomorph& hol, std::span<const Elem> gens, std::size_t cap) {
  std::vector<Elem> elems{hol.identity()};
  std::unordered_set<Elem> seen{hol.identity()};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (Elem g : gens) {
      const Elem y = hol.mul(elems[head], g);
      if (seen.insert(y).second) {
        if (elems.size() >= cap) return std::nullopt;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return HolSubgroup{std::move(elems)};
}

std::vector<Elem> hol_subgroup_generators(const Holomorph& hol, const HolSubgroup& h) {
  std::vector<Elem> gens;
  HolSubgroup current{{hol.identity()}};
  for (Elem x : h.elements) {
    if (current.contains(x)) continue;
    gens.push_back(x);
    current = *hol_closure(hol, gens);
    if (current.size() == h.size()) break;
  }
  return gens;
}

HolSubgroup lambda_embed(const Holomorph& hol) {
  HolSubgroup out;
  for (Elem n = 0; n < hol.degree(); ++n) out.elements.push_back(hol.encode(n, hol.auts().identity()));
  return out;
}

ActionProfile action_profile(const Holomorph& hol, const HolSubgroup& h) {
  ActionProfile prof;
  const std::size_t deg = hol.degree();
  std::vector<char> seen(deg, 0);
  for (Elem x = 0; x < deg; ++x) {
    if (seen[x]) continue;
    std::size_t size = 0;
    for (Elem g : h.elements) {
      const Elem y = hol.act(g, x);
      if (!seen[y]) {
        seen[y] = 1;
        ++size;
      }
    }
    prof.orbit_sizes.push_back(size);
  }
  std::sort(prof.orbit_sizes.begin(), prof.orbit_sizes.end());
  const Elem one = hol.base().identity();
  for (Elem g : h.elements)
    if (hol.act(g, one) == one) ++prof.stabilizer_order;
  prof.transitive = prof.orbit_sizes.size() == 1;
  prof.semiregular = std::all_of(prof.orbit_sizes.begin(), prof.orbit_sizes.end(),
                                 [&](std::size_t s) { return s == h.size(); });
  prof.regular = prof.transitive && prof.semiregular;
  return prof;
}

bool normalizes(const Holomorph& hol, Elem g, const HolSubgroup& h, std::span<const Elem> h_gens) {
  const Elem gi = hol.inv(g);
  for (Elem x : h_gens)
    if (!h.contains(hol.mul(hol.mul(g, x), gi))) return false;
  return true;
}

HolSubgroup normalizer_in_hol(const Holomorph& hol, const HolSubgroup& h) {
  const auto gens = hol_subgroup_generators(hol, h);
  HolSubgroup out;
  for (Elem g = 0; g < hol.order(); ++g)
    if (normalizes(hol, g, h, gens)) out.elements.push_back(g);
  return out;
}

FiniteGroup hol_subgroup_as_group(const Holomorph& hol, const HolSubgroup& h, std::string label) {
  const std::size_t m = h.size();
  std::vector<Elem> t(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Elem v = hol.mul(h.elements[i], h.elements[j]);
      const auto it = std::lower_bound(h.elements.begin(), h.elements.end(), v);
      if (it == h.elements.end() || *it != v)
        throw Error(ErrorKind::InvalidArgument, "element list is not closed in the holomorph");
      t[i * m + j] = Elem(it - h.elements.begin());
    }
  }
  return FiniteGroup::from_table(std::move(t), std::move(label));
}

}  // namespace holobrace
