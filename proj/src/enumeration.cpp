#include "holobrace/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_set>

#include "holobrace/catalog.hpp"
#include "parallel.hpp"

namespace holobrace {

namespace {

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t out = 1;
  while (n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

bool has_element_of_order(const FiniteGroup& g, std::uint64_t k) {
  for (Elem x = 0; x < g.order(); ++x)
    if (element_order(g, x) == k) return true;
  return false;
}

// Sylow p-subgroup of Aut(N), grown by p-elements normalizing the current
// subgroup.
std::vector<AutGroup::Index> aut_sylow(const AutGroup& a, unsigned p) {
  const std::uint64_t target = p_part(a.size(), p);
  std::vector<char> in(a.size(), 0);
  std::vector<AutGroup::Index> members{a.identity()}, gens;
  in[a.identity()] = 1;
  std::vector<char> p_elem(a.size(), 0);
  for (AutGroup::Index f = 0; f < a.size(); ++f) p_elem[f] = is_power_of(a.element_order(f), p);
  while (members.size() < target) {
    bool grew = false;
    for (AutGroup::Index f = 0; f < a.size() && !grew; ++f) {
      if (in[f] || !p_elem[f]) continue;
      const auto fi = a.inverse(f);
      bool normal = true;
      for (auto s : gens)
        if (!in[a.compose(a.compose(f, s), fi)]) {
          normal = false;
          break;
        }
      if (!normal) continue;
      gens.push_back(f);
      for (std::size_t head = 0; head < members.size(); ++head) {
        for (auto g : gens) {
          const auto h = a.compose(members[head], g);
          if (!in[h]) {
            in[h] = 1;
            members.push_back(h);
          }
        }
      }
      grew = true;
    }
    if (!grew) throw Error(ErrorKind::InvalidArgument, "Sylow search in Aut(N) stalled");
  }
  return members;
}

HolSubgroup conjugate(const Holomorph& hol, const HolSubgroup& s, Elem g) {
  const Elem gi = hol.inv(g);
  HolSubgroup out;
  out.elements.reserve(s.size());
  for (Elem x : s.elements) out.elements.push_back(hol.mul(hol.mul(g, x), gi));
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

std::vector<Elem> cyclic_elements(const Holomorph& hol, Elem h) {
  std::vector<Elem> out{hol.identity()};
  for (Elem x = h; x != hol.identity(); x = hol.mul(x, h)) out.push_back(x);
  return out;
}

// Order-p^2 subgroups of a p-group S. `cyclic` selects C_{p^2} or C_p x C_p;
// `semiregular` keeps only fixed-point-free ones.
void p2_subgroups_of(const Holomorph& hol, const HolSubgroup& s, unsigned p, bool cyclic, bool semiregular,
                     std::set<HolSubgroup>& out) {
  const Elem one = hol.identity();
  if (cyclic) {
    for (Elem h : s.elements) {
      const Elem hp = hol.power(h, p);
      if (hp == one || hol.power(hp, p) != one) continue;
      if (semiregular && !hol.fixes_no_point(hp)) continue;
      auto elems = cyclic_elements(hol, h);
      std::sort(elems.begin(), elems.end());
      out.insert(HolSubgroup{std::move(elems)});
    }
    return;
  }
  std::vector<Elem> e;
  for (Elem x : s.elements)
    if (x != one && hol.power(x, p) == one && (!semiregular || hol.fixes_no_point(x))) e.push_back(x);
  const std::unordered_set<Elem> e_set(e.begin(), e.end());
  for (std::size_t i = 0; i < e.size(); ++i) {
    const auto xs = cyclic_elements(hol, e[i]);
    std::unordered_set<Elem> covered(xs.begin(), xs.end());
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      const Elem y = e[j];
      if (covered.count(y) || hol.mul(e[i], y) != hol.mul(y, e[i])) continue;
      std::vector<Elem> elems;
      elems.reserve(std::size_t(p) * p);
      bool ok = true;
      for (Elem yb = one; ok;) {
        for (Elem x : xs) {
          const Elem v = hol.mul(x, yb);
          if (semiregular && v != one && !e_set.count(v)) ok = false;
          elems.push_back(v);
        }
        yb = hol.mul(yb, y);
        if (yb == one) break;
      }
      covered.insert(elems.begin(), elems.end());
      if (!ok) continue;
      std::sort(elems.begin(), elems.end());
      out.insert(HolSubgroup{std::move(elems)});
    }
  }
}

bool n_has_cyclic_sylow(const Holomorph& hol, unsigned p) {
  return has_element_of_order(hol.base(), std::uint64_t(p) * p);
}

bool points_distinct(const Holomorph& hol, const std::vector<Elem>& elems) {
  std::vector<char> hit(hol.degree(), 0);
  for (Elem g : elems) {
    const Elem x = hol.point(g);
    if (hit[x]) return false;
    hit[x] = 1;
  }
  return true;
}

}  // namespace

unsigned prime_of(const Holomorph& hol) {
  const std::size_t n = hol.degree();
  const auto p = unsigned(std::llround(std::sqrt(double(n) / 2)));
  if (2 * std::size_t(p) * p != n || !is_odd_prime(p))
    throw Error(ErrorKind::NotOrder2p2, "base group of order " + std::to_string(n) + " is not of order 2p^2");
  return p;
}

std::vector<Elem> involutions(const Holomorph& hol) {
  // (n, f)^2 = (n f(n), f^2)
  const auto& a = hol.auts();
  const auto& n = hol.base();
  std::vector<Elem> out;
  for (AutGroup::Index f = 0; f < a.size(); ++f) {
    if (a.compose(f, f) != a.identity()) continue;
    for (Elem x = 0; x < n.order(); ++x) {
      if (n.mul(x, a.apply(f, x)) != n.identity()) continue;
      const Elem h = hol.encode(x, f);
      if (h != hol.identity()) out.push_back(h);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

HolSubgroup sylow_subgroup(const Holomorph& hol, unsigned p) {
  const auto& n = hol.base();
  std::vector<Elem> syl_n;
  for (Elem x = 0; x < n.order(); ++x)
    if (is_power_of(element_order(n, x), p)) syl_n.push_back(x);
  const auto syl_a = aut_sylow(hol.auts(), p);
  HolSubgroup out;
  for (Elem x : syl_n)
    for (auto f : syl_a) out.elements.push_back(hol.encode(x, f));
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

std::vector<HolSubgroup> sylow_conjugates(const Holomorph& hol, const HolSubgroup& sylow) {
  const auto gens = hol.generators();
  std::set<HolSubgroup> seen{sylow};
  std::vector<HolSubgroup> queue{sylow};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Elem g : gens) {
      auto c = conjugate(hol, queue[head], g);
      if (seen.insert(c).second) queue.push_back(std::move(c));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<HolSubgroup> semiregular_p2_subgroups(const Holomorph& hol) {
  const unsigned p = prime_of(hol);
  const bool cyclic = n_has_cyclic_sylow(hol, p);
  const auto sylows = sylow_conjugates(hol, sylow_subgroup(hol, p));
  std::vector<std::set<HolSubgroup>> parts(sylows.size());
  detail::parallel_for(sylows.size(), [&](std::size_t i) { p2_subgroups_of(hol, sylows[i], p, cyclic, true, parts[i]); });
  std::set<HolSubgroup> all;
  for (auto& part : parts) all.merge(part);
  return {all.begin(), all.end()};
}

std::vector<RegularSubgroupRecord> regular_subgroups(const Holomorph& hol) {
  const unsigned p = prime_of(hol);
  const auto cores = semiregular_p2_subgroups(hol);
  const auto invols = involutions(hol);
  std::vector<std::vector<RegularSubgroupRecord>> parts(cores.size());
  detail::parallel_for(cores.size(), [&](std::size_t i) {
    const HolSubgroup& core = cores[i];
    const auto gens = hol_subgroup_generators(hol, core);
    auto& found = parts[i];
    for (Elem t : invols) {
      if (!normalizes(hol, t, core, gens)) continue;
      if (std::any_of(found.begin(), found.end(), [&](const auto& r) { return r.subgroup.contains(t); })) continue;
      std::vector<Elem> elems = core.elements;
      for (Elem x : core.elements) elems.push_back(hol.mul(t, x));
      if (!points_distinct(hol, elems)) continue;
      std::sort(elems.begin(), elems.end());
      RegularSubgroupRecord rec;
      rec.subgroup = HolSubgroup{std::move(elems)};
      rec.iso_type = classify_2p2(hol_subgroup_as_group(hol, rec.subgroup, "G"), p);
      rec.sylow_core = core;
      rec.extending_involution = t;
      found.push_back(std::move(rec));
    }
  });
  std::vector<RegularSubgroupRecord> out;
  for (auto& part : parts)
    for (auto& r : part) out.push_back(std::move(r));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.subgroup < b.subgroup; });
  return out;
}

std::vector<HolSubgroup> regular_subgroups_oracle(const Holomorph& hol) {
  if (hol.order() > kOracleBound)
    throw Error(ErrorKind::TooLarge, "oracle enumeration needs |Hol(N)| <= " + std::to_string(kOracleBound));
  const unsigned p = prime_of(hol);
  std::set<HolSubgroup> p2;
  for (const auto& s : sylow_conjugates(hol, sylow_subgroup(hol, p))) {
    p2_subgroups_of(hol, s, p, true, false, p2);
    p2_subgroups_of(hol, s, p, false, false, p2);
  }
  const auto invols = involutions(hol);
  const std::size_t target = 2 * std::size_t(p) * p;
  std::set<HolSubgroup> out;
  for (const auto& core : p2) {
    auto gens = hol_subgroup_generators(hol, core);
    gens.push_back(0);
    for (Elem t : invols) {
      gens.back() = t;
      auto g = hol_closure(hol, gens, target);
      if (g && g->size() == target && action_profile(hol, *g).regular) out.insert(std::move(*g));
    }
  }
  return {out.begin(), out.end()};
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Elem> zuppos;
  std::set<Subgroup> cyclic_seen;
  for (Elem x = 0; x < n; ++x) {
    const auto ord = element_order(g, x);
    if (ord == 1) continue;
    std::uint64_t q = 2;
    while (ord % q) ++q;
    if (!is_power_of(ord, q)) continue;
    const Elem gens[] = {x};
    if (cyclic_seen.insert(closure(g, gens)).second) zuppos.push_back(x);
  }

  struct Node {
    Subgroup sub;
    std::vector<Elem> gens;
  };
  std::set<Subgroup> found;
  std::vector<Node> nodes;
  Subgroup trivial{{g.identity()}};
  found.insert(trivial);
  nodes.push_back({trivial, {}});
  std::vector<char> in(n), in_k(n);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    std::fill(in.begin(), in.end(), 0);
    for (Elem x : nodes[i].sub.elements) in[x] = 1;
    for (Elem z : zuppos) {
      if (in[z]) continue;
      const Elem zi = g.inv(z);
      bool normal = true;
      for (Elem h : nodes[i].gens)
        if (!in[g.mul(g.mul(z, h), zi)]) {
          normal = false;
          break;
        }
      if (!normal) continue;
      // H<z> = union of the cosets H z^k
      std::vector<Elem> elems;
      std::fill(in_k.begin(), in_k.end(), 0);
      Elem zk = g.identity();
      do {
        for (Elem h : nodes[i].sub.elements) {
          const Elem y = g.mul(h, zk);
          if (!in_k[y]) {
            in_k[y] = 1;
            elems.push_back(y);
          }
        }
        zk = g.mul(zk, z);
      } while (zk != g.identity());
      std::sort(elems.begin(), elems.end());
      Subgroup k{std::move(elems)};
      if (found.insert(k).second) {
        auto gens = nodes[i].gens;
        gens.push_back(z);
        nodes.push_back({std::move(k), std::move(gens)});
      }
    }
  }
  return {found.begin(), found.end()};
}

TransitiveSubgroups transitive_subgroups_cyclic_hol(unsigned p) {
  if (!is_odd_prime(p)) throw Error(ErrorKind::InvalidArgument, "p must be an odd prime");
  const std::uint64_t hol_order = 2ull * p * p * p * (p - 1);
  if (hol_order > kLatticeBound)
    throw Error(ErrorKind::TooLarge, "Hol(C_2p^2) of order " + std::to_string(hol_order) + " exceeds the lattice bound");
  Holomorph hol = build_holomorph(build_2p2(Variant2p2::Cyclic, p));
  FiniteGroup table = hol.materialize();
  const Elem one = hol.base().identity();

  std::vector<TransitiveSubgroupRecord> records;
  for (auto& s : all_subgroups(table)) {
    if (s.size() % hol.degree() != 0) continue;
    std::vector<char> hit(hol.degree(), 0);
    std::size_t covered = 0;
    TransitiveSubgroupRecord rec;
    for (Elem h : s.elements) {
      const Elem x = hol.point(h);
      if (!hit[x]) {
        hit[x] = 1;
        ++covered;
      }
      if (x == one) rec.stabilizer.elements.push_back(h);
    }
    if (covered != hol.degree()) continue;
    rec.order = s.size();
    rec.subgroup = std::move(s);
    records.push_back(std::move(rec));
  }
  std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
    return a.order != b.order ? a.order < b.order : a.subgroup < b.subgroup;
  });

  struct Rep {
    std::size_t record;
    FiniteGroup group;
    Subgroup stab;
  };
  std::vector<Rep> reps;
  for (std::size_t i = 0; i < records.size(); ++i) {
    auto& rec = records[i];
    FiniteGroup g = subgroup_as_group(table, rec.subgroup, "G*");
    Subgroup stab;
    for (Elem x : rec.stabilizer.elements)
      stab.elements.push_back(Elem(std::lower_bound(rec.subgroup.elements.begin(), rec.subgroup.elements.end(), x) -
                                   rec.subgroup.elements.begin()));
    bool matched = false;
    for (std::size_t c = 0; c < reps.size() && !matched; ++c) {
      const auto& rep = reps[c];
      if (records[rep.record].order != rec.order || rep.stab.size() != stab.size()) continue;
      if (pair_isomorphic(rep.group, rep.stab, g, stab)) {
        rec.pair_class_id = c;
        matched = true;
      }
    }
    if (!matched) {
      rec.pair_class_id = reps.size();
      reps.push_back({i, std::move(g), std::move(stab)});
    }
  }
  return TransitiveSubgroups{std::move(hol), std::move(table), std::move(records), reps.size()};
}

}  // namespace holobrace
