#include "holobrace/hgs.hpp"

#include <algorithm>

#include "holobrace/aut.hpp"
#include "holobrace/catalog.hpp"

namespace holobrace {

Subgroup core(const FiniteGroup& g, const Subgroup& h) {
  Subgroup out;
  for (Elem x : h.elements) {
    bool in = true;
    for (Elem y = 0; y < g.order() && in; ++y) in = h.contains(g.mul(g.mul(g.inv(y), x), y));
    if (in) out.elements.push_back(x);
  }
  return out;
}

namespace {

std::uint64_t divide_exact(std::uint64_t num, std::uint64_t den, const std::string& what) {
  if (den == 0 || num % den != 0)
    throw Error(ErrorKind::NonIntegral, what + ": " + std::to_string(num) + " / " + std::to_string(den));
  return num / den;
}

Subgroup local_stabilizer(const TransitiveSubgroupRecord& rec) {
  Subgroup out;
  const auto& el = rec.subgroup.elements;
  for (Elem x : rec.stabilizer.elements)
    out.elements.push_back(Elem(std::lower_bound(el.begin(), el.end(), x) - el.begin()));
  return out;
}

bool has_element_of_order(const FiniteGroup& g, std::uint64_t k) {
  for (Elem x = 0; x < g.order(); ++x)
    if (element_order(g, x) == k) return true;
  return false;
}

struct Family {
  int family;
  unsigned d, m, k;
};

std::vector<Family> semidirect_families(unsigned p) {
  std::vector<Family> out;
  const unsigned q = p - 1, h = (p - 1) / 2, n = 2 * p * p;
  for (unsigned d = 1; d < q; ++d)
    if (q % d == 0) out.push_back({1, d, n, q / d});
  for (unsigned d = 1; d < h; ++d)
    if (h % d == 0) out.push_back({2, d, p * p, q / d});
  for (unsigned d = 1; d <= q; ++d)
    if (q % d == 0) out.push_back({3, d, n, p * q / d});
  for (unsigned d = 1; d <= h; ++d)
    if (h % d == 0) out.push_back({4, d, p * p, p * q / d});
  return out;
}

}  // namespace

ByottCount byott_count(const TransitiveSubgroups& transitive, const PointedGroup& pointed) {
  const auto& g = pointed.group;
  const auto& gs = pointed.point_stabilizer;
  const std::size_t degree = transitive.hol.degree();
  if (gs.size() == 0 || g.order() % gs.size() != 0 || g.order() / gs.size() != degree)
    throw Error(ErrorKind::DegreeMismatch, "[G : G'] = " + std::to_string(gs.size() ? g.order() / gs.size() : 0) +
                                                 " but N has order " + std::to_string(degree));
  if (core(g, gs).size() != 1) throw Error(ErrorKind::InvalidArgument, "G' contains a nontrivial normal subgroup of G");

  ByottCount out;
  out.aut_n = transitive.hol.auts().size();
  out.aut_pair = aut_preserving(g, gs).size();
  for (const auto& rec : transitive.records) {
    if (rec.order != g.order() || rec.stabilizer.size() != gs.size()) continue;
    const FiniteGroup h = subgroup_as_group(transitive.table, rec.subgroup, "G*");
    if (pair_isomorphic(g, gs, h, local_stabilizer(rec))) ++out.b;
  }
  out.a = divide_exact(out.aut_pair * out.b, out.aut_n, "Byott quotient for " + g.label());
  return out;
}

HgsCountTable galois_table(unsigned p, const std::array<std::vector<RegularSubgroupRecord>, 5>& regular,
                           const std::array<std::uint64_t, 5>& aut) {
  HgsCountTable t;
  t.p = p;
  t.aut = aut;
  for (std::size_t n = 0; n < 5; ++n)
    for (const auto& rec : regular[n]) ++t.b[variant_index(rec.iso_type.variant)][n];
  for (std::size_t g = 0; g < 5; ++g)
    for (std::size_t n = 0; n < 5; ++n)
      t.a[g][n] = divide_exact(aut[g] * t.b[g][n], aut[n],
                               "cell (" + type_label(kAllVariants[g], p) + ", " + type_label(kAllVariants[n], p) + ")");
  return t;
}

void require_closed_form(const HgsCountTable& t) {
  const auto expected = closed_form_hgs_counts(t.p);
  for (std::size_t g = 0; g < 5; ++g)
    for (std::size_t n = 0; n < 5; ++n)
      if (t.a[g][n] != expected[g][n])
        throw Error(ErrorKind::MismatchAgainstClosedForm,
                    "cell (" + type_label(kAllVariants[g], t.p) + ", " + type_label(kAllVariants[n], t.p) +
                        ") computed " + std::to_string(t.a[g][n]) + ", expected " + std::to_string(expected[g][n]));
}

CyclicTypeReport cyclic_type_report(const TransitiveSubgroups& transitive) {
  const unsigned p = prime_of(transitive.hol);
  const std::uint64_t p3x2 = 2ull * p * p * p;
  CyclicTypeReport report;
  report.p = p;
  const auto families = semidirect_families(p);
  std::vector<std::size_t> seen(transitive.class_count, transitive.records.size());
  for (std::size_t i = 0; i < transitive.records.size(); ++i)
    if (seen[transitive.records[i].pair_class_id] == transitive.records.size())
      seen[transitive.records[i].pair_class_id] = i;

  for (std::size_t c = 0; c < transitive.class_count; ++c) {
    const auto& rec = transitive.records[seen[c]];
    CyclicTypeEntry e;
    e.class_id = c;
    e.representative = seen[c];
    e.order = rec.order;
    e.stabilizer_order = rec.stabilizer.size();
    PointedGroup pg{subgroup_as_group(transitive.table, rec.subgroup, "G"), local_stabilizer(rec)};
    e.has_cyclic_core = has_element_of_order(pg.group, 2ull * p * p);
    if (e.stabilizer_order > 1) {
      for (const auto& f : families) {
        if (std::size_t(f.m) * f.k != e.order) continue;
        if (find_isomorphisms(pg.group, build_cyclic_semidirect(p, f.m, f.k), 1).empty()) continue;
        e.family = f.family;
        e.d = f.d;
        e.m = f.m;
        e.k = f.k;
        break;
      }
      if (e.family == 0)
        throw Error(ErrorKind::UnmatchedFamily, "transitive class of order " + std::to_string(e.order) +
                                                    " matches no semidirect family");
      const bool cyclic_family = e.family == 1 || e.family == 3;
      if (cyclic_family != e.has_cyclic_core)
        throw Error(ErrorKind::UnmatchedFamily, "class of order " + std::to_string(e.order) +
                                                    " disagrees with the cyclic core of family " +
                                                    std::to_string(e.family));
    }
    e.count = byott_count(transitive, pg);
    if (e.family == 0)
      e.expected_a = e.has_cyclic_core ? p : std::uint64_t(p) * p;
    else
      e.expected_a = e.order == p3x2 ? p : 1;
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace holobrace
