#include "holobrace/group.hpp"

#include <algorithm>
#include <numeric>

namespace holobrace {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::NotOrder2p2: return "NotOrder2p2";
    case ErrorKind::InvalidAction: return "InvalidAction";
    case ErrorKind::NoSuchTwist: return "NoSuchTwist";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::NonIntegral: return "NonIntegral";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::MismatchAgainstClosedForm: return "MismatchAgainstClosedForm";
    case ErrorKind::UnmatchedFamily: return "UnmatchedFamily";
  }
  return "Unknown";
}

namespace {

// Right-multiplication spanning set: every element is a left-normed product of
// the returned generators. Light's test over this set decides associativity.
std::vector<Elem> right_spanning_set(std::size_t n, const std::vector<Elem>& table, Elem id) {
  std::vector<char> seen(n, 0);
  std::vector<Elem> reached{id};
  seen[id] = 1;
  std::vector<Elem> gens;
  std::size_t head = 0;
  for (Elem next = 0; next < n; ++next) {
    if (seen[next]) continue;
    gens.push_back(next);
    // Re-run from the start so every reached element is also multiplied by the
    // new generator.
    head = 0;
    while (head < reached.size()) {
      Elem x = reached[head++];
      for (Elem g : gens) {
        Elem y = table[std::size_t(x) * n + g];
        if (!seen[y]) {
          seen[y] = 1;
          reached.push_back(y);
        }
      }
    }
  }
  return gens;
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<Elem> table, std::string label,
                                    std::vector<Elem> generators,
                                    std::vector<std::string> element_labels) {
  std::size_t n = 0;
  while (n * n < table.size()) ++n;
  if (n == 0 || n * n != table.size())
    throw Error(ErrorKind::InvalidArgument, "multiplication table is not square");
  for (Elem v : table)
    if (v >= n) throw Error(ErrorKind::InvalidArgument, "table entry out of range");
  if (!element_labels.empty() && element_labels.size() != n)
    throw Error(ErrorKind::InvalidArgument, "element label count differs from order");

  auto at = [&](Elem a, Elem b) { return table[std::size_t(a) * n + b]; };

  Elem id = 0;
  bool found = false;
  for (Elem e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) ok = at(e, x) == x && at(x, e) == x;
    if (ok) {
      id = e;
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::NoIdentity, "no two-sided identity in '" + label + "'");

  std::vector<Elem> inv(n);
  for (Elem x = 0; x < n; ++x) {
    bool ok = false;
    for (Elem y = 0; y < n && !ok; ++y) {
      if (at(x, y) == id && at(y, x) == id) {
        inv[x] = y;
        ok = true;
      }
    }
    if (!ok)
      throw Error(ErrorKind::NoInverse,
                  "element " + std::to_string(x) + " of '" + label + "' has no inverse");
  }

  if (n <= kAssociativityCheckBound) {
    for (Elem g : right_spanning_set(n, table, id)) {
      for (Elem x = 0; x < n; ++x) {
        Elem xg = at(x, g);
        for (Elem y = 0; y < n; ++y) {
          if (at(xg, y) != at(x, at(g, y)))
            throw Error(ErrorKind::NotAssociative,
                        "(" + std::to_string(x) + "*" + std::to_string(g) + ")*" +
                            std::to_string(y) + " != " + std::to_string(x) + "*(" +
                            std::to_string(g) + "*" + std::to_string(y) + ") in '" + label + "'");
        }
      }
    }
  }

  FiniteGroup g;
  g.n_ = n;
  g.table_ = std::move(table);
  g.inv_ = std::move(inv);
  g.id_ = id;
  g.label_ = std::move(label);
  g.element_labels_ = std::move(element_labels);
  for (Elem x : generators)
    if (x >= n) throw Error(ErrorKind::InvalidArgument, "generator index out of range");
  if (!generators.empty() && closure(g, generators).size() != n)
    throw Error(ErrorKind::InvalidArgument, "generators of '" + g.label_ + "' do not generate it");
  g.gens_ = std::move(generators);
  return g;
}

FiniteGroup FiniteGroup::from_rows(const std::vector<std::vector<Elem>>& rows, std::string label) {
  std::vector<Elem> flat;
  flat.reserve(rows.size() * rows.size());
  for (const auto& r : rows) {
    if (r.size() != rows.size())
      throw Error(ErrorKind::InvalidArgument, "multiplication table is not square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return from_table(std::move(flat), std::move(label));
}

Elem FiniteGroup::power(Elem x, std::uint64_t k) const noexcept {
  Elem result = id_;
  Elem base = x;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::string FiniteGroup::element_label(Elem x) const {
  if (x < element_labels_.size()) return element_labels_[x];
  return "#" + std::to_string(x);
}

bool FiniteGroup::is_abelian() const noexcept {
  for (Elem x = 0; x < n_; ++x)
    for (Elem y = x + 1; y < n_; ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

FiniteGroup FiniteGroup::relabeled(std::string label, std::vector<Elem> generators) const {
  FiniteGroup g = *this;
  g.label_ = std::move(label);
  for (Elem x : generators)
    if (x >= n_) throw Error(ErrorKind::InvalidArgument, "generator index out of range");
  if (closure(g, generators).size() != n_)
    throw Error(ErrorKind::InvalidArgument, "generators of '" + g.label_ + "' do not generate it");
  g.gens_ = std::move(generators);
  return g;
}

bool Subgroup::contains(Elem x) const noexcept {
  return std::binary_search(elements.begin(), elements.end(), x);
}

std::uint64_t element_order(const FiniteGroup& g, Elem x) {
  std::uint64_t k = 1;
  for (Elem y = x; y != g.identity(); y = g.mul(y, x)) ++k;
  return k;
}

Subgroup closure(const FiniteGroup& g, std::span<const Elem> gens) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Elem> out{g.identity()};
  seen[g.identity()] = 1;
  for (std::size_t head = 0; head < out.size(); ++head) {
    Elem x = out[head];
    for (Elem s : gens) {
      Elem y = g.mul(x, s);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return Subgroup{std::move(out)};
}

Subgroup center(const FiniteGroup& g) {
  const auto gens = generating_set(g);
  Subgroup z;
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Elem s : gens) {
      if (g.mul(x, s) != g.mul(s, x)) {
        central = false;
        break;
      }
    }
    if (central) z.elements.push_back(x);
  }
  return z;
}

bool is_subgroup(const FiniteGroup& g, const Subgroup& h) {
  if (!h.contains(g.identity())) return false;
  for (Elem x : h.elements) {
    if (!h.contains(g.inv(x))) return false;
    for (Elem y : h.elements)
      if (!h.contains(g.mul(x, y))) return false;
  }
  return true;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (Elem s : generating_set(g))
    for (Elem x : h.elements)
      if (!h.contains(g.mul(g.mul(s, x), g.inv(s)))) return false;
  return true;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  Subgroup out;
  std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(), b.elements.end(),
                        std::back_inserter(out.elements));
  return out;
}

std::vector<Elem> extend_generating_set(const FiniteGroup& g, std::vector<Elem> start) {
  const std::size_t n = g.order();
  std::vector<Elem> gens = std::move(start);
  Subgroup current = closure(g, gens);

  // Higher-order elements first: they tend to produce the largest closures,
  // which lets the domination filter below discard most candidates.
  std::vector<std::uint64_t> ord(n);
  for (Elem x = 0; x < n; ++x) ord[x] = element_order(g, x);
  std::vector<Elem> by_order(n);
  std::iota(by_order.begin(), by_order.end(), Elem{0});
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Elem a, Elem b) { return ord[a] > ord[b]; });

  while (current.size() < n) {
    std::vector<char> dominated(n, 0);
    for (Elem x : current.elements) dominated[x] = 1;
    Elem best = 0;
    Subgroup best_closure;
    for (Elem x : by_order) {
      if (dominated[x]) continue;
      gens.push_back(x);
      Subgroup c = closure(g, gens);
      gens.pop_back();
      // Anything inside <current, x> generates at most the same subgroup.
      for (Elem y : c.elements) dominated[y] = 1;
      if (c.size() > best_closure.size()) {
        best = x;
        best_closure = std::move(c);
        if (best_closure.size() == n) break;
      }
    }
    gens.push_back(best);
    current = std::move(best_closure);
  }
  return gens;
}

std::vector<Elem> generating_set(const FiniteGroup& g) {
  if (!g.generators().empty()) return {g.generators().begin(), g.generators().end()};
  return extend_generating_set(g, {});
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h, std::string label) {
  const std::size_t m = h.size();
  auto index_of = [&](Elem x) {
    return Elem(std::lower_bound(h.elements.begin(), h.elements.end(), x) - h.elements.begin());
  };
  std::vector<Elem> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      table[i * m + j] = index_of(g.mul(h.elements[i], h.elements[j]));
  std::vector<std::string> labels;
  labels.reserve(m);
  for (Elem x : h.elements) labels.push_back(g.element_label(x));
  return FiniteGroup::from_table(std::move(table), std::move(label), {}, std::move(labels));
}

bool is_homomorphism(const FiniteGroup& dom, const FiniteGroup& cod, const GroupMorphism& m) {
  if (m.image.size() != dom.order()) return false;
  for (Elem x : m.image)
    if (x >= cod.order()) return false;
  for (Elem x = 0; x < dom.order(); ++x)
    for (Elem y = 0; y < dom.order(); ++y)
      if (m.image[dom.mul(x, y)] != cod.mul(m.image[x], m.image[y])) return false;
  return true;
}

bool is_odd_prime(std::uint64_t p) noexcept {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

std::string_view variant_token(Variant2p2 v) noexcept {
  switch (v) {
    case Variant2p2::Cyclic: return "C2p2";
    case Variant2p2::Dihedral: return "D2p2";
    case Variant2p2::CpxC2p: return "CpxC2p";
    case Variant2p2::CpxD2p: return "CpxD2p";
    case Variant2p2::CpCpC2: return "CpCpC2";
  }
  return "?";
}

std::string type_label(Variant2p2 v, unsigned p) {
  const auto ps = std::to_string(p);
  const auto p2 = std::to_string(2 * p);
  const auto n = std::to_string(2 * p * p);
  switch (v) {
    case Variant2p2::Cyclic: return "C" + n;
    case Variant2p2::Dihedral: return "D" + n;
    case Variant2p2::CpxC2p: return "C" + ps + "xC" + p2;
    case Variant2p2::CpxD2p: return "C" + ps + "xD" + p2;
    case Variant2p2::CpCpC2: return "(C" + ps + "xC" + ps + "):C2";
  }
  return "?";
}

std::size_t variant_index(Variant2p2 v) noexcept { return static_cast<std::size_t>(v); }

IsoType2p2 classify_2p2(const FiniteGroup& g, unsigned p) {
  const std::uint64_t n = 2ull * p * p;
  if (!is_odd_prime(p) || g.order() != n)
    throw Error(ErrorKind::NotOrder2p2,
                "'" + g.label() + "' has order " + std::to_string(g.order()) + ", expected 2p^2 for p=" +
                    std::to_string(p));
  bool has_p2 = false;
  for (Elem x = 0; x < n; ++x) {
    const auto o = element_order(g, x);
    if (o == n) return {Variant2p2::Cyclic, p};
    if (o % (std::uint64_t(p) * p) == 0) has_p2 = true;
  }
  if (g.is_abelian()) return {Variant2p2::CpxC2p, p};
  if (has_p2) return {Variant2p2::Dihedral, p};
  const auto z = center(g).size();
  if (z == p) return {Variant2p2::CpxD2p, p};
  if (z == 1) return {Variant2p2::CpCpC2, p};
  throw Error(ErrorKind::NotOrder2p2, "'" + g.label() + "' has an impossible center order");
}

}  // namespace holobrace
