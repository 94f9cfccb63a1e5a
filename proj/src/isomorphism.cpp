#include <algorithm>
#include <map>
#include <numeric>

#include "holobrace/group.hpp"
#include "iso_search.hpp"

namespace holobrace {
namespace detail {

std::vector<std::uint64_t> element_invariants(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::uint64_t> inv(n);
  for (Elem x = 0; x < n; ++x) {
    std::uint64_t centralizer = 0;
    for (Elem y = 0; y < n; ++y)
      if (g.mul(x, y) == g.mul(y, x)) ++centralizer;
    inv[x] = element_order(g, x) * (n + 1) + n / centralizer;
  }
  return inv;
}

std::vector<Elem> subgroup_generators(const FiniteGroup& g, const Subgroup& within) {
  std::vector<Elem> gens;
  Subgroup current = closure(g, gens);
  while (current.size() < within.size()) {
    std::vector<char> dominated(g.order(), 0);
    for (Elem x : current.elements) dominated[x] = 1;
    Elem best = 0;
    Subgroup best_closure;
    for (Elem x : within.elements) {
      if (dominated[x]) continue;
      gens.push_back(x);
      Subgroup c = closure(g, gens);
      gens.pop_back();
      for (Elem y : c.elements) dominated[y] = 1;
      if (c.size() > best_closure.size()) {
        best = x;
        best_closure = std::move(c);
      }
    }
    gens.push_back(best);
    current = std::move(best_closure);
  }
  return gens;
}

namespace {

constexpr Elem kUnset = ~Elem{0};

class EmbeddingSearch {
 public:
  EmbeddingSearch(const FiniteGroup& dom, const FiniteGroup& cod, std::vector<Elem> gens,
                  std::vector<std::vector<Elem>> candidates,
                  const std::function<bool(const std::vector<Elem>&)>& visit)
      : dom_(dom), cod_(cod), gens_(std::move(gens)), cands_(std::move(candidates)), visit_(visit) {
    build_levels();
  }

  void run() {
    img_.assign(dom_.order(), kUnset);
    owner_.assign(cod_.order(), 0);
    img_[dom_.identity()] = cod_.identity();
    owner_[cod_.identity()] = 1;
    images_.assign(gens_.size(), 0);
    if (gens_.empty()) {
      visit_(img_);
      return;
    }
    descend(0);
  }

 private:
  struct Level {
    // Elements first reached at this level, in BFS order, each as parent*gen.
    std::vector<Elem> elems, parent;
    std::vector<std::uint8_t> via;
  };

  void build_levels() {
    const std::size_t n = dom_.order();
    std::vector<char> seen(n, 0);
    std::vector<Elem> all{dom_.identity()};
    seen[dom_.identity()] = 1;
    levels_.resize(gens_.size());
    for (std::size_t j = 0; j < gens_.size(); ++j) {
      Level& lv = levels_[j];
      for (std::size_t head = 0; head < all.size(); ++head) {
        Elem x = all[head];
        for (std::size_t i = 0; i <= j; ++i) {
          Elem y = dom_.mul(x, gens_[i]);
          if (!seen[y]) {
            seen[y] = 1;
            all.push_back(y);
            lv.elems.push_back(y);
            lv.parent.push_back(x);
            lv.via.push_back(std::uint8_t(i));
          }
        }
      }
      reached_.push_back(all.size());
    }
    order_ = all;
    if (all.size() != n) throw Error(ErrorKind::InvalidArgument, "search generators do not generate the domain");
  }

  bool descend(std::size_t j) {
    const Level& lv = levels_[j];
    const std::size_t old_count = j == 0 ? 1 : reached_[j - 1];
    for (Elem h : cands_[j]) {
      images_[j] = h;
      std::size_t assigned = 0;
      bool ok = true;
      for (; assigned < lv.elems.size(); ++assigned) {
        Elem v = cod_.mul(img_[lv.parent[assigned]], images_[lv.via[assigned]]);
        if (owner_[v]) {
          ok = false;
          break;
        }
        owner_[v] = 1;
        img_[lv.elems[assigned]] = v;
      }
      if (ok) ok = relations_hold(j, old_count);
      if (ok) {
        bool keep_going = j + 1 == gens_.size() ? visit_(img_) : descend(j + 1);
        if (!keep_going) {
          undo(lv, assigned);
          return false;
        }
      }
      undo(lv, assigned);
    }
    return true;
  }

  bool relations_hold(std::size_t j, std::size_t old_count) const {
    const std::size_t total = reached_[j];
    for (std::size_t idx = 0; idx < total; ++idx) {
      Elem y = order_[idx];
      const std::size_t first_gen = idx < old_count ? j : 0;
      for (std::size_t i = first_gen; i <= j; ++i) {
        if (img_[dom_.mul(y, gens_[i])] != cod_.mul(img_[y], images_[i])) return false;
      }
    }
    return true;
  }

  void undo(const Level& lv, std::size_t assigned) {
    for (std::size_t k = 0; k < assigned; ++k) {
      owner_[img_[lv.elems[k]]] = 0;
      img_[lv.elems[k]] = kUnset;
    }
  }

  const FiniteGroup& dom_;
  const FiniteGroup& cod_;
  std::vector<Elem> gens_;
  std::vector<std::vector<Elem>> cands_;
  const std::function<bool(const std::vector<Elem>&)>& visit_;
  std::vector<Level> levels_;
  std::vector<std::size_t> reached_;
  std::vector<Elem> order_;
  std::vector<Elem> img_;
  std::vector<char> owner_;
  std::vector<Elem> images_;
};

}  // namespace

void for_each_embedding(const FiniteGroup& dom, const FiniteGroup& cod, std::vector<Elem> gens,
                        std::vector<std::vector<Elem>> candidates,
                        const std::function<bool(const std::vector<Elem>&)>& visit) {
  // Rarest images first: the narrowest branch goes to the top of the tree.
  std::vector<std::size_t> perm(gens.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return candidates[a].size() < candidates[b].size(); });
  std::vector<Elem> g2;
  std::vector<std::vector<Elem>> c2;
  for (auto i : perm) {
    g2.push_back(gens[i]);
    c2.push_back(std::move(candidates[i]));
  }
  EmbeddingSearch(dom, cod, std::move(g2), std::move(c2), visit).run();
}

}  // namespace detail

namespace {

bool same_invariant_multiset(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::vector<GroupMorphism> search(const FiniteGroup& g, const FiniteGroup& h, const std::vector<Elem>& gens,
                                  const Subgroup* g_sub, const Subgroup* h_sub, std::size_t limit) {
  std::vector<GroupMorphism> out;
  if (limit == 0 || g.order() != h.order()) return out;
  const auto gi = detail::element_invariants(g);
  const auto hi = detail::element_invariants(h);
  if (!same_invariant_multiset(gi, hi)) return out;
  if (g_sub) {
    std::vector<std::uint64_t> a, b;
    for (Elem x : g_sub->elements) a.push_back(gi[x]);
    for (Elem x : h_sub->elements) b.push_back(hi[x]);
    if (!same_invariant_multiset(a, b)) return out;
  }
  std::vector<std::vector<Elem>> cands(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const bool inside = g_sub && g_sub->contains(gens[i]);
    for (Elem y = 0; y < h.order(); ++y) {
      if (hi[y] != gi[gens[i]]) continue;
      if (g_sub && h_sub->contains(y) != inside) continue;
      cands[i].push_back(y);
    }
  }
  detail::for_each_embedding(g, h, gens, std::move(cands), [&](const std::vector<Elem>& img) {
    out.push_back(GroupMorphism{img});
    return out.size() < limit;
  });
  return out;
}

}  // namespace

std::vector<GroupMorphism> find_isomorphisms(const FiniteGroup& g, const FiniteGroup& h, std::size_t limit) {
  return search(g, h, generating_set(g), nullptr, nullptr, limit);
}

std::vector<GroupMorphism> find_pair_isomorphisms(const FiniteGroup& g, const Subgroup& g_sub,
                                                  const FiniteGroup& h, const Subgroup& h_sub,
                                                  std::size_t limit) {
  if (g_sub.size() != h_sub.size()) return {};
  auto gens = extend_generating_set(g, detail::subgroup_generators(g, g_sub));
  return search(g, h, gens, &g_sub, &h_sub, limit);
}

bool pair_isomorphic(const FiniteGroup& g, const Subgroup& g_sub, const FiniteGroup& h,
                     const Subgroup& h_sub) {
  return !find_pair_isomorphisms(g, g_sub, h, h_sub, 1).empty();
}

}  // namespace holobrace
