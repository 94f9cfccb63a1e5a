#include "holobrace/aut.hpp"

#include <algorithm>
#include <numeric>

#include "iso_search.hpp"

namespace holobrace {

namespace {

constexpr std::uint64_t kDirectKeyBound = std::uint64_t{1} << 22;

bool key_space_fits(std::size_t n, std::size_t k, std::uint64_t bound) {
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (space > bound / std::max<std::uint64_t>(n, 1)) return false;
    space *= n;
  }
  return space <= bound;
}

}  // namespace

AutGroup::AutGroup(FiniteGroup base, std::vector<Elem> key_generators, std::vector<std::vector<Elem>> perms)
    : base_(std::make_shared<const FiniteGroup>(std::move(base))),
      n_(base_->order()),
      count_(perms.size()),
      keys_(std::move(key_generators)) {
  if (count_ == 0) throw Error(ErrorKind::InvalidArgument, "automorphism list is empty");
  if (closure(*base_, keys_).size() != n_)
    throw Error(ErrorKind::InvalidArgument, "key generators do not generate " + base_->label());
  perms_.reserve(count_ * n_);
  for (const auto& p : perms) {
    if (p.size() != n_) throw Error(ErrorKind::InvalidArgument, "permutation has wrong length");
    perms_.insert(perms_.end(), p.begin(), p.end());
  }
  perms.clear();

  const bool direct = key_space_fits(n_, keys_.size(), kDirectKeyBound);
  if (direct) {
    std::uint64_t space = 1;
    for (std::size_t i = 0; i < keys_.size(); ++i) space *= n_;
    direct_.assign(space, Index(count_));
  } else {
    hashed_.reserve(count_);
  }
  std::vector<Elem> img(keys_.size());
  for (std::size_t f = 0; f < count_; ++f) {
    for (std::size_t j = 0; j < keys_.size(); ++j) img[j] = apply(Index(f), keys_[j]);
    const auto key = key_of(img.data());
    if (direct) {
      if (direct_[key] != count_) throw Error(ErrorKind::InvalidArgument, "duplicate automorphism");
      direct_[key] = Index(f);
    } else if (!hashed_.emplace(key, Index(f)).second) {
      throw Error(ErrorKind::InvalidArgument, "duplicate automorphism key");
    }
  }

  std::vector<Elem> ident(n_);
  std::iota(ident.begin(), ident.end(), Elem{0});
  id_ = find(ident);
  if (id_ == count_) throw Error(ErrorKind::InvalidArgument, "automorphism list lacks the identity");

  inv_.resize(count_);
  std::vector<Elem> inv_img(keys_.size());
  std::vector<Elem> preimage(n_);
  for (std::size_t f = 0; f < count_; ++f) {
    const Elem* p = perms_.data() + f * n_;
    for (Elem x = 0; x < n_; ++x) preimage[p[x]] = x;
    for (std::size_t j = 0; j < keys_.size(); ++j) inv_img[j] = preimage[keys_[j]];
    inv_[f] = lookup_key(inv_img.data());
    if (inv_[f] == count_) throw Error(ErrorKind::InvalidArgument, "automorphism list not closed under inverse");
  }

  if (count_ <= kCompositionTableBound) {
    table_.resize(count_ * count_);
    std::vector<Elem> c(keys_.size());
    for (std::size_t f = 0; f < count_; ++f) {
      for (std::size_t g = 0; g < count_; ++g) {
        for (std::size_t j = 0; j < keys_.size(); ++j) c[j] = apply(Index(f), apply(Index(g), keys_[j]));
        const Index h = lookup_key(c.data());
        if (h == count_) throw Error(ErrorKind::InvalidArgument, "automorphism list not closed under composition");
        table_[f * count_ + g] = h;
      }
    }
  }

  // Greedy generating set in index order.
  std::vector<char> in(count_, 0);
  in[id_] = 1;
  std::vector<Index> members{id_};
  for (Index f = 0; f < count_ && members.size() < count_; ++f) {
    if (in[f]) continue;
    gens_.push_back(f);
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (Index g : gens_) {
        const Index h = compose(members[head], g);
        if (!in[h]) {
          in[h] = 1;
          members.push_back(h);
        }
      }
    }
  }
  if (members.size() != count_) throw Error(ErrorKind::InvalidArgument, "automorphism list not closed");
}

std::uint64_t AutGroup::key_of(const Elem* images) const {
  std::uint64_t key = 0;
  for (std::size_t j = keys_.size(); j-- > 0;) key = key * n_ + images[j];
  return key;
}

AutGroup::Index AutGroup::lookup_key(const Elem* images) const {
  const auto key = key_of(images);
  if (!direct_.empty()) return direct_[key];
  auto it = hashed_.find(key);
  return it == hashed_.end() ? Index(count_) : it->second;
}

AutGroup::Index AutGroup::compose(Index f, Index g) const {
  if (!table_.empty()) return table_[std::size_t(f) * count_ + g];
  Elem c[8] = {};
  std::vector<Elem> big;
  Elem* out = c;
  if (keys_.size() > 8) {
    big.resize(keys_.size());
    out = big.data();
  }
  for (std::size_t j = 0; j < keys_.size(); ++j) out[j] = apply(f, apply(g, keys_[j]));
  return lookup_key(out);
}

AutGroup::Index AutGroup::find(std::span<const Elem> perm) const {
  if (perm.size() != n_) return Index(count_);
  std::vector<Elem> img(keys_.size());
  for (std::size_t j = 0; j < keys_.size(); ++j) img[j] = perm[keys_[j]];
  const Index f = lookup_key(img.data());
  if (f == count_) return f;
  return std::equal(perm.begin(), perm.end(), permutation(f).begin()) ? f : Index(count_);
}

std::uint64_t AutGroup::element_order(Index f) const {
  std::uint64_t k = 1;
  for (Index g = f; g != id_; g = compose(g, f)) ++k;
  return k;
}

namespace {

void sort_by_images(std::vector<std::vector<Elem>>& perms, const std::vector<Elem>& keys) {
  std::sort(perms.begin(), perms.end(), [&](const auto& a, const auto& b) {
    for (Elem k : keys)
      if (a[k] != b[k]) return a[k] < b[k];
    return false;
  });
}

}  // namespace

AutGroup automorphism_group(const FiniteGroup& g, std::size_t bound, bool force) {
  if (g.order() > bound && !force)
    throw Error(ErrorKind::TooLarge, "automorphism group of a group of order " + std::to_string(g.order()) +
                                         " exceeds the bound " + std::to_string(bound));
  const auto gens = generating_set(g);
  const auto inv = detail::element_invariants(g);
  std::vector<std::vector<Elem>> cands(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Elem y = 0; y < g.order(); ++y)
      if (inv[y] == inv[gens[i]]) cands[i].push_back(y);
  std::vector<std::vector<Elem>> perms;
  detail::for_each_embedding(g, g, gens, std::move(cands), [&](const std::vector<Elem>& img) {
    perms.push_back(img);
    return true;
  });
  sort_by_images(perms, gens);
  return AutGroup(g, gens, std::move(perms));
}

AutGroup aut_preserving(const FiniteGroup& g, const Subgroup& g_sub) {
  std::vector<std::vector<Elem>> perms;
  for (auto& m : find_pair_isomorphisms(g, g_sub, g, g_sub)) perms.push_back(std::move(m.image));
  const auto keys = generating_set(g);
  sort_by_images(perms, keys);
  return AutGroup(g, keys, std::move(perms));
}

std::uint64_t aut_order_closed_form(Variant2p2 v, std::uint64_t p) {
  switch (v) {
    case Variant2p2::Cyclic: return p * (p - 1);
    case Variant2p2::Dihedral: return p * p * p * (p - 1);
    case Variant2p2::CpxC2p: return p * (p + 1) * (p - 1) * (p - 1);
    case Variant2p2::CpxD2p: return p * (p - 1) * (p - 1);
    case Variant2p2::CpCpC2: return p * p * p * (p + 1) * (p - 1) * (p - 1);
  }
  return 0;
}

}  // namespace holobrace
