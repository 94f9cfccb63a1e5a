#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "holobrace/group.hpp"

namespace holobrace {

/// Default order bound for full automorphism group computation.
inline constexpr std::size_t kAutOrderBound = 1000;

/// Largest |Aut| for which a full composition table is kept.
inline constexpr std::size_t kCompositionTableBound = 2048;

/// An automorphism group stored as an explicit list of index permutations of
/// its base group. Automorphisms are identified by the images of the base's
/// search generators, which makes lookup of a composite cheap.
class AutGroup {
 public:
  using Index = std::uint32_t;

  /// `perms` must be closed under composition and contain the identity.
  /// `key_generators` must generate the base group.
  AutGroup(FiniteGroup base, std::vector<Elem> key_generators, std::vector<std::vector<Elem>> perms);

  const FiniteGroup& base() const noexcept { return *base_; }
  std::size_t size() const noexcept { return count_; }
  Index identity() const noexcept { return id_; }

  /// f(x) for automorphism f.
  Elem apply(Index f, Elem x) const noexcept { return perms_[std::size_t(f) * n_ + x]; }
  std::span<const Elem> permutation(Index f) const noexcept { return {perms_.data() + std::size_t(f) * n_, n_}; }

  /// f o g (g applied first).
  Index compose(Index f, Index g) const;
  Index inverse(Index f) const noexcept { return inv_[f]; }

  /// Index of the automorphism with the given permutation; size() if absent.
  Index find(std::span<const Elem> perm) const;

  /// Greedy generating set of the automorphism group.
  const std::vector<Index>& generators() const noexcept { return gens_; }
  std::span<const Elem> key_generators() const noexcept { return keys_; }

  std::uint64_t element_order(Index f) const;

 private:
  Index lookup_key(const Elem* images) const;
  std::uint64_t key_of(const Elem* images) const;

  std::shared_ptr<const FiniteGroup> base_;
  std::size_t n_ = 0, count_ = 0;
  std::vector<Elem> keys_;
  std::vector<Elem> perms_;
  std::vector<Index> inv_;
  Index id_ = 0;
  std::vector<Index> direct_;  // key -> index when the key space is small
  std::unordered_map<std::uint64_t, Index> hashed_;
  std::vector<Index> table_;  // full composition table when small
  std::vector<Index> gens_;
};

/// All automorphisms of G, sorted by the image tuple of G's search generators.
/// Throws Error{TooLarge} when G.order() > bound and !force.
AutGroup automorphism_group(const FiniteGroup& g, std::size_t bound = kAutOrderBound, bool force = false);

/// Aut(G, G'): automorphisms carrying G' onto itself.
AutGroup aut_preserving(const FiniteGroup& g, const Subgroup& g_sub);

/// |Aut| closed forms for the five groups of order 2p^2.
std::uint64_t aut_order_closed_form(Variant2p2 v, std::uint64_t p);

}  // namespace holobrace
