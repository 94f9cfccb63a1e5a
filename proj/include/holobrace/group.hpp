#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "holobrace/error.hpp"

namespace holobrace {

using Elem = std::uint32_t;

/// Tables above this order are trusted by construction instead of being
/// checked for associativity.
inline constexpr std::size_t kAssociativityCheckBound = 10'000;

/// A finite group stored as a Cayley table over the indices 0..order-1.
///
/// Instances are immutable once built. `generators` is optional; when present
/// it must generate the whole group, and downstream searches (automorphisms,
/// isomorphisms) use it as the base of their backtracking.
class FiniteGroup {
 public:
  /// Validates `table` (row-major, order x order) and derives identity and
  /// inverses. Throws Error{NotAssociative, NoIdentity, NoInverse,
  /// InvalidArgument}.
  static FiniteGroup from_table(std::vector<Elem> table, std::string label,
                                std::vector<Elem> generators = {},
                                std::vector<std::string> element_labels = {});

  static FiniteGroup from_rows(const std::vector<std::vector<Elem>>& rows, std::string label);

  std::size_t order() const noexcept { return n_; }
  Elem mul(Elem a, Elem b) const noexcept { return table_[std::size_t(a) * n_ + b]; }
  Elem inv(Elem a) const noexcept { return inv_[a]; }
  Elem identity() const noexcept { return id_; }
  Elem power(Elem x, std::uint64_t k) const noexcept;

  const std::string& label() const noexcept { return label_; }
  std::span<const Elem> generators() const noexcept { return gens_; }
  std::string element_label(Elem x) const;

  bool is_abelian() const noexcept;

  /// Same table under a new label and generating set (validated).
  FiniteGroup relabeled(std::string label, std::vector<Elem> generators) const;

 private:
  std::size_t n_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inv_;
  Elem id_ = 0;
  std::string label_;
  std::vector<Elem> gens_;
  std::vector<std::string> element_labels_;
};

/// A subgroup in canonical form: strictly ascending element indices. Equality
/// is list equality.
struct Subgroup {
  std::vector<Elem> elements;

  std::size_t size() const noexcept { return elements.size(); }
  bool contains(Elem x) const noexcept;
  bool operator==(const Subgroup&) const = default;
  auto operator<=>(const Subgroup&) const = default;
};

/// A map between two groups given by the image of every domain element.
struct GroupMorphism {
  std::vector<Elem> image;

  Elem operator()(Elem x) const noexcept { return image[x]; }
  bool operator==(const GroupMorphism&) const = default;
};

std::uint64_t element_order(const FiniteGroup& g, Elem x);
Subgroup closure(const FiniteGroup& g, std::span<const Elem> gens);
Subgroup center(const FiniteGroup& g);
bool is_subgroup(const FiniteGroup& g, const Subgroup& h);
bool is_normal(const FiniteGroup& g, const Subgroup& h);
Subgroup intersect(const Subgroup& a, const Subgroup& b);

/// Greedy small generating set: repeatedly adds the element that enlarges the
/// generated subgroup the most, starting from `start`.
std::vector<Elem> extend_generating_set(const FiniteGroup& g, std::vector<Elem> start);

/// The stored generators when present, otherwise a greedy generating set.
std::vector<Elem> generating_set(const FiniteGroup& g);

/// Relabels a subgroup as a standalone group; element i of the result is
/// h.elements[i].
FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h, std::string label);

bool is_homomorphism(const FiniteGroup& dom, const FiniteGroup& cod, const GroupMorphism& m);

/// Up to `limit` isomorphisms G -> H by backtracking over the images of a
/// generating set of G. Images are tried in index order.
std::vector<GroupMorphism> find_isomorphisms(const FiniteGroup& g, const FiniteGroup& h,
                                             std::size_t limit = std::numeric_limits<std::size_t>::max());

/// Isomorphisms G -> H carrying `g_sub` onto `h_sub` setwise.
std::vector<GroupMorphism> find_pair_isomorphisms(const FiniteGroup& g, const Subgroup& g_sub,
                                                  const FiniteGroup& h, const Subgroup& h_sub,
                                                  std::size_t limit = std::numeric_limits<std::size_t>::max());

bool pair_isomorphic(const FiniteGroup& g, const Subgroup& g_sub, const FiniteGroup& h,
                     const Subgroup& h_sub);

bool is_odd_prime(std::uint64_t p) noexcept;

/// The five isomorphism types of groups of order 2p^2, p an odd prime.
enum class Variant2p2 { Cyclic, Dihedral, CpxC2p, CpxD2p, CpCpC2 };

inline constexpr Variant2p2 kAllVariants[] = {Variant2p2::Cyclic, Variant2p2::Dihedral,
                                              Variant2p2::CpxC2p, Variant2p2::CpxD2p,
                                              Variant2p2::CpCpC2};

struct IsoType2p2 {
  Variant2p2 variant;
  unsigned p;

  bool operator==(const IsoType2p2&) const = default;
};

/// Fixed ASCII token: C2p2, D2p2, CpxC2p, CpxD2p, CpCpC2.
std::string_view variant_token(Variant2p2 v) noexcept;

/// Token instantiated at p, e.g. C18, D18, C3xC6, C3xD6, (C3xC3):C2.
std::string type_label(Variant2p2 v, unsigned p);

std::size_t variant_index(Variant2p2 v) noexcept;

/// Decides the type from (abelian?, element of order p^2?, |Z(G)|).
/// Throws Error{NotOrder2p2}.
IsoType2p2 classify_2p2(const FiniteGroup& g, unsigned p);

}  // namespace holobrace
