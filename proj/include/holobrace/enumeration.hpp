#pragma once

#include <cstdint>
#include <vector>

#include "holobrace/group.hpp"
#include "holobrace/holomorph.hpp"

namespace holobrace {

/// Largest holomorph accepted by the unpruned oracle enumeration.
inline constexpr std::size_t kOracleBound = 10'000;

/// Largest Hol(C_{2p^2}) whose subgroup lattice is computed.
inline constexpr std::size_t kLatticeBound = 4116;

struct RegularSubgroupRecord {
  HolSubgroup subgroup;
  IsoType2p2 iso_type;
  HolSubgroup sylow_core;
  Elem extending_involution = 0;
};

struct TransitiveSubgroupRecord {
  HolSubgroup subgroup;
  std::size_t order = 0;
  Subgroup stabilizer;  // elements of `subgroup` fixing the identity of N
  std::size_t pair_class_id = 0;
};

/// The prime p with |N| = 2p^2. Throws Error{NotOrder2p2}.
unsigned prime_of(const Holomorph& hol);

/// Every involution of Hol(N), ascending.
std::vector<Elem> involutions(const Holomorph& hol);

/// One Sylow p-subgroup: Syl_p(N) x| P, P a Sylow p-subgroup of Aut(N).
HolSubgroup sylow_subgroup(const Holomorph& hol, unsigned p);

/// All conjugates of a Sylow subgroup, sorted.
std::vector<HolSubgroup> sylow_conjugates(const Holomorph& hol, const HolSubgroup& sylow);

/// Semiregular subgroups of order p^2 isomorphic to Syl_p(N), sorted.
std::vector<HolSubgroup> semiregular_p2_subgroups(const Holomorph& hol);

/// Regular subgroups of order 2p^2, each the extension of a semiregular
/// p^2-subgroup by a normalizing involution. Sorted by subgroup.
std::vector<RegularSubgroupRecord> regular_subgroups(const Holomorph& hol);

/// The same set by an unpruned search: every order-p^2 subgroup of every
/// Sylow subgroup, extended by every involution of Hol(N). Throws
/// Error{TooLarge} above kOracleBound.
std::vector<HolSubgroup> regular_subgroups_oracle(const Holomorph& hol);

/// All subgroups of a solvable group by cyclic extension, sorted.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);

struct TransitiveSubgroups {
  Holomorph hol;
  FiniteGroup table;  // Hol(C_{2p^2}) with the same element indexing
  std::vector<TransitiveSubgroupRecord> records;  // sorted by (order, elements)
  std::size_t class_count = 0;
};

/// Transitive subgroups of Hol(C_{2p^2}) clustered into pair-isomorphism
/// classes of (G*, stabilizer). Throws Error{TooLarge} above kLatticeBound.
TransitiveSubgroups transitive_subgroups_cyclic_hol(unsigned p);

}  // namespace holobrace
