#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "holobrace/group.hpp"

namespace holobrace {

/// 5x5 integer table indexed by variant_index: [row][col].
using VariantMatrix = std::array<std::array<std::uint64_t, 5>, 5>;

/// Number of regular subgroups of Hol(N) isomorphic to G; rows G, columns N.
VariantMatrix closed_form_regular_counts(std::uint64_t p);

/// Number of Hopf-Galois structures of type N on a Galois extension with
/// group G; rows G, columns N.
VariantMatrix closed_form_hgs_counts(std::uint64_t p);

/// Number of skew braces; rows multiplicative type, columns additive type.
VariantMatrix closed_form_brace_counts(std::uint64_t p);

/// Number of semiregular subgroups of Hol(N) of order p^2 isomorphic to
/// Syl_p(N), per N.
std::array<std::uint64_t, 5> closed_form_semiregular_counts(std::uint64_t p);

/// One row of a brace invariant table: `count` classes with these invariants.
struct BraceTableRow {
  Variant2p2 multiplicative;
  std::uint64_t socle, annihilator, aut_order, count;

  bool operator==(const BraceTableRow&) const = default;
  auto operator<=>(const BraceTableRow&) const = default;
};

/// Published invariant rows for braces with the given additive group.
std::vector<BraceTableRow> closed_form_brace_rows(Variant2p2 additive, std::uint64_t p);

}  // namespace holobrace
