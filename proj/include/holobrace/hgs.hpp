#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "holobrace/enumeration.hpp"
#include "holobrace/group.hpp"
#include "holobrace/tables.hpp"

namespace holobrace {

/// A group with a distinguished subgroup whose core is trivial, standing for
/// the Galois group of a normal closure and the subgroup fixing the field.
struct PointedGroup {
  FiniteGroup group;
  Subgroup point_stabilizer;
};

/// The largest normal subgroup of G contained in H.
Subgroup core(const FiniteGroup& g, const Subgroup& h);

struct ByottCount {
  std::uint64_t aut_pair = 0;  // |Aut(G, G')|
  std::uint64_t b = 0;         // transitive G* with (G*, Stab(1)) ~ (G, G')
  std::uint64_t aut_n = 0;     // |Aut(N)|
  std::uint64_t a = 0;         // Hopf-Galois structures, |Aut(G,G')| b / |Aut(N)|
};

/// Byott's count over the transitive subgroups of Hol(C_{2p^2}). Throws
/// Error{DegreeMismatch} when [G : G'] differs from the degree,
/// Error{InvalidArgument} when G' has a nontrivial core and
/// Error{NonIntegral} when the quotient is not an integer.
ByottCount byott_count(const TransitiveSubgroups& transitive, const PointedGroup& pointed);

struct HgsCountTable {
  unsigned p = 0;
  VariantMatrix a{};      // [G][N] structure counts
  VariantMatrix b{};      // [G][N] regular subgroups of Hol(N) isomorphic to G
  std::array<std::uint64_t, 5> aut{};  // |Aut| per type
};

/// Galois case G' = 1: a = |Aut(G)| b / |Aut(N)| where b counts the regular
/// subgroups of Hol(N) isomorphic to G. `regular[j]` is the regular subgroup
/// list of Hol(N_j) and `aut[j]` is |Aut(N_j)|. Throws Error{NonIntegral}.
HgsCountTable galois_table(unsigned p, const std::array<std::vector<RegularSubgroupRecord>, 5>& regular,
                           const std::array<std::uint64_t, 5>& aut);

/// Throws Error{MismatchAgainstClosedForm} naming the first differing cell.
void require_closed_form(const HgsCountTable& t);

struct CyclicTypeEntry {
  std::size_t class_id = 0;
  std::size_t representative = 0;  // index into TransitiveSubgroups::records
  std::size_t order = 0;
  std::size_t stabilizer_order = 0;
  int family = 0;  // 1..4, or 0 for the two regular classes
  unsigned d = 0;  // divisor parameter of the family
  unsigned m = 0;  // order of the cyclic normal subgroup in C_m x| C_k
  unsigned k = 0;
  bool has_cyclic_core = false;  // an element of order 2p^2 exists
  ByottCount count;
  std::uint64_t expected_a = 0;
};

struct CyclicTypeReport {
  unsigned p = 0;
  std::vector<CyclicTypeEntry> entries;  // by class id
};

/// Matches each transitive pair-class of Hol(C_{2p^2}) to a semidirect
/// family and computes its structure count. Throws Error{UnmatchedFamily}.
CyclicTypeReport cyclic_type_report(const TransitiveSubgroups& transitive);

}  // namespace holobrace
