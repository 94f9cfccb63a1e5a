#pragma once

#include <cstdint>
#include <vector>

#include "holobrace/enumeration.hpp"
#include "holobrace/group.hpp"
#include "holobrace/holomorph.hpp"

namespace holobrace {

/// A skew left brace on the elements of N: (B, .) is N itself and
/// x o y = x . lambda_x(y) with lambda_x in Aut(N).
struct SkewBrace {
  FiniteGroup add;
  FiniteGroup circ;
  std::vector<AutGroup::Index> lambda;  // lambda[x] indexes Aut(N)
};

/// x o y = x phi_x(y), where (x, phi_x) is the unique element of G over x.
/// Throws Error{NotRegular}.
SkewBrace brace_from_regular(const Holomorph& hol, const HolSubgroup& g);

/// a o (b c) = (a o b) a^-1 (a o c) for every triple.
bool brace_law_holds(const SkewBrace& b);

/// {a : a o b = a b and b (b o a) = (b o a) b for all b}
Subgroup socle(const SkewBrace& b);

/// Soc(B) intersected with the centre of (B, o).
Subgroup annihilator(const SkewBrace& b);

/// |{phi in Aut(N) : phi G phi^-1 = G}|.
std::uint64_t brace_aut_order(const Holomorph& hol, const HolSubgroup& g);

/// |{phi in Aut(N) : phi(x o y) = phi(x) o phi(y)}|, computed on the tables.
std::uint64_t brace_aut_order_direct(const Holomorph& hol, const SkewBrace& b);

struct BraceInvariants {
  IsoType2p2 additive_type;
  IsoType2p2 multiplicative_type;
  Subgroup socle;
  Subgroup annihilator;
  std::uint64_t aut_order = 0;
};

struct BraceClass {
  std::size_t representative = 0;    // index into the regular subgroup list
  std::vector<std::size_t> members;  // the Aut(N)-conjugacy orbit, ascending
  SkewBrace brace;
  BraceInvariants invariants;

  std::size_t orbit_size() const noexcept { return members.size(); }
};

/// Partition of `regular` into Aut(N)-conjugacy orbits, one class per
/// isomorphism class of skew braces with additive group N. Classes are ordered
/// by representative.
std::vector<BraceClass> classify_braces(const Holomorph& hol, const std::vector<RegularSubgroupRecord>& regular);

}  // namespace holobrace
