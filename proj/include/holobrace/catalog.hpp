#pragma once

#include <string>
#include <vector>

#include "holobrace/group.hpp"

namespace holobrace {

/// Recipe for a concrete group. Elements of the built group are exponent
/// tuples in the declared generator order, indexed lexicographically.
struct GroupSpec {
  enum class Kind { Cyclic, Dihedral, Direct, Semidirect };

  Kind kind = Kind::Cyclic;
  unsigned n = 1;                            // Cyclic: order; Dihedral: rotation order
  std::vector<GroupSpec> factors;            // Direct: factors; Semidirect: {base, acting}
  std::vector<std::vector<Elem>> action;     // Semidirect: base permutation per acting generator
  std::vector<std::string> names;            // generator names used for element labels
  std::string label;

  static GroupSpec cyclic(unsigned n, std::string name = "a");
  static GroupSpec dihedral(unsigned n, std::string rot = "r", std::string refl = "s");
  static GroupSpec direct(std::vector<GroupSpec> factors);
  /// `action[i]` is the automorphism of the base (as an index permutation)
  /// by which the i-th generator of `acting` acts.
  static GroupSpec semidirect(GroupSpec base, GroupSpec acting, std::vector<std::vector<Elem>> action);
};

/// Throws Error{InvalidAction} when a semidirect action is not a
/// homomorphism into Aut(base).
FiniteGroup build(const GroupSpec& spec);

/// x -> x^t on a cyclic group built by GroupSpec::cyclic (index i = a^i).
std::vector<Elem> power_map(unsigned n, unsigned t);

/// One of the five groups of order 2p^2 with the hardcoded minimal generating
/// sets {a}; {r, s}; {a, bc}; {cr, s}; {a, b, c}.
FiniteGroup build_2p2(Variant2p2 variant, unsigned p);

/// C_m x| C_k where the generator of C_k acts as x -> x^t, t the smallest
/// integer > 1 of multiplicative order k mod m (t = 1 when k = 1). Requires
/// m in {p^2, 2p^2} and k | p(p-1). Throws Error{NoSuchTwist}.
FiniteGroup build_cyclic_semidirect(unsigned p, unsigned m, unsigned k);

}  // namespace holobrace
