#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "holobrace/aut.hpp"
#include "holobrace/group.hpp"

namespace holobrace {

/// Largest holomorph that may be materialized as a Cayley table.
inline constexpr std::size_t kMaterializeBound = 10'000;

/// Hol(N) = N x| Aut(N). Element (n, f) is encoded as n * |Aut(N)| + f and
/// acts on N by x -> n f(x). Products are computed on demand.
class Holomorph {
 public:
  explicit Holomorph(AutGroup auts);

  const FiniteGroup& base() const noexcept { return auts_.base(); }
  const AutGroup& auts() const noexcept { return auts_; }
  std::size_t order() const noexcept { return base().order() * auts_.size(); }
  std::size_t degree() const noexcept { return base().order(); }

  Elem encode(Elem n, AutGroup::Index f) const noexcept { return Elem(std::size_t(n) * auts_.size() + f); }
  Elem point(Elem h) const noexcept { return Elem(h / auts_.size()); }
  AutGroup::Index aut(Elem h) const noexcept { return AutGroup::Index(h % auts_.size()); }
  Elem identity() const noexcept { return encode(base().identity(), auts_.identity()); }

  /// (n1, f1)(n2, f2) = (n1 f1(n2), f1 f2)
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem power(Elem a, std::uint64_t k) const;
  std::uint64_t element_order(Elem a) const;

  /// (n, f) . x = n f(x)
  Elem act(Elem h, Elem x) const noexcept {
    return base().mul(point(h), auts_.apply(aut(h), x));
  }

  /// phi (n, f) phi^-1 = (phi(n), phi f phi^-1) for phi in Aut(N).
  Elem conjugate_by_aut(AutGroup::Index phi, Elem h) const;

  /// True when h moves every point of N.
  bool fixes_no_point(Elem h) const noexcept;

  /// Generators: (g, id) for g generating N and (1, f) for f generating Aut(N).
  std::vector<Elem> generators() const;

  /// The full Cayley table. Throws Error{TooLarge} above kMaterializeBound.
  FiniteGroup materialize() const;

 private:
  AutGroup auts_;
};

/// Throws Error{TooLarge} (propagated from the automorphism computation).
Holomorph build_holomorph(const FiniteGroup& n, bool force = false);

/// A subgroup of a holomorph, as sorted encoded elements.
using HolSubgroup = Subgroup;

/// Closure inside Hol(N); nullopt once the subgroup would exceed `cap`.
std::optional<HolSubgroup> hol_closure(const Holomorph& hol, std::span<const Elem> gens,
                                       std::size_t cap = std::numeric_limits<std::size_t>::max());

/// Greedy generating set of a subgroup of Hol(N).
std::vector<Elem> hol_subgroup_generators(const Holomorph& hol, const HolSubgroup& h);

/// lambda_N(N) = {(n, id)}.
HolSubgroup lambda_embed(const Holomorph& hol);

struct ActionProfile {
  std::vector<std::size_t> orbit_sizes;  // ascending
  std::size_t stabilizer_order = 0;      // at the identity of N
  bool transitive = false;
  bool semiregular = false;
  bool regular = false;
};

ActionProfile action_profile(const Holomorph& hol, const HolSubgroup& h);

/// {g in Hol(N) : g H g^-1 = H}, by a scan of the whole holomorph.
HolSubgroup normalizer_in_hol(const Holomorph& hol, const HolSubgroup& h);

/// True when g H g^-1 = H.
bool normalizes(const Holomorph& hol, Elem g, const HolSubgroup& h, std::span<const Elem> h_gens);

/// H as a standalone group; element i of the result is h.elements[i].
FiniteGroup hol_subgroup_as_group(const Holomorph& hol, const HolSubgroup& h, std::string label);

}  // namespace holobrace
