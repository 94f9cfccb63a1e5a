#pragma once

#include <functional>
#include <vector>

#include "holobrace/group.hpp"

namespace holobrace::detail {

/// Per-element invariant preserved by isomorphisms: element order combined
/// with conjugacy class size.
std::vector<std::uint64_t> element_invariants(const FiniteGroup& g);

/// Backtracking over generator images. `candidates[i]` lists the allowed
/// images of `gens[i]`. Every injective homomorphism found is handed to
/// `visit` as a full image table; returning false from `visit` stops the
/// search. `gens` must generate the domain.
void for_each_embedding(const FiniteGroup& dom, const FiniteGroup& cod, std::vector<Elem> gens,
                        std::vector<std::vector<Elem>> candidates,
                        const std::function<bool(const std::vector<Elem>&)>& visit);

/// Greedy generating set of the subgroup `within` (elements of g).
std::vector<Elem> subgroup_generators(const FiniteGroup& g, const Subgroup& within);

}  // namespace holobrace::detail
