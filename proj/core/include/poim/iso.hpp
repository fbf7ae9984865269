#pragma once

#include "poim/fixed_set.hpp"
#include "poim/graph.hpp"
#include "poim/morphism.hpp"

#include <optional>

namespace poim {

/// Searches for an isomorphism from g1 to g2 in the category fixing the given
/// set: an attribute map that is the identity on fixed attributes, a bijection
/// between the non-fixed attributes, and whose triple-wise image is exactly g2.
///
/// Backtracking over the non-fixed attributes of g1 in canonical order, with
/// candidates pruned by an invariant signature (the multiset of incident
/// triple shapes). Candidates are tried in canonical order, so the witness
/// returned is the lexicographically least one.
std::optional<Morphism> isoCheck(const Graph& g1, const Graph& g2, const FixedSet& fixed);

} // namespace poim
