#pragma once

#include "poim/graph.hpp"
#include "poim/morphism.hpp"

#include <vector>

namespace poim {

/// Enumerates every match from a query graph into a data graph: the morphisms
/// fixing identifiers. Blanks of the query behave exactly like variables, and
/// no injectivity is imposed. The empty query graph has exactly one match.
///
/// The result lists each match once, ordered lexicographically by the
/// canonical attribute order on the non-fixed assignment vector; this order
/// indexes the matches everywhere downstream.
///
/// Throws PreconditionError when the target contains variables.
std::vector<Morphism> enumerateMatches(const QueryGraph& query, const DataGraph& data);

/// The subgraph of the target actually covered by a match.
DataGraph matchImage(const Morphism& match);

} // namespace poim
