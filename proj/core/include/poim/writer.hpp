#pragma once

#include "poim/graph.hpp"
#include "poim/query.hpp"
#include "poim/term.hpp"

#include <string>

namespace poim {

/// One term in the concrete syntax: <iri>, "literal" (with ^^<dt> or @lang),
/// _:label, ?name.
std::string renderTerm(const Term& t);

/// One triple in the concrete syntax, terminated by " .".
std::string renderTriple(const Triple& t);

/// N-Triples-style serialization with canonical blank labels: blanks are
/// relabeled _:b0, _:b1, … so that graphs equal up to blank renaming
/// serialize to identical bytes, and the listing order is canonical.
/// Throws PreconditionError when the graph contains variables.
std::string serializeGraph(const DataGraph& g);

/// Plain listing in canonical order with the original labels kept; handles
/// query graphs. Used for trace output, not for canonical comparison.
std::string writeTriples(const Graph& g);

/// CSV with a header row of column names and one row per bag element in
/// canonical order; IRIs bare, literals quoted, blanks relabeled _:bN in
/// order of first appearance. RFC-4180-style quoting.
std::string serializeMultirelation(const Multirelation& r);

} // namespace poim
