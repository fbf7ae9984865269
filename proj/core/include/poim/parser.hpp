#pragma once

#include "poim/errors.hpp"
#include "poim/fresh.hpp"
#include "poim/graph.hpp"
#include "poim/query.hpp"

#include <map>
#include <string>
#include <string_view>
#include <variant>

namespace poim {

struct SourcePosition {
    int line = 0;
    int column = 0;
};

/// A parsed data document: declared prefixes, the graph, and the source
/// position of each triple for diagnostics.
struct ParsedDocument {
    std::map<std::string, std::string> prefixes;
    DataGraph graph;
    std::map<Triple, SourcePosition> sourceSpans;
};

/// Parses the Turtle subset: @prefix directives, '.'-terminated triples with
/// ';' predicate-object lists and ',' object lists, IRIs in <>, prefixed
/// names, plain/typed/lang-tagged string literals and _:name blanks.
/// Variables are rejected with VariableInDataError; other failures raise
/// SyntaxError or UndefinedPrefixError, all carrying a source position.
ParsedDocument parseData(std::string_view text);

/// A parsed query document. Construct queries come back normalized.
struct QueryDocument {
    std::map<std::string, std::string> prefixes;
    std::variant<ConstructQuery, SelectQuery> query;

    bool isConstruct() const { return std::holds_alternative<ConstructQuery>(query); }
    bool isSelect() const { return std::holds_alternative<SelectQuery>(query); }
    const ConstructQuery& construct() const { return std::get<ConstructQuery>(query); }
    const SelectQuery& select() const { return std::get<SelectQuery>(query); }

    /// The WHERE pattern, whichever query form was parsed.
    const QueryGraph& pattern() const {
        return isConstruct() ? construct().lhs : select().lhs;
    }
};

/// Parses the query subset: PREFIX directives, then either
/// CONSTRUCT { triples } WHERE { triples } or SELECT ?v… WHERE { triples }.
/// Triple syntax is as in parseData plus ?variables in any position.
/// Raises SyntaxError, UndefinedPrefixError, UnboundColumnError or
/// DuplicateColumnError.
QueryDocument parseQuery(std::string_view text, FreshNames& gen);

} // namespace poim
