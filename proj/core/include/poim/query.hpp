#pragma once

#include "poim/colimit.hpp"
#include "poim/fresh.hpp"
#include "poim/graph.hpp"
#include "poim/term.hpp"

#include <set>
#include <string>
#include <vector>

namespace poim {

/// A basic construct query: the pattern L, the template R and the normalized
/// rule cospan. After normalization L and R share no blank and every variable
/// of R occurs in L.
struct ConstructQuery {
    QueryGraph lhs;
    QueryGraph rhs;
    Cospan rule;
};

/// A basic select query: a pattern and an ordered list of distinct column
/// variables, each of which occurs in the pattern.
struct SelectQuery {
    QueryGraph lhs;
    std::vector<Term> columns;

    /// Throws DuplicateColumnError on a repeated variable, UnboundColumnError
    /// when a column does not occur in the pattern, PreconditionError when a
    /// column is not a variable.
    static SelectQuery checked(QueryGraph lhs, std::vector<Term> columns);
};

/// A bag of n-tuples over identifiers and blanks, the result of a select
/// query. Rows are kept in canonical order; duplicates are preserved.
class Multirelation {
public:
    using Row = std::vector<Term>;

    Multirelation() = default;
    /// Validates row lengths and that no entry is a variable, then sorts.
    Multirelation(std::vector<std::string> columnNames, std::vector<Row> rows);

    const std::vector<std::string>& columnNames() const { return columnNames_; }
    const std::vector<Row>& rows() const { return rows_; }
    std::size_t arity() const { return columnNames_.size(); }

    friend bool operator==(const Multirelation&, const Multirelation&) = default;

private:
    std::vector<std::string> columnNames_;
    std::vector<Row> rows_; // canonically sorted
};

/// Builds the normalized basic construct query of (L, R): blanks of R that
/// also occur in L are renamed fresh, triples of R mentioning a variable
/// absent from L are dropped, and the rule cospan is assembled.
ConstructQuery normalizeConstruct(const QueryGraph& lhs, const QueryGraph& rhs, FreshNames& gen);

/// Reference evaluation: for each match (in canonical order) instantiate R,
/// giving each blank of R one fresh blank per match, and return the union.
DataGraph evalConstructDirect(const ConstructQuery& q, const DataGraph& data, FreshNames& gen);

/// High-level calculus: one POIM application of the k-fold replicated rule
/// along the merged match that restricts to the i-th match on the i-th copy.
DataGraph evalConstructHigh(const ConstructQuery& q, const DataGraph& data, FreshNames& gen);

/// Low-level calculus: one POIM application per match, restricted to the
/// match image, merged by a coproduct fixing identifiers and the blanks of
/// the data graph (so blanks coming from the data are never duplicated).
DataGraph evalConstructLow(const ConstructQuery& q, const DataGraph& data, FreshNames& gen);

/// Keeps exactly the RDF triples: subject an IRI or blank, predicate an IRI,
/// object an IRI, literal or blank. Idempotent and monotone.
DataGraph filterWellFormed(const DataGraph& h);

/// The IRI minted for a select column name.
std::string columnIri(const std::string& columnName);

/// The relational query graph on the given columns: one shared fresh blank
/// subject and the triple (_:r, columnIri(s), ?s) for each column variable.
/// Throws DuplicateColumnError on repeats.
QueryGraph relationalQueryGraph(const std::vector<Term>& columns, FreshNames& gen,
                                const std::set<Term>& reserved = {});

/// True iff h encodes a table on the given columns: every triple has a blank
/// line subject, a minted column IRI predicate and an identifier-or-blank
/// object, each line carries exactly one triple per column, and no line blank
/// occurs as an object.
bool isRelational(const DataGraph& h, const std::vector<std::string>& columnNames);

/// Reads the multirelation off a relational data graph: one row per line
/// blank, entries in column order, duplicate rows preserved.
/// Throws NotRelationalError when the precondition fails.
Multirelation relationOf(const DataGraph& h, const std::vector<std::string>& columnNames);

/// Select evaluation: runs the associated construct query (L, Gr(S)) and
/// reads the resulting relational graph back as a multirelation. A
/// zero-column select yields one empty row per match.
Multirelation evalSelect(const SelectQuery& q, const DataGraph& data, FreshNames& gen);

/// The SPARQL-faithful answer of a construct query over an RDF graph: blanks
/// of L are first replaced by fresh variables, then the direct result is
/// filtered down to its well-formed triples.
DataGraph answersOverRdf(const ConstructQuery& q, const DataGraph& data, FreshNames& gen);

} // namespace poim
