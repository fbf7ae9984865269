#pragma once

#include "poim/term.hpp"

#include <compare>
#include <initializer_list>
#include <set>

namespace poim {

/// A generalized triple: any position may hold any term kind.
/// RDF well-formedness is a separate predicate, not a type invariant.
struct Triple {
    Term subject;
    Term predicate;
    Term object;

    friend bool operator==(const Triple&, const Triple&) = default;
    friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// A finite set of triples. Immutable value type; all operations on graphs
/// are pure functions returning new graphs. A data graph is a graph without
/// variables, a query graph may contain any term.
class Graph {
public:
    Graph() = default;
    Graph(std::initializer_list<Triple> triples) : triples_(triples) {}
    explicit Graph(std::set<Triple> triples) : triples_(std::move(triples)) {}

    const std::set<Triple>& triples() const { return triples_; }
    std::set<Triple>::const_iterator begin() const { return triples_.begin(); }
    std::set<Triple>::const_iterator end() const { return triples_.end(); }

    std::size_t size() const { return triples_.size(); }
    bool empty() const { return triples_.empty(); }
    bool contains(const Triple& t) const { return triples_.count(t) != 0; }

    Graph unionWith(const Graph& other) const {
        std::set<Triple> merged = triples_;
        merged.insert(other.triples_.begin(), other.triples_.end());
        return Graph(std::move(merged));
    }

    Graph inserted(const Triple& t) const {
        std::set<Triple> next = triples_;
        next.insert(t);
        return Graph(std::move(next));
    }

    /// True when no variable occurs, i.e. the graph is a data graph.
    bool isDataGraph() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::set<Triple> triples_;
};

using DataGraph = Graph;
using QueryGraph = Graph;

/// The attribute set of a graph, partitioned by kind: identifiers (IRIs and
/// literals), blanks, and variables.
struct TermPartition {
    std::set<Term> all;
    std::set<Term> identifiers;
    std::set<Term> blanks;
    std::set<Term> variables;
};

/// Every subject, predicate and object occurring in some triple of g.
TermPartition attributes(const Graph& g);

/// Just the full attribute set, when the partition is not needed.
std::set<Term> attributeSet(const Graph& g);

} // namespace poim
