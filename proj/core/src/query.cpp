#include "poim/query.hpp"

#include "poim/errors.hpp"
#include "poim/match.hpp"

#include <algorithm>
#include <map>

namespace poim {

SelectQuery SelectQuery::checked(QueryGraph lhs, std::vector<Term> columns) {
    std::set<Term> seen;
    std::set<Term> patternVars = attributes(lhs).variables;
    for (const Term& column : columns) {
        if (!column.isVariable())
            throw PreconditionError("select columns must be variables");
        if (!seen.insert(column).second) throw DuplicateColumnError(column.lexical());
        if (patternVars.count(column) == 0) throw UnboundColumnError(column.lexical());
    }
    return SelectQuery{std::move(lhs), std::move(columns)};
}

Multirelation::Multirelation(std::vector<std::string> columnNames, std::vector<Row> rows)
    : columnNames_(std::move(columnNames)), rows_(std::move(rows)) {
    for (const Row& row : rows_) {
        if (row.size() != columnNames_.size())
            throw PreconditionError("multirelation row arity mismatch");
        for (const Term& entry : row)
            if (entry.isVariable())
                throw PreconditionError("multirelation entries must be identifiers or blanks");
    }
    std::sort(rows_.begin(), rows_.end());
}

ConstructQuery normalizeConstruct(const QueryGraph& lhs, const QueryGraph& rhs, FreshNames& gen) {
    TermPartition lhsParts = attributes(lhs);
    TermPartition rhsParts = attributes(rhs);

    // Blanks shared between L and R are meaningless; rename R's copies fresh.
    std::set<Term> sharedBlanks;
    for (const Term& b : rhsParts.blanks)
        if (lhsParts.blanks.count(b) != 0) sharedBlanks.insert(b);
    std::set<Term> reserved = lhsParts.all;
    reserved.insert(rhsParts.all.begin(), rhsParts.all.end());
    Graph separated = applyRenaming(freshRenameMap(sharedBlanks, std::move(reserved), gen), rhs);

    // Triples of R with a variable unbound in L can never be instantiated.
    std::set<Triple> kept;
    for (const Triple& t : separated) {
        bool bound = true;
        for (const Term* term : {&t.subject, &t.predicate, &t.object}) {
            if (term->isVariable() && lhsParts.variables.count(*term) == 0) bound = false;
        }
        if (bound) kept.insert(t);
    }
    Graph normalizedRhs{std::move(kept)};

    Cospan rule = Cospan::rule(lhs, normalizedRhs);
    return ConstructQuery{lhs, std::move(normalizedRhs), std::move(rule)};
}

DataGraph evalConstructDirect(const ConstructQuery& q, const DataGraph& data, FreshNames& gen) {
    std::vector<Morphism> matches = enumerateMatches(q.lhs, data);

    TermPartition rhsParts = attributes(q.rhs);
    std::set<Term> reserved = attributeSet(data);
    reserved.insert(rhsParts.all.begin(), rhsParts.all.end());
    for (const Term& attr : attributeSet(q.lhs)) reserved.insert(attr);

    Graph result;
    for (const Morphism& match : matches) {
        // One fresh blank per (blank of R, match) pair.
        std::map<Term, Term> substitution = freshRenameMap(rhsParts.blanks, reserved, gen);
        for (const auto& [blank, fresh] : substitution) {
            (void)blank;
            reserved.insert(fresh);
        }
        for (const Term& var : rhsParts.variables) {
            auto it = match.map.find(var);
            if (it != match.map.end()) substitution.emplace(var, it->second);
        }
        result = result.unionWith(applyRenaming(substitution, q.rhs));
    }
    return result;
}

DataGraph evalConstructHigh(const ConstructQuery& q, const DataGraph& data, FreshNames& gen) {
    std::vector<Morphism> matches = enumerateMatches(q.lhs, data);
    Replication replication = replicate(q.rule, matches.size(), gen);

    // The merged match coincides with the i-th match on the i-th copy.
    std::map<Term, Term> merged;
    std::set<Term> leftAttrs = attributeSet(q.lhs);
    for (std::size_t i = 0; i < matches.size(); ++i) {
        const std::map<Term, Term>& copyMap = replication.copyMaps[i];
        for (const Term& attr : leftAttrs) {
            auto it = copyMap.find(attr);
            Term key = it == copyMap.end() ? attr : it->second;
            merged.emplace(std::move(key), matches[i].map.at(attr));
        }
    }

    Morphism mergedMatch{replication.rule.left, data, std::move(merged), FixedSet::identifiers()};
    return poim(replication.rule, mergedMatch, gen).resultGraph;
}

DataGraph evalConstructLow(const ConstructQuery& q, const DataGraph& data, FreshNames& gen) {
    std::vector<Morphism> matches = enumerateMatches(q.lhs, data);

    std::vector<Graph> localResults;
    localResults.reserve(matches.size());
    for (const Morphism& match : matches) {
        Graph image = matchImage(match);
        Morphism restricted{q.lhs, image, match.map, FixedSet::identifiers()};
        localResults.push_back(poim(q.rule, restricted, gen).resultGraph);
    }

    return coproduct(localResults, FixedSet::identifiersAndBlanksOf(data), gen).object;
}

DataGraph filterWellFormed(const DataGraph& h) {
    std::set<Triple> wellFormed;
    for (const Triple& t : h) {
        bool ok = (t.subject.isIri() || t.subject.isBlank()) && t.predicate.isIri() &&
                  (t.object.isIdentifier() || t.object.isBlank());
        if (ok) wellFormed.insert(t);
    }
    return Graph{std::move(wellFormed)};
}

std::string columnIri(const std::string& columnName) {
    return "urn:poim:col:" + columnName;
}

QueryGraph relationalQueryGraph(const std::vector<Term>& columns, FreshNames& gen,
                                const std::set<Term>& reserved) {
    std::set<Term> seen;
    for (const Term& column : columns) {
        if (!column.isVariable())
            throw PreconditionError("relational query graph columns must be variables");
        if (!seen.insert(column).second) throw DuplicateColumnError(column.lexical());
    }
    if (columns.empty()) return Graph{};

    std::set<Term> avoid = reserved;
    avoid.insert(columns.begin(), columns.end());
    Term lineBlank = gen.freshBlank(avoid);

    std::set<Triple> triples;
    for (const Term& column : columns)
        triples.insert(Triple{lineBlank, Term::iri(columnIri(column.lexical())), column});
    return Graph{std::move(triples)};
}

bool isRelational(const DataGraph& h, const std::vector<std::string>& columnNames) {
    std::set<Term> expected;
    for (const std::string& name : columnNames) {
        if (!expected.insert(Term::iri(columnIri(name))).second) return false;
    }

    std::map<Term, std::set<Term>> linePredicates;
    std::set<Term> lineBlanks;
    std::set<Term> objects;
    for (const Triple& t : h) {
        if (!t.subject.isBlank()) return false;
        if (expected.count(t.predicate) == 0) return false;
        if (t.object.isVariable()) return false;
        if (!linePredicates[t.subject].insert(t.predicate).second) return false;
        lineBlanks.insert(t.subject);
        objects.insert(t.object);
    }
    for (const auto& [line, predicates] : linePredicates) {
        (void)line;
        if (predicates != expected) return false;
    }
    for (const Term& blank : lineBlanks)
        if (objects.count(blank) != 0) return false;
    return true;
}

Multirelation relationOf(const DataGraph& h, const std::vector<std::string>& columnNames) {
    if (!isRelational(h, columnNames))
        throw NotRelationalError("graph does not encode a table on the given columns");

    std::map<Term, std::map<Term, Term>> lines; // line blank -> predicate -> object
    for (const Triple& t : h) lines[t.subject].emplace(t.predicate, t.object);

    std::vector<Multirelation::Row> rows;
    rows.reserve(lines.size());
    for (const auto& [line, cells] : lines) {
        (void)line;
        Multirelation::Row row;
        row.reserve(columnNames.size());
        for (const std::string& name : columnNames)
            row.push_back(cells.at(Term::iri(columnIri(name))));
        rows.push_back(std::move(row));
    }
    return Multirelation(columnNames, std::move(rows));
}

Multirelation evalSelect(const SelectQuery& q, const DataGraph& data, FreshNames& gen) {
    if (q.columns.empty()) {
        // The associated construct query has an empty template, so the row
        // count cannot be read off its result; keep one empty row per match.
        std::size_t k = enumerateMatches(q.lhs, data).size();
        return Multirelation({}, std::vector<Multirelation::Row>(k));
    }

    QueryGraph gr = relationalQueryGraph(q.columns, gen, attributeSet(q.lhs));
    ConstructQuery cq = normalizeConstruct(q.lhs, gr, gen);
    DataGraph h = evalConstructDirect(cq, data, gen);

    std::vector<std::string> names;
    names.reserve(q.columns.size());
    for (const Term& column : q.columns) names.push_back(column.lexical());
    return relationOf(h, names);
}

DataGraph answersOverRdf(const ConstructQuery& q, const DataGraph& data, FreshNames& gen) {
    // Blanks in the pattern act as variables; replace them so the theorem's
    // hypothesis |L|_B = ∅ holds, which never changes the match set.
    TermPartition lhsParts = attributes(q.lhs);
    std::set<Term> reserved = lhsParts.all;
    for (const Term& attr : attributeSet(q.rhs)) reserved.insert(attr);

    std::map<Term, Term> blanksToVars;
    for (const Term& blank : lhsParts.blanks) {
        Term var = gen.freshVariable(reserved);
        reserved.insert(var);
        blanksToVars.emplace(blank, var);
    }
    QueryGraph blankFreeLhs = applyRenaming(blanksToVars, q.lhs);

    ConstructQuery rewritten = normalizeConstruct(blankFreeLhs, q.rhs, gen);
    return filterWellFormed(evalConstructDirect(rewritten, data, gen));
}

} // namespace poim
