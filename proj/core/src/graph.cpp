#include "poim/graph.hpp"

namespace poim {

bool Graph::isDataGraph() const {
    for (const Triple& t : triples_) {
        if (t.subject.isVariable() || t.predicate.isVariable() || t.object.isVariable())
            return false;
    }
    return true;
}

TermPartition attributes(const Graph& g) {
    TermPartition p;
    auto add = [&p](const Term& t) {
        p.all.insert(t);
        switch (t.kind()) {
            case TermKind::Iri:
            case TermKind::Literal:
                p.identifiers.insert(t);
                break;
            case TermKind::Blank:
                p.blanks.insert(t);
                break;
            case TermKind::Variable:
                p.variables.insert(t);
                break;
        }
    };
    for (const Triple& t : g) {
        add(t.subject);
        add(t.predicate);
        add(t.object);
    }
    return p;
}

std::set<Term> attributeSet(const Graph& g) {
    std::set<Term> all;
    for (const Triple& t : g) {
        all.insert(t.subject);
        all.insert(t.predicate);
        all.insert(t.object);
    }
    return all;
}

} // namespace poim
