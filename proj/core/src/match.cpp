#include "poim/match.hpp"

#include "poim/errors.hpp"
#include "poim/fixed_set.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace poim {

namespace {

// Extends the binding so that the query triple maps onto the data triple;
// returns false (leaving the binding dirty, caller restores) when they clash.
bool unify(const Triple& queryTriple, const Triple& dataTriple, std::map<Term, Term>& binding) {
    const Term* q[3] = {&queryTriple.subject, &queryTriple.predicate, &queryTriple.object};
    const Term* d[3] = {&dataTriple.subject, &dataTriple.predicate, &dataTriple.object};
    for (int i = 0; i < 3; ++i) {
        if (q[i]->isIdentifier()) {
            if (*q[i] != *d[i]) return false;
        } else {
            auto it = binding.find(*q[i]);
            if (it == binding.end())
                binding.emplace(*q[i], *d[i]);
            else if (it->second != *d[i])
                return false;
        }
    }
    return true;
}

void search(const std::vector<Triple>& queryTriples, std::size_t index, const DataGraph& data,
            std::map<Term, Term>& binding, std::set<std::map<Term, Term>>& found) {
    if (index == queryTriples.size()) {
        found.insert(binding);
        return;
    }
    for (const Triple& candidate : data) {
        std::map<Term, Term> saved = binding;
        if (unify(queryTriples[index], candidate, binding))
            search(queryTriples, index + 1, data, binding, found);
        binding = std::move(saved);
    }
}

} // namespace

std::vector<Morphism> enumerateMatches(const QueryGraph& query, const DataGraph& data) {
    if (!data.isDataGraph())
        throw PreconditionError("match target must be a data graph (no variables)");

    // Most-constrained-first triple order; ties broken canonically. The
    // output is re-sorted below, so the strategy never affects the result.
    std::vector<Triple> ordered(query.begin(), query.end());
    std::map<Triple, std::size_t> candidateCount;
    for (const Triple& qt : ordered) {
        std::size_t count = 0;
        for (const Triple& dt : data) {
            std::map<Term, Term> scratch;
            if (unify(qt, dt, scratch)) ++count;
        }
        candidateCount.emplace(qt, count);
    }
    std::stable_sort(ordered.begin(), ordered.end(), [&](const Triple& a, const Triple& b) {
        return candidateCount.at(a) < candidateCount.at(b);
    });

    std::set<std::map<Term, Term>> found;
    std::map<Term, Term> binding;
    search(ordered, 0, data, binding, found);

    std::vector<Morphism> matches;
    matches.reserve(found.size());
    std::set<Term> queryAttrs = attributeSet(query);
    for (const std::map<Term, Term>& assignment : found) {
        std::map<Term, Term> total = assignment;
        for (const Term& attr : queryAttrs)
            if (attr.isIdentifier()) total.emplace(attr, attr);
        matches.push_back(Morphism{query, data, std::move(total), FixedSet::identifiers()});
    }
    return matches;
}

DataGraph matchImage(const Morphism& match) {
    return applyMorphism(match);
}

} // namespace poim
