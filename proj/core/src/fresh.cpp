#include "poim/fresh.hpp"

#include "poim/errors.hpp"

namespace poim {

std::map<Term, Term> freshRenameMap(const std::set<Term>& toRename, std::set<Term> reserved,
                                    FreshNames& gen) {
    std::map<Term, Term> renaming;
    for (const Term& x : toRename) {
        Term fresh;
        switch (x.kind()) {
            case TermKind::Blank:
                fresh = gen.freshBlank(reserved);
                break;
            case TermKind::Variable:
                fresh = gen.freshVariable(reserved);
                break;
            default:
                throw PreconditionError("identifiers are fixed and cannot be renamed");
        }
        renaming.emplace(x, fresh);
        reserved.insert(fresh);
    }
    return renaming;
}

std::pair<Graph, Morphism> freshBlankRename(const Graph& g, const std::set<Term>& reserved,
                                            FreshNames& gen) {
    TermPartition parts = attributes(g);
    std::set<Term> avoid = reserved;
    avoid.insert(parts.all.begin(), parts.all.end());

    std::map<Term, Term> renaming = freshRenameMap(parts.blanks, avoid, gen);
    Graph renamed = applyRenaming(renaming, g);

    std::map<Term, Term> witness;
    for (const Term& x : parts.all) {
        auto it = renaming.find(x);
        witness.emplace(x, it == renaming.end() ? x : it->second);
    }
    Morphism iso{g, renamed, std::move(witness), FixedSet::identifiersAndVariables()};
    return {std::move(renamed), std::move(iso)};
}

} // namespace poim
