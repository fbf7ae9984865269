#pragma once

#include "poim/errors.hpp"
#include "poim/graph.hpp"
#include "poim/term.hpp"

#include <set>
#include <string>
#include <utility>

namespace poim {

/// A decidable subset C of the attribute universe that a morphism fixes.
/// Every fixed set here contains all identifiers; blanks and variables can be
/// fixed wholesale or, for blanks, one by one.
class FixedSet {
public:
    /// I — identifiers only.
    static FixedSet identifiers() { return FixedSet(false, false, {}); }
    /// IB — identifiers and all blanks.
    static FixedSet identifiersAndBlanks() { return FixedSet(true, false, {}); }
    /// IV — identifiers and all variables.
    static FixedSet identifiersAndVariables() { return FixedSet(false, true, {}); }
    /// IBV — everything.
    static FixedSet everything() { return FixedSet(true, true, {}); }

    /// I extended with the blanks of g.
    static FixedSet identifiersAndBlanksOf(const Graph& g) {
        return FixedSet(false, false, attributes(g).blanks);
    }

    /// This set extended with one more fixed blank.
    FixedSet withBlank(const Term& blank) const {
        if (!blank.isBlank())
            throw PreconditionError("only blanks can be added to a fixed set");
        FixedSet next = *this;
        next.extraBlanks_.insert(blank);
        return next;
    }

    bool contains(const Term& t) const {
        switch (t.kind()) {
            case TermKind::Iri:
            case TermKind::Literal:
                return true;
            case TermKind::Blank:
                return allBlanks_ || extraBlanks_.count(t) != 0;
            case TermKind::Variable:
                return allVariables_;
        }
        return false;
    }

    bool fixesAllBlanks() const { return allBlanks_; }
    bool fixesAllVariables() const { return allVariables_; }
    const std::set<Term>& extraFixedBlanks() const { return extraBlanks_; }

    friend bool operator==(const FixedSet&, const FixedSet&) = default;

private:
    FixedSet(bool allBlanks, bool allVariables, std::set<Term> extraBlanks)
        : allBlanks_(allBlanks),
          allVariables_(allVariables),
          extraBlanks_(std::move(extraBlanks)) {}

    bool allBlanks_ = false;
    bool allVariables_ = false;
    std::set<Term> extraBlanks_;
};

} // namespace poim
