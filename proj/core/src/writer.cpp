#include "poim/writer.hpp"

#include "poim/errors.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace poim {

namespace {

std::string escapeLiteral(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

// A term made comparable with blanks replaced by numeric indices, so listing
// comparisons are independent of blank labels.
struct EncTerm {
    int kind = 0;
    std::uint64_t index = 0;
    std::string lexical;
    std::string datatype;
    std::string language;

    friend bool operator==(const EncTerm&, const EncTerm&) = default;
    friend auto operator<=>(const EncTerm&, const EncTerm&) = default;
};

using EncTriple = std::array<EncTerm, 3>;

EncTerm encode(const Term& t, const std::map<Term, std::uint64_t>& blankIndex) {
    EncTerm e;
    e.kind = static_cast<int>(t.kind());
    if (t.isBlank()) {
        e.index = blankIndex.at(t);
    } else {
        e.lexical = t.lexical();
        if (t.datatype()) e.datatype = *t.datatype();
        if (t.language()) e.language = *t.language();
    }
    return e;
}

// Canonical listing search. Lines are emitted smallest-key first, where keys
// index blanks by order of first appearance; equal keys (symmetric blanks)
// are branch points and every branch is explored, keeping the least complete
// listing. The node budget guards against graphs with huge symmetry groups;
// past it the listing falls back to the original-label order, which is still
// deterministic, just not invariant under blank renaming.
struct CanonicalSearch {
    std::vector<Triple> triples;
    std::vector<bool> used;
    std::map<Term, std::uint64_t> assignment;
    std::uint64_t nextIndex = 0;
    std::vector<EncTriple> listing;
    std::vector<Triple> order;

    std::optional<std::vector<EncTriple>> bestListing;
    std::vector<Triple> bestOrder;
    std::map<Term, std::uint64_t> bestAssignment;
    int budget = 20000;
    bool exhausted = false;

    EncTriple keyFor(const Triple& t) const {
        std::map<Term, std::uint64_t> scratch;
        const Term* terms[3] = {&t.subject, &t.predicate, &t.object};
        EncTriple key;
        for (int i = 0; i < 3; ++i) {
            const Term& term = *terms[i];
            if (term.isBlank() && assignment.count(term) == 0) {
                auto it = scratch.find(term);
                std::uint64_t idx =
                    it != scratch.end() ? it->second : nextIndex + scratch.size();
                if (it == scratch.end()) scratch.emplace(term, idx);
                key[i].kind = static_cast<int>(TermKind::Blank);
                key[i].index = idx;
            } else {
                key[i] = encode(term, assignment);
            }
        }
        return key;
    }

    void run() {
        if (--budget < 0) {
            exhausted = true;
            return;
        }
        if (listing.size() == triples.size()) {
            if (!bestListing || listing < *bestListing) {
                bestListing = listing;
                bestOrder = order;
                bestAssignment = assignment;
            }
            return;
        }

        std::optional<EncTriple> minKey;
        std::vector<std::size_t> ties;
        for (std::size_t i = 0; i < triples.size(); ++i) {
            if (used[i]) continue;
            EncTriple key = keyFor(triples[i]);
            if (!minKey || key < *minKey) {
                minKey = key;
                ties.assign(1, i);
            } else if (key == *minKey) {
                ties.push_back(i);
            }
        }

        for (std::size_t i : ties) {
            const Triple& t = triples[i];
            used[i] = true;
            listing.push_back(*minKey);
            order.push_back(t);

            std::vector<Term> newlyAssigned;
            for (const Term* term : {&t.subject, &t.predicate, &t.object}) {
                if (term->isBlank() && assignment.count(*term) == 0) {
                    assignment.emplace(*term, nextIndex++);
                    newlyAssigned.push_back(*term);
                }
            }

            run();

            for (auto it = newlyAssigned.rbegin(); it != newlyAssigned.rend(); ++it) {
                assignment.erase(*it);
                --nextIndex;
            }
            order.pop_back();
            listing.pop_back();
            used[i] = false;
            if (exhausted) return;
        }
    }
};

std::string renderWithLabels(const Term& t, const std::map<Term, std::uint64_t>& labels) {
    if (t.isBlank()) return "_:b" + std::to_string(labels.at(t));
    return renderTerm(t);
}

} // namespace

std::string renderTerm(const Term& t) {
    switch (t.kind()) {
        case TermKind::Iri:
            return "<" + t.lexical() + ">";
        case TermKind::Literal: {
            std::string out = "\"" + escapeLiteral(t.lexical()) + "\"";
            if (t.datatype()) out += "^^<" + *t.datatype() + ">";
            if (t.language()) out += "@" + *t.language();
            return out;
        }
        case TermKind::Blank:
            return "_:" + t.lexical();
        case TermKind::Variable:
            return "?" + t.lexical();
    }
    return {};
}

std::string renderTriple(const Triple& t) {
    return renderTerm(t.subject) + " " + renderTerm(t.predicate) + " " + renderTerm(t.object) +
           " .";
}

std::string serializeGraph(const DataGraph& g) {
    if (!g.isDataGraph())
        throw PreconditionError("cannot serialize a graph containing variables");

    CanonicalSearch search;
    search.triples.assign(g.begin(), g.end());
    search.used.assign(search.triples.size(), false);
    search.run();

    std::string out;
    if (search.bestListing && !search.exhausted) {
        for (const Triple& t : search.bestOrder) {
            out += renderWithLabels(t.subject, search.bestAssignment) + " " +
                   renderWithLabels(t.predicate, search.bestAssignment) + " " +
                   renderWithLabels(t.object, search.bestAssignment) + " .\n";
        }
        return out;
    }

    // Fallback: original-label order with first-appearance relabeling.
    std::map<Term, std::uint64_t> labels;
    for (const Triple& t : g) {
        for (const Term* term : {&t.subject, &t.predicate, &t.object}) {
            if (term->isBlank() && labels.count(*term) == 0)
                labels.emplace(*term, labels.size());
        }
    }
    for (const Triple& t : g) {
        out += renderWithLabels(t.subject, labels) + " " + renderWithLabels(t.predicate, labels) +
               " " + renderWithLabels(t.object, labels) + " .\n";
    }
    return out;
}

std::string writeTriples(const Graph& g) {
    std::string out;
    for (const Triple& t : g) {
        out += renderTriple(t);
        out += "\n";
    }
    return out;
}

std::string serializeMultirelation(const Multirelation& r) {
    auto quoteCsv = [](const std::string& raw, bool forceQuote) {
        bool needsQuote = forceQuote;
        for (char c : raw) {
            if (c == ',' || c == '"' || c == '\n' || c == '\r') needsQuote = true;
        }
        if (!needsQuote) return raw;
        std::string out = "\"";
        for (char c : raw) {
            if (c == '"') out += "\"\"";
            out += c;
        }
        out += "\"";
        return out;
    };

    std::string out;
    for (std::size_t i = 0; i < r.columnNames().size(); ++i) {
        if (i > 0) out += ",";
        out += quoteCsv(r.columnNames()[i], false);
    }
    out += "\n";

    std::map<Term, std::uint64_t> labels;
    for (const Multirelation::Row& row : r.rows()) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out += ",";
            const Term& cell = row[i];
            switch (cell.kind()) {
                case TermKind::Iri:
                    out += quoteCsv(cell.lexical(), false);
                    break;
                case TermKind::Literal:
                    out += quoteCsv(cell.lexical(), true);
                    break;
                case TermKind::Blank: {
                    auto [it, inserted] = labels.emplace(cell, labels.size());
                    (void)inserted;
                    out += "_:b" + std::to_string(it->second);
                    break;
                }
                case TermKind::Variable:
                    throw PreconditionError("multirelation entries cannot be variables");
            }
        }
        out += "\n";
    }
    return out;
}

} // namespace poim
