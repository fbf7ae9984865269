#include "poim/iso.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace poim {

namespace {

std::string encodeTerm(const Term& t) {
    std::string s;
    s += static_cast<char>('0' + static_cast<int>(t.kind()));
    s += '\x1f';
    s += t.lexical();
    if (t.datatype()) {
        s += '\x1f';
        s += *t.datatype();
    }
    if (t.language()) {
        s += '\x1e';
        s += *t.language();
    }
    return s;
}

// Invariant signature of a non-fixed attribute: the sorted multiset of its
// incident triple shapes, where a shape records which positions hold the
// attribute itself, fixed terms verbatim, and other non-fixed attributes as
// a wildcard. Equal signatures are necessary for two attributes to
// correspond under an isomorphism.
std::string signature(const Term& x, const Graph& g, const FixedSet& fixed) {
    std::vector<std::string> shapes;
    for (const Triple& t : g) {
        const Term* terms[3] = {&t.subject, &t.predicate, &t.object};
        bool incident = false;
        std::string shape;
        for (const Term* term : terms) {
            if (*term == x) {
                shape += "X";
                incident = true;
            } else if (fixed.contains(*term)) {
                shape += "F" + encodeTerm(*term);
            } else {
                shape += "*";
            }
            shape += '\x1d';
        }
        if (incident) shapes.push_back(std::move(shape));
    }
    std::sort(shapes.begin(), shapes.end());
    std::string sig;
    for (const std::string& s : shapes) {
        sig += s;
        sig += '\x1c';
    }
    return sig;
}

struct SearchState {
    const Graph* g1;
    const Graph* g2;
    std::vector<Term> sourceAttrs;            // non-fixed attributes of g1, canonical order
    std::map<Term, std::vector<Term>> candidates;
    std::map<Term, Term> assignment;          // partial map on non-fixed attributes
    std::set<Term> used;                      // images already taken
};

bool triplesConsistent(const SearchState& st, const FixedSet& fixed) {
    for (const Triple& t : *st.g1) {
        Triple image;
        Term* out[3] = {&image.subject, &image.predicate, &image.object};
        const Term* in[3] = {&t.subject, &t.predicate, &t.object};
        bool complete = true;
        for (int i = 0; i < 3; ++i) {
            if (fixed.contains(*in[i])) {
                *out[i] = *in[i];
            } else {
                auto it = st.assignment.find(*in[i]);
                if (it == st.assignment.end()) {
                    complete = false;
                    break;
                }
                *out[i] = it->second;
            }
        }
        if (complete && !st.g2->contains(image)) return false;
    }
    return true;
}

bool search(SearchState& st, std::size_t index, const FixedSet& fixed) {
    if (index == st.sourceAttrs.size()) return true;
    const Term& x = st.sourceAttrs[index];
    for (const Term& y : st.candidates.at(x)) {
        if (st.used.count(y) != 0) continue;
        st.assignment.emplace(x, y);
        st.used.insert(y);
        if (triplesConsistent(st, fixed) && search(st, index + 1, fixed)) return true;
        st.assignment.erase(x);
        st.used.erase(y);
    }
    return false;
}

} // namespace

std::optional<Morphism> isoCheck(const Graph& g1, const Graph& g2, const FixedSet& fixed) {
    if (g1.size() != g2.size()) return std::nullopt;

    TermPartition p1 = attributes(g1);
    TermPartition p2 = attributes(g2);

    std::set<Term> fixed1, fixed2, free1, free2;
    for (const Term& t : p1.all) (fixed.contains(t) ? fixed1 : free1).insert(t);
    for (const Term& t : p2.all) (fixed.contains(t) ? fixed2 : free2).insert(t);
    if (fixed1 != fixed2) return std::nullopt;
    if (free1.size() != free2.size()) return std::nullopt;

    SearchState st;
    st.g1 = &g1;
    st.g2 = &g2;
    st.sourceAttrs.assign(free1.begin(), free1.end());

    std::map<Term, std::string> sig2;
    for (const Term& y : free2) sig2.emplace(y, signature(y, g2, fixed));
    for (const Term& x : st.sourceAttrs) {
        std::string sx = signature(x, g1, fixed);
        std::vector<Term> cands;
        for (const Term& y : free2) {
            if (sig2.at(y) == sx) cands.push_back(y);
        }
        if (cands.empty()) return std::nullopt;
        st.candidates.emplace(x, std::move(cands));
    }

    if (!search(st, 0, fixed)) return std::nullopt;

    // A bijection on attributes maps triples injectively, so an image inside
    // g2 of equal size is exactly g2; the partial checks established the
    // inclusion along the way.
    std::map<Term, Term> map = st.assignment;
    for (const Term& t : fixed1) map.emplace(t, t);
    return Morphism{g1, g2, std::move(map), fixed};
}

} // namespace poim
