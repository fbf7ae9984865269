#include "poim/morphism.hpp"

#include "poim/errors.hpp"

namespace poim {

namespace {

std::map<Term, Term> identityMapOn(const std::set<Term>& attrs) {
    std::map<Term, Term> map;
    for (const Term& t : attrs) map.emplace(t, t);
    return map;
}

} // namespace

Morphism Morphism::identity(const Graph& g, FixedSet fixed) {
    return Morphism{g, g, identityMapOn(attributeSet(g)), std::move(fixed)};
}

Morphism Morphism::inclusion(const Graph& source, const Graph& target, FixedSet fixed) {
    for (const Triple& t : source) {
        if (!target.contains(t))
            throw PreconditionError("inclusion source is not a subgraph of the target");
    }
    return Morphism{source, target, identityMapOn(attributeSet(source)), std::move(fixed)};
}

Morphism Morphism::checked(Graph source, Graph target, std::map<Term, Term> map, FixedSet fixed) {
    if (!checkMorphism(map, source, target, fixed))
        throw PreconditionError("attribute map is not a morphism between the given graphs");
    std::set<Term> attrs = attributeSet(source);
    for (auto it = map.begin(); it != map.end();) {
        if (attrs.count(it->first) == 0)
            it = map.erase(it);
        else
            ++it;
    }
    return Morphism{std::move(source), std::move(target), std::move(map), std::move(fixed)};
}

Term Morphism::apply(const Term& t) const {
    auto it = map.find(t);
    if (it == map.end())
        throw TotalityError("attribute map has no entry for an attribute of its source");
    return it->second;
}

bool Morphism::isInclusion() const {
    for (const Term& t : attributeSet(source)) {
        auto it = map.find(t);
        if (it == map.end() || it->second != t) return false;
    }
    return true;
}

bool checkMorphism(const std::map<Term, Term>& map, const Graph& src, const Graph& dst,
                   const FixedSet& fixed) {
    for (const Term& attr : attributeSet(src)) {
        auto it = map.find(attr);
        if (it == map.end()) return false;
        if (fixed.contains(attr) && it->second != attr) return false;
    }
    for (const Triple& t : src) {
        Triple image{map.at(t.subject), map.at(t.predicate), map.at(t.object)};
        if (!dst.contains(image)) return false;
    }
    return true;
}

Graph applyMorphism(const Morphism& m) {
    std::set<Triple> image;
    for (const Triple& t : m.source)
        image.insert(Triple{m.apply(t.subject), m.apply(t.predicate), m.apply(t.object)});
    return Graph(std::move(image));
}

Triple applyRenaming(const std::map<Term, Term>& renaming, const Triple& t) {
    auto get = [&renaming](const Term& x) {
        auto it = renaming.find(x);
        return it == renaming.end() ? x : it->second;
    };
    return Triple{get(t.subject), get(t.predicate), get(t.object)};
}

Graph applyRenaming(const std::map<Term, Term>& renaming, const Graph& g) {
    std::set<Triple> image;
    for (const Triple& t : g) image.insert(applyRenaming(renaming, t));
    return Graph(std::move(image));
}

} // namespace poim
