#pragma once

#include "poim/fixed_set.hpp"
#include "poim/graph.hpp"
#include "poim/term.hpp"

#include <map>

namespace poim {

/// A graph morphism: a finite attribute map, total on the attributes of the
/// source, whose triple-wise application lands in the target, and which is
/// the identity on the fixed set.
struct Morphism {
    Graph source;
    Graph target;
    std::map<Term, Term> map;
    FixedSet fixed = FixedSet::identifiers();

    /// The identity morphism on g.
    static Morphism identity(const Graph& g, FixedSet fixed = FixedSet::everything());

    /// The inclusion of a subgraph into a supergraph.
    /// Throws PreconditionError when source is not a subset of target.
    static Morphism inclusion(const Graph& source, const Graph& target,
                              FixedSet fixed = FixedSet::everything());

    /// Validating constructor; throws PreconditionError when the map is not a
    /// morphism from source to target fixing the given set. Entries outside
    /// the attributes of the source are dropped.
    static Morphism checked(Graph source, Graph target, std::map<Term, Term> map, FixedSet fixed);

    /// Image of one attribute; throws TotalityError when the map has no entry.
    Term apply(const Term& t) const;

    /// True when the map is the identity on its source's attributes.
    bool isInclusion() const;

    friend bool operator==(const Morphism&, const Morphism&) = default;
};

/// True iff map is total on the attributes of src, sends every triple of src
/// into dst, and fixes every attribute of src that lies in the fixed set.
bool checkMorphism(const std::map<Term, Term>& map, const Graph& src, const Graph& dst,
                   const FixedSet& fixed);

/// The image m(source) as a set; duplicates created by a non-injective map
/// are merged, so the image may have fewer triples than the source.
/// Throws TotalityError when the map misses an attribute of the source.
Graph applyMorphism(const Morphism& m);

/// Applies a partial attribute map, treating missing entries as identity.
Graph applyRenaming(const std::map<Term, Term>& renaming, const Graph& g);

/// Triple-wise application with identity for missing entries.
Triple applyRenaming(const std::map<Term, Term>& renaming, const Triple& t);

} // namespace poim
