#pragma once

#include "poim/fixed_set.hpp"
#include "poim/fresh.hpp"
#include "poim/graph.hpp"
#include "poim/morphism.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace poim {

/// A transformation rule L -> K <- R with K = L ∪ R and inclusion legs.
struct Cospan {
    Graph left;
    Graph middle;
    Graph right;
    Morphism leftInc;
    Morphism rightInc;

    /// Builds the rule cospan of (L, R): K = L ∪ R with the inclusions.
    /// No normalization is performed here; see normalizeConstruct.
    static Cospan rule(Graph lhs, Graph rhs);

    friend bool operator==(const Cospan&, const Cospan&) = default;
};

/// The full record of one pushout-then-image transformation step.
struct PoimTrace {
    Morphism inputMatch;       // m : L -> G
    Graph pushoutGraph;        // D
    Morphism pushoutMatch;     // n : K -> D
    Morphism pushoutInclusion; // g : G -> D
    Graph resultGraph;         // H
    Morphism resultMatch;      // p : R -> H
    Morphism resultInclusion;  // h : H -> D
};

struct CoproductResult {
    Graph object;
    std::vector<Morphism> injections;
};

/// Coproduct of the parts in the category fixing the given set: non-fixed
/// attributes occurring in more than one part are renamed fresh (in every
/// part that shares them), then the union is returned together with the
/// injection morphisms. A part whose non-fixed attributes are private to it
/// is kept verbatim, so a unary coproduct is the identity.
CoproductResult coproduct(const std::vector<Graph>& parts, const FixedSet& fixed,
                          FreshNames& gen);

struct Replication {
    Cospan rule;
    /// Per-copy attribute renamings over the middle graph of the input rule.
    std::vector<std::map<Term, Term>> copyMaps;
};

/// k disjoint copies of a rule, renamed simultaneously in L, K and R so the
/// copies share no blank or variable; copy i carries the suffix "·i", with a
/// fresh-name fallback should a suffixed name collide.
Replication replicate(const Cospan& rule, std::size_t k, FreshNames& gen);

/// The cospan kL -> kK <- kR of the k-fold replicated rule.
Cospan replicateRule(const Cospan& rule, std::size_t k, FreshNames& gen);

struct PushoutResult {
    Graph object;        // D
    Morphism fromMiddle; // n : K -> D
    Morphism fromTarget; // g : G -> D (inclusion)
};

/// Pushout of an inclusion L ⊆ K along a match m : L -> G, in the category
/// fixing identifiers. Non-fixed attributes of K that collide with attributes
/// of G are first renamed fresh, which establishes the side condition that
/// K and G only share fixed attributes; n then maps L through m and the rest
/// of K through that renaming, and D = G ∪ n³(K).
/// Throws PreconditionError when l is not an inclusion, m is not a valid
/// match of L, or the match target contains variables.
PushoutResult pushout(const Morphism& leftInc, const Morphism& match, FreshNames& gen);

struct ImageFactorizationResult {
    Graph image;         // H
    Morphism restriction; // p : R -> H
    Morphism inclusion;   // h : H -> D
};

/// Image factorization along an inclusion R ⊆ K of a morphism n : K -> D:
/// H = n³(R), p the restriction of n, h the inclusion of H in D.
ImageFactorizationResult imageFactorization(const Morphism& rightInc, const Morphism& middleMap);

/// The POIM transformation: pushout along the left leg, then image
/// factorization along the right leg. Blanks of K outside L are always
/// renamed fresh first (they give rise to new blanks in the result), and
/// blanks of L colliding with the match target are renamed as well; the
/// returned trace is expressed over the original rule graphs.
PoimTrace poim(const Cospan& rule, const Morphism& match, FreshNames& gen);

struct PoimShortcutResult {
    Graph result;   // H
    Morphism match; // p : R -> H
};

/// Direct one-pass computation of the POIM result: variables of R are sent
/// through the match and blanks of R are renamed fresh, using the identical
/// renaming poim would perform internally. With a shared generator the two
/// agree triple for triple on normalized rules.
PoimShortcutResult poimShortcut(const Cospan& rule, const Morphism& match, FreshNames& gen);

} // namespace poim
