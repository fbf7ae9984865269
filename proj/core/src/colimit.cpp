#include "poim/colimit.hpp"

#include "poim/errors.hpp"

#include <algorithm>
#include <string>

namespace poim {

namespace {

void requireRule(const Cospan& rule) {
    if (rule.middle != rule.left.unionWith(rule.right))
        throw PreconditionError("cospan middle graph must be the union of left and right");
    if (!rule.leftInc.isInclusion() || !rule.rightInc.isInclusion())
        throw PreconditionError("cospan legs must be inclusions");
}

void requireMatch(const Cospan& rule, const Morphism& match) {
    if (match.source != rule.left)
        throw PreconditionError("match source must be the left-hand side of the rule");
    if (!match.target.isDataGraph())
        throw PreconditionError("match target must be a data graph");
    if (!checkMorphism(match.map, match.source, match.target, FixedSet::identifiers()))
        throw PreconditionError("match is not a morphism fixing identifiers");
}

// The renaming poim applies before its pushout: blanks of K outside L are
// always sent to fresh blanks (they become new blanks of the result), and
// blanks of L that collide with attributes of the match target are renamed
// to establish the pushout side condition. poimShortcut recomputes the same
// map, so a shared generator keeps the two in lockstep.
std::map<Term, Term> poimRenameMap(const Cospan& rule, const DataGraph& target, FreshNames& gen) {
    TermPartition middleParts = attributes(rule.middle);
    std::set<Term> leftAttrs = attributeSet(rule.left);
    std::set<Term> targetAttrs = attributeSet(target);

    std::set<Term> toRename;
    for (const Term& b : middleParts.blanks) {
        if (leftAttrs.count(b) == 0 || targetAttrs.count(b) != 0) toRename.insert(b);
    }

    std::set<Term> reserved = middleParts.all;
    reserved.insert(targetAttrs.begin(), targetAttrs.end());
    return freshRenameMap(toRename, std::move(reserved), gen);
}

Term renamedOrSame(const std::map<Term, Term>& renaming, const Term& x) {
    auto it = renaming.find(x);
    return it == renaming.end() ? x : it->second;
}

} // namespace

Cospan Cospan::rule(Graph lhs, Graph rhs) {
    Graph middle = lhs.unionWith(rhs);
    Morphism leftInc = Morphism::inclusion(lhs, middle);
    Morphism rightInc = Morphism::inclusion(rhs, middle);
    return Cospan{std::move(lhs), middle, std::move(rhs), std::move(leftInc), std::move(rightInc)};
}

CoproductResult coproduct(const std::vector<Graph>& parts, const FixedSet& fixed,
                          FreshNames& gen) {
    // Non-fixed attributes occurring in more than one part must be renamed
    // apart; everything else may be kept, and then pairwise intersections of
    // the renamed parts lie inside the fixed set.
    std::map<Term, std::size_t> occurrences;
    std::set<Term> reserved;
    for (const Graph& part : parts) {
        for (const Term& attr : attributeSet(part)) {
            reserved.insert(attr);
            if (!fixed.contains(attr)) ++occurrences[attr];
        }
    }

    CoproductResult result;
    for (const Graph& part : parts) {
        std::set<Term> shared;
        for (const Term& attr : attributeSet(part)) {
            if (!fixed.contains(attr) && occurrences.at(attr) > 1) shared.insert(attr);
        }
        std::map<Term, Term> renaming = freshRenameMap(shared, reserved, gen);
        for (const auto& [from, to] : renaming) reserved.insert(to);

        Graph image = applyRenaming(renaming, part);
        result.object = result.object.unionWith(image);

        std::map<Term, Term> injection;
        for (const Term& attr : attributeSet(part))
            injection.emplace(attr, renamedOrSame(renaming, attr));
        result.injections.push_back(Morphism{part, Graph{}, std::move(injection), fixed});
    }
    for (Morphism& injection : result.injections) injection.target = result.object;
    return result;
}

Replication replicate(const Cospan& rule, std::size_t k, FreshNames& gen) {
    requireRule(rule);

    TermPartition middleParts = attributes(rule.middle);
    std::set<Term> nonFixed;
    for (const Term& attr : middleParts.all)
        if (!attr.isIdentifier()) nonFixed.insert(attr);

    std::set<Term> used = middleParts.all;
    Replication replication;
    Graph kLeft, kMiddle, kRight;
    for (std::size_t i = 1; i <= k; ++i) {
        std::map<Term, Term> copyMap;
        for (const Term& attr : nonFixed) {
            std::string name = attr.lexical() + "·" + std::to_string(i);
            Term candidate = attr.isBlank() ? Term::blank(name) : Term::variable(name);
            if (used.count(candidate) != 0) {
                candidate = attr.isBlank() ? gen.freshBlank(used) : gen.freshVariable(used);
            }
            used.insert(candidate);
            copyMap.emplace(attr, candidate);
        }
        kLeft = kLeft.unionWith(applyRenaming(copyMap, rule.left));
        kMiddle = kMiddle.unionWith(applyRenaming(copyMap, rule.middle));
        kRight = kRight.unionWith(applyRenaming(copyMap, rule.right));
        replication.copyMaps.push_back(std::move(copyMap));
    }

    replication.rule = Cospan{kLeft, kMiddle, kRight, Morphism::inclusion(kLeft, kMiddle),
                              Morphism::inclusion(kRight, kMiddle)};
    return replication;
}

Cospan replicateRule(const Cospan& rule, std::size_t k, FreshNames& gen) {
    return replicate(rule, k, gen).rule;
}

PushoutResult pushout(const Morphism& leftInc, const Morphism& match, FreshNames& gen) {
    if (!leftInc.isInclusion())
        throw PreconditionError("pushout left leg must be an inclusion");
    if (match.source != leftInc.source)
        throw PreconditionError("pushout match must start at the source of the inclusion");
    if (!match.target.isDataGraph())
        throw PreconditionError("pushout match target must be a data graph");
    if (!checkMorphism(match.map, match.source, match.target, FixedSet::identifiers()))
        throw PreconditionError("pushout match is not a morphism fixing identifiers");

    const Graph& middle = leftInc.target;
    const Graph& target = match.target;

    // Establish |K| ∩ |G| ⊆ I by renaming the colliding non-fixed attributes
    // of K; attributes of L are sent through the match anyway, so only the
    // labels of K ∖ L can surface in D.
    TermPartition middleParts = attributes(middle);
    std::set<Term> targetAttrs = attributeSet(target);
    std::set<Term> colliding;
    for (const Term& attr : middleParts.all)
        if (!attr.isIdentifier() && targetAttrs.count(attr) != 0) colliding.insert(attr);

    std::set<Term> reserved = middleParts.all;
    reserved.insert(targetAttrs.begin(), targetAttrs.end());
    std::map<Term, Term> renaming = freshRenameMap(colliding, std::move(reserved), gen);

    std::set<Term> leftAttrs = attributeSet(leftInc.source);
    std::map<Term, Term> middleMap;
    for (const Term& attr : middleParts.all) {
        if (leftAttrs.count(attr) != 0)
            middleMap.emplace(attr, match.map.at(attr));
        else
            middleMap.emplace(attr, renamedOrSame(renaming, attr));
    }

    Graph object = target;
    for (const Triple& t : middle) object = object.inserted(applyRenaming(middleMap, t));

    Morphism fromMiddle{middle, object, std::move(middleMap), FixedSet::identifiers()};
    Morphism fromTarget = Morphism::inclusion(target, object);
    return PushoutResult{std::move(object), std::move(fromMiddle), std::move(fromTarget)};
}

ImageFactorizationResult imageFactorization(const Morphism& rightInc, const Morphism& middleMap) {
    if (!rightInc.isInclusion())
        throw PreconditionError("image factorization leg must be an inclusion");
    if (rightInc.target != middleMap.source)
        throw PreconditionError("image factorization leg must end at the source of the morphism");

    std::map<Term, Term> restricted;
    for (const Term& attr : attributeSet(rightInc.source))
        restricted.emplace(attr, middleMap.apply(attr));

    Graph image;
    for (const Triple& t : rightInc.source) image = image.inserted(applyRenaming(restricted, t));

    Morphism restriction{rightInc.source, image, std::move(restricted), middleMap.fixed};
    Morphism inclusion = Morphism::inclusion(image, middleMap.target);
    return ImageFactorizationResult{std::move(image), std::move(restriction), std::move(inclusion)};
}

PoimTrace poim(const Cospan& rule, const Morphism& match, FreshNames& gen) {
    requireRule(rule);
    requireMatch(rule, match);

    std::map<Term, Term> renaming = poimRenameMap(rule, match.target, gen);

    Graph leftPrimed = applyRenaming(renaming, rule.left);
    Graph middlePrimed = applyRenaming(renaming, rule.middle);

    std::map<Term, Term> matchPrimed;
    for (const auto& [attr, value] : match.map)
        matchPrimed.emplace(renamedOrSame(renaming, attr), value);

    PushoutResult po = pushout(Morphism::inclusion(leftPrimed, middlePrimed),
                               Morphism{leftPrimed, match.target, std::move(matchPrimed),
                                        FixedSet::identifiers()},
                               gen);

    // Express n over the original K; the primed graphs were only scaffolding.
    std::map<Term, Term> middleMap;
    for (const Term& attr : attributeSet(rule.middle))
        middleMap.emplace(attr, po.fromMiddle.map.at(renamedOrSame(renaming, attr)));
    Morphism fromMiddle{rule.middle, po.object, std::move(middleMap), FixedSet::identifiers()};

    ImageFactorizationResult im = imageFactorization(rule.rightInc, fromMiddle);

    return PoimTrace{match,
                     po.object,
                     std::move(fromMiddle),
                     std::move(po.fromTarget),
                     std::move(im.image),
                     std::move(im.restriction),
                     std::move(im.inclusion)};
}

PoimShortcutResult poimShortcut(const Cospan& rule, const Morphism& match, FreshNames& gen) {
    requireRule(rule);
    requireMatch(rule, match);

    std::map<Term, Term> renaming = poimRenameMap(rule, match.target, gen);

    std::map<Term, Term> substitution;
    for (const Term& attr : attributeSet(rule.right)) {
        if (attr.isVariable()) {
            auto it = match.map.find(attr);
            substitution.emplace(attr, it == match.map.end() ? attr : it->second);
        } else {
            substitution.emplace(attr, renamedOrSame(renaming, attr));
        }
    }

    Graph result;
    for (const Triple& t : rule.right) result = result.inserted(applyRenaming(substitution, t));
    Morphism resultMatch{rule.right, result, std::move(substitution), FixedSet::identifiers()};
    return PoimShortcutResult{std::move(result), std::move(resultMatch)};
}

} // namespace poim
