#pragma once

#include "poim/graph.hpp"
#include "poim/morphism.hpp"
#include "poim/term.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>

namespace poim {

/// Allocator of fresh blanks and variables. Names come from monotone
/// counters (`_:g0, _:g1, …` and `?v0, ?v1, …` by default), skipping any
/// name in the reserved set handed to each call. One generator is confined
/// to one evaluation context; it is the only stateful object in the library.
class FreshNames {
public:
    FreshNames() = default;
    explicit FreshNames(std::string blankPrefix, std::string variablePrefix = "v")
        : blankPrefix_(std::move(blankPrefix)), variablePrefix_(std::move(variablePrefix)) {}

    Term freshBlank(const std::set<Term>& reserved) {
        for (;;) {
            Term candidate = Term::blank(blankPrefix_ + std::to_string(nextBlank_++));
            if (reserved.count(candidate) == 0) return candidate;
        }
    }

    Term freshVariable(const std::set<Term>& reserved) {
        for (;;) {
            Term candidate = Term::variable(variablePrefix_ + std::to_string(nextVariable_++));
            if (reserved.count(candidate) == 0) return candidate;
        }
    }

private:
    std::string blankPrefix_ = "g";
    std::string variablePrefix_ = "v";
    std::uint64_t nextBlank_ = 0;
    std::uint64_t nextVariable_ = 0;
};

/// Builds a renaming that sends each listed blank or variable to a fresh name
/// outside the reserved set (which is also kept clear of the names chosen so
/// far). Attributes are processed in canonical order, so the result is
/// deterministic given the generator state.
/// Throws PreconditionError when asked to rename an identifier.
std::map<Term, Term> freshRenameMap(const std::set<Term>& toRename, std::set<Term> reserved,
                                    FreshNames& gen);

/// Replaces every blank of g by a fresh blank outside both the reserved set
/// and g itself. Returns the renamed graph together with the witnessing
/// isomorphism, which fixes identifiers and variables.
std::pair<Graph, Morphism> freshBlankRename(const Graph& g, const std::set<Term>& reserved,
                                            FreshNames& gen);

} // namespace poim
