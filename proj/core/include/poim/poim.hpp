#pragma once

// Umbrella header.

#include "poim/colimit.hpp"
#include "poim/errors.hpp"
#include "poim/fixed_set.hpp"
#include "poim/fresh.hpp"
#include "poim/graph.hpp"
#include "poim/iso.hpp"
#include "poim/match.hpp"
#include "poim/morphism.hpp"
#include "poim/parser.hpp"
#include "poim/query.hpp"
#include "poim/term.hpp"
#include "poim/writer.hpp"
