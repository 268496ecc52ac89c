#pragma once

#include <vector>

#include "cliquetrack/reveal.hpp"

namespace cliquetrack {

// Exhaustive reference search: scans all 2^|V| vertex subsets and applies
// the qualification rules directly. Same contract as find_cliques /
// find_quasi, implemented without sharing any of their search code, so it
// can arbitrate them in tests. Throws GraphTooLarge above 20 vertices.
std::vector<RevealedStructure> oracle(const ColoredGraph& graph,
                                      const StructureSpec& spec);

} // namespace cliquetrack
