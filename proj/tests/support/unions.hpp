#pragma once

#include <vector>

#include "polycone/polyhedron.hpp"

namespace polycone::ptest {

// inner subset of (outer_1 u ... u outer_k), decided exactly: a point of
// inner outside every outer_j must violate one relation of each outer_j, so
// every choice of violated relations is tested for feasibility (depth-first,
// pruning infeasible prefixes).
bool union_covers(const std::vector<HCone>& outer, const HCone& inner);

// Both unions contain each other.
bool union_equal(const std::vector<HCone>& a, const std::vector<HCone>& b);

}  // namespace polycone::ptest
