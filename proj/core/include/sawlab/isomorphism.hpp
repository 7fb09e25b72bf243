#pragma once

#include <cstdint>

#include "sawlab/graph.hpp"

namespace sawlab {

/// Rooted isomorphism of two balls (roots must correspond).  Colour
/// refinement seeded with (distance, degree) prunes a backtracking search in
/// breadth-first order.  Throws ResourceError when the search exceeds
/// `budget` nodes.
bool ball_isomorphic(const Ball& a, const Ball& b, std::uint64_t budget = default_limits().search_budget);

}  // namespace sawlab
