#pragma once

#include <string>
#include <vector>

#include "sawlab/graph.hpp"
#include "sawlab/height.hpp"

namespace sawlab {

/// Family names: z:n, tree:d, hex, sqoct, heisenberg, zcyl:n:v1,...,vn.
FamilyPtr parse_family(const std::string& spec);

/// The family's built-in height function.
HeightPtr default_height(const FamilyPtr& family);

/// "default", or "linear:w1,...,wn" on a lattice.
HeightPtr parse_height(const std::string& spec, const FamilyPtr& family);

/// Names of the built-in (family, default height) pairs used by sweeps.
std::vector<std::string> builtin_families();

}  // namespace sawlab
