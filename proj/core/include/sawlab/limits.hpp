#pragma once

#include <cstdint>

namespace sawlab {

/// Resource ceilings shared by the enumerators and graph searches.
///
/// Defaults can be overridden through the environment:
///   SAWLAB_VERTEX_BUDGET  maximum vertices in an extracted ball or quotient
///   SAWLAB_NODE_BUDGET    maximum search-tree nodes for one enumeration
struct Limits {
  std::uint64_t vertex_budget = 2'000'000;
  std::uint64_t node_budget = 4'000'000'000ULL;
  std::uint64_t search_budget = 50'000'000;  // isomorphism / path searches

  static Limits from_environment();
};

/// Process-wide defaults (read once from the environment).
const Limits& default_limits();

}  // namespace sawlab
