#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sawlab/graph.hpp"
#include "sawlab/height.hpp"
#include "sawlab/limits.hpp"

namespace sawlab {

using Walk = std::vector<VertexLabel>;

enum class WalkKind { saw, halfspace, bridge };
std::string to_string(WalkKind k);
WalkKind walk_kind_from_string(const std::string& s);

struct EngineOptions {
  unsigned jobs = 1;
  int split_depth = 3;
  Limits limits = default_limits();
};

/// Exact counts from one start vertex.  Entries run from n = 0 to
/// complete_through; `exhausted` is set when a budget forced a shorter run
/// than requested.
struct WalkCounts {
  VertexLabel start;
  int n_max = 0;
  int complete_through = -1;
  bool exhausted = false;
  std::uint64_t nodes = 0;
  std::vector<mpz_class> saw;
  std::vector<mpz_class> halfspace;
  std::vector<mpz_class> bridge;
  std::vector<std::vector<mpz_class>> bridge_by_span;  // [n][span]
};

/// Depth-first backtracking over the radius-n ball.  With `hf == nullptr`
/// only SAWs are counted; with `prune` set, branches that leave the open
/// half-space above the start are cut (SAW counts are then not produced).
WalkCounts count_walks(const GraphFamily& family, const HeightFunction* hf, const VertexLabel& start,
                       int n_max, bool prune, const EngineOptions& options = {});

std::vector<mpz_class> count_saws(const GraphFamily& family, const VertexLabel& start, int n_max,
                                  const EngineOptions& options = {});
std::vector<mpz_class> count_halfspace(const GraphFamily& family, const HeightFunction& hf,
                                       const VertexLabel& start, int n_max,
                                       const EngineOptions& options = {});
WalkCounts count_bridges(const GraphFamily& family, const HeightFunction& hf, const VertexLabel& start,
                         int n_max, const EngineOptions& options = {});

/// sigma over the declared Aut-orbit representatives (max), c at the origin,
/// b over the H-orbit representatives (min).
struct CountTable {
  std::string family;
  std::string height;
  int n_max = 0;
  int complete_through = -1;
  bool exhausted = false;
  std::size_t declared_orbits = 1;
  int declared_d = 1;

  std::vector<VertexLabel> sigma_reps;
  std::vector<std::vector<mpz_class>> sigma_by_rep;
  std::vector<mpz_class> sigma;
  std::vector<mpz_class> c;
  std::vector<VertexLabel> b_reps;
  std::vector<std::vector<mpz_class>> b_by_rep;
  std::vector<mpz_class> b;
  std::vector<std::vector<mpz_class>> b_by_span;  // of the minimising representative

  [[nodiscard]] int size() const { return complete_through + 1; }
};

CountTable build_table(const GraphFamily& family, const HeightFunction& hf, int n_max,
                       const EngineOptions& options = {});

// ------------------------------------------------------------ walks

bool is_saw(const GraphFamily& family, const Walk& w);
bool is_halfspace(const HeightFunction& hf, const Walk& w);
bool is_bridge(const HeightFunction& hf, const Walk& w);
bool is_reversed_bridge(const HeightFunction& hf, const Walk& w);

/// Naive generator used as an independent oracle: every n-step SAW from
/// `start` in neighbour order, filtered by the kind predicate.
void for_each_walk(const GraphFamily& family, const HeightFunction* hf, const VertexLabel& start, int n,
                   WalkKind kind, const std::function<void(const Walk&)>& visit);
std::vector<Walk> enumerate_walks(const GraphFamily& family, const HeightFunction* hf,
                                  const VertexLabel& start, int n, WalkKind kind,
                                  const Limits& limits = default_limits());

std::int64_t span(const HeightFunction& hf, const Walk& w);

/// Alternating bridge decomposition of a half-space walk.
struct BridgeDecomposition {
  std::vector<std::int64_t> spans;  // S_1 > S_2 > ... > S_k > 0
  std::vector<std::size_t> breaks;  // n_1 < ... < n_k = n
};

BridgeDecomposition decompose(const HeightFunction& hf, const Walk& w);

}  // namespace sawlab
