#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sawlab/height.hpp"
#include "sawlab/linalg.hpp"
#include "sawlab/quotient.hpp"

namespace sawlab {

/// A directed closed walk on the quotient, as directed edge ids.
using DirectedCycle = std::vector<std::size_t>;

/// Projections of the unit squares at every orbit representative (one per
/// pair of axes).  Empty for Z^1.
std::vector<DirectedCycle> unit_square_generators(const QuotientGraph& q);

/// Cycle basis of the doubled quotient.  Pairs (e, -e) are implicit: the
/// increments are stored antisymmetrically, so only the basis of the
/// undirected cycle space (dimension delta_prime) is kept explicitly.
struct DirectedCycleBasis {
  std::vector<std::size_t> canonical;  // undirected slot -> directed id (e < -e)
  std::vector<std::size_t> slot;       // directed id -> undirected slot
  std::vector<int> sign;               // directed id -> +1 / -1 relative to the slot

  std::vector<DirectedCycle> cycles;  // independent generators, completions, C last
  std::size_t rho_prime = 0;          // independent generator projections
  std::size_t delta_prime = 0;        // |E| - |V| + 1
  std::size_t generator_edges = 0;    // undirected edges touched by generators
  bool generators_empty = false;

  std::vector<std::int64_t> distinguished_shift;  // lattice vector lifted by C
  std::vector<std::size_t> distinguished_ports;   // port sequence of C from orbit 0

  [[nodiscard]] std::size_t edge_count() const { return canonical.size(); }
  [[nodiscard]] std::size_t rho() const { return generator_edges + rho_prime; }
  [[nodiscard]] std::size_t delta() const { return edge_count() + delta_prime; }
  [[nodiscard]] const DirectedCycle& distinguished() const { return cycles.back(); }
  /// All delta cycles: pairs on generator edges, generators, remaining pairs,
  /// completions, C.
  [[nodiscard]] std::vector<DirectedCycle> full_list(const QuotientGraph& q) const;
  /// Signed incidence vector over the undirected slots.
  [[nodiscard]] RatVector vector_of(const DirectedCycle& walk) const;
};

/// Throws InvariantError when the generators span the whole cycle space.
DirectedCycleBasis cycle_basis(const QuotientGraph& q, const std::vector<DirectedCycle>& generators);

/// Antisymmetric rational increments on the quotient's edges.
struct EdgeIncrement {
  RatVector value;  // per undirected slot, in the canonical orientation
  std::vector<std::size_t> slot;
  std::vector<int> sign;

  bool used_fallback = false;
  std::string fallback_reason;
  bool generators_empty = false;

  [[nodiscard]] Rational operator()(std::size_t directed) const {
    return sign[directed] > 0 ? value[slot[directed]] : Rational(-value[slot[directed]]);
  }
  [[nodiscard]] Rational sum(const std::vector<std::size_t>& walk) const;
  [[nodiscard]] Rational max_abs() const;
  /// Least common multiple of the denominators.
  [[nodiscard]] mpz_class scale() const;
};

/// Staged construction; falls back to solve_increments_fallback (and says so)
/// when a stage cannot keep its hypothesis.
EdgeIncrement solve_increments(const DirectedCycleBasis& basis, const QuotientGraph& q);

/// Direct rational solve of the cycle equations plus greedy sign repair over
/// the nullspace.
EdgeIncrement solve_increments_fallback(const DirectedCycleBasis& basis, const QuotientGraph& q);

struct IncrementCheck {
  bool equations = false;   // zero on every basis cycle but C, one on C
  bool signs = false;       // every orbit has a positive and a negative out-edge
  std::string detail;
  [[nodiscard]] bool ok() const { return equations && signs; }
};

IncrementCheck check_increments(const EdgeIncrement& inc, const DirectedCycleBasis& basis,
                                const QuotientGraph& q);

/// Integer height m * h' on the lattice, H = the quotient's translation group.
class LiftedHeight final : public HeightFunction {
 public:
  LiftedHeight(const EdgeIncrement& inc, const QuotientGraph& q);

  [[nodiscard]] std::string name() const override;
  [[nodiscard]] std::int64_t evaluate(const VertexLabel& v) const override;
  [[nodiscard]] int declared_d() const override { return declared_d_; }
  [[nodiscard]] int declared_r() const override { return declared_r_; }
  [[nodiscard]] std::vector<VertexLabel> orbit_representatives() const override { return q_.representatives; }
  [[nodiscard]] std::size_t orbit_of(const VertexLabel& v) const override { return q_.project(v); }
  [[nodiscard]] VertexLabel transport(const VertexLabel& v, const VertexLabel& x) const override;

  [[nodiscard]] std::int64_t scale() const { return scale_; }

 private:
  std::int64_t staircase(const std::vector<std::int64_t>& z) const;

  EdgeIncrement inc_;
  QuotientGraph q_;
  std::int64_t scale_ = 1;
  std::vector<std::int64_t> rep_height_;
  std::vector<std::int64_t> basis_height_;
  int declared_d_ = 1;
  int declared_r_ = 0;
};

/// Builds the lifted height and checks path independence by breadth-first
/// propagation on a ball around the origin covering every representative.
/// Throws InvariantError on a closed walk with nonzero sum.
std::shared_ptr<const LiftedHeight> lift_height(const EdgeIncrement& inc, const GraphFamily& family,
                                                const QuotientGraph& q);

struct CocycleResult {
  bool ok = true;
  std::vector<VertexLabel> witness;  // offending closed walk
  Rational sum;
};

/// Random closed walks (out up to 10 steps, back along a shortest path).
CocycleResult verify_cocycle(const EdgeIncrement& inc, const GraphFamily& family,
                             const QuotientGraph& q, std::size_t trials, std::uint64_t seed = 1);

nlohmann::json to_json(const EdgeIncrement& inc, const QuotientGraph& q);

}  // namespace sawlab
