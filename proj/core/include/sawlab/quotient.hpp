#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sawlab/graph.hpp"
#include "sawlab/height.hpp"
#include "sawlab/linalg.hpp"

namespace sawlab {

/// Translation subgroup of a lattice family Z^n.
struct SubgroupDescriptor {
  std::string family;  // e.g. "z:2"
  std::vector<std::vector<std::int64_t>> shifts;
  bool finite_index = true;
};

/// One directed edge of G/H: the edge leaving orbit `from` through neighbour
/// slot `port` of the orbit representative.  `reverse` is the id of -e.
struct QuotientEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t port = 0;
  std::size_t reverse = 0;
};

/// Directed quotient multigraph of a lattice by a translation subgroup.
/// Directed edge ids are from * degree + port.
class QuotientGraph {
 public:
  QuotientGraph() = default;

  [[nodiscard]] std::size_t orbit_count() const { return representatives.size(); }
  [[nodiscard]] std::size_t degree() const { return degree_; }
  [[nodiscard]] std::size_t project(const VertexLabel& v) const;
  /// Canonical representative of v's orbit together with v - rep as lattice
  /// coefficients.
  [[nodiscard]] VertexLabel reduce(const VertexLabel& v, std::vector<std::int64_t>* coeff = nullptr) const;
  [[nodiscard]] std::size_t edge_id(std::size_t from, std::size_t port) const { return from * degree_ + port; }
  /// Follows a port sequence from `start`, returning the directed edge ids.
  [[nodiscard]] std::vector<std::size_t> follow(std::size_t start, const std::vector<std::size_t>& ports) const;
  /// Undirected edges as the directed ids e with e < reverse(e).
  [[nodiscard]] std::vector<std::size_t> undirected_edges() const;
  [[nodiscard]] const FamilyPtr& family() const { return family_; }
  [[nodiscard]] const IntLattice& lattice() const { return lattice_; }

  SubgroupDescriptor subgroup;
  std::vector<VertexLabel> representatives;  // orbit 0 holds the origin
  std::vector<QuotientEdge> edges;
  std::vector<std::vector<std::size_t>> multiplicity;

 private:
  friend QuotientGraph build_quotient(FamilyPtr, const SubgroupDescriptor&, const Limits&);
  FamilyPtr family_;
  IntLattice lattice_;
  std::size_t degree_ = 0;
  std::unordered_map<VertexLabel, std::size_t, VertexLabelHash> orbit_index_;
};

/// Orbits by breadth-first closure from the origin; multiplicities counted at
/// each representative and cross-checked at a translated copy.
QuotientGraph build_quotient(FamilyPtr family, const SubgroupDescriptor& sub,
                             const Limits& limits = default_limits());

bool check_symmetric(const QuotientGraph& q);
bool check_symmetric(const std::vector<std::vector<std::size_t>>& multiplicity);

nlohmann::json to_json(const QuotientGraph& q);
QuotientGraph quotient_from_json(const nlohmann::json& j, const Limits& limits = default_limits());

/// Z^n / <v> as a simple graph: labels reduced so that the first nonzero
/// coordinate j of v satisfies 0 <= z_j < |v_j|; loops and repeated
/// neighbours are dropped.
class CylinderFamily final : public GraphFamily {
 public:
  CylinderFamily(int dim, std::vector<std::int64_t> shift);

  [[nodiscard]] std::string name() const override;
  [[nodiscard]] VertexLabel origin() const override;
  [[nodiscard]] std::size_t max_degree() const override { return 2 * static_cast<std::size_t>(dim_); }
  void validate(const VertexLabel& v) const override;
  void neighbors_into(const VertexLabel& v, std::vector<VertexLabel>& out) const override;

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] const std::vector<std::int64_t>& shift() const { return shift_; }
  [[nodiscard]] VertexLabel reduce(VertexLabel z) const;

 private:
  int dim_;
  std::vector<std::int64_t> shift_;  // normalised: first nonzero entry positive
  std::size_t axis_ = 0;
};

/// h(z) = w . z with w a primitive integer vector orthogonal to the shift.
class CylinderHeight final : public HeightFunction {
 public:
  explicit CylinderHeight(std::shared_ptr<const CylinderFamily> family);

  [[nodiscard]] std::string name() const override;
  [[nodiscard]] std::int64_t evaluate(const VertexLabel& v) const override;
  [[nodiscard]] int declared_d() const override;
  [[nodiscard]] int declared_r() const override { return 0; }
  [[nodiscard]] std::vector<VertexLabel> orbit_representatives() const override;
  [[nodiscard]] std::size_t orbit_of(const VertexLabel&) const override { return 0; }
  [[nodiscard]] VertexLabel transport(const VertexLabel& v, const VertexLabel& x) const override;

  [[nodiscard]] const std::vector<std::int64_t>& weights() const { return weights_; }

 private:
  std::shared_ptr<const CylinderFamily> family_;
  std::vector<std::int64_t> weights_;
};

std::shared_ptr<const CylinderFamily> cylinder(int dim, std::vector<std::int64_t> shift);

}  // namespace sawlab
