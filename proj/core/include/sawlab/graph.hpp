#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sawlab/label.hpp"
#include "sawlab/limits.hpp"

namespace sawlab {

/// Lazy oracle for an infinite, connected, locally finite, simple graph.
///
/// Implementations are immutable and pure functions of the label, so a single
/// instance may be shared freely between threads.  Neighbour order is fixed per
/// family, which keeps every enumeration reproducible.
class GraphFamily {
 public:
  virtual ~GraphFamily() = default;

  [[nodiscard]] virtual std::string name() const = 0;
  [[nodiscard]] virtual VertexLabel origin() const = 0;
  [[nodiscard]] virtual std::size_t max_degree() const = 0;

  /// One representative per declared Aut(G)-orbit; the first is the origin.
  [[nodiscard]] virtual std::vector<VertexLabel> declared_orbits() const { return {origin()}; }
  [[nodiscard]] virtual std::size_t orbit_of(const VertexLabel& /*v*/) const { return 0; }

  /// Throws UsageError unless `v` is a canonical label of this family.
  virtual void validate(const VertexLabel& v) const = 0;

  /// Unchecked hot path used by the enumerators: replaces `out` with the
  /// neighbours of `v` in the family's fixed order.
  virtual void neighbors_into(const VertexLabel& v, std::vector<VertexLabel>& out) const = 0;

  /// Checked accessor.
  [[nodiscard]] std::vector<VertexLabel> neighbors(const VertexLabel& v) const;

  [[nodiscard]] bool adjacent(const VertexLabel& u, const VertexLabel& v) const;
  [[nodiscard]] std::size_t orbit_count() const { return declared_orbits().size(); }
};

using FamilyPtr = std::shared_ptr<const GraphFamily>;

/// Rooted ball S_k(v): the subgraph induced by vertices within distance k.
struct Ball {
  VertexLabel root;
  int radius = 0;
  std::vector<VertexLabel> vertices;                       // BFS order, root first
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // induced, i < j
  std::unordered_map<VertexLabel, int, VertexLabelHash> dist;

  [[nodiscard]] std::size_t index_of(const VertexLabel& v) const;
  [[nodiscard]] bool contains(const VertexLabel& v) const { return dist.contains(v); }
  [[nodiscard]] std::vector<std::vector<std::size_t>> adjacency() const;
};

/// Breadth-first closure of `center` to `radius`.  Throws ResourceError when the
/// ball would exceed `vertex_budget` vertices.
Ball ball(const GraphFamily& family, const VertexLabel& center, int radius,
          std::uint64_t vertex_budget = default_limits().vertex_budget);

/// Builds a Ball directly from an explicit vertex/edge list (used for
/// hand-constructed reference balls).  Distances are recomputed by BFS.
Ball make_ball(std::vector<VertexLabel> vertices,
               const std::vector<std::pair<VertexLabel, VertexLabel>>& edges,
               const VertexLabel& root);

/// The family restricted to the vertex set of a ball.  Walks confined to the
/// restriction see exactly the ball's induced subgraph.
class RestrictedFamily final : public GraphFamily {
 public:
  RestrictedFamily(FamilyPtr base, Ball region);

  [[nodiscard]] std::string name() const override;
  [[nodiscard]] VertexLabel origin() const override { return region_.root; }
  [[nodiscard]] std::size_t max_degree() const override { return base_->max_degree(); }
  void validate(const VertexLabel& v) const override;
  void neighbors_into(const VertexLabel& v, std::vector<VertexLabel>& out) const override;

 private:
  FamilyPtr base_;
  Ball region_;
};

}  // namespace sawlab
