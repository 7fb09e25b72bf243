#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sawlab/graph.hpp"

namespace sawlab {

/// Hypercubic lattice Z^n, 1 <= n <= 4.  Neighbour order: +e1, -e1, +e2, -e2, ...
class LatticeFamily final : public GraphFamily {
 public:
  explicit LatticeFamily(int dim);

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] std::string name() const override;
  [[nodiscard]] VertexLabel origin() const override;
  [[nodiscard]] std::size_t max_degree() const override { return 2 * static_cast<std::size_t>(dim_); }
  void validate(const VertexLabel& v) const override;
  void neighbors_into(const VertexLabel& v, std::vector<VertexLabel>& out) const override;

 private:
  int dim_;
};

/// d-regular tree suspended from a fixed ray (horocyclic coordinates).
///
/// Label layout: [k, w_1, ..., w_m].  The vertex is reached from the ray vertex
/// at level k by descending through child letters w_1..w_m (each in
/// [0, d-2]).  Child 0 of a ray vertex is the next ray vertex, so a canonical
/// label never has w_1 == 0.  The horocyclic height is k + m.
/// Neighbour order: parent, then children by letter.
class TreeFamily final : public GraphFamily {
 public:
  explicit TreeFamily(int degree);

  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] std::string name() const override;
  [[nodiscard]] VertexLabel origin() const override { return VertexLabel{0}; }
  [[nodiscard]] std::size_t max_degree() const override { return static_cast<std::size_t>(degree_); }
  void validate(const VertexLabel& v) const override;
  void neighbors_into(const VertexLabel& v, std::vector<VertexLabel>& out) const override;

  static std::int64_t level(const VertexLabel& v) {
    return v[0] + static_cast<std::int64_t>(v.size()) - 1;
  }
  /// Descend from the ray vertex at level `k` along `word` and canonicalise.
  [[nodiscard]] static VertexLabel descend(std::int64_t k, std::span<const std::int64_t> word);

 private:
  int degree_;
};

/// Hexagonal lattice as the brick wall on Z^2: E and W edges always, a N edge
/// when x+y is even (S edge otherwise).  Neighbour order: E, W, N/S.
class HexagonalFamily final : public GraphFamily {
 public:
  [[nodiscard]] std::string name() const override { return "hex"; }
  [[nodiscard]] VertexLabel origin() const override { return VertexLabel{0, 0}; }
  [[nodiscard]] std::size_t max_degree() const override { return 3; }
  void validate(const VertexLabel& v) const override;
  void neighbors_into(const VertexLabel& v, std::vector<VertexLabel>& out) const override;
};

/// Square/octagon (4.8.8) lattice.  Each cell (i, j) carries one square drawn
/// as a diamond with corners W=0, S=1, E=2, N=3.  Square edges join cyclically
/// adjacent corners; E(i,j)-W(i+1,j) and N(i,j)-S(i,j+1) join the squares.
/// Label layout: [i, j, corner].
class SquareOctagonFamily final : public GraphFamily {
 public:
  enum Corner : std::int64_t { W = 0, S = 1, E = 2, N = 3 };

  [[nodiscard]] std::string name() const override { return "sqoct"; }
  [[nodiscard]] VertexLabel origin() const override { return VertexLabel{0, 0, W}; }
  [[nodiscard]] std::size_t max_degree() const override { return 3; }
  void validate(const VertexLabel& v) const override;
  void neighbors_into(const VertexLabel& v, std::vector<VertexLabel>& out) const override;
};

/// Cayley graph of the discrete Heisenberg group, label (x, y, z) for the
/// upper unitriangular matrix [[1,x,z],[0,1,y],[0,0,1]].  Edges are right
/// multiplication by s1, s1', s2, s2', s3, s3' (in that order); for example
/// (x,y,z)*s2 = (x, y+1, z+x).
class HeisenbergFamily final : public GraphFamily {
 public:
  [[nodiscard]] std::string name() const override { return "heisenberg"; }
  [[nodiscard]] VertexLabel origin() const override { return VertexLabel{0, 0, 0}; }
  [[nodiscard]] std::size_t max_degree() const override { return 6; }
  void validate(const VertexLabel& v) const override;
  void neighbors_into(const VertexLabel& v, std::vector<VertexLabel>& out) const override;

  static VertexLabel multiply(const VertexLabel& a, const VertexLabel& b);
  static VertexLabel inverse(const VertexLabel& a);
};

FamilyPtr make_lattice(int dim);
FamilyPtr make_tree(int degree);
FamilyPtr make_hexagonal();
FamilyPtr make_square_octagon();
FamilyPtr make_heisenberg();

}  // namespace sawlab
