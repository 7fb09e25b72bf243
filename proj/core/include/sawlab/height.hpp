#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sawlab/graph.hpp"
#include "sawlab/label.hpp"
#include "sawlab/limits.hpp"

namespace sawlab {

/// Representative of the H-orbit of a vertex, with h(v) - h(rep).
struct ShiftImage {
  VertexLabel representative;
  std::int64_t offset = 0;
};

/// Graph height function (h, H).
///
/// `transport(v, x)` applies one fixed element alpha_v of H, the one carrying
/// v onto its orbit representative, to an arbitrary vertex x.  Difference
/// invariance then reads h(transport(v,x)) - h(transport(v,y)) == h(x) - h(y).
class HeightFunction {
 public:
  virtual ~HeightFunction() = default;

  [[nodiscard]] virtual std::string name() const = 0;
  [[nodiscard]] virtual std::int64_t evaluate(const VertexLabel& v) const = 0;
  std::int64_t operator()(const VertexLabel& v) const { return evaluate(v); }

  [[nodiscard]] virtual int declared_d() const = 0;
  [[nodiscard]] virtual int declared_r() const = 0;

  [[nodiscard]] virtual std::vector<VertexLabel> orbit_representatives() const = 0;
  [[nodiscard]] virtual std::size_t orbit_of(const VertexLabel& v) const = 0;
  [[nodiscard]] virtual VertexLabel transport(const VertexLabel& v, const VertexLabel& x) const = 0;

  [[nodiscard]] ShiftImage shift_to_rep(const VertexLabel& v) const;
  [[nodiscard]] std::size_t orbit_count() const { return orbit_representatives().size(); }
};

using HeightPtr = std::shared_ptr<const HeightFunction>;

// ------------------------------------------------------------ built-ins

/// h(z) = w . z on Z^n with H = all translations (r = 0).
class LinearHeight final : public HeightFunction {
 public:
  explicit LinearHeight(std::vector<std::int64_t> weights);

  [[nodiscard]] std::string name() const override;
  [[nodiscard]] std::int64_t evaluate(const VertexLabel& v) const override;
  [[nodiscard]] int declared_d() const override;
  [[nodiscard]] int declared_r() const override { return 0; }
  [[nodiscard]] std::vector<VertexLabel> orbit_representatives() const override;
  [[nodiscard]] std::size_t orbit_of(const VertexLabel&) const override { return 0; }
  [[nodiscard]] VertexLabel transport(const VertexLabel& v, const VertexLabel& x) const override;

  [[nodiscard]] const std::vector<std::int64_t>& weights() const { return weights_; }

 private:
  std::vector<std::int64_t> weights_;
};

/// Horocyclic height on the suspended tree; H fixes the ray's end and acts
/// transitively.
class TreeHeight final : public HeightFunction {
 public:
  explicit TreeHeight(int degree) : degree_(degree) {}

  [[nodiscard]] std::string name() const override { return "horocyclic"; }
  [[nodiscard]] std::int64_t evaluate(const VertexLabel& v) const override;
  [[nodiscard]] int declared_d() const override { return 1; }
  [[nodiscard]] int declared_r() const override { return 0; }
  [[nodiscard]] std::vector<VertexLabel> orbit_representatives() const override { return {VertexLabel{0}}; }
  [[nodiscard]] std::size_t orbit_of(const VertexLabel&) const override { return 0; }
  [[nodiscard]] VertexLabel transport(const VertexLabel& v, const VertexLabel& x) const override;

 private:
  int degree_;
};

/// h(x, y) = x on the brick-wall hexagonal lattice, H = translations that
/// preserve the brick pattern (two orbits, by parity of x + y).
class HexHeight final : public HeightFunction {
 public:
  [[nodiscard]] std::string name() const override { return "x-translations"; }
  [[nodiscard]] std::int64_t evaluate(const VertexLabel& v) const override { return v[0]; }
  [[nodiscard]] int declared_d() const override { return 1; }
  [[nodiscard]] int declared_r() const override { return 1; }
  [[nodiscard]] std::vector<VertexLabel> orbit_representatives() const override;
  [[nodiscard]] std::size_t orbit_of(const VertexLabel& v) const override;
  [[nodiscard]] VertexLabel transport(const VertexLabel& v, const VertexLabel& x) const override;
};

/// Horizontal displacement on the square/octagon lattice: corner offsets
/// W=0, S=N=1, E=2 plus 3 per cell column.  H is generated by the two cell
/// shifts, giving four orbits (one per corner).
class SquareOctagonHeight final : public HeightFunction {
 public:
  static constexpr std::int64_t kColumnStride = 3;

  [[nodiscard]] std::string name() const override { return "horizontal"; }
  [[nodiscard]] std::int64_t evaluate(const VertexLabel& v) const override;
  [[nodiscard]] int declared_d() const override { return 1; }
  [[nodiscard]] int declared_r() const override { return 5; }
  [[nodiscard]] std::vector<VertexLabel> orbit_representatives() const override;
  [[nodiscard]] std::size_t orbit_of(const VertexLabel& v) const override {
    return static_cast<std::size_t>(v[2]);
  }
  [[nodiscard]] VertexLabel transport(const VertexLabel& v, const VertexLabel& x) const override;
};

/// Heisenberg height: +1 across s1, -1 across s1', 0 otherwise, i.e. h = x.
/// H is the group acting by left multiplication.
class HeisenbergHeight final : public HeightFunction {
 public:
  [[nodiscard]] std::string name() const override { return "s1-count"; }
  [[nodiscard]] std::int64_t evaluate(const VertexLabel& v) const override { return v[0]; }
  [[nodiscard]] int declared_d() const override { return 1; }
  [[nodiscard]] int declared_r() const override { return 0; }
  [[nodiscard]] std::vector<VertexLabel> orbit_representatives() const override {
    return {VertexLabel{0, 0, 0}};
  }
  [[nodiscard]] std::size_t orbit_of(const VertexLabel&) const override { return 0; }
  [[nodiscard]] VertexLabel transport(const VertexLabel& v, const VertexLabel& x) const override;
};

// ------------------------------------------------------------ checks

struct HeightViolation {
  char clause = 'a';  // 'a', 'b' or 'c'
  VertexLabel witness;
  std::optional<VertexLabel> other;  // second vertex for clause (b)
  std::string detail;
  std::int64_t value = 0;     // h(witness), or the offending difference
  std::int64_t expected = 0;  // what clause (b) predicted
};

enum class Verdict { holds, fails, indeterminate };
std::string to_string(Verdict v);

struct HeightValidationReport {
  int radius = 0;
  std::vector<HeightViolation> violations;
  int measured_d = 0;
  int declared_d = 0;
  bool d_within_declared = true;
  int declared_r = 0;
  Verdict r_check = Verdict::indeterminate;

  /// All three clauses hold on the checked ball.
  [[nodiscard]] bool ok() const { return violations.empty(); }
};

struct ValidateOptions {
  bool check_r = true;
  std::size_t max_violations = 64;
  Limits limits = default_limits();
};

/// Checks clause (a) at the origin, clause (c) on the radius-1 smaller ball
/// and clause (b) by transporting each sampled vertex's neighbourhood to its
/// orbit representative.  Violations are reported, never thrown.
HeightValidationReport validate_height(const GraphFamily& family, const HeightFunction& hf,
                                       int radius, const ValidateOptions& options = {});

/// max |h(u) - h(v)| over the edges of the origin ball of the given radius.
int measure_d(const GraphFamily& family, const HeightFunction& hf, int radius);

/// Certifies r(h, H) <= r: for every ordered pair of distinct orbit
/// representatives (u, v) some v' in the orbit of v is reachable from u by a
/// SAW of length <= r whose interior heights lie strictly between h(u) and
/// h(v') > h(u).
Verdict verify_r(const GraphFamily& family, const HeightFunction& hf, int r,
                 const Limits& limits = default_limits());

/// Connector found for one ordered orbit pair.
struct Connector {
  std::size_t from_orbit = 0;
  std::size_t to_orbit = 0;
  std::vector<VertexLabel> path;  // SAW from the representative to v'
};

/// Shortest connector for the pair, searching lengths up to `max_length`.
std::optional<Connector> shortest_connector(const GraphFamily& family, const HeightFunction& hf,
                                            std::size_t from_orbit, std::size_t to_orbit,
                                            int max_length, const Limits& limits = default_limits());

/// Least r <= cap for which verify_r holds, or nullopt.
std::optional<int> minimal_r(const GraphFamily& family, const HeightFunction& hf, int cap,
                             const Limits& limits = default_limits());

/// (N - 1)(2d + 1) + 2 with N the number of H-orbits.
int r_upper_bound(std::size_t orbit_count, int d);

}  // namespace sawlab
