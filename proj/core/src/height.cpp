#include "sawlab/height.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>

#include "sawlab/error.hpp"
#include "sawlab/families.hpp"

namespace sawlab {

ShiftImage HeightFunction::shift_to_rep(const VertexLabel& v) const {
  ShiftImage out;
  out.representative = transport(v, v);
  out.offset = evaluate(v) - evaluate(out.representative);
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    default: return "indeterminate";
  }
}

// ---------------------------------------------------------------- linear

LinearHeight::LinearHeight(std::vector<std::int64_t> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw UsageError("linear height needs at least one weight");
}

std::string LinearHeight::name() const {
  std::string out = "linear:";
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(weights_[i]);
  }
  return out;
}

std::int64_t LinearHeight::evaluate(const VertexLabel& v) const {
  std::int64_t h = 0;
  for (std::size_t i = 0; i < weights_.size() && i < v.size(); ++i) h += weights_[i] * v[i];
  return h;
}

int LinearHeight::declared_d() const {
  std::int64_t d = 0;
  for (auto w : weights_) d = std::max(d, std::abs(w));
  return static_cast<int>(std::max<std::int64_t>(d, 1));
}

std::vector<VertexLabel> LinearHeight::orbit_representatives() const {
  VertexLabel zero;
  zero.resize(weights_.size());
  return {zero};
}

VertexLabel LinearHeight::transport(const VertexLabel& v, const VertexLabel& x) const {
  VertexLabel out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= v[i];
  return out;
}

// ---------------------------------------------------------------- tree

std::int64_t TreeHeight::evaluate(const VertexLabel& v) const { return TreeFamily::level(v); }

VertexLabel TreeHeight::transport(const VertexLabel& v, const VertexLabel& x) const {
  // Find where x meets the ray R_v running from v up towards the fixed end,
  // then relabel so that R_v is carried onto the fixed ray with v at level 0.
  const std::int64_t k = v[0];
  const std::span<const std::int64_t> w = v.coords().subspan(1);
  const std::int64_t hv = k + static_cast<std::int64_t>(w.size());

  std::int64_t meet = 0;
  std::vector<std::int64_t> below;  // descent word from the meeting vertex
  if (x[0] < k) {
    meet = x[0];
    below.assign(x.begin() + 1, x.end());
  } else {
    std::vector<std::int64_t> word(static_cast<std::size_t>(x[0] - k), 0);
    word.insert(word.end(), x.begin() + 1, x.end());
    std::size_t common = 0;
    while (common < w.size() && common < word.size() && word[common] == w[common]) ++common;
    meet = k + static_cast<std::int64_t>(common);
    below.assign(word.begin() + static_cast<std::ptrdiff_t>(common), word.end());
  }

  if (meet < hv && !below.empty()) {
    const std::int64_t ray_letter = meet < k ? 0 : w[static_cast<std::size_t>(meet - k)];
    if (below.front() == ray_letter) {
      below.front() = 0;
    } else if (below.front() == 0) {
      below.front() = ray_letter;
    }
  }
  return TreeFamily::descend(meet - hv, below);
}

// ---------------------------------------------------------------- hexagonal

std::vector<VertexLabel> HexHeight::orbit_representatives() const {
  return {VertexLabel{0, 0}, VertexLabel{1, 0}};
}

std::size_t HexHeight::orbit_of(const VertexLabel& v) const {
  return ((v[0] + v[1]) % 2 == 0) ? 0 : 1;
}

VertexLabel HexHeight::transport(const VertexLabel& v, const VertexLabel& x) const {
  const std::int64_t target_x = orbit_of(v) == 0 ? 0 : 1;
  return VertexLabel{x[0] + target_x - v[0], x[1] - v[1]};
}

// ---------------------------------------------------------------- square/octagon

std::int64_t SquareOctagonHeight::evaluate(const VertexLabel& v) const {
  static constexpr std::int64_t offset[4] = {0, 1, 2, 1};  // W, S, E, N
  return kColumnStride * v[0] + offset[v[2]];
}

std::vector<VertexLabel> SquareOctagonHeight::orbit_representatives() const {
  return {VertexLabel{0, 0, 0}, VertexLabel{0, 0, 1}, VertexLabel{0, 0, 2}, VertexLabel{0, 0, 3}};
}

VertexLabel SquareOctagonHeight::transport(const VertexLabel& v, const VertexLabel& x) const {
  return VertexLabel{x[0] - v[0], x[1] - v[1], x[2]};
}

// ---------------------------------------------------------------- Heisenberg

VertexLabel HeisenbergHeight::transport(const VertexLabel& v, const VertexLabel& x) const {
  return HeisenbergFamily::multiply(HeisenbergFamily::inverse(v), x);
}

// ---------------------------------------------------------------- validation

HeightValidationReport validate_height(const GraphFamily& family, const HeightFunction& hf,
                                       int radius, const ValidateOptions& options) {
  if (radius < 1) throw UsageError("validate_height needs radius >= 1");
  HeightValidationReport report;
  report.radius = radius;
  report.declared_d = hf.declared_d();
  report.declared_r = hf.declared_r();

  auto record = [&](HeightViolation v) {
    if (report.violations.size() < options.max_violations) report.violations.push_back(std::move(v));
  };

  const VertexLabel origin = family.origin();
  if (const auto h0 = hf(origin); h0 != 0) {
    record({'a', origin, std::nullopt, "h(origin) must be 0", h0, 0});
  }

  const Ball region = ball(family, origin, radius, options.limits.vertex_budget);
  const auto reps = hf.orbit_representatives();
  std::vector<VertexLabel> nbrs, rep_nbrs;
  for (const auto& v : region.vertices) {
    if (region.dist.at(v) > radius - 1) continue;
    const std::int64_t hv = hf(v);
    family.neighbors_into(v, nbrs);

    bool higher = false, lower = false;
    for (const auto& x : nbrs) {
      const auto hx = hf(x);
      higher |= hx > hv;
      lower |= hx < hv;
    }
    if (!higher || !lower) {
      record({'c', v, std::nullopt,
              !higher ? "no strictly higher neighbour" : "no strictly lower neighbour", hv, 0});
    }

    const VertexLabel rep = hf.transport(v, v);
    const std::size_t orbit = hf.orbit_of(v);
    if (orbit >= reps.size() || rep != reps[orbit] || hf.orbit_of(rep) != orbit) {
      record({'b', v, rep, "transport does not land on the orbit representative", 0, 0});
      continue;
    }
    family.neighbors_into(rep, rep_nbrs);
    const std::int64_t hrep = hf(rep);
    for (const auto& x : nbrs) {
      const VertexLabel image = hf.transport(v, x);
      if (std::find(rep_nbrs.begin(), rep_nbrs.end(), image) == rep_nbrs.end()) {
        record({'b', v, x, "transport does not preserve adjacency", 0, 0});
        continue;
      }
      const std::int64_t moved = hf(image) - hrep;
      const std::int64_t original = hf(x) - hv;
      if (moved != original) {
        record({'b', v, x, "height difference not preserved by H", moved, original});
      }
    }
  }

  int d = 0;
  for (auto [a, b] : region.edges) {
    d = std::max<int>(d, static_cast<int>(std::abs(hf(region.vertices[a]) - hf(region.vertices[b]))));
  }
  report.measured_d = d;
  report.d_within_declared = d <= report.declared_d;
  if (options.check_r) report.r_check = verify_r(family, hf, report.declared_r, options.limits);
  return report;
}

int measure_d(const GraphFamily& family, const HeightFunction& hf, int radius) {
  if (radius < 1) throw UsageError("measure_d needs radius >= 1");
  const Ball region = ball(family, family.origin(), radius);
  int d = 0;
  for (auto [a, b] : region.edges) {
    d = std::max<int>(d, static_cast<int>(std::abs(hf(region.vertices[a]) - hf(region.vertices[b]))));
  }
  return d;
}

// ---------------------------------------------------------------- r(h, H)

namespace {

struct SearchState {
  VertexLabel vertex;
  std::int64_t interior_max;
  std::size_t parent;
};

struct StateKey {
  VertexLabel vertex;
  std::int64_t interior_max;
  bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const {
    return k.vertex.hash() * 1000003u ^ std::hash<std::int64_t>{}(k.interior_max);
  }
};

std::vector<VertexLabel> loop_erase(const std::vector<VertexLabel>& walk) {
  std::vector<VertexLabel> out;
  for (const auto& v : walk) {
    auto it = std::find(out.begin(), out.end(), v);
    if (it != out.end()) {
      out.erase(it + 1, out.end());
    } else {
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace

std::optional<Connector> shortest_connector(const GraphFamily& family, const HeightFunction& hf,
                                            std::size_t from_orbit, std::size_t to_orbit,
                                            int max_length, const Limits& limits) {
  const auto reps = hf.orbit_representatives();
  if (from_orbit >= reps.size() || to_orbit >= reps.size()) throw UsageError("orbit index out of range");
  const VertexLabel& u = reps[from_orbit];
  const std::int64_t hu = hf(u);

  // Breadth-first search over (vertex, max interior height).  A shortest walk
  // meeting the height constraints loop-erases to a SAW that still meets them.
  std::vector<SearchState> states{{u, hu, 0}};
  std::unordered_map<StateKey, std::size_t, StateKeyHash> seen;
  seen.emplace(StateKey{u, hu}, 0);
  std::vector<VertexLabel> nbrs;
  std::size_t layer_begin = 0, layer_end = 1;
  for (int length = 1; length <= max_length && layer_begin < layer_end; ++length) {
    for (std::size_t s = layer_begin; s < layer_end; ++s) {
      family.neighbors_into(states[s].vertex, nbrs);
      for (const auto& y : nbrs) {
        const std::int64_t hy = hf(y);
        if (hf.orbit_of(y) == to_orbit && hy > hu && hy > states[s].interior_max) {
          std::vector<VertexLabel> walk{y};
          for (std::size_t at = s;; at = states[at].parent) {
            walk.push_back(states[at].vertex);
            if (at == 0) break;
          }
          std::reverse(walk.begin(), walk.end());
          return Connector{from_orbit, to_orbit, loop_erase(walk)};
        }
        if (y == u || hy <= hu) continue;
        StateKey key{y, std::max(states[s].interior_max, hy)};
        if (seen.contains(key)) continue;
        if (states.size() >= limits.search_budget) {
          throw ResourceError("connector search exceeded budget");
        }
        seen.emplace(key, states.size());
        states.push_back({key.vertex, key.interior_max, s});
      }
    }
    layer_begin = layer_end;
    layer_end = states.size();
  }
  return std::nullopt;
}

Verdict verify_r(const GraphFamily& family, const HeightFunction& hf, int r, const Limits& limits) {
  if (r < 0) throw UsageError("r must be non-negative");
  const std::size_t n = hf.orbit_count();
  if (n <= 1) return Verdict::holds;
  bool indeterminate = false;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      try {
        if (!shortest_connector(family, hf, a, b, r, limits)) return Verdict::fails;
      } catch (const ResourceError&) {
        indeterminate = true;
      }
    }
  }
  return indeterminate ? Verdict::indeterminate : Verdict::holds;
}

std::optional<int> minimal_r(const GraphFamily& family, const HeightFunction& hf, int cap,
                             const Limits& limits) {
  const std::size_t n = hf.orbit_count();
  if (n <= 1) return 0;
  int worst = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      auto c = shortest_connector(family, hf, a, b, cap, limits);
      if (!c) return std::nullopt;
      worst = std::max(worst, static_cast<int>(c->path.size()) - 1);
    }
  }
  return worst;
}

int r_upper_bound(std::size_t orbit_count, int d) {
  return static_cast<int>(orbit_count - 1) * (2 * d + 1) + 2;
}

}  // namespace sawlab
