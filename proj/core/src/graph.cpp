#include "sawlab/graph.hpp"

#include <algorithm>
#include <deque>

#include "sawlab/error.hpp"

namespace sawlab {

std::vector<VertexLabel> GraphFamily::neighbors(const VertexLabel& v) const {
  validate(v);
  std::vector<VertexLabel> out;
  neighbors_into(v, out);
  return out;
}

bool GraphFamily::adjacent(const VertexLabel& u, const VertexLabel& v) const {
  std::vector<VertexLabel> nbrs;
  neighbors_into(u, nbrs);
  return std::find(nbrs.begin(), nbrs.end(), v) != nbrs.end();
}

std::size_t Ball::index_of(const VertexLabel& v) const {
  auto it = std::find(vertices.begin(), vertices.end(), v);
  if (it == vertices.end()) throw UsageError("vertex " + v.str() + " not in ball");
  return static_cast<std::size_t>(it - vertices.begin());
}

std::vector<std::vector<std::size_t>> Ball::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(vertices.size());
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

Ball ball(const GraphFamily& family, const VertexLabel& center, int radius,
          std::uint64_t vertex_budget) {
  if (radius < 0) throw UsageError("ball radius must be non-negative");
  family.validate(center);

  Ball out;
  out.root = center;
  out.radius = radius;
  std::unordered_map<VertexLabel, std::size_t, VertexLabelHash> index;
  out.vertices.push_back(center);
  out.dist.emplace(center, 0);
  index.emplace(center, 0);

  std::vector<VertexLabel> nbrs;
  for (std::size_t head = 0; head < out.vertices.size(); ++head) {
    const VertexLabel v = out.vertices[head];
    const int dv = out.dist.at(v);
    if (dv == radius) continue;
    family.neighbors_into(v, nbrs);
    for (const auto& w : nbrs) {
      if (out.dist.contains(w)) continue;
      if (out.vertices.size() >= vertex_budget) {
        throw ResourceError("ball of radius " + std::to_string(radius) + " in " + family.name() +
                            " exceeds vertex budget " + std::to_string(vertex_budget));
      }
      out.dist.emplace(w, dv + 1);
      index.emplace(w, out.vertices.size());
      out.vertices.push_back(w);
    }
  }

  for (std::size_t i = 0; i < out.vertices.size(); ++i) {
    family.neighbors_into(out.vertices[i], nbrs);
    for (const auto& w : nbrs) {
      auto it = index.find(w);
      if (it != index.end() && i < it->second) out.edges.emplace_back(i, it->second);
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

Ball make_ball(std::vector<VertexLabel> vertices,
               const std::vector<std::pair<VertexLabel, VertexLabel>>& edges,
               const VertexLabel& root) {
  Ball out;
  out.root = root;
  std::unordered_map<VertexLabel, std::size_t, VertexLabelHash> index;
  for (const auto& v : vertices) {
    if (!index.emplace(v, index.size()).second) throw UsageError("duplicate ball vertex " + v.str());
  }
  if (!index.contains(root)) throw UsageError("root not among ball vertices");
  std::vector<std::vector<std::size_t>> adj(vertices.size());
  for (const auto& [a, b] : edges) {
    std::size_t i = index.at(a), j = index.at(b);
    if (i == j) throw UsageError("loop in explicit ball");
    if (i > j) std::swap(i, j);
    out.edges.emplace_back(i, j);
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());

  // Reorder vertices into BFS order from the root.
  std::vector<int> dist(vertices.size(), -1);
  std::deque<std::size_t> queue{index.at(root)};
  dist[index.at(root)] = 0;
  std::vector<std::size_t> order;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    order.push_back(v);
    for (std::size_t w : adj[v]) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  if (order.size() != vertices.size()) throw UsageError("explicit ball is not connected");
  std::vector<std::size_t> position(vertices.size());
  for (std::size_t k = 0; k < order.size(); ++k) position[order[k]] = k;
  for (auto& [a, b] : out.edges) {
    a = position[a];
    b = position[b];
    if (a > b) std::swap(a, b);
  }
  std::sort(out.edges.begin(), out.edges.end());
  for (std::size_t k : order) {
    out.vertices.push_back(vertices[k]);
    out.dist.emplace(vertices[k], dist[k]);
    out.radius = std::max(out.radius, dist[k]);
  }
  return out;
}

RestrictedFamily::RestrictedFamily(FamilyPtr base, Ball region)
    : base_(std::move(base)), region_(std::move(region)) {}

std::string RestrictedFamily::name() const {
  return base_->name() + "|ball(" + region_.root.str() + "," + std::to_string(region_.radius) + ")";
}

void RestrictedFamily::validate(const VertexLabel& v) const {
  base_->validate(v);
  if (!region_.contains(v)) throw UsageError("label " + v.str() + " outside restricted region");
}

void RestrictedFamily::neighbors_into(const VertexLabel& v, std::vector<VertexLabel>& out) const {
  base_->neighbors_into(v, out);
  std::erase_if(out, [this](const VertexLabel& w) { return !region_.contains(w); });
}

}  // namespace sawlab
