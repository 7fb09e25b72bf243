#include <gtest/gtest.h>

#include "sawlab/families.hpp"
#include "sawlab/graph.hpp"
#include "sawlab/height.hpp"
#include "sawlab/isomorphism.hpp"
#include "sawlab/locality.hpp"
#include "sawlab/quotient.hpp"

using namespace sawlab;

namespace {

// Ball of Z x Z_m built by hand from coordinate arithmetic, independent of
// the cylinder family.
Ball hand_cylinder_ball(std::int64_t m, int k) {
  std::vector<VertexLabel> verts;
  std::vector<std::pair<VertexLabel, VertexLabel>> edges;
  auto dist = [&](std::int64_t x, std::int64_t y) { return std::abs(x) + std::min(y, m - y); };
  for (std::int64_t x = -k; x <= k; ++x)
    for (std::int64_t y = 0; y < m; ++y)
      if (dist(x, y) <= k) verts.push_back({x, y});
  auto inside = [&](std::int64_t x, std::int64_t y) { return dist(x, y) <= k; };
  for (const auto& v : verts) {
    const std::int64_t x = v[0], y = v[1];
    if (inside(x + 1, y)) edges.emplace_back(v, VertexLabel{x + 1, y});
    const std::int64_t y1 = (y + 1) % m;
    if (m > 1 && inside(x, y1) && !(m == 2 && y == 1)) edges.emplace_back(v, VertexLabel{x, y1});
  }
  return make_ball(verts, edges, {0, 0});
}

Ball hand_square_ball(int k) {
  std::vector<VertexLabel> verts;
  std::vector<std::pair<VertexLabel, VertexLabel>> edges;
  for (std::int64_t x = -k; x <= k; ++x)
    for (std::int64_t y = -k; y <= k; ++y)
      if (std::abs(x) + std::abs(y) <= k) verts.push_back({x, y});
  for (const auto& v : verts) {
    if (std::abs(v[0] + 1) + std::abs(v[1]) <= k) edges.emplace_back(v, VertexLabel{v[0] + 1, v[1]});
    if (std::abs(v[0]) + std::abs(v[1] + 1) <= k) edges.emplace_back(v, VertexLabel{v[0], v[1] + 1});
  }
  return make_ball(verts, edges, {0, 0});
}

// largest k whose hand-made balls agree
int hand_K(std::int64_t m, int cap) {
  int k = 0;
  while (k < cap && ball_isomorphic(hand_square_ball(k + 1), hand_cylinder_ball(m, k + 1))) ++k;
  return k;
}

}  // namespace

TEST(Similarity, CylinderValues) {
  auto plane = make_lattice(2);
  const std::vector<std::pair<std::int64_t, int>> expected{{4, 1}, {5, 1}, {6, 2}, {8, 3}, {10, 4}};
  for (const auto& [m, k] : expected) {
    EXPECT_EQ(hand_K(m, 8), k) << m;
    const auto r = similarity_K(*plane, *cylinder(2, {0, m}), 8);
    EXPECT_EQ(r.k, k) << m;
    EXPECT_FALSE(r.capped);
    EXPECT_EQ(r.mismatch_radius, k + 1);
  }
}

TEST(Similarity, HandBallsMatchFamilies) {
  auto plane = make_lattice(2);
  for (int k = 1; k <= 4; ++k) {
    EXPECT_TRUE(ball_isomorphic(hand_square_ball(k), ball(*plane, plane->origin(), k)));
    auto cyl = cylinder(2, {0, 7});
    EXPECT_TRUE(ball_isomorphic(hand_cylinder_ball(7, k), ball(*cyl, cyl->origin(), k)));
  }
}

TEST(Similarity, CapReported) {
  auto plane = make_lattice(2);
  const auto r = similarity_K(*plane, *plane, 3);
  EXPECT_EQ(r.k, 3);
  EXPECT_TRUE(r.capped);
}

TEST(Locality, TablesAgreeBelowK) {
  auto plane = make_lattice(2);
  LinearHeight hp({1, 0});
  for (std::int64_t m : {6, 8, 10}) {
    auto cyl = cylinder(2, {0, m});
    CylinderHeight hc(cyl);
    const auto rep = locality_report(*plane, hp, *cyl, hc, 9, 8);
    const int agree = rep.similarity.k - rep.slack;
    for (int n = 0; n <= std::min(agree, 9); ++n) {
      EXPECT_EQ(rep.table_a.sigma[n], rep.table_b.sigma[n]) << m << " " << n;
      EXPECT_EQ(rep.table_a.b[n], rep.table_b.b[n]) << m << " " << n;
    }
    EXPECT_TRUE(rep.tables_consistent);
    EXPECT_TRUE(rep.cross_bounds);
    if (rep.divergence_index >= 0) EXPECT_GT(rep.divergence_index, agree);
  }
}
