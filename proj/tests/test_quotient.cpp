#include <gtest/gtest.h>

#include <numeric>

#include "sawlab/error.hpp"
#include "sawlab/families.hpp"
#include "sawlab/linalg.hpp"
#include "sawlab/quotient.hpp"

using namespace sawlab;

namespace {

QuotientGraph torus(int dim, std::int64_t k) {
  SubgroupDescriptor sub;
  sub.family = "z:" + std::to_string(dim);
  for (int i = 0; i < dim; ++i) {
    std::vector<std::int64_t> row(dim, 0);
    row[i] = k;
    sub.shifts.push_back(row);
  }
  return build_quotient(make_lattice(dim), sub);
}

}  // namespace

TEST(Linalg, RankAndNullspace) {
  const RatMatrix a{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  EXPECT_EQ(rank(a, 3), 2u);
  const auto ns = nullspace(a, 3);
  ASSERT_EQ(ns.size(), 1u);
  for (const auto& x : a * ns[0]) EXPECT_EQ(x, 0);
}

TEST(Linalg, SolveRational) {
  const RatMatrix a{{2, 1}, {1, 3}};
  const auto x = solve(a, {1, 0}, 2);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], Rational(3, 5));
  EXPECT_EQ((*x)[1], Rational(-1, 5));
  EXPECT_FALSE(solve({{1, 1}, {1, 1}}, {0, 1}, 2).has_value());
}

TEST(Linalg, SpanTracker) {
  SpanTracker t(3);
  EXPECT_TRUE(t.add({1, 1, 0}));
  EXPECT_TRUE(t.add({0, 1, 1}));
  EXPECT_FALSE(t.add({1, 2, 1}));
  EXPECT_TRUE(t.in_span({2, 1, -1}));
  EXPECT_EQ(t.rank(), 2u);
}

TEST(Linalg, IntLattice) {
  IntLattice l({{2, 1}, {0, 3}}, 2);
  EXPECT_TRUE(l.full_rank());
  EXPECT_EQ(l.index(), 6);
  EXPECT_TRUE(l.contains({4, 5}));
  EXPECT_FALSE(l.contains({1, 0}));
  std::vector<std::int64_t> z{7, -4};
  const auto coeff = l.reduce(z);
  EXPECT_GE(z[0], 0);
  EXPECT_LT(z[0], 2);
  EXPECT_GE(z[1], 0);
  EXPECT_LT(z[1], 3);
  // z + sum coeff * row is the original vector
  std::vector<std::int64_t> back = z;
  for (std::size_t i = 0; i < coeff.size(); ++i)
    for (std::size_t j = 0; j < 2; ++j) back[j] += coeff[i] * l.basis()[i][j];
  EXPECT_EQ(back, (std::vector<std::int64_t>{7, -4}));
  EXPECT_EQ(floor_div(-7, 2), -4);
}

TEST(Quotient, TorusShape) {
  for (std::int64_t k : {2, 3, 4}) {
    const auto q = torus(2, k);
    EXPECT_EQ(q.orbit_count(), static_cast<std::size_t>(k * k));
    EXPECT_EQ(q.degree(), 4u);
    EXPECT_TRUE(check_symmetric(q));
    for (const auto& row : q.multiplicity) EXPECT_EQ(std::accumulate(row.begin(), row.end(), std::size_t{0}), 4u);
    EXPECT_EQ(q.undirected_edges().size(), static_cast<std::size_t>(2 * k * k));
  }
  const auto q3 = torus(3, 3);
  EXPECT_EQ(q3.orbit_count(), 27u);
  EXPECT_EQ(q3.undirected_edges().size(), 81u);
}

TEST(Quotient, DoubledEdgesAtSizeTwo) {
  const auto q = torus(2, 2);
  EXPECT_EQ(q.multiplicity[0][q.project({1, 0})], 2u);
  EXPECT_EQ(q.multiplicity[0][q.project({1, 1})], 0u);
}

TEST(Quotient, ReverseEdges) {
  const auto q = torus(2, 3);
  for (std::size_t e = 0; e < q.edges.size(); ++e) {
    const auto& ed = q.edges[e];
    const auto& rev = q.edges[ed.reverse];
    EXPECT_EQ(rev.reverse, e);
    EXPECT_EQ(rev.from, ed.to);
    EXPECT_EQ(rev.to, ed.from);
  }
}

TEST(Quotient, ProjectAndReduce) {
  const auto q = torus(2, 3);
  std::vector<std::int64_t> coeff;
  const auto rep = q.reduce({7, -2}, &coeff);
  EXPECT_EQ(q.project({7, -2}), q.project(rep));
  EXPECT_EQ(q.project({1, 1}), q.project({4, -2}));
  EXPECT_NE(q.project({1, 1}), q.project({1, 2}));
}

TEST(Quotient, SkewLattice) {
  SubgroupDescriptor sub{"z:2", {{2, 1}, {-1, 2}}, true};
  const auto q = build_quotient(make_lattice(2), sub);
  EXPECT_EQ(q.orbit_count(), 5u);
  EXPECT_TRUE(check_symmetric(q));
}

TEST(Quotient, InfiniteIndexRefused) {
  SubgroupDescriptor sub{"z:2", {{1, 1}}, false};
  EXPECT_THROW(build_quotient(make_lattice(2), sub), ResourceError);
}

TEST(Quotient, JsonRoundTrip) {
  const auto q = torus(2, 3);
  const auto back = quotient_from_json(to_json(q));
  EXPECT_EQ(back.multiplicity, q.multiplicity);
  EXPECT_EQ(back.representatives, q.representatives);
  EXPECT_EQ(to_json(back), to_json(q));
}

TEST(Quotient, SymmetryOfMatrix) {
  EXPECT_TRUE(check_symmetric(std::vector<std::vector<std::size_t>>{{0, 2}, {2, 0}}));
  EXPECT_FALSE(check_symmetric(std::vector<std::vector<std::size_t>>{{0, 2}, {1, 1}}));
}
