#include <gtest/gtest.h>

#include "sawlab/families.hpp"
#include "sawlab/height.hpp"
#include "sawlab/quotient.hpp"
#include "sawlab/registry.hpp"

using namespace sawlab;

TEST(Heights, BuiltinsValidate) {
  for (const auto& name : builtin_families()) {
    auto fam = parse_family(name);
    auto h = default_height(fam);
    const int radius = name == "z:4" || name == "heisenberg" ? 3 : 5;
    const auto r = validate_height(*fam, *h, radius);
    EXPECT_TRUE(r.ok()) << name << " " << (r.ok() ? "" : r.violations.front().detail);
    EXPECT_TRUE(r.d_within_declared) << name;
    EXPECT_EQ(r.measured_d, h->declared_d()) << name;
    EXPECT_EQ(r.r_check, Verdict::holds) << name;
  }
}

TEST(Heights, DeclaredConstants) {
  const std::vector<std::tuple<std::string, int, int>> expected{
      {"z:2", 1, 0}, {"tree:3", 1, 0}, {"hex", 1, 1}, {"heisenberg", 1, 0}, {"sqoct", 1, 5}};
  for (const auto& [name, d, r] : expected) {
    auto h = default_height(parse_family(name));
    EXPECT_EQ(h->declared_d(), d) << name;
    EXPECT_EQ(h->declared_r(), r) << name;
  }
}

TEST(Heights, TreeHeightIsLevel) {
  auto fam = make_tree(3);
  TreeHeight h(3);
  const auto b = ball(*fam, fam->origin(), 4);
  for (const auto& v : b.vertices) {
    EXPECT_EQ(h(v), TreeFamily::level(v));
    // exactly one neighbour lower, the rest higher
    int lower = 0, higher = 0;
    for (const auto& u : fam->neighbors(v)) (h(u) < h(v) ? lower : higher)++;
    EXPECT_EQ(lower, 1);
    EXPECT_EQ(higher, 2);
  }
}

TEST(Heights, ShiftToRepOffsets) {
  auto fam = make_square_octagon();
  SquareOctagonHeight h;
  const auto b = ball(*fam, fam->origin(), 5);
  for (const auto& v : b.vertices) {
    const auto s = h.shift_to_rep(v);
    EXPECT_EQ(h(v) - s.offset, h(s.representative));
    EXPECT_EQ(s.representative, h.orbit_representatives()[h.orbit_of(v)]);
  }
}

TEST(Heights, SquareOctagonMinimalR) {
  auto fam = make_square_octagon();
  SquareOctagonHeight h;
  EXPECT_EQ(minimal_r(*fam, h, 12), 3);
  EXPECT_EQ(verify_r(*fam, h, 2), Verdict::fails);
  EXPECT_EQ(verify_r(*fam, h, 5), Verdict::holds);
  EXPECT_EQ(verify_r(*fam, h, r_upper_bound(4, 1)), Verdict::holds);
}

TEST(Heights, ConnectorShape) {
  auto fam = make_square_octagon();
  SquareOctagonHeight h;
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      if (a == b) continue;
      const auto c = shortest_connector(*fam, h, a, b, 6);
      ASSERT_TRUE(c.has_value());
      const auto& p = c->path;
      EXPECT_EQ(p.front(), h.orbit_representatives()[a]);
      EXPECT_EQ(h.orbit_of(p.back()), b);
      for (std::size_t i = 1; i + 1 < p.size(); ++i) {
        EXPECT_GT(h(p[i]), h(p.front()));
        EXPECT_LT(h(p[i]), h(p.back()));
      }
      EXPECT_LE(static_cast<int>(p.size()) - 1, 3);
    }
  }
}

TEST(Heights, BoundFormula) {
  EXPECT_EQ(r_upper_bound(1, 1), 2);
  EXPECT_EQ(r_upper_bound(2, 1), 5);
  EXPECT_EQ(r_upper_bound(4, 1), 11);
  EXPECT_EQ(r_upper_bound(3, 2), 12);
}

TEST(Heights, ValidationCatchesFlatHeight) {
  auto fam = make_lattice(2);
  LinearHeight flat({0, 1});
  EXPECT_TRUE(validate_height(*fam, flat, 3).ok());
  LinearHeight zero({0, 0});
  const auto r = validate_height(*fam, zero, 3);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violations.front().clause, 'c');
}

TEST(Heights, SteeperWeightsMeasured) {
  auto fam = make_lattice(2);
  LinearHeight h({2, -1});
  EXPECT_EQ(h.declared_d(), 2);
  EXPECT_EQ(measure_d(*fam, h, 3), 2);
  EXPECT_TRUE(validate_height(*fam, h, 3).ok());
}

TEST(Heights, CylinderHeight) {
  for (int m : {2, 3, 4, 7}) {
    auto fam = cylinder(2, {0, m});
    CylinderHeight h(fam);
    EXPECT_TRUE(validate_height(*fam, h, 4).ok()) << m;
  }
  auto skew = cylinder(2, {2, 2});
  CylinderHeight hs(skew);
  EXPECT_TRUE(validate_height(*skew, hs, 4).ok());
}
