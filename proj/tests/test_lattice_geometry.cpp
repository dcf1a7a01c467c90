#include "fanolg/lattice_geometry.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace fanolg;

namespace {

std::vector<RationalVector> rv(std::initializer_list<std::initializer_list<long>> pts) {
  std::vector<RationalVector> out;
  for (auto p : pts) {
    std::vector<Rational> c;
    for (auto x : p) c.emplace_back(x);
    out.emplace_back(c);
  }
  return out;
}

Polytope cube(long a) {
  std::vector<RationalVector> v;
  for (long x : {-a, a})
    for (long y : {-a, a})
      for (long z : {-a, a}) v.push_back(RationalVector{Rational(x), Rational(y), Rational(z)});
  return Polytope::hull(v);
}

}  // namespace

TEST(Hull, DropsInteriorPoint) {
  auto p = convex_hull(rv({{3, -1}, {-1, 3}, {-1, -1}, {0, 0}}));
  EXPECT_EQ(p.vertices(), rv({{-1, -1}, {-1, 3}, {3, -1}}));
  EXPECT_EQ(p.dimension(), 2);
  EXPECT_EQ(p.facets().size(), 3u);
}

TEST(Hull, SinglePoint) {
  auto p = convex_hull(rv({{0, 0, 0}}));
  EXPECT_EQ(p.dimension(), 0);
  EXPECT_EQ(p.vertices().size(), 1u);
  EXPECT_EQ(p.equations().size(), 3u);
}

TEST(Hull, EightExtremePoints) {
  auto pts = rv({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {-1, -1, 0}, {0, 1, 1}, {-1, -1, -1}});
  auto p = convex_hull(pts);
  EXPECT_EQ(p.vertices().size(), 8u);
  EXPECT_EQ(p.vertices(), oracle::extreme_points(pts));
}

TEST(Hull, MixedRanksRejected) {
  std::vector<RationalVector> pts{RationalVector{Rational(1), Rational(0)}, RationalVector{Rational(1)}};
  EXPECT_THROW(convex_hull(pts), DimensionMismatch);
}

TEST(Hull, LowerDimensionalKeepsAffineSpan) {
  auto p = convex_hull(rv({{0, 0, 1}, {2, 0, 1}, {0, 2, 1}, {1, 1, 1}}));
  EXPECT_EQ(p.dimension(), 2);
  EXPECT_EQ(p.vertices().size(), 3u);
  ASSERT_EQ(p.equations().size(), 1u);
  EXPECT_TRUE(p.contains(LatticeVector{1, 0, 1}));
  EXPECT_FALSE(p.contains(LatticeVector{1, 0, 0}));
  EXPECT_EQ(lattice_points(p).size(), 6u);
}

TEST(Hull, FacetNormalsPrimitiveAndInward) {
  auto p = convex_hull(rv({{3, -1, 0}, {-1, 3, 0}, {-1, -1, 2}, {-1, -1, -2}}));
  for (const auto& f : p.facets()) {
    EXPECT_EQ(f.normal.gcd(), 1);
    EXPECT_GT(f.offset, 0);
  }
}

TEST(Dual, DelPezzoTriangle) {
  auto p = convex_hull(rv({{3, -1}, {-1, 3}, {-1, -1}}));
  auto d = dual_polytope(p);
  std::vector<RationalVector> want{RationalVector{Rational(-1, 2), Rational(-1, 2)},
                                   RationalVector{Rational(0), Rational(1)},
                                   RationalVector{Rational(1), Rational(0)}};
  EXPECT_EQ(d.vertices(), want);
  EXPECT_FALSE(is_reflexive(p));
  EXPECT_EQ(dual_polytope(d), p);
}

TEST(Dual, CubeAndCrossPolytope) {
  auto d = dual_polytope(cube(1));
  EXPECT_EQ(d.vertices(), rv({{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
  EXPECT_TRUE(is_reflexive(cube(1)));
  EXPECT_EQ(dual_polytope(d), cube(1));
}

TEST(Dual, SimplexMatchesBruteForceHalfspaces) {
  auto pts = rv({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}});
  auto p = convex_hull(pts);
  auto d = dual_polytope(p);
  EXPECT_TRUE(is_reflexive(p));
  // every brute-force supporting plane <n,x> + c >= 0 with c > 0 gives the dual vertex n / c
  std::vector<RationalVector> want;
  for (const auto& h : oracle::brute_force_facets(pts)) {
    ASSERT_GT(h.offset, 0);
    std::vector<Rational> u;
    for (const auto& x : h.normal) u.push_back(x / h.offset);
    want.emplace_back(u);
  }
  std::sort(want.begin(), want.end());
  EXPECT_EQ(d.vertices(), want);
  for (const auto& u : d.vertices())
    for (const auto& v : p.vertices()) EXPECT_GE(dot(u, v), -1);
}

TEST(Dual, RejectsBoundaryOrigin) {
  auto p = convex_hull(rv({{0, 0}, {1, 0}, {0, 1}}));
  EXPECT_THROW(dual_polytope(p), NotDualizable);
  EXPECT_THROW(dual_polytope(convex_hull(rv({{-1, 0}, {1, 0}}))), NotDualizable);
}

TEST(LatticePoints, Basic) {
  auto del_pezzo_dual = dual_polytope(convex_hull(rv({{3, -1}, {-1, 3}, {-1, -1}})));
  auto nabla = del_pezzo_dual.scaled(2);
  auto pts = lattice_points(nabla);
  ASSERT_EQ(pts.size(), 7u);
  EXPECT_EQ(pts.front(), (LatticeVector{-1, -1}));
  auto simplex = convex_hull(rv({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(lattice_points(simplex).size(), 4u);
  EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end()));
}

TEST(LatticePoints, AgreesWithBruteForce) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<RationalVector> pts;
    for (int i = 0; i < 7; ++i) pts.push_back(RationalVector{Rational(d(rng)), Rational(d(rng)), Rational(d(rng), 2)});
    auto p = convex_hull(pts);
    if (!p.full_dimensional()) continue;
    EXPECT_EQ(lattice_points(p), oracle::box_points(pts));
    EXPECT_EQ(p.vertices(), oracle::extreme_points(pts));
  }
}

TEST(Volume, Basics) {
  EXPECT_EQ(normalized_volume(convex_hull(rv({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}))), 1);
  std::vector<RationalVector> c;
  for (long x : {0, 1})
    for (long y : {0, 1})
      for (long z : {0, 1}) c.push_back(RationalVector{Rational(x), Rational(y), Rational(z)});
  EXPECT_EQ(normalized_volume(convex_hull(c)), 6);
  EXPECT_EQ(normalized_volume(cube(1)), 48);
  EXPECT_EQ(normalized_volume(convex_hull(rv({{3, -1}, {-1, 3}, {-1, -1}}))), 16);
}

TEST(Volume, InvariantUnderUnimodularMapAndTranslation) {
  auto p = convex_hull(rv({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {-1, -1, 0}, {0, 1, 1}, {-1, -1, -1}}));
  auto v = normalized_volume(p);
  auto q = apply_linear(p, {{1, 2, 0}, {0, 1, -3}, {0, 0, 1}});
  EXPECT_EQ(normalized_volume(q), v);
  EXPECT_EQ(normalized_volume(p.translated(RationalVector{Rational(2), Rational(-5), Rational(1)})), v);
  EXPECT_EQ(v, 12);
}

TEST(Slice, CubeSquare) {
  auto s = hyperplane_slice(cube(1), LatticeVector{0, 0, 1});
  EXPECT_EQ(s.vertices(), rv({{-1, -1}, {-1, 1}, {1, -1}, {1, 1}}));
  EXPECT_TRUE(is_reflexive(s));
}

TEST(Slice, BasisSpansPerp) {
  auto b = orthogonal_lattice_basis(LatticeVector{1, 1, 0});
  ASSERT_EQ(b.size(), 2u);
  for (const auto& v : b) EXPECT_EQ(dot(v, LatticeVector{1, 1, 0}), 0);
  EXPECT_THROW(orthogonal_lattice_basis(LatticeVector{2, 0, 0}), PreconditionError);
}

TEST(Slice, Degenerate) {
  auto p = convex_hull(rv({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}));
  EXPECT_NO_THROW(hyperplane_slice(p, LatticeVector{0, 0, 1}));
  auto q = convex_hull(rv({{1, 0, 1}, {0, 1, 1}, {0, 0, 2}, {1, 1, 2}}));
  EXPECT_THROW(hyperplane_slice(q, LatticeVector{0, 0, 1}), DegenerateSlice);
}
