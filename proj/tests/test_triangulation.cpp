#include "fanolg/catalog.hpp"
#include "fanolg/lp.hpp"
#include "fanolg/triangulation.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace fanolg;

namespace {

Polytope row_polytope(int row) { return dual_polytope(newton_polytope(catalog_row(load_catalog(), row).lg)); }

Polytope octahedron() {
  return Polytope::hull(std::vector<LatticeVector>{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
}

long det3(const LatticeVector& a, const LatticeVector& b, const LatticeVector& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

// Independent checks on a witness: Euler, edge count, valency sum, vertex set and volume.
void expect_sphere(const BoundaryTriangulation& t) {
  std::set<std::pair<std::size_t, std::size_t>> edges;
  std::set<std::size_t> used;
  long vol = 0;
  for (auto& tr : t.triangles) {
    edges.insert({tr[0], tr[1]});
    edges.insert({tr[0], tr[2]});
    edges.insert({tr[1], tr[2]});
    used.insert(tr.begin(), tr.end());
    vol += std::abs(det3(t.points[tr[0]], t.points[tr[1]], t.points[tr[2]]));
  }
  long V = static_cast<long>(t.points.size()), E = static_cast<long>(edges.size()), F = static_cast<long>(t.triangles.size());
  EXPECT_EQ(V - E + F, 2);
  EXPECT_EQ(2 * E, 3 * F);
  EXPECT_EQ(edge_count(t), edges.size());
  EXPECT_EQ(used.size(), t.points.size());
  EXPECT_EQ(t.points, boundary_lattice_points(t.polytope));
  auto v = valencies(t);
  EXPECT_EQ(std::accumulate(v.begin(), v.end(), 0L), 2 * E);
  EXPECT_EQ(Rational(vol), normalized_volume(t.polytope));
  EXPECT_TRUE(is_boundary_cover(t));
}

}  // namespace

TEST(Unimodular, Determinants) {
  BoundaryTriangulation t;
  t.points = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  t.triangles = {{0, 1, 2}};
  EXPECT_TRUE(is_unimodular(t));
  t.points = {{1, 0, 0}, {0, 1, 0}, {-1, -1, -2}};
  EXPECT_FALSE(is_unimodular(t));
}

TEST(Valency, OctahedronAllFour) {
  auto t = search_triangulation(octahedron(), valency_in({4}));
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->triangles.size(), 8u);
  for (auto [p, v] : valency_profile(*t)) EXPECT_EQ(v, 4) << p;
  for (int v : valencies(*t, ValencyMode::Coned)) EXPECT_EQ(v, 5);
  EXPECT_TRUE(is_unimodular(*t));
  EXPECT_TRUE(is_regular(*t));
  expect_sphere(*t);
  EXPECT_FALSE(search_triangulation(octahedron(), valency_in({5, 6})).has_value());
}

TEST(Search, NonReflexiveRejected) {
  auto s = Polytope::hull(std::vector<LatticeVector>{{-1, -1, -1}, {2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
  EXPECT_THROW(search_triangulation(s, valency_in({5, 6})), PreconditionError);
}

TEST(Search, DegreeTwelveParallelogram) {
  Polytope p = row_polytope(6);
  auto pts = boundary_lattice_points(p);
  std::vector<std::size_t> counts;
  for (std::size_t f = 0; f < p.facets().size(); ++f) counts.push_back(facet_unimodular_triangulations(p, f, pts).size());
  EXPECT_EQ(std::count(counts.begin(), counts.end(), 2u), 1);
  EXPECT_EQ(std::count(counts.begin(), counts.end(), 1u), static_cast<long>(counts.size()) - 1);

  auto t = search_triangulation(p, valency_in({5, 6}, ValencyMode::Coned));
  ASSERT_TRUE(t.has_value());
  EXPECT_TRUE(is_unimodular(*t));
  EXPECT_TRUE(is_regular(*t));
  for (int v : valencies(*t, ValencyMode::Coned)) EXPECT_TRUE(v == 5 || v == 6);
  expect_sphere(*t);
}

TEST(Ilten, WindowRows) {
  // degrees 8..16 through m = 7..11
  std::map<int, std::size_t> want{{4, 7}, {5, 8}, {6, 9}, {7, 10}, {8, 11}};
  for (auto [row, m] : want) {
    auto r = check_ilten_hypotheses(row_polytope(row));
    EXPECT_EQ(r.lattice_points, m) << row;
    EXPECT_TRUE(r.in_window) << row;
    EXPECT_TRUE(r.reflexive) << row;
    EXPECT_EQ(r.degree, 2 * (static_cast<long>(m) - 3)) << row;
    EXPECT_EQ(r.degree, catalog_row(load_catalog(), row).anticanonical_degree()) << row;
    EXPECT_EQ(Rational(r.degree), normalized_volume(row_polytope(row))) << row;
    ASSERT_TRUE(r.witness.has_value()) << row;
    EXPECT_TRUE(is_regular(*r.witness)) << row;
    expect_sphere(*r.witness);
    EXPECT_FALSE(r.report.any_fail()) << row;
  }
}

TEST(Ilten, DegreeEighteenOutsideWindow) {
  Polytope p = row_polytope(9);
  auto r = check_ilten_hypotheses(p);
  EXPECT_EQ(r.lattice_points, 12u);
  EXPECT_FALSE(r.in_window);
  auto w = r.report.find("window");
  ASSERT_NE(w, nullptr);
  EXPECT_EQ(w->status, Status::Flagged);

  auto t = search_triangulation(p, one_six_rest_four_five());
  ASSERT_TRUE(t.has_value());
  auto v = valencies(*t);
  EXPECT_EQ(std::count(v.begin(), v.end(), 6), 1);
  EXPECT_EQ(std::count_if(v.begin(), v.end(), [](int x) { return x == 4 || x == 5; }), static_cast<long>(v.size()) - 1);
  expect_sphere(*t);
}

TEST(Regular, SingleSimplex) {
  std::vector<RationalVector> pts{{0, 0}, {1, 0}, {0, 1}};
  EXPECT_TRUE(is_regular_subdivision(pts, {{0, 1, 2}}));
}

TEST(Regular, TwistedTriangleIsNot) {
  // concentric triangles, every quadrilateral cut by the diagonal turning the same way
  std::vector<RationalVector> pts{{0, 0}, {12, 0}, {0, 12}, {3, 3}, {6, 3}, {3, 6}};
  std::vector<std::vector<std::size_t>> twisted{{3, 4, 5}, {0, 1, 4}, {0, 4, 3}, {1, 2, 5}, {1, 5, 4}, {2, 0, 3}, {2, 3, 5}};
  EXPECT_FALSE(is_regular_subdivision(pts, twisted));
  // cutting along the other diagonal in one quadrilateral breaks the cycle
  std::vector<std::vector<std::size_t>> fixed{{3, 4, 5}, {0, 1, 3}, {1, 4, 3}, {1, 2, 5}, {1, 5, 4}, {2, 0, 3}, {2, 3, 5}};
  EXPECT_TRUE(is_regular_subdivision(pts, fixed));
}

TEST(Regular, LinearProgram) {
  // max x + y with x + 2y <= 4, 3x + y <= 6
  RationalMatrix a(2, 2);
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(1, 0) = 3;
  a(1, 1) = 1;
  auto r = maximize(a, {4, 6}, {1, 1});
  ASSERT_TRUE(r.bounded);
  EXPECT_EQ(r.value, Rational(14, 5));
  RationalMatrix u(1, 2);
  u(0, 0) = 1;
  u(0, 1) = -1;
  EXPECT_FALSE(maximize(u, {1}, {0, 1}).bounded);
}
