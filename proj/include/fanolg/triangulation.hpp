#pragma once

#include "fanolg/lattice_geometry.hpp"
#include "fanolg/report.hpp"

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace fanolg {

using Triangle = std::array<std::size_t, 3>;  // sorted indices into points

struct BoundaryTriangulation {
  Polytope polytope;
  std::vector<LatticeVector> points;  // boundary lattice points, sorted
  std::vector<Triangle> triangles;    // sorted
};

// Surface: degree in the edge graph of the boundary triangulation.
// Coned: degree in the cone over it, which adds the edge to the origin.
enum class ValencyMode { Surface, Coned };

struct ValencySpec {
  std::string name;
  ValencyMode mode = ValencyMode::Surface;
  // may the partial valencies still complete to an accepted profile
  std::function<bool(const std::vector<int>&)> viable;
  std::function<bool(const std::vector<int>&)> accept;
};

ValencySpec valency_in(std::vector<int> allowed, ValencyMode mode = ValencyMode::Surface);
// Exactly one vertex of surface valency 6, all others 4 or 5.
ValencySpec one_six_rest_four_five();

// Check triangles tile the boundary: cover every facet and form a closed surface.
bool is_boundary_cover(const BoundaryTriangulation& t);
bool is_unimodular(const BoundaryTriangulation& t);
bool is_regular(const BoundaryTriangulation& t);
std::map<LatticeVector, int> valency_profile(const BoundaryTriangulation& t, ValencyMode mode = ValencyMode::Surface);
std::vector<int> valencies(const BoundaryTriangulation& t, ValencyMode mode = ValencyMode::Surface);
std::size_t edge_count(const BoundaryTriangulation& t);

// Every unimodular triangulation of the facet's lattice points, as triangles
// over indices of boundary_lattice_points(p).
std::vector<std::vector<Triangle>> facet_unimodular_triangulations(const Polytope& p, std::size_t facet,
                                                                   const std::vector<LatticeVector>& points);

std::optional<BoundaryTriangulation> search_triangulation(const Polytope& p, const ValencySpec& spec);

struct IltenReport {
  std::size_t lattice_points = 0;  // m, origin included
  bool in_window = false;          // 7 <= m <= 11
  bool reflexive = false;
  std::optional<BoundaryTriangulation> witness;  // coned valencies in {5, 6}
  long degree = 0;                               // 2 (m - 3)
  VerificationReport report;
};

IltenReport check_ilten_hypotheses(const Polytope& p);

}  // namespace fanolg
