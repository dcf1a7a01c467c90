#pragma once

#include "fanolg/core.hpp"

#include <vector>

namespace fanolg {

// Inward facet inequality <normal, p> >= -offset.
struct Facet {
  LatticeVector normal;
  Rational offset;
};

// Affine-span equation <normal, p> == value.
struct AffineEquation {
  LatticeVector normal;
  Rational value;
};

class Polytope {
 public:
  Polytope() = default;
  static Polytope hull(const std::vector<RationalVector>& points);
  static Polytope hull(const std::vector<LatticeVector>& points);

  std::size_t rank() const { return rank_; }
  int dimension() const { return dim_; }
  bool full_dimensional() const { return dim_ == static_cast<int>(rank_); }
  const std::vector<RationalVector>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<AffineEquation>& equations() const { return equations_; }

  bool contains(const RationalVector& p) const;
  bool contains(const LatticeVector& p) const;
  bool contains_in_interior(const RationalVector& p) const;  // relative interior
  bool origin_in_interior() const;
  bool is_lattice() const;
  // Indices of vertices on facet i.
  std::vector<std::size_t> facet_vertices(std::size_t i) const;

  Polytope scaled(const Rational& k) const;
  Polytope translated(const RationalVector& v) const;

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.rank_ == b.rank_ && a.vertices_ == b.vertices_;
  }

 private:
  std::size_t rank_ = 0;
  int dim_ = -1;
  std::vector<RationalVector> vertices_;
  std::vector<Facet> facets_;
  std::vector<AffineEquation> equations_;
};

Polytope convex_hull(const std::vector<RationalVector>& points);
Polytope convex_hull(const std::vector<LatticeVector>& points);
Polytope dual_polytope(const Polytope& p);
bool is_reflexive(const Polytope& p);
std::vector<LatticeVector> lattice_points(const Polytope& p);
std::vector<LatticeVector> interior_lattice_points(const Polytope& p);
std::vector<LatticeVector> boundary_lattice_points(const Polytope& p);
// Simplices (as vertex lists) of the pulling triangulation from the lex-least vertex.
std::vector<std::vector<RationalVector>> pulling_triangulation(const Polytope& p);
Rational normalized_volume(const Polytope& p);
Rational simplex_normalized_volume(const std::vector<RationalVector>& simplex);
// Z-basis of m-perp in Hermite form.
std::vector<LatticeVector> orthogonal_lattice_basis(const LatticeVector& m);
// P ∩ m-perp in coordinates of orthogonal_lattice_basis(m).
Polytope hyperplane_slice(const Polytope& p, const LatticeVector& m);
Polytope apply_linear(const Polytope& p, const std::vector<std::vector<std::int64_t>>& a);

}  // namespace fanolg
