#pragma once

#include "fanolg/lattice_geometry.hpp"
#include "fanolg/linalg.hpp"
#include "fanolg/univariate.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fanolg {

// v^2 = u^3 + a(t) u + b(t), with g2 = -4a and g3 = -4b. The homogeneous
// degrees fix the fiber at infinity.
struct WeierstrassModel {
  UPoly a, b;
  int deg_a = 8;
  int deg_b = 12;

  static WeierstrassModel from_g2_g3(const UPoly& g2, const UPoly& g3);
  // X^3 + Y^2 + A X + B = 0, substituted by X = -u.
  static WeierstrassModel from_cubic_form(const UPoly& A, const UPoly& B);
  UPoly g2() const { return Rational(-4) * a; }
  UPoly g3() const { return Rational(-4) * b; }
  // (c^2 u, c^3 v) rescaling.
  WeierstrassModel rescaled(const Rational& c) const;
};

struct Discriminant {
  UPoly delta;  // g2^3 - 27 g3^2
  int order_at_infinity = 0;
};

Discriminant discriminant(const WeierstrassModel& w);

enum class FiberKind { I0, In, InStar, II, III, IV, IVStar, IIIStar, IIStar };

struct VanishingOrders {
  int g2 = 0, g3 = 0, delta = 0;  // 1000 stands for identically zero
};

struct KodairaFiber {
  // Points sharing a type: a monic square-free factor of the discriminant,
  // or empty with at_infinity set.
  UPoly factor;
  bool at_infinity = false;
  VanishingOrders orders;
  FiberKind kind = FiberKind::I0;
  int n = 0;  // for I_n and I_n*

  int count() const { return at_infinity ? 1 : factor.degree(); }
  std::string type_name() const;
  std::string location() const;
  std::string root_lattice() const;  // "" when none
  int euler_number() const;
};

VanishingOrders minimal_orders(VanishingOrders v);
// Char-0 vanishing-order table; input must be minimal.
FiberKind kodaira_type(const VanishingOrders& v, int* n = nullptr);
std::vector<KodairaFiber> classify_fibers(const WeierstrassModel& w);
// Number of points times the type name, for comparisons: {"IV*", "IV*", "I6", "I1", "I1"}.
std::vector<std::string> fiber_multiset(const std::vector<KodairaFiber>& fibers);
int euler_sum(const std::vector<KodairaFiber>& fibers);
int delta_order_sum(const std::vector<KodairaFiber>& fibers);

struct LatticeSummand {
  char kind = 'U';  // U, A, D, E
  int n = 0;
  int rank() const { return kind == 'U' ? 2 : n; }
  std::string name() const;
};

struct NSLattice {
  std::vector<LatticeSummand> summands;
  int mw_rank = 0;
  std::vector<int> mw_torsion;  // cyclic orders
  int rank() const;
  int summand_rank() const;
  std::string name() const;
};

// "U+E7+D10"
NSLattice parse_lattice(const std::string& text);
NSLattice assemble_lattice(const std::vector<KodairaFiber>& fibers, int mw_rank = 0, std::vector<int> mw_torsion = {});
// Fiber-type names as in fiber_multiset.
NSLattice assemble_lattice(const std::vector<std::string>& fiber_types, int mw_rank = 0,
                           std::vector<int> mw_torsion = {});

struct LatticeInvariants {
  int rank = 0;
  int positive = 0, negative = 0;
  Integer determinant;
};

IntMatrix gram_matrix(const NSLattice& l);
IntMatrix gram_matrix(const LatticeSummand& s);
LatticeInvariants lattice_invariants(const IntMatrix& gram);

struct RationalFunction {
  UPoly num{Rational(0)};
  UPoly den{Rational(1)};
};

struct SectionCheck {
  bool on_curve = false;
  bool two_torsion = false;
};

SectionCheck verify_section(const WeierstrassModel& w, const RationalFunction& u, const RationalFunction& v);

struct FibrationPolygon {
  Polytope slice;
  bool reflexive = false;
  bool section_edge = false;       // an edge of the slice with no interior lattice points
  bool dual_section_edge = false;  // same test on the dual polygon
};

FibrationPolygon fibration_polygon(const Polytope& delta, const LatticeVector& m);

}  // namespace fanolg
