#pragma once

#include "fanolg/linalg.hpp"

#include <vector>

namespace fanolg {

struct LPResult {
  bool bounded = true;
  Rational value;
  std::vector<Rational> x;
};

// max c.x subject to A x <= b, x >= 0, with b >= 0 so the origin is feasible.
// Dense exact tableau simplex with Bland's rule.
LPResult maximize(const RationalMatrix& a, const std::vector<Rational>& b, const std::vector<Rational>& c);

// Whether the triangulation of a point configuration in Q^d given by
// full-dimensional simplices (index lists of size d + 1) is regular: some
// heights in [0, 1] fold strictly upward across every interior wall.
bool is_regular_subdivision(const std::vector<RationalVector>& points,
                            const std::vector<std::vector<std::size_t>>& simplices);

}  // namespace fanolg
