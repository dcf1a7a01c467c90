#pragma once

#include "fanolg/lattice_geometry.hpp"

#include <array>
#include <vector>

namespace fanolg {

enum class SemigroupVariant { S, STilde };

struct GradedSemigroupSlice {
  long degree = 0;
  std::vector<LatticeVector> points;  // sorted
};

GradedSemigroupSlice semigroup_slice(const Polytope& nabla, long k, SemigroupVariant v);
// Bounded certificate: S and S-tilde slices agree for every k <= K.
bool very_ample_up_to(const Polytope& nabla, long K);
long default_very_ample_bound(const Polytope& nabla);
Integer ehrhart_count(const Polytope& nabla, long k);

// p_i + p_j = p_k + p_l with i <= j, k <= l and (i, j) < (k, l).
struct Degree2Relation {
  std::array<std::size_t, 4> idx;
};

struct RelationReport {
  std::vector<Degree2Relation> relations;
  std::size_t relation_rank = 0;         // Q-rank of the span of e_i+e_j-e_k-e_l
  std::size_t affine_relation_rank = 0;  // rank of all affine relations among the points
};

RelationReport degree2_relations(const std::vector<LatticeVector>& points);

}  // namespace fanolg
