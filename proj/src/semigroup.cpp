#include "fanolg/semigroup.hpp"

#include "fanolg/linalg.hpp"

#include <algorithm>
#include <map>

namespace fanolg {

namespace {

std::vector<LatticeVector> sumset(const std::vector<LatticeVector>& a, const std::vector<LatticeVector>& b) {
  std::vector<LatticeVector> out;
  out.reserve(a.size() * b.size());
  for (const auto& p : a)
    for (const auto& q : b) out.push_back(p + q);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

GradedSemigroupSlice semigroup_slice(const Polytope& nabla, long k, SemigroupVariant v) {
  if (k < 0) throw PreconditionError("negative grading");
  GradedSemigroupSlice s;
  s.degree = k;
  if (k == 0) {
    s.points = {LatticeVector(nabla.rank())};
    return s;
  }
  if (v == SemigroupVariant::STilde) {
    s.points = lattice_points(nabla.scaled(Rational(k)));
    return s;
  }
  auto base = lattice_points(nabla);
  std::vector<LatticeVector> acc = base;
  for (long i = 1; i < k; ++i) acc = sumset(acc, base);
  s.points = std::move(acc);
  return s;
}

bool very_ample_up_to(const Polytope& nabla, long K) {
  if (!nabla.is_lattice()) throw PreconditionError("very ampleness needs a lattice polytope");
  auto base = lattice_points(nabla);
  std::vector<LatticeVector> acc = base;
  for (long k = 1; k <= K; ++k) {
    if (k > 1) acc = sumset(acc, base);
    if (acc != lattice_points(nabla.scaled(Rational(k)))) return false;
  }
  return true;
}

long default_very_ample_bound(const Polytope& nabla) { return 2L * std::max(1, nabla.dimension()); }

Integer ehrhart_count(const Polytope& nabla, long k) {
  if (k < 0) throw PreconditionError("negative dilation");
  if (k == 0) return 1;
  return Integer(static_cast<unsigned long>(lattice_points(nabla.scaled(Rational(k))).size()));
}

RelationReport degree2_relations(const std::vector<LatticeVector>& points) {
  RelationReport r;
  const std::size_t n = points.size();
  {
    auto sorted = points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw PreconditionError("degree2_relations needs distinct points");
  }
  std::map<LatticeVector, std::vector<std::pair<std::size_t, std::size_t>>> by_sum;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) by_sum[points[i] + points[j]].emplace_back(i, j);
  std::vector<std::vector<Rational>> rows;
  for (const auto& [s, pairs] : by_sum) {
    for (std::size_t a = 0; a < pairs.size(); ++a)
      for (std::size_t b = a + 1; b < pairs.size(); ++b) {
        r.relations.push_back({{pairs[a].first, pairs[a].second, pairs[b].first, pairs[b].second}});
        std::vector<Rational> v(n, Rational(0));
        v[pairs[a].first] += 1;
        v[pairs[a].second] += 1;
        v[pairs[b].first] -= 1;
        v[pairs[b].second] -= 1;
        rows.push_back(std::move(v));
      }
  }
  std::sort(r.relations.begin(), r.relations.end(),
            [](const Degree2Relation& x, const Degree2Relation& y) { return x.idx < y.idx; });
  if (!rows.empty()) r.relation_rank = rank(RationalMatrix::from_rows(rows));
  if (n > 0) {
    // affine relations: kernel of the (rank+1) x n matrix with columns (p, 1)
    const std::size_t d = points[0].rank();
    RationalMatrix m(d + 1, n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < d; ++i) m(i, j) = Rational(static_cast<long>(points[j][i]));
      m(d, j) = 1;
    }
    r.affine_relation_rank = n - rank(m);
  }
  return r;
}

}  // namespace fanolg
