#include "fanolg/cone.hpp"

#include "fanolg/linalg.hpp"

#include <algorithm>
#include <cstdint>

namespace fanolg {

namespace {

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : w_((n + 63) / 64, 0) {}
  void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1u; }
  Bits operator&(const Bits& o) const {
    Bits r(*this);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
    return r;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_) c += static_cast<std::size_t>(__builtin_popcountll(x));
    return c;
  }

 private:
  std::vector<std::uint64_t> w_;
};

struct Ray {
  IntVector v;
  Bits zero;
};

}  // namespace

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<IntVector> cone_extreme_rays(const std::vector<IntVector>& rows, std::size_t dim) {
  for (const auto& r : rows) require_rank(r.size(), dim, "cone row");
  // Greedy independent subset for the initial simplicial cone.
  std::vector<std::size_t> basis;
  {
    std::vector<std::vector<Rational>> acc;
    for (std::size_t i = 0; i < rows.size() && basis.size() < dim; ++i) {
      std::vector<Rational> q(rows[i].begin(), rows[i].end());
      acc.push_back(q);
      if (rank(RationalMatrix::from_rows(acc)) == acc.size()) {
        basis.push_back(i);
      } else {
        acc.pop_back();
      }
    }
  }
  if (basis.size() < dim) throw PreconditionError("cone is not pointed");

  const std::size_t m = rows.size();
  std::vector<Ray> rays;
  for (std::size_t k = 0; k < dim; ++k) {
    // Ray tight on every basis row except k.
    RationalMatrix a(dim - 1, dim);
    std::size_t rr = 0;
    for (std::size_t j = 0; j < dim; ++j) {
      if (j == k) continue;
      for (std::size_t c = 0; c < dim; ++c) a(rr, c) = Rational(rows[basis[j]][c]);
      ++rr;
    }
    auto ns = nullspace(a);
    IntVector v = primitive_integer(ns.at(0));
    if (dot(rows[basis[k]], v) < 0)
      for (auto& x : v) x = -x;
    Ray ray{std::move(v), Bits(m)};
    for (std::size_t j = 0; j < dim; ++j)
      if (j != k) ray.zero.set(basis[j]);
    rays.push_back(std::move(ray));
  }
  std::vector<bool> done(m, false);
  for (auto b : basis) done[b] = true;

  for (std::size_t i = 0; i < m; ++i) {
    if (done[i]) continue;
    done[i] = true;
    std::vector<Integer> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(rows[i], rays[r].v);
      if (val[r] > 0) pos.push_back(r);
      else if (val[r] < 0) neg.push_back(r);
      else rays[r].zero.set(i);
    }
    if (neg.empty()) continue;
    std::vector<Ray> fresh;
    for (auto p : pos) {
      for (auto n : neg) {
        Bits common = rays[p].zero & rays[n].zero;
        if (common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == n) continue;
          if (common.subset_of(rays[r].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        IntVector v(dim);
        for (std::size_t c = 0; c < dim; ++c) v[c] = val[p] * rays[n].v[c] - val[n] * rays[p].v[c];
        v = primitive_integer(std::move(v));
        common.set(i);
        fresh.push_back(Ray{std::move(v), common});
      }
    }
    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (val[r] >= 0) next.push_back(std::move(rays[r]));
    for (auto& f : fresh) next.push_back(std::move(f));
    rays = std::move(next);
  }
  std::vector<IntVector> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<IntVector> cone_generators_minimal(const std::vector<IntVector>& generators, std::size_t dim) {
  // Dual of the dual: facets of cone(G) are rays of {u : <g,u> >= 0}; a
  // generator is extreme iff the facets tight at it have rank dim - 1.
  auto facets = cone_extreme_rays(generators, dim);
  std::vector<IntVector> out;
  for (const auto& g : generators) {
    std::vector<std::vector<Rational>> tight;
    for (const auto& f : facets)
      if (dot(f, g) == 0) tight.emplace_back(f.begin(), f.end());
    if (!tight.empty() && rank(RationalMatrix::from_rows(tight)) + 1 == dim) out.push_back(primitive_integer(g));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace fanolg
