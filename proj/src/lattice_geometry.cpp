#include "fanolg/lattice_geometry.hpp"

#include "fanolg/cone.hpp"
#include "fanolg/linalg.hpp"

#include <algorithm>

namespace fanolg {

namespace {

Integer lcm_of_dens(const RationalVector& v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

LatticeVector to_lattice(const IntVector& v) {
  LatticeVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].fits_slong_p()) throw PreconditionError("normal entry overflows int64");
    r[i] = v[i].get_si();
  }
  return r;
}

}  // namespace

Polytope Polytope::hull(const std::vector<LatticeVector>& points) {
  std::vector<RationalVector> q;
  q.reserve(points.size());
  for (const auto& p : points) q.emplace_back(p);
  return hull(q);
}

Polytope Polytope::hull(const std::vector<RationalVector>& points) {
  if (points.empty()) throw PreconditionError("hull of empty point set");
  const std::size_t n = points[0].rank();
  for (const auto& p : points) require_rank(p.rank(), n, "hull");
  std::vector<RationalVector> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  Polytope out;
  out.rank_ = n;
  const RationalVector& p0 = pts[0];
  RationalMatrix diffs(pts.size() - 1, n);
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) diffs(i - 1, j) = pts[i][j] - p0[j];
  std::vector<std::size_t> piv;
  if (pts.size() > 1) piv = row_reduce(diffs).pivots;
  const std::size_t k = piv.size();
  out.dim_ = static_cast<int>(k);

  if (k < n) {
    std::vector<std::vector<Rational>> ns;
    if (pts.size() > 1) {
      ns = nullspace(diffs);
    } else {
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rational> e(n, Rational(0));
        e[j] = 1;
        ns.push_back(e);
      }
    }
    for (const auto& v : ns) {
      LatticeVector nv = to_lattice(primitive_integer(v));
      out.equations_.push_back({nv, dot(nv, p0)});
    }
  }
  if (k == 0) {
    out.vertices_ = {p0};
    return out;
  }

  // Facets of the projection to the pivot coordinates, as rays of the cone of
  // valid inequalities (a, b) with <a, q> + b >= 0.
  std::vector<IntVector> rows;
  rows.reserve(pts.size());
  for (const auto& p : pts) {
    RationalVector q(k + 1);
    for (std::size_t j = 0; j < k; ++j) q[j] = p[piv[j]];
    q[k] = 1;
    Integer l = lcm_of_dens(q);
    IntVector row(k + 1);
    for (std::size_t j = 0; j <= k; ++j) row[j] = Integer(q[j] * l);
    rows.push_back(std::move(row));
  }
  auto rays = cone_extreme_rays(rows, k + 1);
  std::vector<IntVector> proj_normals;
  for (const auto& r : rays) {
    Integer g = 0;
    for (std::size_t j = 0; j < k; ++j) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r[j].get_mpz_t());
    if (g == 0) continue;  // the trivial inequality 1 >= 0 cannot be extreme for bounded sets
    IntVector lifted(n, Integer(0));
    for (std::size_t j = 0; j < k; ++j) lifted[piv[j]] = r[j] / g;
    Facet f{to_lattice(lifted), make_rational(r[k], g)};
    out.facets_.push_back(std::move(f));
    proj_normals.push_back(IntVector(r.begin(), r.begin() + static_cast<long>(k)));
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<std::vector<Rational>> tight;
    for (std::size_t f = 0; f < out.facets_.size(); ++f)
      if (dot(out.facets_[f].normal, pts[i]) + out.facets_[f].offset == 0)
        tight.emplace_back(proj_normals[f].begin(), proj_normals[f].end());
    if (tight.size() >= k && fanolg::rank(RationalMatrix::from_rows(tight)) == k) out.vertices_.push_back(pts[i]);
  }
  std::sort(out.facets_.begin(), out.facets_.end(), [](const Facet& a, const Facet& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  });
  return out;
}

Polytope convex_hull(const std::vector<RationalVector>& points) { return Polytope::hull(points); }
Polytope convex_hull(const std::vector<LatticeVector>& points) { return Polytope::hull(points); }

bool Polytope::contains(const RationalVector& p) const {
  require_rank(p.rank(), rank_, "contains");
  for (const auto& e : equations_)
    if (dot(e.normal, p) != e.value) return false;
  for (const auto& f : facets_)
    if (dot(f.normal, p) + f.offset < 0) return false;
  if (dim_ == 0) return p == vertices_[0];
  return true;
}

bool Polytope::contains(const LatticeVector& p) const { return contains(RationalVector(p)); }

bool Polytope::contains_in_interior(const RationalVector& p) const {
  require_rank(p.rank(), rank_, "contains");
  for (const auto& e : equations_)
    if (dot(e.normal, p) != e.value) return false;
  for (const auto& f : facets_)
    if (dot(f.normal, p) + f.offset <= 0) return false;
  if (dim_ == 0) return p == vertices_[0];
  return true;
}

bool Polytope::origin_in_interior() const {
  return full_dimensional() && contains_in_interior(RationalVector(rank_));
}

bool Polytope::is_lattice() const {
  for (const auto& v : vertices_)
    if (!v.is_integral()) return false;
  return true;
}

std::vector<std::size_t> Polytope::facet_vertices(std::size_t i) const {
  std::vector<std::size_t> r;
  const auto& f = facets_.at(i);
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (dot(f.normal, vertices_[v]) + f.offset == 0) r.push_back(v);
  return r;
}

Polytope Polytope::scaled(const Rational& k) const {
  std::vector<RationalVector> v;
  for (const auto& x : vertices_) v.push_back(k * x);
  return hull(v);
}

Polytope Polytope::translated(const RationalVector& t) const {
  std::vector<RationalVector> v;
  for (const auto& x : vertices_) v.push_back(x + t);
  return hull(v);
}

Polytope dual_polytope(const Polytope& p) {
  if (!p.full_dimensional()) throw NotDualizable("polytope is not full-dimensional");
  std::vector<RationalVector> dv;
  for (const auto& f : p.facets()) {
    if (f.offset <= 0) throw NotDualizable("origin is not interior");
    RationalVector u(f.normal);
    dv.push_back(Rational(1 / f.offset) * u);
  }
  return Polytope::hull(dv);
}

bool is_reflexive(const Polytope& p) { return p.is_lattice() && dual_polytope(p).is_lattice(); }

namespace {

template <class Pred>
std::vector<LatticeVector> scan_box(const Polytope& p, Pred keep) {
  const std::size_t n = p.rank();
  std::vector<std::int64_t> lo(n), hi(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational mn = p.vertices()[0][j], mx = mn;
    for (const auto& v : p.vertices()) {
      if (v[j] < mn) mn = v[j];
      if (v[j] > mx) mx = v[j];
    }
    lo[j] = ceil_of(mn).get_si();
    hi[j] = floor_of(mx).get_si();
    if (lo[j] > hi[j]) return {};
  }
  std::vector<LatticeVector> out;
  LatticeVector cur(lo);
  for (;;) {
    if (keep(RationalVector(cur))) out.push_back(cur);
    std::size_t j = n;
    while (j > 0) {
      --j;
      if (cur[j] < hi[j]) {
        ++cur[j];
        for (std::size_t t = j + 1; t < n; ++t) cur[t] = lo[t];
        break;
      }
      if (j == 0) return out;
    }
    if (n == 0) return out;
  }
}

}  // namespace

std::vector<LatticeVector> lattice_points(const Polytope& p) {
  return scan_box(p, [&](const RationalVector& x) { return p.contains(x); });
}

std::vector<LatticeVector> interior_lattice_points(const Polytope& p) {
  return scan_box(p, [&](const RationalVector& x) { return p.contains_in_interior(x); });
}

std::vector<LatticeVector> boundary_lattice_points(const Polytope& p) {
  return scan_box(p, [&](const RationalVector& x) { return p.contains(x) && !p.contains_in_interior(x); });
}

namespace {

void pull(const Polytope& q, std::vector<std::vector<RationalVector>>& out) {
  const auto& v = q.vertices();
  if (static_cast<int>(v.size()) == q.dimension() + 1) {
    out.push_back(v);
    return;
  }
  for (std::size_t f = 0; f < q.facets().size(); ++f) {
    auto fv = q.facet_vertices(f);
    if (std::find(fv.begin(), fv.end(), std::size_t{0}) != fv.end()) continue;
    std::vector<RationalVector> pts;
    for (auto i : fv) pts.push_back(v[i]);
    std::vector<std::vector<RationalVector>> sub;
    pull(Polytope::hull(pts), sub);
    for (auto& s : sub) {
      s.insert(s.begin(), v[0]);
      out.push_back(std::move(s));
    }
  }
}

}  // namespace

std::vector<std::vector<RationalVector>> pulling_triangulation(const Polytope& p) {
  std::vector<std::vector<RationalVector>> out;
  pull(p, out);
  return out;
}

Rational simplex_normalized_volume(const std::vector<RationalVector>& s) {
  if (s.empty()) throw PreconditionError("empty simplex");
  const std::size_t n = s[0].rank();
  if (s.size() != n + 1) throw DimensionMismatch("simplex needs rank + 1 vertices");
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = s[i + 1][j] - s[0][j];
  Rational d = determinant(std::move(m));
  return d < 0 ? Rational(-d) : d;
}

Rational normalized_volume(const Polytope& p) {
  if (!p.full_dimensional()) throw PreconditionError("volume of lower-dimensional polytope");
  Rational total = 0;
  for (const auto& s : pulling_triangulation(p)) total += simplex_normalized_volume(s);
  return total;
}

std::vector<LatticeVector> orthogonal_lattice_basis(const LatticeVector& m) {
  if (m.is_zero() || m.gcd() != 1) throw PreconditionError("slice normal must be primitive");
  return integer_kernel_basis({m}, m.rank());
}

Polytope hyperplane_slice(const Polytope& p, const LatticeVector& m) {
  require_rank(m.rank(), p.rank(), "hyperplane_slice");
  if (!p.full_dimensional()) throw PreconditionError("slice of lower-dimensional polytope");
  auto basis = orthogonal_lattice_basis(m);
  std::vector<RationalVector> pts;
  const auto& v = p.vertices();
  std::vector<Rational> h;
  for (const auto& x : v) h.push_back(dot(m, x));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (h[i] == 0) pts.push_back(v[i]);
    if (h[i] <= 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (h[j] >= 0) continue;
      Rational t = h[i] / (h[i] - h[j]);
      pts.push_back(v[i] + t * (v[j] - v[i]));
    }
  }
  if (pts.empty()) throw DegenerateSlice("slice is empty");
  // Coordinates in the basis: solve B^T y = x.
  const std::size_t n = p.rank(), k = basis.size();
  RationalMatrix bt(n, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) bt(i, j) = Rational(static_cast<long>(basis[j][i]));
  std::vector<RationalVector> coords;
  for (const auto& x : pts) {
    auto sol = solve(bt, x.coords());
    if (!sol || !sol->kernel.empty()) throw DegenerateSlice("point off the slice plane");
    coords.emplace_back(sol->particular);
  }
  Polytope out = Polytope::hull(coords);
  if (!out.full_dimensional()) throw DegenerateSlice("slice is not full-dimensional in m-perp");
  return out;
}

Polytope apply_linear(const Polytope& p, const std::vector<std::vector<std::int64_t>>& a) {
  std::vector<RationalVector> v;
  for (const auto& x : p.vertices()) {
    RationalVector y(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      require_rank(a[i].size(), x.rank(), "apply_linear");
      for (std::size_t j = 0; j < x.rank(); ++j) y[i] += Rational(static_cast<long>(a[i][j])) * x[j];
    }
    v.push_back(std::move(y));
  }
  return Polytope::hull(v);
}

}  // namespace fanolg
