#include "fanolg/triangulation.hpp"

#include "fanolg/linalg.hpp"
#include "fanolg/lp.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace fanolg {

ValencySpec valency_in(std::vector<int> allowed, ValencyMode mode) {
  std::sort(allowed.begin(), allowed.end());
  int mx = allowed.back();
  std::string name = "{";
  for (std::size_t i = 0; i < allowed.size(); ++i) name += (i ? "," : "") + std::to_string(allowed[i]);
  name += "}";
  ValencySpec s;
  s.name = (mode == ValencyMode::Coned ? "coned " : "surface ") + name;
  s.mode = mode;
  s.viable = [mx](const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [mx](int x) { return x <= mx; });
  };
  s.accept = [allowed](const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(),
                       [&](int x) { return std::binary_search(allowed.begin(), allowed.end(), x); });
  };
  return s;
}

ValencySpec one_six_rest_four_five() {
  ValencySpec s;
  s.name = "one 6, rest {4,5}";
  s.viable = [](const std::vector<int>& v) {
    int six = 0;
    for (int x : v) {
      if (x > 6) return false;
      if (x == 6) ++six;
    }
    return six <= 1;
  };
  s.accept = [](const std::vector<int>& v) {
    int six = 0;
    for (int x : v) {
      if (x == 6) ++six;
      else if (x != 4 && x != 5) return false;
    }
    return six == 1;
  };
  return s;
}

namespace {

std::int64_t det3(const LatticeVector& a, const LatticeVector& b, const LatticeVector& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

std::set<std::pair<std::size_t, std::size_t>> edges_of(const std::vector<Triangle>& tris) {
  std::set<std::pair<std::size_t, std::size_t>> e;
  for (const auto& t : tris) {
    e.emplace(t[0], t[1]);
    e.emplace(t[0], t[2]);
    e.emplace(t[1], t[2]);
  }
  return e;
}

std::vector<int> valency_vector(std::size_t npts, const std::vector<Triangle>& tris, ValencyMode mode) {
  std::vector<int> v(npts, mode == ValencyMode::Coned ? 1 : 0);
  for (const auto& [a, b] : edges_of(tris)) {
    ++v[a];
    ++v[b];
  }
  return v;
}

// 2-d orientation of (a, b, c) after dropping coordinate `drop`
std::int64_t orient(const LatticeVector& a, const LatticeVector& b, const LatticeVector& c, std::size_t drop) {
  std::size_t i = drop == 0 ? 1 : 0, j = drop == 2 ? 1 : 2;
  return (b[i] - a[i]) * (c[j] - a[j]) - (b[j] - a[j]) * (c[i] - a[i]);
}

}  // namespace

std::vector<std::vector<Triangle>> facet_unimodular_triangulations(const Polytope& p, std::size_t facet,
                                                                   const std::vector<LatticeVector>& points) {
  const Facet& f = p.facets().at(facet);
  std::vector<std::size_t> fp;  // global indices of the facet's lattice points
  for (std::size_t i = 0; i < points.size(); ++i)
    if (dot(f.normal, RationalVector(points[i])) + f.offset == 0) fp.push_back(i);
  // project by dropping a coordinate on which the normal is nonzero
  std::size_t drop = 0;
  while (f.normal[drop] == 0) ++drop;
  auto P = [&](std::size_t local) -> const LatticeVector& { return points[fp[local]]; };
  const std::size_t n = fp.size();

  auto on_segment = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (orient(P(a), P(b), P(c), drop) != 0) return false;
    for (std::size_t k = 0; k < 3; ++k) {
      auto lo = std::min(P(a)[k], P(b)[k]), hi = std::max(P(a)[k], P(b)[k]);
      if (P(c)[k] < lo || P(c)[k] > hi) return false;
    }
    return true;
  };
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      bool elementary = true;
      for (std::size_t c = 0; c < n && elementary; ++c)
        if (c != a && c != b && on_segment(a, b, c)) elementary = false;
      if (elementary) edges.emplace_back(a, b);
    }
  const std::size_t ne = edges.size();
  std::vector<std::vector<bool>> cross(ne, std::vector<bool>(ne, false));
  for (std::size_t e = 0; e < ne; ++e)
    for (std::size_t g = e + 1; g < ne; ++g) {
      auto [a, b] = edges[e];
      auto [c, d] = edges[g];
      if (a == c || a == d || b == c || b == d) continue;
      auto o1 = orient(P(a), P(b), P(c), drop), o2 = orient(P(a), P(b), P(d), drop);
      auto o3 = orient(P(c), P(d), P(a), drop), o4 = orient(P(c), P(d), P(b), drop);
      bool x = ((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) && ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0));
      cross[e][g] = cross[g][e] = x;
    }

  std::vector<std::vector<Triangle>> out;
  std::vector<bool> chosen(ne, false);
  std::function<void(std::size_t)> rec = [&](std::size_t e) {
    if (e == ne) {
      // maximality: every unchosen edge crosses a chosen one
      for (std::size_t g = 0; g < ne; ++g) {
        if (chosen[g]) continue;
        bool blocked = false;
        for (std::size_t h = 0; h < ne && !blocked; ++h) blocked = chosen[h] && cross[g][h];
        if (!blocked) return;
      }
      std::set<std::pair<std::size_t, std::size_t>> es;
      for (std::size_t g = 0; g < ne; ++g)
        if (chosen[g]) es.insert(edges[g]);
      std::vector<Triangle> tris;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
          for (std::size_t c = b + 1; c < n; ++c) {
            if (!es.count({a, b}) || !es.count({a, c}) || !es.count({b, c})) continue;
            if (orient(P(a), P(b), P(c), drop) == 0) continue;
            auto s1 = orient(P(a), P(b), P(c), drop);
            bool empty = true;
            for (std::size_t q = 0; q < n && empty; ++q) {
              if (q == a || q == b || q == c) continue;
              auto x = orient(P(a), P(b), P(q), drop), y = orient(P(b), P(c), P(q), drop),
                   z = orient(P(c), P(a), P(q), drop);
              bool in = s1 > 0 ? (x >= 0 && y >= 0 && z >= 0) : (x <= 0 && y <= 0 && z <= 0);
              if (in) empty = false;
            }
            if (!empty) continue;
            Triangle t{fp[a], fp[b], fp[c]};
            std::sort(t.begin(), t.end());
            tris.push_back(t);
          }
      for (const auto& t : tris) {
        auto d = det3(points[t[0]], points[t[1]], points[t[2]]);
        if (d != 1 && d != -1) return;
      }
      std::sort(tris.begin(), tris.end());
      out.push_back(std::move(tris));
      return;
    }
    bool ok = true;
    for (std::size_t g = 0; g < e && ok; ++g) ok = !(chosen[g] && cross[e][g]);
    if (ok) {
      chosen[e] = true;
      rec(e + 1);
      chosen[e] = false;
    }
    rec(e + 1);
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_unimodular(const BoundaryTriangulation& t) {
  for (const auto& tr : t.triangles) {
    auto d = det3(t.points[tr[0]], t.points[tr[1]], t.points[tr[2]]);
    if (d != 1 && d != -1) return false;
  }
  return true;
}

bool is_boundary_cover(const BoundaryTriangulation& t) {
  // each triangle lies in a facet, the coned volumes add up, and each edge
  // borders exactly two triangles
  const auto& p = t.polytope;
  Rational vol = 0;
  for (const auto& tr : t.triangles) {
    bool in_facet = false;
    for (const auto& f : p.facets()) {
      bool all = true;
      for (auto i : tr) all = all && dot(f.normal, RationalVector(t.points[i])) + f.offset == 0;
      if (all) in_facet = true;
    }
    if (!in_facet) return false;
    vol += std::abs(det3(t.points[tr[0]], t.points[tr[1]], t.points[tr[2]]));
  }
  if (vol != normalized_volume(p)) return false;
  std::map<std::pair<std::size_t, std::size_t>, int> cnt;
  for (const auto& tr : t.triangles) {
    ++cnt[{tr[0], tr[1]}];
    ++cnt[{tr[0], tr[2]}];
    ++cnt[{tr[1], tr[2]}];
  }
  for (const auto& [e, c] : cnt)
    if (c != 2) return false;
  return true;
}

bool is_regular(const BoundaryTriangulation& t) {
  // cone over the boundary: origin appended as the last point
  std::vector<RationalVector> pts;
  for (const auto& p : t.points) pts.emplace_back(p);
  pts.emplace_back(t.polytope.rank());
  const std::size_t o = t.points.size();
  std::vector<std::vector<std::size_t>> sims;
  for (const auto& tr : t.triangles) sims.push_back({tr[0], tr[1], tr[2], o});
  return is_regular_subdivision(pts, sims);
}

std::vector<int> valencies(const BoundaryTriangulation& t, ValencyMode mode) {
  return valency_vector(t.points.size(), t.triangles, mode);
}

std::map<LatticeVector, int> valency_profile(const BoundaryTriangulation& t, ValencyMode mode) {
  std::map<LatticeVector, int> m;
  auto v = valencies(t, mode);
  for (std::size_t i = 0; i < v.size(); ++i) m[t.points[i]] = v[i];
  return m;
}

std::size_t edge_count(const BoundaryTriangulation& t) { return edges_of(t.triangles).size(); }

std::optional<BoundaryTriangulation> search_triangulation(const Polytope& p, const ValencySpec& spec) {
  if (p.rank() != 3 || !p.full_dimensional() || !p.origin_in_interior() || !is_reflexive(p))
    throw PreconditionError("search_triangulation needs a reflexive 3-polytope");
  BoundaryTriangulation t;
  t.polytope = p;
  t.points = boundary_lattice_points(p);
  std::vector<std::vector<std::vector<Triangle>>> per_facet;
  for (std::size_t f = 0; f < p.facets().size(); ++f) {
    per_facet.push_back(facet_unimodular_triangulations(p, f, t.points));
    if (per_facet.back().empty()) return std::nullopt;
  }
  std::vector<Triangle> cur;
  std::optional<BoundaryTriangulation> found;
  std::function<void(std::size_t)> rec = [&](std::size_t f) {
    if (found) return;
    auto v = valency_vector(t.points.size(), cur, spec.mode);
    if (!spec.viable(v)) return;
    if (f == per_facet.size()) {
      if (!spec.accept(v)) return;
      BoundaryTriangulation cand = t;
      cand.triangles = cur;
      std::sort(cand.triangles.begin(), cand.triangles.end());
      if (is_regular(cand)) found = std::move(cand);
      return;
    }
    for (const auto& choice : per_facet[f]) {
      auto mark = cur.size();
      cur.insert(cur.end(), choice.begin(), choice.end());
      rec(f + 1);
      cur.resize(mark);
      if (found) return;
    }
  };
  rec(0);
  return found;
}

IltenReport check_ilten_hypotheses(const Polytope& p) {
  IltenReport r;
  r.lattice_points = lattice_points(p).size();
  r.in_window = r.lattice_points >= 7 && r.lattice_points <= 11;
  r.reflexive = p.full_dimensional() && p.origin_in_interior() && is_reflexive(p);
  r.degree = 2 * (static_cast<long>(r.lattice_points) - 3);
  r.report.add("reflexive", r.reflexive);
  r.report.add("lattice-points", true, "m = " + std::to_string(r.lattice_points));
  if (r.in_window) {
    r.report.add("window", true, "7 <= m <= 11");
  } else {
    r.report.flag("window", "m = " + std::to_string(r.lattice_points) + " outside 7..11: theorem not applicable");
  }
  if (r.reflexive && r.in_window) {
    r.witness = search_triangulation(p, valency_in({5, 6}, ValencyMode::Coned));
    r.report.add("triangulation", r.witness.has_value(), "regular unimodular, coned valencies {5,6}");
  }
  r.report.add("degree", true, "2(m-3) = " + std::to_string(r.degree));
  return r;
}

}  // namespace fanolg
