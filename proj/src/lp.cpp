#include "fanolg/lp.hpp"

#include <algorithm>
#include <map>

namespace fanolg {

LPResult maximize(const RationalMatrix& a, const std::vector<Rational>& b, const std::vector<Rational>& c) {
  const std::size_t m = a.rows(), n = a.cols();
  require_rank(b.size(), m, "lp rhs");
  require_rank(c.size(), n, "lp objective");
  for (const auto& x : b)
    if (x < 0) throw PreconditionError("lp needs a feasible origin");
  // columns: n structural, m slack, then rhs
  const std::size_t w = n + m + 1;
  std::vector<Rational> t((m + 1) * w, Rational(0));
  auto at = [&](std::size_t i, std::size_t j) -> Rational& { return t[i * w + j]; };
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) at(i, j) = a(i, j);
    at(i, n + i) = 1;
    at(i, w - 1) = b[i];
    basis[i] = n + i;
  }
  // objective row holds -c; optimal once no entry is negative
  for (std::size_t j = 0; j < n; ++j) at(m, j) = -c[j];

  LPResult res;
  for (;;) {
    std::size_t enter = w;
    for (std::size_t j = 0; j + 1 < w; ++j)
      if (at(m, j) < 0) {
        enter = j;
        break;
      }
    if (enter == w) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (at(i, enter) <= 0) continue;
      Rational r = at(i, w - 1) / at(i, enter);
      if (leave == m || r < best || (r == best && basis[i] < basis[leave])) {
        leave = i;
        best = r;
      }
    }
    if (leave == m) {
      res.bounded = false;
      return res;
    }
    Rational piv = at(leave, enter);
    for (std::size_t j = 0; j < w; ++j) at(leave, j) /= piv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || at(i, enter) == 0) continue;
      Rational f = at(i, enter);
      for (std::size_t j = 0; j < w; ++j)
        if (at(leave, j) != 0) at(i, j) -= f * at(leave, j);
    }
    basis[leave] = enter;
  }
  res.value = at(m, w - 1);
  res.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) res.x[basis[i]] = at(i, w - 1);
  return res;
}

bool is_regular_subdivision(const std::vector<RationalVector>& points,
                            const std::vector<std::vector<std::size_t>>& simplices) {
  if (points.empty() || simplices.empty()) throw PreconditionError("empty configuration");
  const std::size_t d = points[0].rank(), np = points.size();
  // wall (sorted d-subset) -> (simplex, opposite vertex)
  std::map<std::vector<std::size_t>, std::vector<std::pair<std::size_t, std::size_t>>> walls;
  for (std::size_t s = 0; s < simplices.size(); ++s) {
    const auto& sim = simplices[s];
    require_rank(sim.size(), d + 1, "simplex");
    for (std::size_t drop = 0; drop <= d; ++drop) {
      std::vector<std::size_t> f;
      for (std::size_t t = 0; t <= d; ++t)
        if (t != drop) f.push_back(sim[t]);
      std::sort(f.begin(), f.end());
      walls[f].emplace_back(s, sim[drop]);
    }
  }
  // variables h_0..h_{np-1}, s; rows: one per interior wall, h_v <= 1, s <= 2
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (const auto& [f, inc] : walls) {
    if (inc.size() == 1) continue;
    if (inc.size() != 2) throw PreconditionError("wall shared by more than two simplices");
    const auto& sim = simplices[inc[0].first];
    std::size_t q = inc[1].second;
    // affine coordinates mu of q in the first simplex
    RationalMatrix m(d + 1, d + 1);
    std::vector<Rational> rh(d + 1);
    for (std::size_t col = 0; col <= d; ++col) {
      for (std::size_t r = 0; r < d; ++r) m(r, col) = points[sim[col]][r];
      m(d, col) = 1;
    }
    for (std::size_t r = 0; r < d; ++r) rh[r] = points[q][r];
    rh[d] = 1;
    auto sol = solve(m, rh);
    if (!sol || !sol->kernel.empty()) throw PreconditionError("degenerate simplex");
    std::vector<Rational> row(np + 1, Rational(0));
    for (std::size_t col = 0; col <= d; ++col) row[sim[col]] += sol->particular[col];
    row[q] -= 1;
    row[np] = 1;
    rows.push_back(std::move(row));
    rhs.push_back(Rational(1));
  }
  for (std::size_t v = 0; v < np; ++v) {
    std::vector<Rational> row(np + 1, Rational(0));
    row[v] = 1;
    rows.push_back(std::move(row));
    rhs.push_back(Rational(1));
  }
  {
    std::vector<Rational> row(np + 1, Rational(0));
    row[np] = 1;
    rows.push_back(std::move(row));
    rhs.push_back(Rational(2));
  }
  std::vector<Rational> obj(np + 1, Rational(0));
  obj[np] = 1;
  // s' = fold slack + 1, so a positive minimal fold means optimum above 1
  auto r = maximize(RationalMatrix::from_rows(rows), rhs, obj);
  return r.bounded && r.value > 1;
}

}  // namespace fanolg
