#include "fanolg/linalg.hpp"

#include <utility>

namespace fanolg {

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_rank(rows[i].size(), m.cols(), "matrix row");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix RationalMatrix::from_int_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_rank(rows[i].size(), m.cols(), "matrix row");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = Rational(static_cast<long>(rows[i][j]));
  }
  return m;
}

std::vector<Rational> RationalMatrix::row(std::size_t i) const {
  return {a_.begin() + static_cast<long>(i * c_), a_.begin() + static_cast<long>((i + 1) * c_)};
}

void RationalMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < c_; ++k) std::swap(a_[i * c_ + k], a_[j * c_ + k]);
}

Echelon row_reduce(RationalMatrix m) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t p = r;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    Rational inv = 1 / m(r, col);
    for (std::size_t k = col; k < m.cols(); ++k) m(r, k) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, col) == 0) continue;
      Rational f = m(i, col);
      for (std::size_t k = col; k < m.cols(); ++k) m(i, k) -= f * m(r, k);
    }
    e.pivots.push_back(col);
    ++r;
  }
  e.reduced = std::move(m);
  return e;
}

std::size_t rank(const RationalMatrix& m) { return row_reduce(m).pivots.size(); }

Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
  Rational det = 1;
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m(p, col) == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      m.swap_rows(p, col);
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col) == 0) continue;
      Rational f = m(i, col) / m(col, col);
      for (std::size_t k = col; k < n; ++k) m(i, k) -= f * m(col, k);
    }
  }
  return det;
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
  auto e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<LinearSolution> solve(const RationalMatrix& m, const std::vector<Rational>& b) {
  require_rank(b.size(), m.rows(), "solve rhs");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto e = row_reduce(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  LinearSolution s;
  s.particular.assign(m.cols(), Rational(0));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) s.particular[e.pivots[i]] = e.reduced(i, m.cols());
  s.kernel = nullspace(m);
  return s;
}

IntMatrix to_int_matrix(const std::vector<LatticeVector>& rows) {
  IntMatrix m;
  for (const auto& r : rows) {
    std::vector<Integer> row;
    for (auto x : r) row.emplace_back(static_cast<long>(x));
    m.push_back(std::move(row));
  }
  return m;
}

Integer determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& r : m) require_rank(r.size(), n, "determinant");
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

IntMatrix hermite_normal_form(IntMatrix m) {
  if (m.empty()) return m;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    // Euclid on column c among rows r..end.
    for (;;) {
      std::size_t best = m.size();
      for (std::size_t i = r; i < m.size(); ++i)
        if (m[i][c] != 0 && (best == m.size() || abs(m[i][c]) < abs(m[best][c]))) best = i;
      if (best == m.size()) break;
      std::swap(m[r], m[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < m.size(); ++i) {
        if (m[i][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
        for (std::size_t k = c; k < cols; ++k) m[i][k] -= q * m[r][k];
        if (m[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r >= m.size() || m[r][c] == 0) continue;
    if (m[r][c] < 0)
      for (auto& x : m[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
      if (q != 0)
        for (std::size_t k = c; k < cols; ++k) m[i][k] -= q * m[r][k];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

std::vector<LatticeVector> integer_kernel_basis(const std::vector<LatticeVector>& rows, std::size_t n) {
  // Column operations on [A; I]: reduce A to column echelon form, the trailing
  // identity columns then span the kernel over Z.
  IntMatrix a = to_int_matrix(rows);
  for (auto& r : a) require_rank(r.size(), n, "kernel basis");
  IntMatrix u(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  auto colop = [&](std::size_t dst, std::size_t src, const Integer& q) {
    for (auto& r : a) r[dst] -= q * r[src];
    for (auto& r : u) r[dst] -= q * r[src];
  };
  auto colswap = [&](std::size_t i, std::size_t j) {
    for (auto& r : a) std::swap(r[i], r[j]);
    for (auto& r : u) std::swap(r[i], r[j]);
  };
  std::size_t piv = 0;
  for (std::size_t row = 0; row < a.size() && piv < n; ++row) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t j = piv; j < n; ++j)
        if (a[row][j] != 0 && (best == n || abs(a[row][j]) < abs(a[row][best]))) best = j;
      if (best == n) break;
      colswap(piv, best);
      bool done = true;
      for (std::size_t j = piv + 1; j < n; ++j) {
        if (a[row][j] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[row][j].get_mpz_t(), a[row][piv].get_mpz_t());
        colop(j, piv, q);
        if (a[row][j] != 0) done = false;
      }
      if (done) {
        ++piv;
        break;
      }
    }
  }
  IntMatrix kern;
  for (std::size_t j = piv; j < n; ++j) {
    std::vector<Integer> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = u[i][j];
    kern.push_back(std::move(v));
  }
  kern = hermite_normal_form(std::move(kern));
  std::vector<LatticeVector> out;
  for (const auto& v : kern) {
    LatticeVector lv(n);
    for (std::size_t i = 0; i < n; ++i) lv[i] = v[i].get_si();
    out.push_back(lv);
  }
  return out;
}

std::vector<Integer> primitive_integer(std::vector<Integer> v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return v;
}

std::vector<Integer> primitive_integer(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> r;
  r.reserve(v.size());
  for (const auto& q : v) r.push_back(Integer(q * l));
  return primitive_integer(std::move(r));
}

}  // namespace fanolg
