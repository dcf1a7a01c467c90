#include "fanolg/period.hpp"

#include "fanolg/linalg.hpp"

namespace fanolg {

UPoly D3Operator::p(int j) const {
  const auto& r = c_.at(j - 1);
  return UPoly({r[0], r[1], r[2], r[3]});
}

Rational D3Operator::p_at(int j, long n) const {
  const auto& r = c_.at(j - 1);
  Rational x(n);
  return ((r[3] * x + r[2]) * x + r[1]) * x + r[0];
}

bool D3Operator::is_pure_head() const {
  for (const auto& r : c_)
    for (const auto& x : r)
      if (x != 0) return false;
  return true;
}

D3Operator from_polynomials(const std::array<UPoly, 4>& p) {
  D3Operator::Table t{};
  for (int j = 0; j < 4; ++j) {
    if (p[j].degree() > 3) throw PreconditionError("P_j must have degree <= 3");
    for (int d = 0; d < 4; ++d) t[j][d] = p[j][d];
  }
  return D3Operator(t);
}

D3Operator expand_parametric(const D3Parameters& q) {
  const Rational& l = q.lambda;
  const Rational mu = q.a11 + l;  // a11 + lambda
  const UPoly D = UPoly::t(), one = UPoly::constant(1);
  auto c = [](const Rational& x) { return UPoly::constant(x); };
  UPoly D2 = D * D;
  std::array<UPoly, 4> p;
  p[0] = -((Rational(2) * D + one) * (c(l) * D2 + c(mu) * D2 + c(l) * D + c(mu) * D + c(l)));
  p[1] = (D + one) * (c(mu * mu) * D2 + c(l * l) * D2 + c(4 * mu * l) * D2 - c(q.a12) * D2 - c(2 * q.a01) * D2 +
                      c(8 * mu * l) * D - c(2 * q.a12) * D + c(2 * l * l) * D - c(4 * q.a01) * D + c(2 * mu * mu) * D +
                      c(6 * mu * l) + c(l * l) - c(4 * q.a01));
  p[2] = -((Rational(2) * D + UPoly::constant(3)) * (D + UPoly::constant(2)) * (D + one) *
           c(l * l * mu + mu * mu * l - q.a12 * l + q.a02 - mu * q.a01 - q.a01 * l));
  p[3] = (D + UPoly::constant(3)) * (D + UPoly::constant(2)) * (D + one) *
         c(-l * l * q.a12 + 2 * q.a02 * l + l * l * mu * mu - q.a03 + q.a01 * q.a01 - 2 * q.a01 * mu * l);
  return from_polynomials(p);
}

PowerSeriesPrefix apply(const D3Operator& op, const PowerSeriesPrefix& s) {
  if (s.coefficients.size() < 5) throw InsufficientOrder("apply needs series order >= 4");
  const std::size_t n_out = s.order() - 4;
  PowerSeriesPrefix r;
  r.coefficients.assign(n_out + 1, Rational(0));
  for (std::size_t n = 0; n <= n_out; ++n) {
    Rational x = Rational(static_cast<long>(n * n * n)) * s[n];
    for (int j = 1; j <= 4; ++j) {
      if (n < static_cast<std::size_t>(j)) break;
      x += op.p_at(j, static_cast<long>(n) - j) * s[n - j];
    }
    r.coefficients[n] = x;
  }
  return r;
}

PowerSeriesPrefix fundamental_term(const D3Operator& op, std::size_t order) {
  PowerSeriesPrefix r;
  r.coefficients.assign(order + 1, Rational(0));
  r.coefficients[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    Rational x = 0;
    for (int j = 1; j <= 4; ++j) {
      if (n < static_cast<std::size_t>(j)) break;
      x += op.p_at(j, static_cast<long>(n) - j) * r[n - j];
    }
    r.coefficients[n] = -x / Rational(static_cast<long>(n * n * n));
  }
  return r;
}

std::optional<D3Operator> fit_d3(const PowerSeriesPrefix& s) {
  if (s.order() < 25) throw InsufficientOrder("fit_d3 needs series order >= 25");
  const std::size_t rows = s.order() - 4 + 1;
  RationalMatrix m(rows, 16);
  std::vector<Rational> b(rows);
  for (std::size_t n = 0; n < rows; ++n) {
    b[n] = -Rational(static_cast<long>(n * n * n)) * s[n];
    for (int j = 1; j <= 4; ++j) {
      if (n < static_cast<std::size_t>(j)) break;
      Rational k(static_cast<long>(n) - j), pw = 1;
      for (int d = 0; d < 4; ++d) {
        m(n, static_cast<std::size_t>((j - 1) * 4 + d)) = pw * s[n - j];
        pw *= k;
      }
    }
  }
  auto sol = solve(m, b);
  if (!sol) return std::nullopt;
  if (!sol->kernel.empty())
    throw InsufficientOrder("ambiguous D3 fit: solution space of dimension " + std::to_string(sol->kernel.size()));
  D3Operator::Table t{};
  for (int j = 0; j < 4; ++j)
    for (int d = 0; d < 4; ++d) t[j][d] = sol->particular[static_cast<std::size_t>(j * 4 + d)];
  return D3Operator(t);
}

namespace {

// Constant k with p = k * base exactly, if any.
std::optional<Rational> scalar_multiple(const UPoly& p, const UPoly& base) {
  if (p.is_zero()) return Rational(0);
  auto [q, r] = divmod(p, base);
  if (!r.is_zero() || q.degree() != 0) return std::nullopt;
  return q[0];
}

}  // namespace

std::optional<D3Parameters> match_parametric(const D3Operator& op) {
  // The family is triangular in its parameters: P1 fixes lambda and
  // a11 + 2 lambda, P2 then a01 and a12, P3 a02, P4 a03.
  D3Parameters q;
  const UPoly D = UPoly::t(), one = UPoly::constant(1);
  UPoly p1 = op.p(1);
  q.lambda = -p1[0];
  Rational s = -p1[3] / 2;  // lambda + mu
  Rational mu = s - q.lambda;
  q.a11 = mu - q.lambda;
  UPoly want1 = -((Rational(2) * D + one) * UPoly({q.lambda, s, s}));
  if (want1 != p1) return std::nullopt;

  auto [p2q, p2r] = divmod(op.p(2), D + one);
  if (!p2r.is_zero()) return std::nullopt;
  const Rational& l = q.lambda;
  q.a01 = (6 * mu * l + l * l - p2q[0]) / 4;
  q.a12 = mu * mu + l * l + 4 * mu * l - 2 * q.a01 - p2q[2];
  if (p2q[1] != 8 * mu * l - 2 * q.a12 + 2 * l * l - 4 * q.a01 + 2 * mu * mu) return std::nullopt;

  auto k3 = scalar_multiple(op.p(3), -((Rational(2) * D + UPoly::constant(3)) * (D + UPoly::constant(2)) * (D + one)));
  if (!k3) return std::nullopt;
  q.a02 = *k3 - (l * l * mu + mu * mu * l - q.a12 * l - mu * q.a01 - q.a01 * l);

  auto k4 = scalar_multiple(op.p(4), (D + UPoly::constant(3)) * (D + UPoly::constant(2)) * (D + one));
  if (!k4) return std::nullopt;
  q.a03 = -*k4 - l * l * q.a12 + 2 * q.a02 * l + l * l * mu * mu + q.a01 * q.a01 - 2 * q.a01 * mu * l;

  if (expand_parametric(q) != op) return std::nullopt;
  return q;
}

}  // namespace fanolg
