#pragma once

#include "fanolg/laurent.hpp"
#include "fanolg/univariate.hpp"

#include <array>
#include <optional>

namespace fanolg {

struct D3Parameters {
  Rational lambda, a01, a02, a03, a11, a12;
  friend bool operator==(const D3Parameters&, const D3Parameters&) = default;
};

// D^3 + sum_{j=1..4} t^j P_j(D) with deg P_j <= 3.
class D3Operator {
 public:
  using Table = std::array<std::array<Rational, 4>, 4>;  // [j-1][d]

  D3Operator() = default;
  explicit D3Operator(Table c) : c_(std::move(c)) {}

  const Table& table() const { return c_; }
  const Rational& coefficient(int j, int d) const { return c_.at(j - 1).at(d); }
  UPoly p(int j) const;  // P_j as a polynomial in D
  Rational p_at(int j, long n) const;
  bool is_pure_head() const;  // operator equals D^3
  friend bool operator==(const D3Operator& a, const D3Operator& b) { return a.c_ == b.c_; }

 private:
  Table c_{};
};

D3Operator from_polynomials(const std::array<UPoly, 4>& p);
D3Operator expand_parametric(const D3Parameters& p);
PowerSeriesPrefix apply(const D3Operator& l, const PowerSeriesPrefix& s);
PowerSeriesPrefix fundamental_term(const D3Operator& l, std::size_t order);
// Unique generic operator annihilating s to order s.order() - 4, nothing when
// no operator of that shape exists; throws InsufficientOrder when ambiguous.
std::optional<D3Operator> fit_d3(const PowerSeriesPrefix& s);
std::optional<D3Parameters> match_parametric(const D3Operator& l);

}  // namespace fanolg
