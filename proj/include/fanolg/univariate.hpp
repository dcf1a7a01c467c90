#pragma once

#include "fanolg/core.hpp"

#include <utility>
#include <vector>

namespace fanolg {

// Dense univariate polynomial over Q; c[i] is the coefficient of t^i.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }
  UPoly(std::initializer_list<Rational> c) : c_(c) { trim(); }
  static UPoly constant(const Rational& a) { return UPoly({a}); }
  static UPoly monomial(std::size_t k, const Rational& a = 1);
  static UPoly t() { return monomial(1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  Rational eval(const Rational& x) const;
  UPoly derivative() const;
  UPoly monic() const;
  UPoly pow(unsigned k) const;
  UPoly compose(const UPoly& g) const;
  // Order of vanishing at t = 0.
  int valuation() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(const UPoly& a) { return UPoly() - a; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Rational& k, const UPoly& a);
  friend bool operator==(const UPoly&, const UPoly&) = default;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly gcd(UPoly a, UPoly b);  // monic
// Multiplicity m of each nonconstant monic factor f_m in the square-free
// decomposition a = c * prod_m f_m^m.
std::vector<std::pair<UPoly, int>> square_free_decomposition(const UPoly& a);
// Rational roots with multiplicity.
std::vector<std::pair<Rational, int>> rational_roots(const UPoly& a);

}  // namespace fanolg
