#pragma once

#include "fanolg/core.hpp"
#include "fanolg/lattice_geometry.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fanolg {

class LaurentPolynomial {
 public:
  using Terms = std::map<LatticeVector, Rational>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(std::size_t rank) : rank_(rank) {}
  static LaurentPolynomial constant(std::size_t rank, const Rational& c);
  static LaurentPolynomial monomial(const LatticeVector& e, const Rational& c = 1);
  static LaurentPolynomial variable(std::size_t rank, std::size_t i);

  std::size_t rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const LatticeVector& e) const;
  void add_term(const LatticeVector& e, const Rational& c);
  std::vector<LatticeVector> support() const;
  bool integral_coefficients() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const Rational& c);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(const Rational& c, LaurentPolynomial a) { return a *= c; }
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

  LaurentPolynomial pow(unsigned k) const;
  // Human-readable form over x, y, z, w (fallback x0, x1, ...).
  std::string to_string() const;

 private:
  std::size_t rank_ = 0;
  Terms terms_;
};

LaurentPolynomial multiply(const LaurentPolynomial& f, const LaurentPolynomial& g);
// Exact quotient a / b, or nothing when b does not divide a.
std::optional<LaurentPolynomial> exact_divide(const LaurentPolynomial& a, const LaurentPolynomial& b);
Rational constant_term(const LaurentPolynomial& f);
Polytope newton_polytope(const LaurentPolynomial& f);
// Exponents mapped e -> A e; A must be unimodular.
LaurentPolynomial act_by_lattice_automorphism(const LaurentPolynomial& f,
                                              const std::vector<std::vector<std::int64_t>>& a);

// Parses the small grammar + - * / ^ over x, y, z and integers, with implicit
// multiplication. Division must be exact.
LaurentPolynomial parse_laurent(const std::string& text, std::size_t rank = 3);

struct PowerSeriesPrefix {
  std::vector<Rational> coefficients;  // indices 0..order
  std::size_t order() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  const Rational& operator[](std::size_t i) const { return coefficients[i]; }
  friend bool operator==(const PowerSeriesPrefix&, const PowerSeriesPrefix&) = default;
};

PowerSeriesPrefix phi_series(const LaurentPolynomial& f, std::size_t order);
// Series of f + alpha from the series of f.
PowerSeriesPrefix shift_series(const PowerSeriesPrefix& s, const Rational& alpha);
std::optional<Rational> match_up_to_shift(const LaurentPolynomial& f, const LaurentPolynomial& g, std::size_t order);

}  // namespace fanolg
