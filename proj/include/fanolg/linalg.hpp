#pragma once

#include "fanolg/core.hpp"

#include <optional>
#include <vector>

namespace fanolg {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, Rational(0)) {}
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RationalMatrix from_int_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  std::vector<Rational> row(std::size_t i) const;
  void swap_rows(std::size_t i, std::size_t j);

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Rational> a_;
};

struct Echelon {
  RationalMatrix reduced;             // reduced row echelon form
  std::vector<std::size_t> pivots;    // pivot column of each nonzero row
};

Echelon row_reduce(RationalMatrix m);
std::size_t rank(const RationalMatrix& m);
Rational determinant(RationalMatrix m);
// Basis of {x : m x = 0}, one vector per free column.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

struct LinearSolution {
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> kernel;
};
// Empty optional when m x = b is inconsistent.
std::optional<LinearSolution> solve(const RationalMatrix& m, const std::vector<Rational>& b);

using IntMatrix = std::vector<std::vector<Integer>>;

IntMatrix to_int_matrix(const std::vector<LatticeVector>& rows);
Integer determinant(const IntMatrix& m);
// Row-style Hermite normal form: upper echelon, positive pivots, reduced above.
IntMatrix hermite_normal_form(IntMatrix m);
// Z-basis of the integer kernel {x in Z^n : <r, x> = 0 for all rows r}, in Hermite form.
std::vector<LatticeVector> integer_kernel_basis(const std::vector<LatticeVector>& rows, std::size_t n);
// Scale a rational vector to a primitive integer vector with the same direction.
std::vector<Integer> primitive_integer(const std::vector<Rational>& v);
std::vector<Integer> primitive_integer(std::vector<Integer> v);

}  // namespace fanolg
