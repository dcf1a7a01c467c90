#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fanolg {

using Integer = mpz_class;
using Rational = mpq_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define FANOLG_ERROR(name)                  \
  class name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

FANOLG_ERROR(DimensionMismatch);
FANOLG_ERROR(NotDualizable);
FANOLG_ERROR(DegenerateSlice);
FANOLG_ERROR(ParseError);
FANOLG_ERROR(PreconditionError);
FANOLG_ERROR(InsufficientOrder);
FANOLG_ERROR(InfeasiblePartition);
FANOLG_ERROR(ConstructionInconsistency);
FANOLG_ERROR(NonElliptic);
FANOLG_ERROR(NonUnimodular);

#undef FANOLG_ERROR

Rational make_rational(const Integer& num, const Integer& den = 1);
Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);
bool is_integral(const Rational& q);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

// Integer point of a lattice of fixed rank.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t rank) : c_(rank, 0) {}
  explicit LatticeVector(std::vector<std::int64_t> c) : c_(std::move(c)) {}
  LatticeVector(std::initializer_list<std::int64_t> c) : c_(c) {}

  std::size_t rank() const { return c_.size(); }
  std::int64_t operator[](std::size_t i) const { return c_[i]; }
  std::int64_t& operator[](std::size_t i) { return c_[i]; }
  const std::vector<std::int64_t>& coords() const { return c_; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }

  bool is_zero() const;
  std::int64_t gcd() const;
  LatticeVector primitive() const;

  LatticeVector& operator+=(const LatticeVector& o);
  LatticeVector& operator-=(const LatticeVector& o);
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator-(LatticeVector a);
  friend LatticeVector operator*(std::int64_t k, LatticeVector a);
  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;

 private:
  std::vector<std::int64_t> c_;
};

std::int64_t dot(const LatticeVector& a, const LatticeVector& b);
std::string to_string(const LatticeVector& v);

// Rational point; entries are kept canonical by gmp.
class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::size_t rank) : c_(rank, Rational(0)) {}
  explicit RationalVector(std::vector<Rational> c) : c_(std::move(c)) {}
  explicit RationalVector(const LatticeVector& v);
  RationalVector(std::initializer_list<Rational> c) : c_(c) {}

  std::size_t rank() const { return c_.size(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Rational>& coords() const { return c_; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }

  bool is_integral() const;
  LatticeVector to_lattice() const;  // throws unless integral

  RationalVector& operator+=(const RationalVector& o);
  RationalVector& operator-=(const RationalVector& o);
  friend RationalVector operator+(RationalVector a, const RationalVector& b) { return a += b; }
  friend RationalVector operator-(RationalVector a, const RationalVector& b) { return a -= b; }
  friend RationalVector operator*(const Rational& k, RationalVector a);

  friend bool operator==(const RationalVector& a, const RationalVector& b);
  friend bool operator<(const RationalVector& a, const RationalVector& b);
  friend bool operator!=(const RationalVector& a, const RationalVector& b) { return !(a == b); }

 private:
  std::vector<Rational> c_;
};

Rational dot(const RationalVector& a, const RationalVector& b);
Rational dot(const LatticeVector& a, const RationalVector& b);
std::string to_string(const RationalVector& v);

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);
std::ostream& operator<<(std::ostream& os, const RationalVector& v);

void require_rank(std::size_t got, std::size_t want, const char* what);

}  // namespace fanolg
