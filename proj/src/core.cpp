#include "fanolg/core.hpp"

#include <numeric>
#include <sstream>

namespace fanolg {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw PreconditionError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

void require_rank(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    std::ostringstream os;
    os << what << ": rank " << got << " vs " << want;
    throw DimensionMismatch(os.str());
  }
}

bool LatticeVector::is_zero() const {
  for (auto x : c_)
    if (x != 0) return false;
  return true;
}

std::int64_t LatticeVector::gcd() const {
  std::int64_t g = 0;
  for (auto x : c_) g = std::gcd(g, x);
  return g;
}

LatticeVector LatticeVector::primitive() const {
  auto g = gcd();
  if (g == 0) return *this;
  LatticeVector r(*this);
  for (auto& x : r.c_) x /= g;
  return r;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
  require_rank(o.rank(), rank(), "lattice add");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o) {
  require_rank(o.rank(), rank(), "lattice sub");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

LatticeVector operator-(LatticeVector a) {
  for (auto& x : a.c_) x = -x;
  return a;
}

LatticeVector operator*(std::int64_t k, LatticeVector a) {
  for (auto& x : a.c_) x *= k;
  return a;
}

std::int64_t dot(const LatticeVector& a, const LatticeVector& b) {
  require_rank(a.rank(), b.rank(), "dot");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.rank(); ++i) s += a[i] * b[i];
  return s;
}

std::string to_string(const LatticeVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.rank(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

RationalVector::RationalVector(const LatticeVector& v) {
  c_.reserve(v.rank());
  for (auto x : v) c_.emplace_back(static_cast<long>(x));
}

bool RationalVector::is_integral() const {
  for (const auto& q : c_)
    if (q.get_den() != 1) return false;
  return true;
}

LatticeVector RationalVector::to_lattice() const {
  LatticeVector r(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    if (c_[i].get_den() != 1 || !c_[i].get_num().fits_slong_p())
      throw PreconditionError("non-integral point " + to_string(*this));
    r[i] = c_[i].get_num().get_si();
  }
  return r;
}

RationalVector& RationalVector::operator+=(const RationalVector& o) {
  require_rank(o.rank(), rank(), "rational add");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

RationalVector& RationalVector::operator-=(const RationalVector& o) {
  require_rank(o.rank(), rank(), "rational sub");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

RationalVector operator*(const Rational& k, RationalVector a) {
  for (auto& x : a.c_) x *= k;
  return a;
}

bool operator==(const RationalVector& a, const RationalVector& b) { return a.c_ == b.c_; }

bool operator<(const RationalVector& a, const RationalVector& b) {
  return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  require_rank(a.rank(), b.rank(), "dot");
  Rational s = 0;
  for (std::size_t i = 0; i < a.rank(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const LatticeVector& a, const RationalVector& b) {
  require_rank(a.rank(), b.rank(), "dot");
  Rational s = 0;
  for (std::size_t i = 0; i < a.rank(); ++i) s += Rational(static_cast<long>(a[i])) * b[i];
  return s;
}

std::string to_string(const RationalVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.rank(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) { return os << to_string(v); }
std::ostream& operator<<(std::ostream& os, const RationalVector& v) { return os << to_string(v); }

}  // namespace fanolg
