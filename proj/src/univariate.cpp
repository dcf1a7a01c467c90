#include "fanolg/univariate.hpp"

#include <algorithm>
#include <map>

namespace fanolg {

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::monomial(std::size_t k, const Rational& a) {
  std::vector<Rational> c(k + 1, Rational(0));
  c[k] = a;
  return UPoly(std::move(c));
}

Rational UPoly::eval(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (c_.empty()) return {};
  Rational l = c_.back();
  UPoly r(*this);
  for (auto& x : r.c_) x /= l;
  return r;
}

UPoly UPoly::pow(unsigned k) const {
  UPoly r = constant(1), b = *this;
  while (k) {
    if (k & 1u) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

UPoly UPoly::compose(const UPoly& g) const {
  UPoly r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * g + constant(*it);
  return r;
}

int UPoly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return -1;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(r));
}

UPoly operator*(const Rational& k, const UPoly& a) {
  UPoly r(a);
  for (auto& x : r.c_) x *= k;
  r.trim();
  return r;
}

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& a = c_[k];
    if (a == 0) continue;
    if (!s.empty()) s += a < 0 ? " - " : " + ";
    else if (a < 0) s += "-";
    Rational m = abs(a);
    if (k == 0 || m != 1) s += m.get_str();
    if (k > 0) {
      if (m != 1) s += "*";
      s += var;
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  std::vector<Rational> r = a.coefficients();
  const auto& d = b.coefficients();
  if (r.size() < d.size()) return {UPoly(), a};
  std::vector<Rational> q(r.size() - d.size() + 1, Rational(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational f = r[k + d.size() - 1] / d.back();
    q[k] = f;
    if (f != 0)
      for (std::size_t j = 0; j < d.size(); ++j) r[k + j] -= f * d[j];
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<std::pair<UPoly, int>> square_free_decomposition(const UPoly& a) {
  // Yun's algorithm.
  std::vector<std::pair<UPoly, int>> out;
  if (a.degree() <= 0) return out;
  UPoly f = a.monic();
  UPoly fp = f.derivative();
  UPoly g = gcd(f, fp);
  UPoly c = divmod(f, g).first;
  UPoly d = divmod(fp, g).first - c.derivative();
  for (int i = 1; c.degree() > 0; ++i) {
    UPoly h = gcd(c, d);
    if (h.degree() > 0) out.emplace_back(h, i);
    c = divmod(c, h).first;
    d = divmod(d, h).first - c.derivative();
  }
  return out;
}

namespace {

std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> out;
  if (n == 0) return out;
  if (n > Integer(1000000000)) throw PreconditionError("rational root search: coefficient too large");
  unsigned long m = n.get_ui();
  for (unsigned long d = 1; d * d <= m; ++d)
    if (m % d == 0) {
      out.emplace_back(d);
      if (d * d != m) out.emplace_back(m / d);
    }
  return out;
}

}  // namespace

std::vector<std::pair<Rational, int>> rational_roots(const UPoly& a) {
  std::vector<std::pair<Rational, int>> out;
  if (a.degree() <= 0) return out;
  UPoly p = a;
  int z = p.valuation();
  if (z > 0) {
    out.emplace_back(Rational(0), z);
    p = divmod(p, UPoly::monomial(static_cast<std::size_t>(z))).first;
  }
  if (p.degree() <= 0) return out;
  // clear denominators
  Integer l = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  Integer lead = Integer(p.leading() * l), cst = Integer(p[0] * l);
  std::map<Rational, int> found;
  for (const auto& num : divisors(cst))
    for (const auto& den : divisors(lead))
      for (int sgn : {1, -1}) {
        Rational r = make_rational(num * sgn, den);
        if (found.count(r)) continue;
        int mult = 0;
        UPoly q = p;
        for (;;) {
          auto [quo, rem] = divmod(q, UPoly({-r, Rational(1)}));
          if (!rem.is_zero()) break;
          ++mult;
          q = quo;
        }
        if (mult) found[r] = mult;
      }
  for (auto& [r, m] : found) out.emplace_back(r, m);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fanolg
