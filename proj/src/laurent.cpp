#include "fanolg/laurent.hpp"

#include "fanolg/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace fanolg {

LaurentPolynomial LaurentPolynomial::constant(std::size_t rank, const Rational& c) {
  LaurentPolynomial p(rank);
  p.add_term(LatticeVector(rank), c);
  return p;
}

LaurentPolynomial LaurentPolynomial::monomial(const LatticeVector& e, const Rational& c) {
  LaurentPolynomial p(e.rank());
  p.add_term(e, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::variable(std::size_t rank, std::size_t i) {
  LatticeVector e(rank);
  e[i] = 1;
  return monomial(e);
}

Rational LaurentPolynomial::coefficient(const LatticeVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPolynomial::add_term(const LatticeVector& e, const Rational& c) {
  require_rank(e.rank(), rank_, "laurent term");
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<LatticeVector> LaurentPolynomial::support() const {
  std::vector<LatticeVector> s;
  for (const auto& [e, c] : terms_) s.push_back(e);
  return s;
}

bool LaurentPolynomial::integral_coefficients() const {
  for (const auto& [e, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  require_rank(o.rank_, rank_, "laurent add");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  require_rank(o.rank_, rank_, "laurent sub");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  require_rank(b.rank_, a.rank_, "laurent multiply");
  LaurentPolynomial r(a.rank_);
  for (const auto& [e1, c1] : a.terms_)
    for (const auto& [e2, c2] : b.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

LaurentPolynomial multiply(const LaurentPolynomial& f, const LaurentPolynomial& g) { return f * g; }

LaurentPolynomial LaurentPolynomial::pow(unsigned k) const {
  LaurentPolynomial r = constant(rank_, 1), base = *this;
  while (k) {
    if (k & 1u) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  static const char* names[] = {"x", "y", "z", "w"};
  std::string s;
  bool first = true;
  // descending order reads more naturally
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = abs(c);
    s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.rank(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += rank_ <= 4 ? names[i] : "x" + std::to_string(i);
      if (e[i] != 1) mono += "^" + (e[i] < 0 ? "(" + std::to_string(e[i]) + ")" : std::to_string(e[i]));
    }
    if (mono.empty()) {
      s += a.get_str();
    } else {
      if (a != 1) s += a.get_str() + "*";
      s += mono;
    }
  }
  return s;
}

std::optional<LaurentPolynomial> exact_divide(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  require_rank(b.rank(), a.rank(), "divide");
  if (b.is_zero()) throw PreconditionError("division by zero polynomial");
  if (b.size() == 1) {
    const auto& [e, c] = *b.terms().begin();
    LaurentPolynomial inv = LaurentPolynomial::monomial(-e, 1 / c);
    return a * inv;
  }
  // Lex long division; every quotient exponent must lie in the lex interval
  // [min a - min b, max a - max b], and the quotient can have at most as
  // many steps as that bound allows before we give up.
  LaurentPolynomial rem = a, q(a.rank());
  if (rem.is_zero()) return q;
  const auto& blead = *b.terms().rbegin();
  const LatticeVector lo = a.terms().begin()->first - b.terms().begin()->first;
  const std::size_t cap = 200000;
  for (std::size_t step = 0; !rem.is_zero(); ++step) {
    if (step > cap) return std::nullopt;
    const auto& [e, c] = *rem.terms().rbegin();
    LatticeVector qe = e - blead.first;
    if (qe < lo) return std::nullopt;
    Rational qc = c / blead.second;
    q.add_term(qe, qc);
    rem -= LaurentPolynomial::monomial(qe, qc) * b;
  }
  return q;
}

Rational constant_term(const LaurentPolynomial& f) { return f.coefficient(LatticeVector(f.rank())); }

Polytope newton_polytope(const LaurentPolynomial& f) {
  if (f.is_zero()) throw PreconditionError("newton polytope of zero polynomial");
  return Polytope::hull(f.support());
}

LaurentPolynomial act_by_lattice_automorphism(const LaurentPolynomial& f,
                                              const std::vector<std::vector<std::int64_t>>& a) {
  require_rank(a.size(), f.rank(), "automorphism");
  Integer det = determinant(IntMatrix([&] {
    IntMatrix m;
    for (const auto& r : a) {
      require_rank(r.size(), f.rank(), "automorphism");
      m.emplace_back(r.begin(), r.end());
    }
    return m;
  }()));
  if (det != 1 && det != -1) throw NonUnimodular("matrix is not unimodular");
  LaurentPolynomial r(f.rank());
  for (const auto& [e, c] : f.terms()) {
    LatticeVector img(f.rank());
    for (std::size_t i = 0; i < f.rank(); ++i)
      for (std::size_t j = 0; j < f.rank(); ++j) img[i] += a[i][j] * e[j];
    r.add_term(img, c);
  }
  return r;
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  Parser(const std::string& s, std::size_t rank) : s_(s), rank_(rank) {}

  LaurentPolynomial run() {
    auto p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool starts_atom() {
    char c = peek();
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || var_index(c) >= 0;
  }
  int var_index(char c) const {
    static const std::string names = "xyzw";
    auto i = names.find(c);
    return i == std::string::npos ? -1 : static_cast<int>(i);
  }

  LaurentPolynomial expr() {
    LaurentPolynomial acc = unary();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc += unary();
      } else if (c == '-') {
        ++pos_;
        acc -= unary();
      } else {
        return acc;
      }
    }
  }

  LaurentPolynomial unary() {
    if (peek() == '-') {
      ++pos_;
      auto t = unary();
      t *= Rational(-1);
      return t;
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return term();
  }

  LaurentPolynomial term() {
    LaurentPolynomial acc = power();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * power();
      } else if (c == '/') {
        ++pos_;
        std::size_t at = pos_;
        auto d = power();
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        auto q = exact_divide(acc, d);
        if (!q) {
          pos_ = at;
          fail("inexact division");
        }
        acc = std::move(*q);
      } else if (starts_atom()) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  LaurentPolynomial power() {
    LaurentPolynomial base = atom();
    if (peek() != '^') return base;
    ++pos_;
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    bool paren = false;
    if (peek() == '(') {
      paren = true;
      ++pos_;
      if (peek() == '-') {
        neg = !neg;
        ++pos_;
      }
    }
    skip();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer exponent");
    unsigned long k = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      k = k * 10 + static_cast<unsigned long>(s_[pos_] - '0');
      if (k > 1000) fail("exponent too large");
      ++pos_;
    }
    if (paren) {
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    }
    auto r = base.pow(static_cast<unsigned>(k));
    if (neg) {
      auto q = exact_divide(LaurentPolynomial::constant(rank_, 1), r);
      if (!q) fail("negative power of a non-monomial");
      r = std::move(*q);
    }
    return r;
  }

  LaurentPolynomial atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      auto e = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
      return LaurentPolynomial::constant(rank_, Rational(Integer(digits)));
    }
    int v = var_index(c);
    if (v >= 0) {
      if (static_cast<std::size_t>(v) >= rank_) fail("variable outside the lattice rank");
      ++pos_;
      return LaurentPolynomial::variable(rank_, static_cast<std::size_t>(v));
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character");
  }

  const std::string& s_;
  std::size_t rank_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPolynomial parse_laurent(const std::string& text, std::size_t rank) {
  return Parser(text, rank).run();
}

// ---------------------------------------------------------------- series

namespace {

struct SplitMix {
  std::size_t operator()(std::uint64_t x) const {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
};

struct Packing {
  unsigned bits = 0;
  std::int64_t off = 0;
  std::uint64_t off_all = 0;
  std::uint64_t mask = 0;
  std::size_t rank = 0;

  std::uint64_t pack(const LatticeVector& e) const {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < rank; ++i) k |= static_cast<std::uint64_t>(e[i] + off) << (bits * i);
    return k;
  }
  std::int64_t field(std::uint64_t k, std::size_t i) const {
    return static_cast<std::int64_t>((k >> (bits * i)) & mask) - off;
  }
};

struct Pruner {
  // keep e at step i iff <n, e> * den <= (order - i) * num for every facet
  std::vector<LatticeVector> normals;
  std::vector<Integer> num, den;
};

template <class C>
void muladd(C& acc, const C& a, const C& b) {
  if constexpr (std::is_same_v<C, Integer>) {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  } else {
    acc += a * b;
  }
}

template <class C>
PowerSeriesPrefix phi_packed(const LaurentPolynomial& f, std::size_t order, const Packing& pk, const Pruner* pr) {
  struct Term {
    std::uint64_t key;
    C c;
    std::vector<std::int64_t> fv;  // facet values
  };
  std::vector<Term> ft;
  for (const auto& [e, c] : f.terms()) {
    Term t{pk.pack(e), C(c), {}};
    if (pr)
      for (const auto& n : pr->normals) t.fv.push_back(dot(n, e));
    ft.push_back(std::move(t));
  }
  const std::size_t nf = pr ? pr->normals.size() : 0;
  // bound[i][q] = floor((order - i) * num_q / den_q)
  std::vector<std::vector<std::int64_t>> bound(order + 1, std::vector<std::int64_t>(nf));
  for (std::size_t i = 0; i <= order; ++i)
    for (std::size_t q = 0; q < nf; ++q) {
      Integer b;
      Integer t = pr->num[q] * static_cast<unsigned long>(order - i);
      mpz_fdiv_q(b.get_mpz_t(), t.get_mpz_t(), pr->den[q].get_mpz_t());
      bound[i][q] = b.get_si();
    }

  PowerSeriesPrefix out;
  out.coefficients.assign(order + 1, Rational(0));
  out.coefficients[0] = 1;
  const std::uint64_t zero = pk.pack(LatticeVector(pk.rank));
  std::unordered_map<std::uint64_t, C, SplitMix> cur, next;
  cur.emplace(zero, C(1));
  std::vector<std::int64_t> cv(nf);
  for (std::size_t i = 1; i <= order; ++i) {
    next.clear();
    next.reserve(cur.size() * 2 + 16);
    for (const auto& [key, c] : cur) {
      if (nf) {
        for (std::size_t q = 0; q < nf; ++q) {
          std::int64_t v = 0;
          for (std::size_t j = 0; j < pk.rank; ++j) v += pr->normals[q][j] * pk.field(key, j);
          cv[q] = v;
        }
      }
      for (const auto& t : ft) {
        bool keep = true;
        for (std::size_t q = 0; q < nf; ++q)
          if (cv[q] + t.fv[q] > bound[i][q]) {
            keep = false;
            break;
          }
        if (!keep) continue;
        muladd(next[key + t.key - pk.off_all], c, t.c);
      }
    }
    std::swap(cur, next);
    auto it = cur.find(zero);
    if (it != cur.end()) out.coefficients[i] = Rational(it->second);
  }
  return out;
}

PowerSeriesPrefix phi_generic(const LaurentPolynomial& f, std::size_t order) {
  PowerSeriesPrefix out;
  out.coefficients.assign(order + 1, Rational(0));
  out.coefficients[0] = 1;
  LaurentPolynomial p = LaurentPolynomial::constant(f.rank(), 1);
  for (std::size_t i = 1; i <= order; ++i) {
    p = p * f;
    out.coefficients[i] = constant_term(p);
  }
  return out;
}

}  // namespace

PowerSeriesPrefix phi_series(const LaurentPolynomial& f, std::size_t order) {
  if (f.is_zero() || f.rank() == 0) return phi_generic(f, order);
  const std::size_t r = f.rank();
  Packing pk;
  pk.rank = r;
  pk.bits = static_cast<unsigned>(64 / r);
  std::int64_t maxabs = 0;
  for (const auto& [e, c] : f.terms())
    for (auto x : e) maxabs = std::max<std::int64_t>(maxabs, x < 0 ? -x : x);
  if (pk.bits < 8 || maxabs * static_cast<std::int64_t>(order) >= (std::int64_t{1} << (pk.bits - 2)))
    return phi_generic(f, order);
  pk.off = std::int64_t{1} << (pk.bits - 2);
  pk.mask = pk.bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << pk.bits) - 1;
  pk.off_all = pk.pack(LatticeVector(r));

  // Terms that can never return to the origin within the remaining steps are
  // dropped; this needs facets of the Newton polytope around an interior origin.
  Pruner pr;
  bool prune = false;
  auto np = newton_polytope(f);
  if (np.origin_in_interior()) {
    prune = true;
    for (const auto& fc : np.facets()) {
      pr.normals.push_back(fc.normal);
      pr.num.push_back(fc.offset.get_num());
      pr.den.push_back(fc.offset.get_den());
    }
  }
  if (f.integral_coefficients()) return phi_packed<Integer>(f, order, pk, prune ? &pr : nullptr);
  return phi_packed<Rational>(f, order, pk, prune ? &pr : nullptr);
}

std::optional<Rational> match_up_to_shift(const LaurentPolynomial& f, const LaurentPolynomial& g, std::size_t order) {
  if (order < 1) throw PreconditionError("shift matching needs order >= 1");
  require_rank(g.rank(), f.rank(), "match_up_to_shift");
  Rational alpha = phi_series(g, 1)[1] - phi_series(f, 1)[1];
  auto shifted = f + LaurentPolynomial::constant(f.rank(), alpha);
  if (phi_series(shifted, order) == phi_series(g, order)) return alpha;
  return std::nullopt;
}

PowerSeriesPrefix shift_series(const PowerSeriesPrefix& s, const Rational& alpha) {
  PowerSeriesPrefix out;
  std::size_t n = s.coefficients.size();
  out.coefficients.assign(n, Rational(0));
  std::vector<Rational> powers(n, Rational(1));
  for (std::size_t i = 1; i < n; ++i) powers[i] = powers[i - 1] * alpha;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= i; ++k)
      if (powers[i - k] != 0) out.coefficients[i] += Rational(binomial(i, k)) * powers[i - k] * s[k];
  return out;
}

}  // namespace fanolg
