#include "fanolg/k3_fibration.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace fanolg {

namespace {

constexpr int kZeroOrder = 1000;

UPoly exact_quotient(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw ConstructionInconsistency("inexact polynomial division");
  return q;
}

// Splits the square-free p into pieces whose roots all have the same
// multiplicity in g.
std::vector<UPoly> split_by_multiplicity(const UPoly& p, const UPoly& g) {
  if (g.is_zero()) return {p};
  std::vector<UPoly> out;
  UPoly rest = p.monic(), h = g;
  while (rest.degree() > 0) {
    UPoly c = gcd(rest, h);
    UPoly exact = exact_quotient(rest, c);
    if (exact.degree() > 0) out.push_back(exact.monic());
    if (c.degree() <= 0) break;
    h = exact_quotient(h, c);
    rest = c;
  }
  return out;
}

int order_along(const UPoly& p, UPoly g) {
  if (g.is_zero()) return kZeroOrder;
  int k = 0;
  while (true) {
    auto [q, r] = divmod(g, p);
    if (!r.is_zero()) return k;
    g = q;
    ++k;
  }
}

std::vector<UPoly> split_rational_roots(const UPoly& p) {
  std::vector<UPoly> out;
  UPoly rest = p;
  std::vector<std::pair<Rational, int>> roots;
  try {
    roots = rational_roots(p);
  } catch (const Error&) {
    return {p};
  }
  std::sort(roots.begin(), roots.end());
  for (auto& [r, m] : roots) {
    UPoly lin({-r, Rational(1)});
    out.push_back(lin);
    rest = exact_quotient(rest, lin);
  }
  if (rest.degree() > 0) out.push_back(rest.monic());
  return out;
}

std::string kind_name(FiberKind k, int n) {
  switch (k) {
    case FiberKind::I0: return "I0";
    case FiberKind::In: return "I" + std::to_string(n);
    case FiberKind::InStar: return "I" + std::to_string(n) + "*";
    case FiberKind::II: return "II";
    case FiberKind::III: return "III";
    case FiberKind::IV: return "IV";
    case FiberKind::IVStar: return "IV*";
    case FiberKind::IIIStar: return "III*";
    case FiberKind::IIStar: return "II*";
  }
  return "?";
}

int expected_delta(FiberKind k, int n) {
  switch (k) {
    case FiberKind::I0: return 0;
    case FiberKind::In: return n;
    case FiberKind::InStar: return n + 6;
    case FiberKind::II: return 2;
    case FiberKind::III: return 3;
    case FiberKind::IV: return 4;
    case FiberKind::IVStar: return 8;
    case FiberKind::IIIStar: return 9;
    case FiberKind::IIStar: return 10;
  }
  return -1;
}

}  // namespace

WeierstrassModel WeierstrassModel::from_g2_g3(const UPoly& g2, const UPoly& g3) {
  WeierstrassModel w;
  w.a = Rational(-1, 4) * g2;
  w.b = Rational(-1, 4) * g3;
  return w;
}

WeierstrassModel WeierstrassModel::from_cubic_form(const UPoly& A, const UPoly& B) {
  WeierstrassModel w;
  w.a = A;
  w.b = -B;
  return w;
}

WeierstrassModel WeierstrassModel::rescaled(const Rational& c) const {
  WeierstrassModel w = *this;
  Rational c2 = c * c;
  w.a = (c2 * c2) * a;
  w.b = (c2 * c2 * c2) * b;
  return w;
}

Discriminant discriminant(const WeierstrassModel& w) {
  if (3 * w.deg_a != 2 * w.deg_b) throw PreconditionError("homogeneous degrees must be 4k, 6k");
  if (w.a.degree() > w.deg_a || w.b.degree() > w.deg_b) throw PreconditionError("coefficient degree too large");
  Discriminant d;
  UPoly g2 = w.g2(), g3 = w.g3();
  d.delta = g2.pow(3) - Rational(27) * g3.pow(2);
  if (d.delta.is_zero()) throw NonElliptic("discriminant vanishes identically");
  d.order_at_infinity = 3 * w.deg_a - d.delta.degree();
  return d;
}

VanishingOrders minimal_orders(VanishingOrders v) {
  while (v.g2 >= 4 && v.g3 >= 6 && v.delta >= 12) {
    if (v.g2 < kZeroOrder) v.g2 -= 4;
    if (v.g3 < kZeroOrder) v.g3 -= 6;
    v.delta -= 12;
  }
  return v;
}

FiberKind kodaira_type(const VanishingOrders& v, int* n) {
  int a = v.g2, b = v.g3, d = v.delta;
  FiberKind k;
  int idx = 0;
  if (a == 0 || b == 0) {
    k = d == 0 ? FiberKind::I0 : FiberKind::In;
    idx = d;
    if (d > 0 && (a != 0 || b != 0)) throw ConstructionInconsistency("multiplicative fiber with vanishing g2 or g3");
  } else if (b == 1) {
    k = FiberKind::II;
  } else if (a == 1) {
    k = FiberKind::III;
  } else if (b == 2) {
    k = FiberKind::IV;
  } else if (a == 2) {
    k = FiberKind::InStar;
    idx = b == 3 ? d - 6 : 0;
  } else if (b == 3) {
    k = FiberKind::InStar;
  } else if (b == 4) {
    k = FiberKind::IVStar;
  } else if (a == 3) {
    k = FiberKind::IIIStar;
  } else if (b == 5) {
    k = FiberKind::IIStar;
  } else {
    throw ConstructionInconsistency("non-minimal vanishing orders");
  }
  if (expected_delta(k, idx) != d || idx < 0)
    throw ConstructionInconsistency("vanishing orders (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                    std::to_string(d) + ") outside the table");
  if (n) *n = idx;
  return k;
}

std::string KodairaFiber::type_name() const { return kind_name(kind, n); }

std::string KodairaFiber::location() const {
  if (at_infinity) return "t=inf";
  if (factor.degree() == 1) return "t=" + to_string(-factor[0]);
  return "roots of " + factor.to_string();
}

std::string KodairaFiber::root_lattice() const {
  switch (kind) {
    case FiberKind::In: return n >= 2 ? "A" + std::to_string(n - 1) : "";
    case FiberKind::InStar: return "D" + std::to_string(n + 4);
    case FiberKind::III: return "A1";
    case FiberKind::IV: return "A2";
    case FiberKind::IVStar: return "E6";
    case FiberKind::IIIStar: return "E7";
    case FiberKind::IIStar: return "E8";
    default: return "";
  }
}

int KodairaFiber::euler_number() const { return expected_delta(kind, n); }

std::vector<KodairaFiber> classify_fibers(const WeierstrassModel& w) {
  Discriminant disc = discriminant(w);
  UPoly g2 = w.g2(), g3 = w.g3();
  std::vector<KodairaFiber> out;

  UPoly radical = exact_quotient(disc.delta, gcd(disc.delta, disc.delta.derivative())).monic();
  std::vector<UPoly> pieces{radical};
  for (const UPoly* g : {&disc.delta, &g2, &g3}) {
    std::vector<UPoly> next;
    for (auto& p : pieces)
      for (auto& q : split_by_multiplicity(p, *g)) next.push_back(q);
    pieces = std::move(next);
  }
  std::vector<UPoly> located;
  for (auto& p : pieces)
    if (p.degree() > 0)
      for (auto& q : split_rational_roots(p)) located.push_back(q);

  for (auto& p : located) {
    KodairaFiber f;
    f.factor = p;
    f.orders = minimal_orders({order_along(p, g2), order_along(p, g3), order_along(p, disc.delta)});
    f.kind = kodaira_type(f.orders, &f.n);
    if (f.kind != FiberKind::I0) out.push_back(f);
  }
  auto key = [](const KodairaFiber& f) {
    return std::make_tuple(f.factor.degree(), f.factor.degree() == 1 ? -f.factor[0] : Rational(0),
                           f.factor.to_string());
  };
  std::sort(out.begin(), out.end(), [&](const KodairaFiber& x, const KodairaFiber& y) { return key(x) < key(y); });

  KodairaFiber inf;
  inf.at_infinity = true;
  inf.orders.g2 = g2.is_zero() ? kZeroOrder : w.deg_a - g2.degree();
  inf.orders.g3 = g3.is_zero() ? kZeroOrder : w.deg_b - g3.degree();
  inf.orders.delta = disc.order_at_infinity;
  inf.orders = minimal_orders(inf.orders);
  inf.kind = kodaira_type(inf.orders, &inf.n);
  if (inf.kind != FiberKind::I0) out.push_back(inf);
  return out;
}

std::vector<std::string> fiber_multiset(const std::vector<KodairaFiber>& fibers) {
  std::vector<std::string> out;
  for (auto& f : fibers)
    for (int i = 0; i < f.count(); ++i) out.push_back(f.type_name());
  std::sort(out.begin(), out.end());
  return out;
}

int euler_sum(const std::vector<KodairaFiber>& fibers) {
  int s = 0;
  for (auto& f : fibers) s += f.count() * f.euler_number();
  return s;
}

int delta_order_sum(const std::vector<KodairaFiber>& fibers) {
  int s = 0;
  for (auto& f : fibers) s += f.count() * f.orders.delta;
  return s;
}

std::string LatticeSummand::name() const { return kind == 'U' ? "U" : std::string(1, kind) + std::to_string(n); }

int NSLattice::summand_rank() const {
  int r = 0;
  for (auto& s : summands) r += s.rank();
  return r;
}

int NSLattice::rank() const { return summand_rank() + mw_rank; }

std::string NSLattice::name() const {
  std::string out;
  for (auto& s : summands) out += (out.empty() ? "" : "+") + s.name();
  return out;
}

NSLattice parse_lattice(const std::string& text) {
  NSLattice l;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, '+')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](char c) { return c == ' ' || c == '_'; }), tok.end());
    if (tok.empty()) throw ParseError("empty lattice summand in '" + text + "'");
    LatticeSummand s;
    s.kind = tok[0];
    if (s.kind == 'U') {
      if (tok.size() != 1) throw ParseError("bad summand '" + tok + "'");
    } else if (s.kind == 'A' || s.kind == 'D' || s.kind == 'E') {
      std::size_t used = 0;
      try {
        s.n = std::stoi(tok.substr(1), &used);
      } catch (const std::exception&) {
        throw ParseError("bad summand '" + tok + "'");
      }
      if (used + 1 != tok.size() || s.n < 1 || (s.kind == 'D' && s.n < 4) || (s.kind == 'E' && (s.n < 6 || s.n > 8)))
        throw ParseError("bad summand '" + tok + "'");
    } else {
      throw ParseError("bad summand '" + tok + "'");
    }
    l.summands.push_back(s);
  }
  return l;
}

NSLattice assemble_lattice(const std::vector<std::string>& fiber_types, int mw_rank, std::vector<int> mw_torsion) {
  NSLattice l;
  l.summands.push_back({'U', 0});
  for (auto& t : fiber_types) {
    std::string r;
    if (t == "III") r = "A1";
    else if (t == "IV") r = "A2";
    else if (t == "IV*") r = "E6";
    else if (t == "III*") r = "E7";
    else if (t == "II*") r = "E8";
    else if (t == "II" || t == "I0" || t == "I1") r = "";
    else if (t.size() >= 2 && t[0] == 'I') {
      bool star = t.back() == '*';
      int n = std::stoi(t.substr(1, t.size() - 1 - (star ? 1 : 0)));
      r = star ? "D" + std::to_string(n + 4) : (n >= 2 ? "A" + std::to_string(n - 1) : "");
    } else {
      throw ParseError("unknown fiber type '" + t + "'");
    }
    if (!r.empty()) l.summands.push_back(parse_lattice(r).summands[0]);
  }
  l.mw_rank = mw_rank;
  l.mw_torsion = std::move(mw_torsion);
  return l;
}

NSLattice assemble_lattice(const std::vector<KodairaFiber>& fibers, int mw_rank, std::vector<int> mw_torsion) {
  std::vector<std::string> types;
  for (auto& f : fibers)
    for (int i = 0; i < f.count(); ++i) types.push_back(f.type_name());
  return assemble_lattice(types, mw_rank, std::move(mw_torsion));
}

IntMatrix gram_matrix(const LatticeSummand& s) {
  if (s.kind == 'U') return {{0, 1}, {1, 0}};
  int n = s.n;
  IntMatrix g(n, std::vector<Integer>(n, 0));
  auto link = [&](int i, int j) { g[i][j] = g[j][i] = 1; };
  for (int i = 0; i < n; ++i) g[i][i] = -2;
  if (s.kind == 'A') {
    for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
  } else if (s.kind == 'D') {
    for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
    link(n - 3, n - 1);
  } else {
    // chain of n-1 nodes, branch at the third
    for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
    link(2, n - 1);
  }
  return g;
}

IntMatrix gram_matrix(const NSLattice& l) {
  int r = l.summand_rank();
  IntMatrix g(r, std::vector<Integer>(r, 0));
  int off = 0;
  for (auto& s : l.summands) {
    IntMatrix b = gram_matrix(s);
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) g[off + i][off + j] = b[i][j];
    off += static_cast<int>(b.size());
  }
  return g;
}

LatticeInvariants lattice_invariants(const IntMatrix& gram) {
  LatticeInvariants inv;
  std::size_t n = gram.size();
  inv.determinant = n ? determinant(gram) : Integer(1);
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(gram[i][j]);
  auto add_to = [&](std::size_t dst, std::size_t src, const Rational& k) {
    for (std::size_t c = 0; c < n; ++c) a[dst][c] += k * a[src][c];
    for (std::size_t r = 0; r < n; ++r) a[r][dst] += k * a[r][src];
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i][i] == 0) {
      std::size_t j = i + 1;
      while (j < n && a[j][j] == 0) ++j;
      if (j < n) {
        std::swap(a[i], a[j]);
        for (auto& row : a) std::swap(row[i], row[j]);
      } else {
        j = i + 1;
        while (j < n && a[i][j] == 0) ++j;
        if (j == n) continue;
        add_to(i, j, 1);
      }
    }
    if (a[i][i] == 0) continue;
    for (std::size_t j = i + 1; j < n; ++j)
      if (a[j][i] != 0) add_to(j, i, -a[j][i] / a[i][i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i][i] > 0) ++inv.positive;
    if (a[i][i] < 0) ++inv.negative;
  }
  inv.rank = inv.positive + inv.negative;
  return inv;
}

SectionCheck verify_section(const WeierstrassModel& w, const RationalFunction& u, const RationalFunction& v) {
  if (u.den.is_zero() || v.den.is_zero()) throw PreconditionError("zero denominator");
  const UPoly &p = u.num, &q = u.den, &r = v.num, &s = v.den;
  UPoly q2 = q * q, q3 = q2 * q;
  UPoly lhs = r * r * q3;
  UPoly rhs = s * s * (p * p * p + w.a * p * q2 + w.b * q3);
  SectionCheck c;
  c.on_curve = (lhs - rhs).is_zero();
  c.two_torsion = c.on_curve && r.is_zero();
  return c;
}

namespace {

bool has_primitive_edge(const Polytope& p) {
  if (!p.is_lattice()) return false;
  for (std::size_t i = 0; i < p.facets().size(); ++i) {
    auto idx = p.facet_vertices(i);
    if (idx.size() != 2) continue;
    LatticeVector d = p.vertices()[idx[0]].to_lattice() - p.vertices()[idx[1]].to_lattice();
    if (d.gcd() == 1) return true;
  }
  return false;
}

}  // namespace

FibrationPolygon fibration_polygon(const Polytope& delta, const LatticeVector& m) {
  if (delta.rank() != 3 || !is_reflexive(delta)) throw PreconditionError("fibration polygon needs a reflexive 3-polytope");
  FibrationPolygon f;
  f.slice = hyperplane_slice(delta, m);
  f.reflexive = f.slice.origin_in_interior() && is_reflexive(f.slice);
  f.section_edge = has_primitive_edge(f.slice);
  if (f.reflexive) f.dual_section_edge = has_primitive_edge(dual_polytope(f.slice));
  return f;
}

}  // namespace fanolg
