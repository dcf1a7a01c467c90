#include "fanolg/ci_degeneration.hpp"

#include "fanolg/linalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace fanolg {

long WeightedCI::index() const {
  long s = std::accumulate(weights.begin(), weights.end(), 0L);
  return s - std::accumulate(degrees.begin(), degrees.end(), 0L);
}

void WeightedCI::validate() const {
  if (weights.empty()) throw PreconditionError("no weights");
  for (auto w : weights)
    if (w <= 0) throw PreconditionError("weights must be positive");
  for (auto d : degrees)
    if (d <= 0) throw PreconditionError("degrees must be positive");
  if (!std::is_sorted(weights.begin(), weights.end())) throw PreconditionError("weights must be nondecreasing");
  if (weights[0] != 1) throw PreconditionError("smallest weight must be 1");
  if (index() < 1) throw PreconditionError("not Fano: index " + std::to_string(index()));
}

std::size_t NefPartition::lattice_rank() const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < slot_weights.size(); ++i) r += m(i);
  return r;
}

std::size_t NefPartition::variable(std::size_t i, std::size_t j) const {
  if (j == 0 || j > m(i)) throw PreconditionError("no variable for constant slot");
  std::size_t off = 0;
  if (i == 0) {
    for (std::size_t g = 1; g <= k(); ++g) off += m(g);
  } else {
    for (std::size_t g = 1; g < i; ++g) off += m(g);
  }
  return off + j - 1;
}

NefPartition find_nef_partition(const WeightedCI& x) {
  x.validate();
  const std::size_t k = x.degrees.size();
  std::vector<long> target{x.index()};
  target.insert(target.end(), x.degrees.begin(), x.degrees.end());
  std::vector<long> sums(k + 1, 0);
  std::vector<std::size_t> assign(x.weights.size());
  std::function<bool(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == x.weights.size()) return sums == target;
    for (std::size_t g = 0; g <= k; ++g) {
      if (idx == 0 && g != 0) continue;
      if (g == 0 && x.weights[idx] != 1) continue;
      if (sums[g] + x.weights[idx] > target[g]) continue;
      sums[g] += x.weights[idx];
      assign[idx] = g;
      if (rec(idx + 1)) return true;
      sums[g] -= x.weights[idx];
    }
    return false;
  };
  if (!rec(0)) throw InfeasiblePartition("no nef partition for these weights and degrees");
  NefPartition p;
  p.degrees = target;
  p.groups.assign(k + 1, {});
  for (std::size_t idx = 0; idx < assign.size(); ++idx) p.groups[assign[idx]].push_back(idx);
  for (const auto& g : p.groups) {
    std::vector<long> w;
    for (auto idx : g) w.push_back(x.weights[idx]);
    std::sort(w.begin(), w.end());
    // constant slot takes the largest weight, the variables the rest in increasing order
    std::vector<long> slots{w.back()};
    slots.insert(slots.end(), w.begin(), w.end() - 1);
    p.slot_weights.push_back(std::move(slots));
  }
  return p;
}

LaurentPolynomial hori_vafa(const NefPartition& p) {
  const std::size_t n = p.lattice_rank();
  LaurentPolynomial num = LaurentPolynomial::constant(n, 1);
  for (std::size_t i = 1; i <= p.k(); ++i) {
    LaurentPolynomial s = LaurentPolynomial::constant(n, 1);
    for (std::size_t j = 1; j <= p.m(i); ++j) s += LaurentPolynomial::variable(n, p.variable(i, j));
    num = num * s.pow(static_cast<unsigned>(p.degrees[i]));
  }
  LatticeVector den(n);
  for (std::size_t i = 0; i <= p.k(); ++i)
    for (std::size_t j = 1; j <= p.m(i); ++j) den[p.variable(i, j)] = -p.slot_weights[i][j];
  LaurentPolynomial f = num * LaurentPolynomial::monomial(den);
  for (std::size_t j = 1; j <= p.m(0); ++j) f += LaurentPolynomial::variable(n, p.variable(0, j));
  return f;
}

namespace {

IntVector unit(std::size_t dim, std::size_t i) {
  IntVector v(dim, Integer(0));
  v[i] = 1;
  return v;
}

}  // namespace

AltmannEmbedding altmann_embedding(const NefPartition& p) {
  AltmannEmbedding a;
  const std::size_t n = p.lattice_rank(), k = p.k(), dim = n + k + 1;
  a.n_rank = n;
  auto c = [&](std::size_t i) { return n + i; };

  for (std::size_t j = 1; j <= p.m(0); ++j) a.hat_cone_generators.push_back(unit(dim, p.variable(0, j)));
  for (std::size_t i = 1; i <= k; ++i) {
    a.hat_cone_generators.push_back(unit(dim, c(i)));
    for (std::size_t j = 1; j <= p.m(i); ++j) {
      IntVector v = unit(dim, p.variable(i, j));
      v[c(i)] = 1;
      a.hat_cone_generators.push_back(v);
    }
  }
  {
    IntVector v = unit(dim, c(0));
    for (std::size_t i = 0; i <= k; ++i)
      for (std::size_t j = 1; j <= p.m(i); ++j) v[p.variable(i, j)] = -p.slot_weights[i][j];
    a.hat_cone_generators.push_back(v);
  }

  for (std::size_t i = 0; i <= k; ++i)
    for (std::size_t j = 1; j <= p.m(i); ++j) {
      IntVector u = unit(dim, p.variable(i, j));
      u[c(0)] = p.slot_weights[i][j];
      a.expected_dual.push_back(u);
    }
  a.expected_dual.push_back(unit(dim, c(0)));
  for (std::size_t i = 1; i <= k; ++i) {
    IntVector u = unit(dim, c(i));
    for (std::size_t j = 1; j <= p.m(i); ++j) {
      u[p.variable(i, j)] -= 1;
      u[c(0)] -= p.slot_weights[i][j];
    }
    a.expected_dual.push_back(u);
  }

  a.grading = unit(dim, c(0));
  for (std::size_t i = 1; i <= k; ++i) a.grading[c(i)] = p.degrees[i];
  for (const auto& u : a.expected_dual) a.generator_weights.push_back(dot(u, a.grading).get_si());

  auto computed = cone_extreme_rays(a.hat_cone_generators, dim);
  auto want = a.expected_dual;
  std::sort(want.begin(), want.end());
  a.dual_matches_family = computed == want;
  a.dual_generators = a.dual_matches_family ? a.expected_dual : computed;

  IntMatrix m(a.expected_dual.begin(), a.expected_dual.end());
  a.dual_determinant = determinant(m);

  // exponents of n_i c0* and c_i* in the dual generator basis
  RationalMatrix basis(dim, dim);
  for (std::size_t col = 0; col < dim; ++col)
    for (std::size_t row = 0; row < dim; ++row) basis(row, col) = Rational(a.expected_dual[col][row]);
  auto coords = [&](const IntVector& u) {
    auto s = solve(basis, std::vector<Rational>(u.begin(), u.end()));
    if (!s || !s->kernel.empty()) throw ConstructionInconsistency("dual generators are not a basis");
    IntVector e;
    for (const auto& q : s->particular) {
      if (q.get_den() != 1) throw ConstructionInconsistency("binomial exponent is not integral");
      e.push_back(q.get_num());
    }
    return e;
  };
  for (std::size_t i = 1; i <= k; ++i) {
    IntVector lhs = unit(dim, c(0));
    lhs[c(0)] = p.degrees[i];
    a.binomials.emplace_back(coords(lhs), coords(unit(dim, c(i))));
  }
  return a;
}

std::vector<IntVector> literal_third_family(const NefPartition& p) {
  const std::size_t n = p.lattice_rank(), k = p.k(), dim = n + k + 1;
  std::vector<IntVector> out;
  for (std::size_t i = 1; i <= k; ++i) {
    IntVector u = unit(dim, n + i);
    for (std::size_t j = 1; j <= p.m(i); ++j) {
      u[p.variable(i, j)] -= 1;
      u[n] += p.slot_weights[i][j];
    }
    out.push_back(u);
  }
  return out;
}

std::vector<std::vector<std::int64_t>> sigma_prime_map(const NefPartition& p) {
  const std::size_t n = p.lattice_rank();
  std::vector<std::vector<std::int64_t>> a(n + 1, std::vector<std::int64_t>(n + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) a[i][i] = 1;
  for (std::size_t j = 1; j <= p.m(0); ++j) a[n][p.variable(0, j)] = -1;
  return a;
}

std::string partition_summary(const NefPartition& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.groups.size(); ++i) {
    os << (i ? " " : "") << "I" << i << "={";
    for (std::size_t t = 0; t < p.slot_weights[i].size(); ++t) os << (t ? "," : "") << p.slot_weights[i][t];
    os << "}";
  }
  return os.str();
}

VerificationReport verify_thm_ci(const WeightedCI& x) {
  VerificationReport rep;
  NefPartition p = find_nef_partition(x);
  rep.add("nef-partition", true, partition_summary(p));

  LaurentPolynomial f = hori_vafa(p);
  Polytope np = newton_polytope(f);
  rep.add("origin-interior", np.origin_in_interior(), f.to_string());

  // Newton polytope = conv(sum n_i Delta_i - sum w_ij b_ij, Delta_0)
  const std::size_t n = p.lattice_rank();
  LatticeVector shift(n);
  for (std::size_t i = 0; i <= p.k(); ++i)
    for (std::size_t j = 1; j <= p.m(i); ++j) shift[p.variable(i, j)] = -p.slot_weights[i][j];
  std::vector<LatticeVector> pts{shift};
  for (std::size_t i = 1; i <= p.k(); ++i) {
    std::vector<LatticeVector> next;
    for (const auto& q : pts)
      for (std::size_t j = 0; j <= p.m(i); ++j) {
        LatticeVector v = q;
        if (j) v[p.variable(i, j)] += p.degrees[i];
        next.push_back(v);
      }
    pts = std::move(next);
  }
  std::vector<LatticeVector> compact = pts;
  for (std::size_t j = 1; j <= p.m(0); ++j) {
    LatticeVector b(n);
    b[p.variable(0, j)] = 1;
    pts.push_back(b);
  }
  rep.add("newton-minkowski", Polytope::hull(pts) == np);

  // sigma -> sigma': (v, 1) goes to (v, n_0) on compact vertices and (b_0j, 1) to (b_0j, 0)
  auto a = sigma_prime_map(p);
  bool map_ok = true;
  {
    IntMatrix am;
    for (const auto& r : a) am.emplace_back(r.begin(), r.end());
    Integer d = determinant(am);
    map_ok = d == 1 || d == -1;
    auto image = [&](const LatticeVector& v, std::int64_t h) {
      LatticeVector in(n + 1), out(n + 1);
      for (std::size_t i = 0; i < n; ++i) in[i] = v[i];
      in[n] = h;
      for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) out[i] += a[i][j] * in[j];
      return out;
    };
    for (const auto& v : compact) {
      auto w = image(v, 1);
      if (w[n] != p.degrees[0]) map_ok = false;
    }
    for (std::size_t j = 1; j <= p.m(0); ++j) {
      LatticeVector b(n);
      b[p.variable(0, j)] = 1;
      if (image(b, 1)[n] != 0) map_ok = false;
    }
  }
  rep.add("sigma-prime-map", map_ok);

  AltmannEmbedding e = altmann_embedding(p);
  rep.add("dual-generators", e.dual_matches_family,
          std::to_string(e.dual_generators.size()) + " generators in rank " + std::to_string(e.n_rank + p.k() + 1));
  bool smooth = e.dual_generators.size() == e.n_rank + p.k() + 1 && (e.dual_determinant == 1 || e.dual_determinant == -1);
  rep.add("smooth-simplicial", smooth, "det " + e.dual_determinant.get_str());
  auto got = e.generator_weights;
  std::sort(got.begin(), got.end());
  std::string ws;
  for (auto w : got) ws += (ws.empty() ? "" : ",") + std::to_string(w);
  rep.add("generator-weights", got == x.weights, ws);
  bool bin_ok = e.binomials.size() == p.k();
  for (std::size_t i = 0; bin_ok && i < e.binomials.size(); ++i) {
    long lw = 0, rw = 0;
    for (std::size_t t = 0; t < e.generator_weights.size(); ++t) {
      lw += e.binomials[i].first[t].get_si() * e.generator_weights[t];
      rw += e.binomials[i].second[t].get_si() * e.generator_weights[t];
    }
    if (lw != p.degrees[i + 1] || rw != p.degrees[i + 1]) bin_ok = false;
  }
  rep.add("binomials", bin_ok, std::to_string(e.binomials.size()) + " equations");
  return rep;
}

}  // namespace fanolg
