#include "fanolg/catalog.hpp"

#include "fanolg/lattice_geometry.hpp"
#include "fanolg/triangulation.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

namespace fanolg {

namespace {

struct RawRow {
  int number, index;
  const char* degree_text;
  long degree;
  const char* description;
  const char* polynomial;
  Route route;
  long alpha;
  std::vector<long> weights, degrees;  // empty unless CI
  K3Route k3;
};

K3Route k3(int method, std::string lattice, std::vector<std::string> fibers = {}, int mw = 0,
           std::vector<int> torsion = {}, std::string model = {}, std::string poly = {}, LatticeVector m = {}) {
  K3Route r;
  r.method = method;
  r.lattice = std::move(lattice);
  r.fibers = std::move(fibers);
  r.mw_rank = mw;
  r.mw_torsion = std::move(torsion);
  r.model = std::move(model);
  r.fibration_polynomial = std::move(poly);
  r.m = std::move(m);
  return r;
}

const std::vector<RawRow>& raw_rows() {
  static const std::vector<RawRow> rows = {
      {1, 1, "2", 2, "sextic double solid X2", "(x+y+z+1)^6/(xyz)", Route::CI, 1, {1, 1, 1, 1, 3}, {6},
       k3(4, "U+E7+D10", {}, 0, {}, "", "x+y+z+1/(xyz^3)-1", {1, 0, 1})},
      {2, 1, "4", 4, "quartic threefold X4", "(x+y+z+1)^4/(xyz)", Route::CI, 1, {1, 1, 1, 1, 1}, {4},
       k3(2, "U+E6+A11")},
      {3, 1, "6", 6, "complete intersection X6 of a quadric and a cubic", "(x+1)^2(y+z+1)^3/(xyz)", Route::CI, 1,
       {1, 1, 1, 1, 1, 1}, {2, 3}, k3(3, "U+E6+E6+A5", {"IV*", "IV*", "I6", "I1", "I1"}, 0, {}, "case3")},
      {4, 1, "8", 8, "complete intersection X8 of three quadrics", "(x+1)^2(y+1)^2(z+1)^2/(xyz)", Route::CI, 1,
       {1, 1, 1, 1, 1, 1, 1}, {2, 2, 2}, k3(3, "U+A7+D5+D5")},
      {5, 1, "10", 10, "X10", "(1+x+y+z+xy+xz+yz)^2/(xyz)", Route::Triangulation, 1, {}, {},
       k3(2, "U+D6+D5+A5", {"I2*", "I1*", "I6", "I1", "I1", "I1"}, 1, {2})},
      {6, 1, "12", 12, "X12", "(x+z+1)(x+y+z+1)(z+1)(y+z)/(xyz)", Route::Triangulation, 1, {}, {}, k3(1, "")},
      {7, 1, "14", 14, "X14", "(x+y+z+1)^2/x+(x+y+z+1)(y+z+1)(z+1)^2/(xyz)", Route::Triangulation, -1, {}, {},
       k3(1, "")},
      {8, 1, "16", 16, "X16", "(x+y+z+1)(x+1)(y+1)(z+1)/(xyz)", Route::Triangulation, 1, {}, {}, k3(1, "")},
      {9, 1, "18", 18, "X18", "(x+y+z)(x+xz+xy+xyz+z+y+yz)/(xyz)", Route::Triangulation, 1, {}, {},
       k3(2, "U+A8+A2+A1+E6")},
      {10, 1, "22", 22, "X22", "(z+1)(x+y+1)(xy+z)/(xyz)+xy/z+z+3", Route::ExternalSmallToric, 1, {}, {},
       k3(1, "")},
      {11, 2, "8*1", 1, "double Veronese cone V1", "(x+y+1)^6/(xy^2z)+z", Route::CI, 1, {1, 1, 1, 2, 3}, {6},
       k3(2, "U+E7+D10")},
      {12, 2, "8*2", 2, "quartic double solid V2", "(x+y+1)^4/(xyz)+z", Route::CI, 1, {1, 1, 1, 1, 2}, {4},
       k3(2, "U+E6+A11")},
      {13, 2, "8*3", 3, "cubic threefold V3", "(x+y+1)^3/(xyz)+z", Route::CI, 1, {1, 1, 1, 1, 1}, {3},
       k3(2, "U+E6+E6+A5")},
      {14, 2, "8*4", 4, "intersection of two quadrics V4", "(x+1)^2(y+1)^2/(xyz)+z", Route::CI, 1,
       {1, 1, 1, 1, 1, 1}, {2, 2},
       k3(4, "U+A7+D5+D5", {"I8", "I1*", "I1*"}, 0, {}, "", "(x+1)^2(y+1)^2/(xyz)+z", {0, 0, 1})},
      {15, 2, "8*5", 5, "V5", "x+y+z+1/x+1/y+1/z+xyz", Route::ExternalSmallToric, 0, {}, {},
       k3(4, "U+D6+D5+A5", {}, 1, {2}, "case15", "x+y+z+1/x+1/y+1/z+xyz", {1, 1, 0})},
      {16, 3, "27*2", 2, "quadric threefold Q", "(x+1)^2/(xyz)+y+z", Route::CI, 1, {1, 1, 1, 1, 1}, {2},
       k3(4, "U+E6+E6+A5", {}, 0, {}, "", "(x+1)^2/(xyz)+y+z", {1, 0, 0})},
      {17, 4, "64", 1, "projective space P3", "x+y+z+1/(xyz)", Route::Toric, 0, {}, {},
       k3(4, "U+E6+A11", {}, 0, {}, "", "x+y+z+1/(xyz)", {0, 0, 1})},
  };
  return rows;
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (auto& s : v) out += (out.empty() ? "" : ", ") + s;
  return out;
}

std::vector<std::string> sorted_names(const NSLattice& l) {
  std::vector<std::string> out;
  for (auto& s : l.summands) out.push_back(s.name());
  std::sort(out.begin(), out.end());
  return out;
}

UPoly tpow(unsigned k) { return UPoly::monomial(k); }

}  // namespace

const char* to_string(Route r) {
  switch (r) {
    case Route::CI: return "ci";
    case Route::Triangulation: return "triangulation";
    case Route::ExternalSmallToric: return "external-small-toric";
    case Route::Toric: return "toric";
  }
  return "?";
}

Route route_from_string(const std::string& s) {
  for (Route r : {Route::CI, Route::Triangulation, Route::ExternalSmallToric, Route::Toric})
    if (s == to_string(r)) return r;
  throw ParseError("unknown route '" + s + "'");
}

bool operator==(const FanoEntry& a, const FanoEntry& b) {
  auto ci_eq = [](const std::optional<WeightedCI>& x, const std::optional<WeightedCI>& y) {
    if (x.has_value() != y.has_value()) return false;
    return !x || (x->weights == y->weights && x->degrees == y->degrees);
  };
  return a.number == b.number && a.index == b.index && a.degree_text == b.degree_text && a.degree == b.degree &&
         a.description == b.description && a.polynomial_text == b.polynomial_text && a.lg == b.lg &&
         a.route == b.route && a.alpha == b.alpha && ci_eq(a.ci, b.ci) && a.k3 == b.k3;
}

std::vector<FanoEntry> load_catalog() {
  std::vector<FanoEntry> out;
  for (auto& r : raw_rows()) {
    FanoEntry e;
    e.number = r.number;
    e.index = r.index;
    e.degree_text = r.degree_text;
    e.degree = r.degree;
    e.description = r.description;
    e.polynomial_text = r.polynomial;
    e.lg = parse_laurent(r.polynomial);
    e.route = r.route;
    e.alpha = r.alpha;
    if (!r.weights.empty()) e.ci = WeightedCI{r.weights, r.degrees};
    e.k3 = r.k3;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<FanoEntry> load_catalog(const std::string& json_path) { return catalog_from_json(read_json_file(json_path)); }

const FanoEntry& catalog_row(const std::vector<FanoEntry>& c, int number) {
  for (auto& e : c)
    if (e.number == number) return e;
  throw PreconditionError("no catalog row " + std::to_string(number));
}

Json to_json(const FanoEntry& e) {
  Json j = {{"number", e.number},
            {"index", e.index},
            {"degree_text", e.degree_text},
            {"degree", e.degree},
            {"anticanonical_degree", e.anticanonical_degree()},
            {"description", e.description},
            {"polynomial", e.polynomial_text},
            {"route", to_string(e.route)},
            {"alpha", to_json(e.alpha)}};
  if (e.ci) j["ci"] = {{"weights", e.ci->weights}, {"degrees", e.ci->degrees}};
  Json k = {{"method", e.k3.method}};
  if (!e.k3.lattice.empty()) k["lattice"] = e.k3.lattice;
  if (!e.k3.fibers.empty()) k["fibers"] = e.k3.fibers;
  if (e.k3.mw_rank || !e.k3.mw_torsion.empty()) {
    k["mw_rank"] = e.k3.mw_rank;
    k["mw_torsion"] = e.k3.mw_torsion;
  }
  if (!e.k3.model.empty()) k["model"] = e.k3.model;
  if (!e.k3.fibration_polynomial.empty()) {
    k["fibration_polynomial"] = e.k3.fibration_polynomial;
    k["m"] = to_json(e.k3.m);
  }
  j["k3"] = k;
  return j;
}

FanoEntry entry_from_json(const Json& j) {
  FanoEntry e;
  try {
    e.number = j.at("number").get<int>();
    e.index = j.at("index").get<int>();
    e.degree_text = j.at("degree_text").get<std::string>();
    e.degree = j.at("degree").get<long>();
    e.description = j.at("description").get<std::string>();
    e.polynomial_text = j.at("polynomial").get<std::string>();
    e.route = route_from_string(j.at("route").get<std::string>());
    e.alpha = rational_from_json(j.at("alpha"));
    if (j.contains("ci"))
      e.ci = WeightedCI{j["ci"].at("weights").get<std::vector<long>>(), j["ci"].at("degrees").get<std::vector<long>>()};
    const Json& k = j.at("k3");
    e.k3.method = k.at("method").get<int>();
    if (k.contains("lattice")) e.k3.lattice = k["lattice"].get<std::string>();
    if (k.contains("fibers")) e.k3.fibers = k["fibers"].get<std::vector<std::string>>();
    if (k.contains("mw_rank")) e.k3.mw_rank = k["mw_rank"].get<int>();
    if (k.contains("mw_torsion")) e.k3.mw_torsion = k["mw_torsion"].get<std::vector<int>>();
    if (k.contains("model")) e.k3.model = k["model"].get<std::string>();
    if (k.contains("fibration_polynomial")) {
      e.k3.fibration_polynomial = k["fibration_polynomial"].get<std::string>();
      e.k3.m = lattice_vector_from_json(k.at("m"));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("catalog entry: ") + ex.what());
  }
  if (j.contains("anticanonical_degree") && j["anticanonical_degree"].get<long>() != e.anticanonical_degree())
    throw ParseError("catalog row " + std::to_string(e.number) + ": anticanonical degree mismatch");
  e.lg = parse_laurent(e.polynomial_text);
  return e;
}

Json catalog_to_json(const std::vector<FanoEntry>& c) {
  Json rows = Json::array();
  for (auto& e : c) rows.push_back(to_json(e));
  return {{"rows", rows}};
}

std::vector<FanoEntry> catalog_from_json(const Json& j) {
  std::vector<FanoEntry> out;
  for (auto& r : j.at("rows")) out.push_back(entry_from_json(r));
  return out;
}

WeierstrassModel case3_model(const Rational& lambda) {
  UPoly t = UPoly::t(), s1 = UPoly::constant(1) + t;
  Rational l2 = lambda * lambda, l3 = l2 * lambda, l4 = l3 * lambda;
  UPoly A = Rational(1, 48) * l3 * (tpow(3) * (Rational(24) * s1.pow(2) - lambda * t));
  UPoly inner = Rational(36) * s1.pow(2) * (Rational(6) * s1.pow(2) - lambda * t) + l2 * tpow(2);
  UPoly B = Rational(-1, 864) * l4 * (tpow(4) * inner);
  return WeierstrassModel::from_cubic_form(A, B);
}

namespace {

UPoly case15_p(const Rational& s) {
  Rational s2 = s * s;
  return UPoly({Rational(-8), Rational(-24) - 16 * s2, s2 * s2 - 24 * s2 - 8, Rational(24) - 8 * s2, Rational(16)});
}

UPoly case15_q(const Rational& s) { return UPoly({Rational(8), Rational(12) - s * s, Rational(4)}); }

}  // namespace

WeierstrassModel case15_model(const Rational& s) {
  UPoly one = UPoly::constant(1), t = UPoly::t();
  UPoly P = case15_p(s), Q = case15_q(s);
  UPoly A = Rational(-1, 48) * (tpow(2) * P);
  UPoly B = Rational(1, 864) * (tpow(3) * Q * (P + Rational(24) * (one + t).pow(2)));
  return WeierstrassModel::from_cubic_form(A, B);
}

std::vector<DisplayedSection> case15_sections(const Rational& s) {
  UPoly one = UPoly::constant(1), t = UPoly::t();
  // displayed u is the cubic-form X, so canonical u = -X
  UPoly x_inf = Rational(-1, 12) * (t * (s * s * t + Rational(8) * tpow(2) + Rational(12) * t + Rational(4) * one));
  UPoly v_inf = Rational(-1, 2) * s * (tpow(2) * (t + one).pow(2));
  UPoly x_tor = Rational(1, 12) * case15_q(s);
  return {{"infinite-order", {-x_inf, one}, {v_inf, one}}, {"two-torsion", {-x_tor, one}, {UPoly(), one}}};
}

std::vector<Rational> model_witnesses(const std::string& model) {
  if (model == "case3" || model == "case15") return {Rational(1), Rational(2)};
  throw PreconditionError("unknown model '" + model + "'");
}

WeierstrassModel model_at(const std::string& model, const Rational& witness) {
  if (model == "case3") return case3_model(witness);
  if (model == "case15") return case15_model(witness);
  throw PreconditionError("unknown model '" + model + "'");
}

PowerSeriesPrefix row_series(const FanoEntry& e, std::size_t order) {
  return shift_series(phi_series(e.lg, order), e.alpha);
}

namespace {

void period_checks(const FanoEntry& e, const VerifyOptions& opt, VerificationReport& r) {
  PowerSeriesPrefix s = row_series(e, opt.series_order);
  std::optional<D3Operator> l;
  try {
    l = fit_d3(s);
    r.add("d3-fit", l.has_value(), l ? "unique at order " + std::to_string(opt.series_order) : "no operator");
  } catch (const InsufficientOrder& ex) {
    r.add("d3-fit", false, ex.what());
  }
  if (!l) return;
  PowerSeriesPrefix z = apply(*l, s);
  bool zero = std::all_of(z.coefficients.begin(), z.coefficients.end(), [](const Rational& q) { return q == 0; });
  r.add("d3-annihilates", zero, "to order " + std::to_string(z.order()));
  auto p = match_parametric(*l);
  std::string details = "not in the parametric family";
  if (p) {
    std::ostringstream os;
    os << "lambda=" << p->lambda << " a01=" << p->a01 << " a02=" << p->a02 << " a03=" << p->a03 << " a11=" << p->a11
       << " a12=" << p->a12;
    details = os.str();
  }
  r.add("d3-parametric", p.has_value(), details);
  PowerSeriesPrefix u = fundamental_term(*l, z.order());
  PowerSeriesPrefix head{{s.coefficients.begin(), s.coefficients.begin() + z.order() + 1}};
  r.add("fundamental-term", u == head, "equals the shifted period series to order " + std::to_string(z.order()));
}

void ci_checks(const FanoEntry& e, const VerifyOptions& opt, VerificationReport& r) {
  r.append(verify_thm_ci(*e.ci), "ci.");
  NefPartition p = find_nef_partition(*e.ci);
  LaurentPolynomial hv = hori_vafa(p);
  r.add("hori-vafa-verbatim", hv == e.lg, hv.to_string());
  auto alpha = match_up_to_shift(hv, e.lg, opt.match_order);
  r.add("hori-vafa-series", alpha && *alpha == 0,
        alpha ? "alpha = " + to_string(*alpha) : "no shift matches to order " + std::to_string(opt.match_order));
}

void triangulation_checks(const FanoEntry& e, VerificationReport& r) {
  Polytope nabla = dual_polytope(newton_polytope(e.lg));
  std::size_t m = lattice_points(nabla).size();
  long deg = 2 * (static_cast<long>(m) - 3);
  r.add("degree-from-points", deg == e.anticanonical_degree(),
        "m = " + std::to_string(m) + ", 2(m-3) = " + std::to_string(deg));
  if (m >= 7 && m <= 11) {
    IltenReport il = check_ilten_hypotheses(nabla);
    r.append(il.report, "ilten.");
    if (il.witness) r.add("witness-regular", is_regular(*il.witness) && is_unimodular(*il.witness));
  } else {
    r.flag("ilten.window", "m = " + std::to_string(m) + " outside 7..11: theorem not applicable");
    r.add("reflexive", is_reflexive(nabla));
    auto w = search_triangulation(nabla, one_six_rest_four_five());
    std::string prof;
    if (w) {
      auto v = valencies(*w);
      std::sort(v.begin(), v.end());
      for (int x : v) prof += std::to_string(x);
    }
    r.add("valency-one-six", w.has_value(), w ? "surface valencies " + prof : "no witness");
    r.flag("hilbert-scheme", "component comparison is out of scope");
  }
}

void toric_checks(const FanoEntry& e, VerificationReport& r) {
  Polytope np = newton_polytope(e.lg);
  r.add("newton-reflexive", is_reflexive(np));
  Polytope p3 = convex_hull(std::vector<LatticeVector>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}});
  r.add("projective-space-polytope", np == p3);
  auto inner = interior_lattice_points(np);
  r.add("canonical", inner.size() == 1 && inner[0].is_zero(), std::to_string(inner.size()) + " interior points");
}

}  // namespace

VerificationReport verify_row(const FanoEntry& e, const VerifyOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport r;
  r.row = e.number;
  Polytope np = newton_polytope(e.lg);
  r.add("origin-interior", np.full_dimensional() && np.origin_in_interior());
  switch (e.route) {
    case Route::CI: ci_checks(e, opt, r); break;
    case Route::Triangulation: triangulation_checks(e, r); break;
    case Route::ExternalSmallToric:
      r.flag("degeneration", "externally established small toric degeneration");
      r.add("newton-reflexive", is_reflexive(np));
      break;
    case Route::Toric: toric_checks(e, r); break;
  }
  period_checks(e, opt, r);
  r.milliseconds = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

VerificationReport verify_k3_row(const FanoEntry& e) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport r;
  r.row = e.number;
  const K3Route& k = e.k3;
  if (!k.machine_checkable()) {
    r.flag("k3", "method " + std::to_string(k.method) + ": not machine-checkable from paper data");
    return r;
  }
  if (!k.lattice.empty()) {
    NSLattice named = parse_lattice(k.lattice);
    LatticeInvariants inv = lattice_invariants(gram_matrix(named));
    std::string mw = k.mw_rank ? " + MW rank " + std::to_string(k.mw_rank) : "";
    r.add("named-lattice-rank", inv.rank + k.mw_rank == 19, k.lattice + " rank " + std::to_string(inv.rank) + mw);
    r.add("named-lattice-signature", inv.positive == 1 && inv.negative == inv.rank - 1,
          "(" + std::to_string(inv.positive) + "," + std::to_string(inv.negative) + ")");
  }
  if (!k.fibers.empty() && k.model.empty()) {
    NSLattice l = assemble_lattice(k.fibers, k.mw_rank, k.mw_torsion);
    r.add("declared-fibers-rank", l.rank() == 19,
          join(k.fibers) + ": " + std::to_string(l.summand_rank()) + " + " + std::to_string(k.mw_rank));
    if (!k.lattice.empty())
      r.add("declared-fibers-lattice", sorted_names(l) == sorted_names(parse_lattice(k.lattice)), l.name());
  }
  if (!k.model.empty()) {
    std::vector<std::string> first;
    for (const Rational& w : model_witnesses(k.model)) {
      std::string tag = "model[" + to_string(w) + "].";
      WeierstrassModel wm = model_at(k.model, w);
      std::vector<KodairaFiber> fibers;
      try {
        fibers = classify_fibers(wm);
      } catch (const Error& ex) {
        r.add(tag + "classify", false, ex.what());
        continue;
      }
      auto types = fiber_multiset(fibers);
      r.add(tag + "euler-sum", euler_sum(fibers) == 24, std::to_string(euler_sum(fibers)));
      r.add(tag + "delta-order-sum", delta_order_sum(fibers) == 24, std::to_string(delta_order_sum(fibers)));
      if (!k.fibers.empty()) {
        auto want = k.fibers;
        std::sort(want.begin(), want.end());
        r.add(tag + "fiber-types", types == want, join(types));
      }
      NSLattice l = assemble_lattice(fibers, k.mw_rank, k.mw_torsion);
      r.add(tag + "assembled-rank", l.rank() == 19,
            l.name() + ": " + std::to_string(l.summand_rank()) + " + " + std::to_string(k.mw_rank));
      if (!k.lattice.empty())
        r.add(tag + "assembled-lattice", sorted_names(l) == sorted_names(parse_lattice(k.lattice)), l.name());
      if (k.model == "case15") {
        for (auto& sec : case15_sections(w)) {
          SectionCheck c = verify_section(wm, sec.u, sec.v);
          bool ok = c.on_curve && (sec.name != "two-torsion" || c.two_torsion);
          r.add(tag + "section." + sec.name, ok, c.on_curve ? "on the curve" : "not on the curve");
        }
      }
      if (first.empty()) first = types;
      else r.add("model.witness-stable", first == types, "fiber types agree across witnesses");
    }
  }
  if (!k.fibration_polynomial.empty()) {
    Polytope delta = dual_polytope(newton_polytope(parse_laurent(k.fibration_polynomial)));
    FibrationPolygon fp = fibration_polygon(delta, k.m);
    r.add("fiber-polygon-reflexive", fp.reflexive, "m = " + to_string(k.m));
    std::string which = fp.section_edge ? "edge of the slice" : fp.dual_section_edge ? "edge of the dual slice" : "none";
    r.add("toric-section", fp.section_edge || fp.dual_section_edge, which);
  }
  r.milliseconds = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<VerificationReport> verify_rows(const std::vector<FanoEntry>& rows, bool with_k3, unsigned jobs,
                                            const VerifyOptions& opt) {
  std::vector<VerificationReport> out(rows.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < rows.size();) {
      VerificationReport r = verify_row(rows[i], opt);
      if (with_k3) {
        VerificationReport k = verify_k3_row(rows[i]);
        r.append(k, "k3.");
        r.milliseconds += k.milliseconds;
      }
      out[i] = std::move(r);
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(rows.size())));
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return out;
}

}  // namespace fanolg
