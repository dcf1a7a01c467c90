#include "fanolg/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace fanolg {

Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

Json to_json(const Rational& q) {
  if (q.get_den() == 1) return to_json(Integer(q.get_num()));
  return Json::array({to_json(Integer(q.get_num())), to_json(Integer(q.get_den()))});
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad integer '" + j.get<std::string>() + "'");
    return z;
  }
  throw ParseError("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw ParseError("rational pair needs two entries");
    Integer den = integer_from_json(j[1]);
    if (den == 0) throw ParseError("zero denominator");
    return make_rational(integer_from_json(j[0]), den);
  }
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(integer_from_json(j));
    Integer den = integer_from_json(Json(s.substr(slash + 1)));
    if (den == 0) throw ParseError("zero denominator");
    return make_rational(integer_from_json(Json(s.substr(0, slash))), den);
  }
  return Rational(integer_from_json(j));
}

Json to_json(const LatticeVector& v) { return Json(v.coords()); }

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (auto& c : v) out.push_back(to_json(c));
  return out;
}

LatticeVector lattice_vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an integer vector");
  std::vector<std::int64_t> c;
  for (auto& e : j) {
    if (!e.is_number_integer()) throw ParseError("expected an integer vector");
    c.push_back(e.get<std::int64_t>());
  }
  return LatticeVector(c);
}

Json to_json(const LaurentPolynomial& f) {
  Json terms = Json::array();
  for (auto& [e, c] : f.terms()) {
    Rational q = c;
    Json coeff = Json::array({to_json(Integer(q.get_num())), to_json(Integer(q.get_den()))});
    terms.push_back({{"coeff", coeff}, {"exp", to_json(e)}});
  }
  return {{"rank", f.rank()}, {"terms", terms}};
}

LaurentPolynomial polynomial_from_json(const Json& j) {
  std::size_t rank = j.at("rank").get<std::size_t>();
  LaurentPolynomial f(rank);
  for (auto& t : j.at("terms")) {
    LatticeVector e = lattice_vector_from_json(t.at("exp"));
    require_rank(e.rank(), rank, "polynomial JSON");
    f.add_term(e, rational_from_json(t.at("coeff")));
  }
  return f;
}

Json to_json(const PowerSeriesPrefix& s) {
  Json c = Json::array();
  for (auto& q : s.coefficients) c.push_back(to_json(q));
  return {{"order", s.order()}, {"coefficients", c}};
}

PowerSeriesPrefix series_from_json(const Json& j) {
  PowerSeriesPrefix s;
  for (auto& c : j.at("coefficients")) s.coefficients.push_back(rational_from_json(c));
  if (j.contains("order") && j.at("order").get<std::size_t>() + 1 != s.coefficients.size())
    throw ParseError("series order does not match coefficient count");
  return s;
}

Json to_json(const D3Parameters& p) {
  return {{"lambda", to_json(p.lambda)}, {"a01", to_json(p.a01)}, {"a02", to_json(p.a02)},
          {"a03", to_json(p.a03)},       {"a11", to_json(p.a11)}, {"a12", to_json(p.a12)}};
}

Json to_json(const D3Operator& l, const std::optional<D3Parameters>& params) {
  Json table = Json::array();
  for (int j = 1; j <= 4; ++j) {
    Json row = Json::array();
    for (int d = 0; d < 4; ++d) row.push_back(to_json(l.coefficient(j, d)));
    table.push_back(row);
  }
  Json out = {{"head", "D^3"}, {"table", table}};
  if (params) out["parametric"] = to_json(*params);
  return out;
}

D3Operator operator_from_json(const Json& j) {
  const Json& t = j.at("table");
  if (t.size() != 4) throw ParseError("operator table needs 4 rows");
  D3Operator::Table c{};
  for (int r = 0; r < 4; ++r) {
    if (t[r].size() != 4) throw ParseError("operator table rows need 4 entries");
    for (int d = 0; d < 4; ++d) c[r][d] = rational_from_json(t[r][d]);
  }
  return D3Operator(c);
}

Json to_json(const Polytope& p) {
  Json verts = Json::array();
  for (auto& v : p.vertices()) verts.push_back(to_json(v));
  Json facets = Json::array();
  for (auto& f : p.facets()) facets.push_back({{"normal", to_json(f.normal)}, {"offset", to_json(f.offset)}});
  Json out = {{"rank", p.rank()}, {"dimension", p.dimension()}, {"vertices", verts}, {"facets", facets}};
  if (!p.equations().empty()) {
    Json eqs = Json::array();
    for (auto& e : p.equations()) eqs.push_back({{"normal", to_json(e.normal)}, {"value", to_json(e.value)}});
    out["equations"] = eqs;
  }
  return out;
}

Json to_json(const UPoly& p) {
  Json c = Json::array();
  for (auto& q : p.coefficients()) c.push_back(to_json(q));
  return c;
}

UPoly upoly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a coefficient list");
  std::vector<Rational> c;
  for (auto& e : j) c.push_back(rational_from_json(e));
  return UPoly(c);
}

Json to_json(const WeierstrassModel& w) {
  return {{"form", "v^2 = u^3 + a(t) u + b(t)"}, {"a", to_json(w.a)}, {"b", to_json(w.b)},
          {"deg_a", w.deg_a}, {"deg_b", w.deg_b}};
}

WeierstrassModel weierstrass_from_json(const Json& j) {
  WeierstrassModel w;
  w.a = upoly_from_json(j.at("a"));
  w.b = upoly_from_json(j.at("b"));
  if (j.contains("deg_a")) w.deg_a = j.at("deg_a").get<int>();
  if (j.contains("deg_b")) w.deg_b = j.at("deg_b").get<int>();
  return w;
}

Json to_json(const KodairaFiber& f) {
  Json out = {{"location", f.location()},
              {"count", f.count()},
              {"orders", {f.orders.g2, f.orders.g3, f.orders.delta}},
              {"type", f.type_name()}};
  std::string l = f.root_lattice();
  out["lattice"] = l.empty() ? Json(nullptr) : Json(l);
  return out;
}

Json to_json(const std::vector<KodairaFiber>& fibers) {
  Json out = Json::array();
  for (auto& f : fibers) out.push_back(to_json(f));
  return out;
}

Json to_json(const VerificationReport& r, bool timing) {
  Json checks = Json::array();
  for (auto& c : r.checks) checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"details", c.details}});
  Json out = {{"row", r.row}, {"checks", checks}};
  if (timing) out["milliseconds"] = r.milliseconds;
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

}  // namespace fanolg
