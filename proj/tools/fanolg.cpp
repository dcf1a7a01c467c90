#include "fanolg/catalog.hpp"
#include "fanolg/json_io.hpp"
#include "fanolg/lattice_geometry.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>

using namespace fanolg;
namespace fs = std::filesystem;

namespace {

std::string fixture_dir() {
  if (const char* env = std::getenv("FANOLG_FIXTURE_DIR")) return env;
  return std::string(FANOLG_DATA_DIR) + "/fixtures";
}

std::string resolve_input(const std::string& path) {
  if (fs::exists(path)) return path;
  fs::path dir = fixture_dir();
  for (fs::path cand : {dir / path, dir / fs::path(path).filename()})
    if (fs::exists(cand)) return cand.string();
  throw ParseError("cannot find input " + path);
}

void emit(const Json& j, const std::string& out) {
  if (out.empty()) std::cout << dump(j);
  else write_text_file(out, dump(j));
}

std::vector<FanoEntry> catalog(const std::string& path) { return path.empty() ? load_catalog() : load_catalog(path); }

RationalFunction rf_from_json(const Json& j) {
  RationalFunction f;
  f.num = upoly_from_json(j.at("num"));
  if (j.contains("den")) f.den = upoly_from_json(j.at("den"));
  return f;
}

Json rf_to_json(const RationalFunction& f) { return {{"num", to_json(f.num)}, {"den", to_json(f.den)}}; }

Json fixture(const std::string& name, const std::string& parameter, const Rational& w) {
  WeierstrassModel m = model_at(name, w);
  Json j = {{"name", name},
            {"parameter", parameter},
            {"witness", to_json(w)},
            {"input_form", "X^3 + Y^2 + A X + B = 0, u = -X"},
            {"model", to_json(m)}};
  if (name == "case15") {
    Json secs = Json::array();
    for (auto& s : case15_sections(w))
      secs.push_back({{"name", s.name}, {"u", rf_to_json(s.u)}, {"v", rf_to_json(s.v)}});
    j["sections"] = secs;
  }
  return j;
}

int run_tate(const std::string& file, int mw_rank, const std::string& out) {
  Json in = read_json_file(resolve_input(file));
  const Json& mj = in.contains("model") ? in.at("model") : in;
  WeierstrassModel w = weierstrass_from_json(mj);
  Discriminant d = discriminant(w);
  auto fibers = classify_fibers(w);
  NSLattice l = assemble_lattice(fibers, mw_rank);
  Json j = {{"model", to_json(w)},
            {"discriminant", {{"delta", to_json(d.delta)}, {"order_at_infinity", d.order_at_infinity}}},
            {"fibers", to_json(fibers)},
            {"fiber_types", fiber_multiset(fibers)},
            {"euler_sum", euler_sum(fibers)},
            {"lattice", l.name()},
            {"mw_rank", mw_rank},
            {"rank", l.rank()}};
  if (in.contains("sections")) {
    Json secs = Json::array();
    for (auto& s : in["sections"]) {
      SectionCheck c = verify_section(w, rf_from_json(s.at("u")), rf_from_json(s.at("v")));
      secs.push_back({{"name", s.value("name", "")}, {"on_curve", c.on_curve}, {"two_torsion", c.two_torsion}});
    }
    j["sections"] = secs;
  }
  emit(j, out);
  return 0;
}

int run_fit(const std::string& file, const std::string& out) {
  PowerSeriesPrefix s = series_from_json(read_json_file(resolve_input(file)));
  auto l = fit_d3(s);
  if (!l) {
    emit({{"operator", nullptr}, {"reason", "no D3 operator of this shape annihilates the series"}}, out);
    return 1;
  }
  PowerSeriesPrefix z = apply(*l, s);
  bool zero = std::all_of(z.coefficients.begin(), z.coefficients.end(), [](const Rational& q) { return q == 0; });
  emit({{"operator", to_json(*l, match_parametric(*l))}, {"annihilates_to", z.order()}, {"verified", zero}}, out);
  return zero ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Landau-Ginzburg model verification for rank-one Fano threefolds"};
  app.require_subcommand(1);
  std::string catalog_path;
  app.add_option("--catalog", catalog_path, "catalog JSON instead of the embedded table");

  int row = 0;
  std::size_t order = 12;
  bool shifted = false;
  std::string out;
  auto* periods = app.add_subcommand("periods", "constant-term series of a row");
  periods->add_option("--row", row, "row number")->required()->check(CLI::Range(1, 17));
  periods->add_option("--order", order, "last coefficient index");
  periods->add_flag("--shift", shifted, "apply the row's constant shift");
  periods->add_option("--out", out, "output file");

  std::vector<int> rows;
  bool all = false, k3 = false, timing = false;
  unsigned jobs = 1;
  std::size_t series_order = 40;
  auto* verify = app.add_subcommand("verify", "verify catalog rows");
  verify->add_option("--row", rows, "row number (repeatable)")->check(CLI::Range(1, 17));
  verify->add_flag("--all", all, "all 17 rows");
  verify->add_flag("--k3", k3, "also run the K3 lattice checks");
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--order", series_order, "series order for operator fitting")->check(CLI::Range(25, 200));
  verify->add_flag("--timing", timing, "include timings in the report");
  verify->add_option("--out", out, "output file");

  bool dual = false;
  auto* polytope = app.add_subcommand("polytope", "Newton polytope of a row");
  polytope->add_option("--row", row, "row number")->required()->check(CLI::Range(1, 17));
  polytope->add_flag("--dual", dual, "dual polytope instead");
  polytope->add_option("--out", out, "output file");

  std::string file;
  int mw_rank = 0;
  auto* tate = app.add_subcommand("tate", "classify the singular fibers of a Weierstrass model");
  tate->add_option("file", file, "Weierstrass JSON")->required();
  tate->add_option("--mw-rank", mw_rank, "Mordell-Weil rank to add");
  tate->add_option("--out", out, "output file");

  auto* fit = app.add_subcommand("fit", "fit a D3 operator to a series");
  fit->add_option("file", file, "series JSON")->required();
  fit->add_option("--out", out, "output file");

  std::string dir;
  auto* cat = app.add_subcommand("catalog", "write the catalog JSON");
  cat->add_option("--out", out, "output file");
  auto* fixtures = app.add_subcommand("fixtures", "regenerate the fixture files");
  fixtures->add_option("--out", dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*periods) {
      auto entries = catalog(catalog_path);
      const FanoEntry& e = catalog_row(entries, row);
      PowerSeriesPrefix s = shifted ? row_series(e, order) : phi_series(e.lg, order);
      Json j = to_json(s);
      j["row"] = row;
      j["alpha"] = to_json(shifted ? e.alpha : Rational(0));
      emit(j, out);
      return 0;
    }
    if (*verify) {
      if (all == !rows.empty()) {
        std::cerr << "verify: give --all or at least one --row\n";
        return 2;
      }
      auto cat_rows = catalog(catalog_path);
      std::vector<FanoEntry> sel;
      if (all) sel = cat_rows;
      else
        for (int r : rows) sel.push_back(catalog_row(cat_rows, r));
      VerifyOptions opt;
      opt.series_order = series_order;
      auto reports = verify_rows(sel, k3, jobs, opt);
      Json j = Json::array();
      bool fail = false;
      for (auto& r : reports) {
        j.push_back(to_json(r, timing));
        fail |= r.any_fail();
        for (auto& c : r.checks)
          if (c.status != Status::Pass)
            std::cerr << "row " << r.row << " " << c.name << ": " << to_string(c.status) << " " << c.details << "\n";
      }
      emit(j, out);
      return fail ? 1 : 0;
    }
    if (*polytope) {
      auto entries = catalog(catalog_path);
      const FanoEntry& e = catalog_row(entries, row);
      Polytope p = newton_polytope(e.lg);
      if (dual) p = dual_polytope(p);
      Json j = to_json(p);
      j["row"] = row;
      j["kind"] = dual ? "dual" : "newton";
      j["lattice_points"] = lattice_points(p).size();
      j["reflexive"] = p.full_dimensional() && p.origin_in_interior() && is_reflexive(p);
      emit(j, out);
      return 0;
    }
    if (*tate) return run_tate(file, mw_rank, out);
    if (*fit) return run_fit(file, out);
    if (*cat) {
      emit(catalog_to_json(catalog(catalog_path)), out);
      return 0;
    }
    if (*fixtures) {
      fs::path d = dir.empty() ? fs::path(fixture_dir()) : fs::path(dir);
      fs::create_directories(d);
      write_text_file((d / "case3.json").string(), dump(fixture("case3", "lambda", 1)));
      write_text_file((d / "case15.json").string(), dump(fixture("case15", "s", 1)));
      auto entries = load_catalog();
      Json s = to_json(row_series(catalog_row(entries, 17), 40));
      s["row"] = 17;
      write_text_file((d / "row17-series.json").string(), dump(s));
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
