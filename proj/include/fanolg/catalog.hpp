#pragma once

#include "fanolg/ci_degeneration.hpp"
#include "fanolg/json_io.hpp"
#include "fanolg/k3_fibration.hpp"
#include "fanolg/laurent.hpp"
#include "fanolg/period.hpp"
#include "fanolg/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fanolg {

enum class Route { CI, Triangulation, ExternalSmallToric, Toric };

const char* to_string(Route r);
Route route_from_string(const std::string& s);

struct K3Route {
  int method = 0;                    // 1 quartic, 2 line pencil, 3 product, 4 toric
  std::string lattice;               // named polarizing lattice, e.g. "U+E7+D10"
  std::vector<std::string> fibers;   // declared or expected fiber types
  int mw_rank = 0;
  std::vector<int> mw_torsion;
  std::string model;                 // "case3", "case15" or empty
  std::string fibration_polynomial;  // polytope source for method 4
  LatticeVector m;                   // fibration vector for method 4

  bool machine_checkable() const { return !lattice.empty() || !fibers.empty() || !model.empty(); }
  friend bool operator==(const K3Route&, const K3Route&) = default;
};

struct FanoEntry {
  int number = 0;
  int index = 0;
  std::string degree_text;  // as tabulated, e.g. "8*5"
  long degree = 0;          // H^3 where -K = index * H
  std::string description;
  std::string polynomial_text;
  LaurentPolynomial lg;
  Route route = Route::CI;
  Rational alpha;
  std::optional<WeightedCI> ci;
  K3Route k3;

  long anticanonical_degree() const { return static_cast<long>(index) * index * index * degree; }
};

bool operator==(const FanoEntry& a, const FanoEntry& b);

std::vector<FanoEntry> load_catalog();
std::vector<FanoEntry> load_catalog(const std::string& json_path);
const FanoEntry& catalog_row(const std::vector<FanoEntry>& c, int number);  // throws PreconditionError

Json to_json(const FanoEntry& e);
FanoEntry entry_from_json(const Json& j);
Json catalog_to_json(const std::vector<FanoEntry>& c);
std::vector<FanoEntry> catalog_from_json(const Json& j);

// Models read off the displayed Weierstrass forms at a parameter witness.
WeierstrassModel case3_model(const Rational& lambda);
WeierstrassModel case15_model(const Rational& s);
struct DisplayedSection {
  std::string name;
  RationalFunction u, v;  // canonical coordinates
};
std::vector<DisplayedSection> case15_sections(const Rational& s);
std::vector<Rational> model_witnesses(const std::string& model);
WeierstrassModel model_at(const std::string& model, const Rational& witness);

struct VerifyOptions {
  std::size_t series_order = 40;
  std::size_t match_order = 12;
};

// The shifted period series phi_{f + alpha} to the given order.
PowerSeriesPrefix row_series(const FanoEntry& e, std::size_t order);
VerificationReport verify_row(const FanoEntry& e, const VerifyOptions& opt = {});
VerificationReport verify_k3_row(const FanoEntry& e);
// Rows in the given order, run on up to `jobs` threads.
std::vector<VerificationReport> verify_rows(const std::vector<FanoEntry>& rows, bool k3, unsigned jobs,
                                            const VerifyOptions& opt = {});

}  // namespace fanolg
