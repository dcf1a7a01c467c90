#pragma once

#include "fanolg/k3_fibration.hpp"
#include "fanolg/laurent.hpp"
#include "fanolg/lattice_geometry.hpp"
#include "fanolg/period.hpp"
#include "fanolg/report.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace fanolg {

using Json = nlohmann::ordered_json;

// Integers that fit 64 bits are numbers, larger ones decimal strings;
// non-integers are [num, den]. Input also accepts "num/den".
Json to_json(const Integer& z);
Json to_json(const Rational& q);
Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);

Json to_json(const LatticeVector& v);
Json to_json(const RationalVector& v);
LatticeVector lattice_vector_from_json(const Json& j);

Json to_json(const LaurentPolynomial& f);
LaurentPolynomial polynomial_from_json(const Json& j);

Json to_json(const PowerSeriesPrefix& s);
PowerSeriesPrefix series_from_json(const Json& j);

Json to_json(const D3Operator& l, const std::optional<D3Parameters>& params = std::nullopt);
Json to_json(const D3Parameters& p);
D3Operator operator_from_json(const Json& j);

Json to_json(const Polytope& p);

Json to_json(const UPoly& p);
UPoly upoly_from_json(const Json& j);
Json to_json(const WeierstrassModel& w);
WeierstrassModel weierstrass_from_json(const Json& j);
Json to_json(const KodairaFiber& f);
Json to_json(const std::vector<KodairaFiber>& fibers);

Json to_json(const VerificationReport& r, bool timing = false);

Json read_json_file(const std::string& path);
// Canonical text: two-space indent and a trailing newline.
std::string dump(const Json& j);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace fanolg
