#pragma once

// JSON forms of algebras, modules, cochains and cohomology reports.
//
// Algebra: {p, even, odd, brackets: [{i, j, out}], pmap: [{i, out}]} with
// 0-based indices into even||odd and i <= j. Module: {even, odd, action}
// with one row-major matrix per algebra basis element. Cochain values are
// coordinates in the product-normalised basis.

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "supercohom/cohomology.hpp"

namespace supercohom {

using Json = nlohmann::json;

// Malformed or inconsistent input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses text, reporting the byte offset of a syntax error.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

Json algebra_to_json(const SuperAlgebra& L);
AlgebraPtr algebra_from_json(const Json& j);

Json module_to_json(const Representation& R);
Representation module_from_json(const Json& j, const AlgebraPtr& L);

Json cochain_to_json(const CochainSpace& C, const Vec& coords);
Vec cochain_from_json(const Json& j, const CochainSpace& C);

Json restricted_to_json(const CochainSpace& C2, const RestrictedTwoCochain& c);
RestrictedTwoCochain restricted_two_from_json(const Json& j, const CochainSpace& C2);
Json restricted_to_json(const CochainSpace& C3, const RestrictedThreeCochain& c);
RestrictedThreeCochain restricted_three_from_json(const Json& j, const CochainSpace& C3);

struct ReportRecord {
  std::uint32_t p = 0;
  std::optional<Vec> lambda;
  CohomologyReport report;
};

// Representatives are written as cochains, or as restricted pairs in
// restricted degree 2. C is the cochain space of the report's degree.
Json report_to_json(const CochainSpace& C, const ReportRecord& r);
ReportRecord report_from_json(const Json& j, const CochainSpace& C);

}  // namespace supercohom
