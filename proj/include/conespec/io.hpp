#pragma once

#include "conespec/counterexample.hpp"
#include "conespec/hypotheses.hpp"
#include "conespec/maps.hpp"
#include "conespec/spectral.hpp"
#include "conespec/superadditive.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace conespec {

using Json = nlohmann::ordered_json;

/// Schema violation with the JSON pointer of the offending element.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string pointer, const std::string& message)
      : std::runtime_error(message + " (at " + pointer + ")"), pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

/// {"orthant": n} or {"dim": n, "facets": [[...], ...]}; entries are numbers
/// (converted exactly) or rational strings "p/q".
PolyhedralCone parse_cone(const Json& j, const std::string& pointer = "/cone");

/// {"type": "linear"|"pwl"|"min_linear"|"max_linear"|"compose"|"scaled"|"builtin", ...}
ConeMap parse_map_description(const Json& j, const std::string& pointer = "");

extern const char* const kBuiltinCounterexample;  // "mahadevan_counterexample"
ConeMap builtin_map(const std::string& name);

// -- report serialization -----------------------------------------------------------

Json to_json(const Estimate& e);
Json to_json(const EigenPair& p);
Json to_json(const Eigencone& e);
Json to_json(const PwlEigenReport& r);
Json to_json(const BonsallResult& r);
Json to_json(const SpectralReport& r);
Json to_json(const HypothesisVerdict& v);
Json to_json(const ImplicationAuditReport& r);
Json to_json(const CaseAnalysisReport& r);
Json to_json(const RefutationReport& r);
Json to_json(const RegionEigenPair& p);
Json to_json(const SuperadditiveAnalysis& a);
Json to_json(const BoundaryRayCertificate& c);

}  // namespace conespec
