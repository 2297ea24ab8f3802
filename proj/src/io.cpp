#include "conespec/io.hpp"

#include <string>
#include <vector>

namespace conespec {

const char* const kBuiltinCounterexample = "mahadevan_counterexample";

namespace {

Rational parse_entry(const Json& j, const std::string& pointer) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
      throw SchemaError(pointer, e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_float()) return Rational(j.get<double>());
  throw SchemaError(pointer, "expected a number or a rational string \"p/q\"");
}

RVec parse_vector(const Json& j, int dim, const std::string& pointer) {
  if (!j.is_array()) throw SchemaError(pointer, "expected an array");
  if (dim >= 0 && static_cast<int>(j.size()) != dim)
    throw SchemaError(pointer, "expected " + std::to_string(dim) + " entries, got " +
                                   std::to_string(j.size()));
  RVec out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(parse_entry(j[i], pointer + "/" + std::to_string(i)));
  return out;
}

RMat parse_matrix(const Json& j, int dim, const std::string& pointer) {
  if (!j.is_array() || j.empty()) throw SchemaError(pointer, "expected a nonempty array of rows");
  RMat out;
  const int cols = dim >= 0 ? dim : static_cast<int>(j[0].size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(parse_vector(j[i], cols, pointer + "/" + std::to_string(i)));
  if (dim >= 0 && static_cast<int>(out.size()) != dim)
    throw SchemaError(pointer, "expected " + std::to_string(dim) + " rows, got " +
                                   std::to_string(out.size()));
  return out;
}

int require_positive_int(const Json& j, const std::string& pointer) {
  if (!j.is_number_integer() || j.get<long long>() < 1)
    throw SchemaError(pointer, "expected a positive integer");
  return static_cast<int>(j.get<long long>());
}

}  // namespace

PolyhedralCone parse_cone(const Json& j, const std::string& pointer) {
  if (!j.is_object()) throw SchemaError(pointer, "expected a cone object");
  if (j.contains("orthant"))
    return PolyhedralCone::orthant(require_positive_int(j["orthant"], pointer + "/orthant"));
  if (!j.contains("dim") || !j.contains("facets"))
    throw SchemaError(pointer, "expected {\"orthant\": n} or {\"dim\": n, \"facets\": [...]}");
  const int dim = require_positive_int(j["dim"], pointer + "/dim");
  try {
    return PolyhedralCone::from_facets(dim, parse_matrix(j["facets"], -1, pointer + "/facets"));
  } catch (const SchemaError&) {
    throw;
  } catch (const std::exception& e) {
    throw SchemaError(pointer + "/facets", e.what());
  }
}

ConeMap builtin_map(const std::string& name) {
  if (name == kBuiltinCounterexample) return build_example1();
  if (name == "sector_family") return build_sector_family(Rational(2), Rational(3));
  throw SchemaError("/name", "unknown builtin \"" + name + "\"");
}

ConeMap parse_map_description(const Json& j, const std::string& pointer) {
  if (!j.is_object() || !j.contains("type"))
    throw SchemaError(pointer.empty() ? "/" : pointer, "expected a map object with \"type\"");
  const std::string type = j["type"].is_string() ? j["type"].get<std::string>() : "";

  try {
    if (type == "builtin") {
      if (!j.contains("name") || !j["name"].is_string())
        throw SchemaError(pointer + "/name", "builtin requires a \"name\" string");
      const std::string name = j["name"].get<std::string>();
      if (name == "sector_family" && (j.contains("slope") || j.contains("eigenvalue"))) {
        const Rational slope =
            j.contains("slope") ? parse_entry(j["slope"], pointer + "/slope") : Rational(2);
        const Rational eigenvalue = j.contains("eigenvalue")
                                        ? parse_entry(j["eigenvalue"], pointer + "/eigenvalue")
                                        : Rational(3);
        return build_sector_family(slope, eigenvalue);
      }
      return builtin_map(name);
    }
    if (type == "compose") {
      if (!j.contains("maps") || !j["maps"].is_array() || j["maps"].empty())
        throw SchemaError(pointer + "/maps", "compose requires a nonempty \"maps\" array");
      std::vector<ConeMap> parts;
      for (std::size_t i = 0; i < j["maps"].size(); ++i)
        parts.push_back(
            parse_map_description(j["maps"][i], pointer + "/maps/" + std::to_string(i)));
      return ConeMap::composition(std::move(parts));
    }
    if (type == "scaled") {
      if (!j.contains("scale") || !j.contains("map"))
        throw SchemaError(pointer, "scaled requires \"scale\" and \"map\"");
      return ConeMap::scaled(parse_entry(j["scale"], pointer + "/scale"),
                             parse_map_description(j["map"], pointer + "/map"));
    }
    if (!j.contains("cone")) throw SchemaError(pointer + "/cone", "missing cone description");
    PolyhedralCone cone = parse_cone(j["cone"], pointer + "/cone");
    if (type == "linear") {
      if (!j.contains("matrix")) throw SchemaError(pointer + "/matrix", "missing matrix");
      return ConeMap::linear(parse_matrix(j["matrix"], cone.dim(), pointer + "/matrix"),
                             std::move(cone));
    }
    if (type == "min_linear" || type == "max_linear") {
      if (!j.contains("matrices") || !j["matrices"].is_array() || j["matrices"].empty())
        throw SchemaError(pointer + "/matrices", "expected a nonempty \"matrices\" array");
      std::vector<RMat> mats;
      for (std::size_t i = 0; i < j["matrices"].size(); ++i)
        mats.push_back(parse_matrix(j["matrices"][i], cone.dim(),
                                    pointer + "/matrices/" + std::to_string(i)));
      return type == "min_linear" ? ConeMap::min_of_linear(std::move(mats), std::move(cone))
                                  : ConeMap::max_of_linear(std::move(mats), std::move(cone));
    }
    if (type == "pwl") {
      if (!j.contains("regions") || !j["regions"].is_array() || j["regions"].empty())
        throw SchemaError(pointer + "/regions", "expected a nonempty \"regions\" array");
      std::vector<ConicRegion> regions;
      for (std::size_t i = 0; i < j["regions"].size(); ++i) {
        const Json& rj = j["regions"][i];
        const std::string rp = pointer + "/regions/" + std::to_string(i);
        if (!rj.is_object() || !rj.contains("matrix"))
          throw SchemaError(rp, "region requires a \"matrix\"");
        ConicRegion region;
        region.matrix = parse_matrix(rj["matrix"], cone.dim(), rp + "/matrix");
        if (rj.contains("strict")) region.strict = parse_matrix(rj["strict"], -1, rp + "/strict");
        if (rj.contains("weak")) region.weak = parse_matrix(rj["weak"], -1, rp + "/weak");
        regions.push_back(std::move(region));
      }
      return ConeMap::piecewise(std::move(regions), std::move(cone));
    }
    throw SchemaError(pointer + "/type", "unknown map type \"" + type + "\"");
  } catch (const SchemaError&) {
    throw;
  } catch (const std::exception& e) {
    throw SchemaError(pointer.empty() ? "/" : pointer, e.what());
  }
}

// -- serialization --------------------------------------------------------------------

namespace {

Json vec_json(const Eigen::VectorXd& x) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < x.size(); ++i) out.push_back(x[i]);
  return out;
}

Json rvec_json(const RVec& x) {
  Json out = Json::array();
  for (const Rational& v : x) out.push_back(to_string(v));
  return out;
}

}  // namespace

Json to_json(const Estimate& e) {
  return Json{{"value", e.value}, {"method", e.method}, {"n", e.n}, {"residual", e.residual}};
}

Json to_json(const EigenPair& p) {
  Json out{{"lambda", p.lambda},
           {"x", vec_json(p.x)},
           {"location", p.location == EigenPair::Location::interior ? "interior" : "boundary"},
           {"method",
            p.method == EigenPair::Method::power_iteration ? "power_iteration" : "region_oracle"},
           {"residual", p.residual},
           {"exact", p.exact}};
  if (!p.region_indices.empty()) out["regions"] = p.region_indices;
  if (p.exact_ray) out["exact_ray"] = rvec_json(*p.exact_ray);
  if (p.exact_lambda) out["exact_lambda"] = to_string(*p.exact_lambda);
  return out;
}

Json to_json(const Eigencone& e) {
  Json rays = Json::array();
  for (const RVec& r : e.rays) rays.push_back(rvec_json(r));
  return Json{{"lambda", e.lambda},
              {"exact_lambda", to_string(e.exact_lambda)},
              {"region", e.region_index},
              {"rays", rays},
              {"dimension", e.dimension}};
}

Json to_json(const PwlEigenReport& r) {
  Json pairs = Json::array();
  for (const EigenPair& p : r.pairs) pairs.push_back(to_json(p));
  Json cones = Json::array();
  for (const Eigencone& e : r.eigencones) cones.push_back(to_json(e));
  return Json{{"pairs", pairs},
              {"eigencones", cones},
              {"r_hat", r.r_hat},
              {"r_hat_found", r.r_hat_found},
              {"exact", r.exact}};
}

Json to_json(const BonsallResult& r) {
  Json out = to_json(r.estimate);
  out["sequence"] = r.sequence;
  out["last_rel_change"] = r.last_rel_change;
  out["probes"] = r.probes;
  return out;
}

Json to_json(const SpectralReport& r) {
  Json mu = Json::object();
  for (const auto& [id, est] : r.local_mu) mu[id] = to_json(est);
  Json out{{"cone_norm", to_json(r.cone_norm)},
           {"bonsall", to_json(r.bonsall)},
           {"local_mu", mu},
           {"eigen_radius", to_json(r.eigen_radius)},
           {"eigen_radius_found", r.eigen_radius_found},
           {"chain_tol", r.chain_tol},
           {"chain_consistent", r.chain_consistent}};
  if (!r.notes.empty()) out["notes"] = r.notes;
  return out;
}

Json to_json(const HypothesisVerdict& v) {
  Json out{{"hypothesis", to_string(v.hypothesis)}, {"verdict", to_string(v.verdict)}};
  if (v.witness_x_exact)
    out["witness"] = rvec_json(*v.witness_x_exact);
  else if (v.witness_x)
    out["witness"] = vec_json(*v.witness_x);
  if (v.witness_y_exact)
    out["witness_y"] = rvec_json(*v.witness_y_exact);
  else if (v.witness_y)
    out["witness_y"] = vec_json(*v.witness_y);
  if (v.beta) out["beta"] = *v.beta;
  out["detail"] = v.detail;
  return out;
}

Json to_json(const ImplicationAuditReport& r) {
  Json imps = Json::array();
  for (const ImplicationCheck& c : r.implications)
    imps.push_back(Json{{"name", c.name},
                        {"antecedent", c.antecedent},
                        {"consequent", c.consequent},
                        {"violated", c.violated}});
  return Json{{"SSP", to_json(r.ssp)},
              {"B1", to_json(r.b1)},
              {"B2", to_json(r.b2)},
              {"SSI", to_json(r.ssi)},
              {"superadditive_certified", r.superadditive_certified},
              {"implications", imps},
              {"consistent", r.consistent}};
}

Json to_json(const CaseAnalysisReport& r) {
  Json cases = Json::array();
  for (const CasePairStats& s : r.cases) {
    Json c{{"case", s.name}, {"samples", s.samples}, {"violations", s.violations}};
    if (!s.first_violation.empty()) c["first_violation"] = s.first_violation;
    cases.push_back(c);
  }
  return Json{{"cases", cases},
              {"total_samples", r.total_samples},
              {"total_violations", r.total_violations},
              {"chains_verified", r.chains_verified},
              {"all_strict", r.all_strict}};
}

Json to_json(const RefutationReport& r) {
  auto certs = [](const std::vector<Certificate>& cs) {
    Json out = Json::array();
    for (const Certificate& c : cs)
      out.push_back(Json{{"claim", c.claim}, {"data", c.data}, {"holds", c.holds}});
    return out;
  };
  return Json{{"hypothesis_certificates", certs(r.hypothesis_certificates)},
              {"case_analysis", to_json(r.case_analysis)},
              {"boundary_samples", r.boundary_samples},
              {"strongly_positive", r.strongly_positive},
              {"strictly_order_preserving", r.strictly_order_preserving},
              {"eigenvector_certificates", certs(r.eigenvector_certificates)},
              {"multiple_unit_eigenvectors", r.multiple_unit_eigenvectors},
              {"eigencone_certificates", certs(r.eigencone_certificates)},
              {"non_eigenvector_certificates", certs(r.non_eigenvector_certificates)},
              {"eigencone_dimension", r.eigencone_dimension},
              {"uniqueness_refuted", r.uniqueness_refuted},
              {"simplicity_refuted", r.simplicity_refuted},
              {"conclusion", r.conclusion}};
}

Json to_json(const RegionEigenPair& p) {
  const char* stratum = p.stratum == RegionEigenPair::Stratum::cone_plus    ? "cone_plus"
                        : p.stratum == RegionEigenPair::Stratum::cone_minus ? "cone_minus"
                                                                            : "off_cone";
  Json out{{"lambda", p.lambda},
           {"x", vec_json(p.x)},
           {"stratum", stratum},
           {"regions", p.region_indices},
           {"region_boundary", p.region_boundary},
           {"exact", p.exact}};
  if (p.exact_lambda) out["exact_lambda"] = to_string(*p.exact_lambda);
  return out;
}

Json to_json(const SuperadditiveAnalysis& a) {
  Json others = Json::array();
  for (const RegionEigenPair& p : a.other_eigs) others.push_back(to_json(p));
  Json out{{"pair_plus", to_json(a.pair_plus)},
           {"pair_minus", to_json(a.pair_minus)},
           {"other_eigenvalues", others},
           {"B1", to_json(a.b1)},
           {"ordering_ok", a.ordering_ok},
           {"bound_ok", a.bound_ok},
           {"uniqueness_checked", a.uniqueness_checked},
           {"uniqueness_ok", a.uniqueness_ok},
           {"multistart_converged", a.multistart_converged},
           {"multistart_max_deviation", a.multistart_max_deviation},
           {"tol", a.tol}};
  if (!a.notes.empty()) out["notes"] = a.notes;
  return out;
}

Json to_json(const BoundaryRayCertificate& c) {
  return Json{{"alpha", c.alpha},
              {"boundary_point", c.boundary_point.size() ? vec_json(c.boundary_point) : Json()},
              {"duplicate", c.duplicate},
              {"degenerate", c.degenerate},
              {"contradiction_verified", c.contradiction_verified},
              {"beta", c.beta},
              {"detail", c.detail}};
}

}  // namespace conespec
