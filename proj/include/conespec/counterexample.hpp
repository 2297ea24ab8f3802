#pragma once

#include "conespec/maps.hpp"
#include "conespec/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace conespec {

/// The fixed 2-dimensional piecewise-conical-linear map on the nonnegative
/// quadrant with three sectors: the outer sectors apply all-positive rank-one
/// matrices, the middle sector {x1 <= 2*x2, x2 <= 2*x1} scales by 3, so every
/// point of the middle sector is an eigenvector for eigenvalue 3. All entries
/// are exact rationals; membership ties at the sector rays resolve to the
/// middle (closed) sector.
ConeMap build_example1();

/// Region labels of build_example1 in listed order: middle sector first.
enum class Example1Region { middle = 0, lower = 1, upper = 2 };

/// Region of a point under the tie rule (middle sector is closed).
Example1Region example1_region(const RVec& x);

/// Non-default generator for the parametrized family with sector slope k > 1
/// and middle-sector eigenvalue c > 0: the outer matrices are the rank-one
/// maps that agree with c*x on the shared rays (k,1) and (1,k). The slope-2,
/// eigenvalue-3 member coincides with build_example1(). Construction validates
/// continuity and partition cover exactly; no further claims are attached to
/// non-default members.
ConeMap build_sector_family(const Rational& slope, const Rational& eigenvalue);

struct CasePairStats {
  std::string name;     // e.g. "lower<middle"
  long samples = 0;
  long violations = 0;  // expected 0
  std::string first_violation;  // exact rationals, empty when none
};

struct CaseAnalysisReport {
  std::vector<CasePairStats> cases;
  long total_samples = 0;
  long total_violations = 0;
  bool chains_verified = true;  // the intermediate inequality chains held on every pair
  bool all_strict = true;       // T(x) < T(y) strictly on every sampled comparable pair
};

/// Samples comparable pairs in every ordered region configuration and verifies
/// strict order preservation exactly, re-deriving the intermediate inequality
/// chains (cross-sector and sector-to-middle) on each pair.
CaseAnalysisReport verify_case_analysis(long samples_per_case = 1000, unsigned seed = 7);

struct Certificate {
  std::string claim;
  std::string data;   // exact rationals
  bool holds = false;
};

struct RefutationReport {
  std::vector<Certificate> hypothesis_certificates;  // the refuted theorem's premises
  std::vector<Certificate> eigenvector_certificates; // >= 3 distinct unit eigenvectors
  std::vector<Certificate> eigencone_certificates;   // dimension 2
  std::vector<Certificate> non_eigenvector_certificates;
  CaseAnalysisReport case_analysis;
  long boundary_samples = 0;
  bool strongly_positive = false;
  bool strictly_order_preserving = false;
  bool multiple_unit_eigenvectors = false;
  int eigencone_dimension = 0;
  bool uniqueness_refuted = false;   // theorem item (i)
  bool simplicity_refuted = false;   // theorem item (iii)
  std::string conclusion;
};

struct RefutationOptions {
  long case_samples_per_config = 12000;  // x 9 configurations
  long boundary_samples = 1200;
  long region_probes = 64;  // certified non-eigenvector probes per outer sector
  unsigned seed = 7;
};

/// Machine-checked refutation: verifies every hypothesis of the uniqueness/
/// simplicity claim in exact rational arithmetic, then exhibits three distinct
/// unit eigenvectors with the same eigenvalue and a two-dimensional eigencone.
/// A failed sub-assertion throws with the offending certificate.
RefutationReport refutation_report(const RefutationOptions& opts = {});

std::string to_text(const RefutationReport& report);

}  // namespace conespec
