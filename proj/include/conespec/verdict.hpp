#pragma once

#include "conespec/rational.hpp"

#include <Eigen/Core>

#include <optional>
#include <string>

namespace conespec {

enum class Hypothesis {
  A1,
  A2,
  B1,
  B2,
  SSP,
  SSI,
  superadditive,
  order_preserving_weak,
  order_preserving_strict,
  order_preserving_strong,
  positivity,
  orbit_growth,
};

enum class Verdict {
  pass_certified,
  pass_sampled,
  fail,
  unknown,
};

const char* to_string(Hypothesis h);
const char* to_string(Verdict v);

/// Outcome of a hypothesis checker. A fail always carries a witness that
/// re-verifies as a genuine violation under exact re-evaluation.
struct HypothesisVerdict {
  Hypothesis hypothesis;
  Verdict verdict;
  std::optional<Eigen::VectorXd> witness_x;
  std::optional<Eigen::VectorXd> witness_y;
  std::optional<RVec> witness_x_exact;
  std::optional<RVec> witness_y_exact;
  std::optional<double> beta;
  std::string detail;

  bool passed() const {
    return verdict == Verdict::pass_certified || verdict == Verdict::pass_sampled;
  }
};

HypothesisVerdict make_pass(Hypothesis h, Verdict v, std::string detail = {});
HypothesisVerdict make_fail(Hypothesis h, RVec witness_x, std::string detail = {});
HypothesisVerdict make_fail_pair(Hypothesis h, RVec witness_x, RVec witness_y,
                                 std::string detail = {});

}  // namespace conespec
