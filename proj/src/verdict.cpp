#include "conespec/verdict.hpp"

namespace conespec {

const char* to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::A1: return "A1";
    case Hypothesis::A2: return "A2";
    case Hypothesis::B1: return "B1";
    case Hypothesis::B2: return "B2";
    case Hypothesis::SSP: return "SSP";
    case Hypothesis::SSI: return "SSI";
    case Hypothesis::superadditive: return "superadditive";
    case Hypothesis::order_preserving_weak: return "order_preserving(weak)";
    case Hypothesis::order_preserving_strict: return "order_preserving(strict)";
    case Hypothesis::order_preserving_strong: return "order_preserving(strong)";
    case Hypothesis::positivity: return "positivity";
    case Hypothesis::orbit_growth: return "orbit_growth";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass_certified: return "pass_certified";
    case Verdict::pass_sampled: return "pass_sampled";
    case Verdict::fail: return "fail";
    case Verdict::unknown: return "unknown";
  }
  return "?";
}

HypothesisVerdict make_pass(Hypothesis h, Verdict v, std::string detail) {
  HypothesisVerdict out;
  out.hypothesis = h;
  out.verdict = v;
  out.detail = std::move(detail);
  return out;
}

HypothesisVerdict make_fail(Hypothesis h, RVec witness_x, std::string detail) {
  HypothesisVerdict out;
  out.hypothesis = h;
  out.verdict = Verdict::fail;
  out.witness_x = to_eigen(witness_x);
  out.witness_x_exact = std::move(witness_x);
  out.detail = std::move(detail);
  return out;
}

HypothesisVerdict make_fail_pair(Hypothesis h, RVec witness_x, RVec witness_y,
                                 std::string detail) {
  HypothesisVerdict out = make_fail(h, std::move(witness_x), std::move(detail));
  out.witness_y = to_eigen(witness_y);
  out.witness_y_exact = std::move(witness_y);
  return out;
}

}  // namespace conespec
