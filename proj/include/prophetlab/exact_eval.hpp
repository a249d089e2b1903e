#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "prophetlab/core.hpp"

namespace prophetlab {

enum class EvalMethod { exact, enumerated, montecarlo };

std::string to_string(EvalMethod m);

/// OPT, algorithm value and their ratio. ratio is 1 when opt is 0.
struct EvalReport {
  double opt = 0.0;
  double alg = 0.0;
  double ratio = 1.0;
  EvalMethod method = EvalMethod::exact;
  std::optional<double> ci_halfwidth;  // 95% half-width of the ratio (Monte Carlo only)
};

EvalReport make_report(double opt, double alg, EvalMethod method);
double competitive_ratio(double alg, double opt);

nlohmann::json to_json(const EvalReport& report);

/// E[max_i X_i]. Order of the variables is irrelevant.
double opt_value(const BernoulliInstance& instance);

/// Expected value of accepting the first realized X_i >= tau.
/// Valid for any order; sorted instances use the backward recursion over
/// value segments.
double tal(const BernoulliInstance& instance, double tau);

/// Expected value with effective threshold max(tau, alpha * m(R)), where the
/// prediction takes its worst feasible value. Sorted instances only; computed
/// by conditioning on the largest realized index. O(n^2).
double tal_alpha(const BernoulliInstance& instance, double tau, QualityAlpha alpha);

/// tal_alpha averaged over a base threshold tau + eps with eps ~ U[0, delta].
double tal_alpha_randomized(const BernoulliInstance& instance, double tau, double delta, QualityAlpha alpha);

struct MaxTail {
  double prob = 0.0;         // P[M >= t]
  double partial_exp = 0.0;  // E[M 1[M >= t]]
};

MaxTail max_tail(const BernoulliInstance& instance, double t);

/// E over eps ~ U[0, delta] of max_tail(instance, t + eps).
MaxTail max_tail_randomized(const BernoulliInstance& instance, double t, double delta);

}  // namespace prophetlab
