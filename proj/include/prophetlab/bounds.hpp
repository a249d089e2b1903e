#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace prophetlab::bounds {

/// Grid sizes and tolerances shared by the bound checks.
struct BoundConfig {
  int alpha_grid = 1000;
  int monotone_grid = 10000;
  int three_point_resolution = 2000;
  std::uint64_t three_point_random_samples = 1'000'000;
  double three_point_tolerance = 1e-3;
  double identity_tolerance = 1e-12;
};

inline constexpr BoundConfig kConfig{};

/// Optimal ratio with known prediction quality: 1 / (2 - alpha).
double bound_known(double alpha);

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
};

/// Bracket of the alpha-oblivious ratio: [1/2 + a^3/4, 1/2 + a/4].
Interval bound_oblivious(double alpha);

/// Ratio floor at alpha = 0 as a function of p = P[M >= T(3/4)]:
/// (4p^2 - 6p + 3) / (4(1 - p)). Throws std::domain_error outside (0,1).
double g_robust(double p);

/// Bounded-value ratio with tail fraction c. With `conditional` the leading
/// factor c is dropped.
double smallvalues_ratio(double c, double alpha, bool conditional);

/// Minimum of the three-Bernoulli program in closed form (k > 1, t > 0).
double three_point_closed_form(double k, double t);

/// Minimizer location of the boundary program: t / (k + t + k sqrt(t+1)).
double three_point_argmin_x2(double k, double t);

/// Objective and constraint of the three-Bernoulli program.
double three_point_objective(double k, double x0, double x1, double x2);

struct GridMinimum {
  double value = 0.0;
  double x2 = 0.0;
};

/// Minimizes the objective along the x0 = 1 boundary by scanning x2 on a
/// uniform grid of `resolution` interior points and solving the constraint
/// for x1. Infeasible points are skipped.
GridMinimum three_point_grid_search(double k, double t, int resolution);

/// Minimum over `samples` random (x1, x2) with x0 solved from the
/// constraint and kept when it lies in [0,1].
double three_point_random_search(double k, double t, std::uint64_t samples, std::uint64_t seed);

/// Tail-probability cap P[M >= T/alpha] <= 1 / (1/(3 alpha) + 1).
double tail_probability_cap(double alpha);

/// g(x) = 1 / (1/(3x^2) + 1).
double tail_g(double alpha);

/// (1 - g) + alpha g.
double combined(double alpha);

struct Frontier {
  double consistency = 0.0;
  double p = 0.0;
};

/// Mixes prediction-following (prob p) with a 1/2-competitive rule:
/// p = 1 - 2R, C = p + (1 - p)/2.
Frontier cr_frontier(double robustness);

/// g(c) = (2 + (alpha - 2)c + 2 sqrt(1-c)) / (2 - c + 2 sqrt(1-c)).
double smallvalues_fraction(double c, double alpha);

/// True iff smallvalues_fraction(., alpha) is nonincreasing on a uniform
/// grid of `grid` + 1 points over [0,1].
bool smallvalues_monotone_check(double alpha, int grid = kConfig.monotone_grid);

/// Two-item instance (1 surely, 1/eps + 1/sqrt(eps) with probability eps)
/// against a rule that keeps item one with probability p when the prediction
/// points at it. Values under the two adversarial predictions.
struct TwoScenario {
  double opt = 0.0;
  double alg_no_advice = 0.0;    // prediction always 1
  double alg_full_advice = 0.0;  // prediction equals the realized second item
};
TwoScenario unknown_quality_scenarios(double p, double eps);

/// Two-item instance (1 surely, 1/eps with probability eps) under a policy
/// that keeps item one with probability p when item two is predicted 0 and
/// takes item two with probability q when it is predicted 1/eps. Ratios for
/// a correct and an adversarial prediction.
struct Tradeoff {
  double consistency = 0.0;
  double robustness = 0.0;
};
Tradeoff general_prediction_tradeoff(double p, double q, double eps);

struct BoundCurve {
  std::string name;
  std::function<double(double)> evaluate;
};

/// Every closed-form curve over alpha in [0,1].
std::vector<BoundCurve> all_curves();

}  // namespace prophetlab::bounds
