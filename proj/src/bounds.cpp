#include "prophetlab/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "prophetlab/rng.hpp"

namespace prophetlab::bounds {

double bound_known(double alpha) { return 1.0 / (2.0 - alpha); }

Interval bound_oblivious(double alpha) {
  return {0.5 + alpha * alpha * alpha / 4.0, 0.5 + alpha / 4.0};
}

double g_robust(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("g_robust requires p in (0,1)");
  return (4.0 * p * p - 6.0 * p + 3.0) / (4.0 * (1.0 - p));
}

double smallvalues_fraction(double c, double alpha) {
  const double root = std::sqrt(1.0 - c);
  return (2.0 + (alpha - 2.0) * c + 2.0 * root) / (2.0 - c + 2.0 * root);
}

double smallvalues_ratio(double c, double alpha, bool conditional) {
  if (!(c >= 0.0 && c <= 1.0)) throw std::domain_error("c must lie in [0,1]");
  const double fraction = smallvalues_fraction(c, alpha);
  return conditional ? fraction : c * fraction;
}

double three_point_closed_form(double k, double t) {
  if (!(k > 1.0 && t > 0.0)) throw std::domain_error("closed form requires k > 1 and t > 0");
  const double root = std::sqrt(t + 1.0);
  return (t / (t + 1.0)) * ((2.0 * k + t + 2.0 * k * root) / (k * (2.0 + t + 2.0 * root)));
}

double three_point_argmin_x2(double k, double t) { return t / (k + t + k * std::sqrt(t + 1.0)); }

double three_point_objective(double k, double x0, double x1, double x2) {
  const double num = x1 + k * x2 * (1.0 - x1);
  const double den = k * x2 + (1.0 - x2) * (1.0 - (1.0 - x1) * (1.0 - x0));
  return num / den;
}

GridMinimum three_point_grid_search(double k, double t, int resolution) {
  if (resolution < 100) throw std::invalid_argument("grid resolution must be at least 100");
  // x1 in [0,1] along x0 = 1 requires x2 in (0, t/(k+t)].
  const double x2_max = t / (k + t);
  GridMinimum best{std::numeric_limits<double>::infinity(), 0.0};
  for (int i = 1; i <= resolution; ++i) {
    const double x2 = x2_max * i / resolution;
    const double x1 = (t - (k + t) * x2) / ((t + 1.0) * (1.0 - x2));
    if (!(x1 >= 0.0 && x1 <= 1.0)) continue;
    const double f = three_point_objective(k, 1.0, x1, x2);
    if (f < best.value) best = {f, x2};
  }
  return best;
}

double three_point_random_search(double k, double t, std::uint64_t samples, std::uint64_t seed) {
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t i = 0; i < samples; ++i) {
    CounterRng rng(seed, 0, i);
    const double x1 = rng.uniform();
    const double x2 = rng.uniform();
    // t x0 (1-x1)(1-x2) = k x2 + (1-x2) x1
    const double x0 = (k * x2 + (1.0 - x2) * x1) / (t * (1.0 - x1) * (1.0 - x2));
    if (!(x0 >= 0.0 && x0 <= 1.0)) continue;
    const double f = three_point_objective(k, x0, x1, x2);
    if (std::isfinite(f)) best = std::min(best, f);
  }
  return best;
}

double tail_probability_cap(double alpha) { return 1.0 / (1.0 / (3.0 * alpha) + 1.0); }

double tail_g(double alpha) { return 1.0 / (1.0 / (3.0 * alpha * alpha) + 1.0); }

double combined(double alpha) {
  const double g = tail_g(alpha);
  return (1.0 - g) + alpha * g;
}

Frontier cr_frontier(double robustness) {
  if (!(robustness >= 0.0 && robustness <= 0.5)) throw std::domain_error("robustness must lie in [0, 1/2]");
  const double p = 1.0 - 2.0 * robustness;
  return {p + (1.0 - p) * 0.5, p};
}

bool smallvalues_monotone_check(double alpha, int grid) {
  double prev = smallvalues_fraction(0.0, alpha);
  for (int i = 1; i <= grid; ++i) {
    const double cur = smallvalues_fraction(static_cast<double>(i) / grid, alpha);
    if (cur > prev) return false;
    prev = cur;
  }
  return true;
}

std::vector<BoundCurve> all_curves() {
  return {
      {"known", bound_known},
      {"oblivious_lower", [](double a) { return bound_oblivious(a).lower; }},
      {"oblivious_upper", [](double a) { return bound_oblivious(a).upper; }},
  };
}

TwoScenario unknown_quality_scenarios(double p, double eps) {
  const double r = std::sqrt(eps);
  TwoScenario out;
  out.opt = (1.0 / eps + 1.0 / r) * eps + (1.0 - eps);
  out.alg_no_advice = p + (1.0 - p) * (1.0 + r);
  out.alg_full_advice = (1.0 / eps + 1.0 / r) * eps + (1.0 - eps) * p;
  return out;
}

Tradeoff general_prediction_tradeoff(double p, double q, double eps) {
  const double opt = 2.0 - eps;
  // Correct prediction: item two is announced exactly when it realizes.
  const double correct = (1.0 - eps) * p + eps * (q / eps + (1.0 - q));
  // Adversarial prediction: the announcement is always wrong.
  const double wrong = (1.0 - eps) * (1.0 - q) + eps * (p + (1.0 - p) / eps);
  return {correct / opt, wrong / opt};
}

}  // namespace prophetlab::bounds
