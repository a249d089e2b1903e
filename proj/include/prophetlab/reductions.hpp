#pragma once

#include <vector>

#include "prophetlab/core.hpp"
#include "prophetlab/dist.hpp"
#include "prophetlab/oracle.hpp"

namespace prophetlab {

/// Result of truncating at M' and rounding up onto the geometric grid
/// {delta (1+delta)^k M}.
struct Discretization {
  DiscreteInstance instance;
  double delta = 0.0;
  double expected_max = 0.0;  // M
  double truncation = 0.0;    // M'
  std::vector<double> grid;
  /// Some variable puts positive mass strictly below delta * M; those values
  /// are rounded up to the bottom of the grid.
  bool support_below_grid = false;

  /// alpha / (1 + delta), the quality to use on the discretized instance.
  QualityAlpha adjusted_alpha(QualityAlpha alpha) const { return QualityAlpha(alpha.value() / (1.0 + delta)); }
};

/// Requires delta in (0,1) and E[max] > 0. A realized zero stays zero.
Discretization discretize(const GeneralInstance& instance, double delta);

/// Replaces each finitely supported variable by Bernoulli copies, one per
/// atom in increasing value order, with P[copy j = v^j] = P[X = v^j] / P[X <= v^j].
/// The maximum of the copies has the law of the original variable.
BernoulliInstance bernoullify(const DiscreteInstance& instance);

struct ReducedInstance {
  BernoulliInstance instance;  // sorted
  QualityAlpha alpha;          // adjusted quality
  Discretization discretization;
};

/// discretize, then bernoullify, then sort.
ReducedInstance full_reduction(const GeneralInstance& instance, double delta, QualityAlpha alpha);

}  // namespace prophetlab
