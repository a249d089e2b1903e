#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "prophetlab/core.hpp"
#include "prophetlab/dist.hpp"
#include "prophetlab/thresholds.hpp"

namespace prophetlab {

/// Independent finitely supported variables, in arrival order.
using DiscreteInstance = std::vector<PointMass>;

DiscreteInstance to_discrete(const BernoulliInstance& instance);

/// Largest outcome space the enumerators accept (2^24).
inline constexpr std::uint64_t kMaxOutcomes = std::uint64_t{1} << 24;

std::uint64_t outcome_count(const DiscreteInstance& instance);

/// The point-mass view of a general instance, if every variable is discrete.
std::optional<DiscreteInstance> as_discrete(const GeneralInstance& instance);

/// Calls visit(probability, values) for every joint outcome with positive
/// probability. Throws std::length_error above kMaxOutcomes.
template <class Visit>
void for_each_outcome(const DiscreteInstance& instance, Visit&& visit) {
  if (outcome_count(instance) > kMaxOutcomes) throw std::length_error("instance too large to enumerate");
  const std::size_t n = instance.size();
  // Support of variable i: index 0 is the zero outcome, then the atoms.
  std::vector<std::vector<Atom>> support(n);
  for (std::size_t i = 0; i < n; ++i) {
    support[i].push_back({0.0, instance[i].zero_mass()});
    for (const auto& a : instance[i].atoms) support[i].push_back(a);
  }
  std::vector<std::size_t> digit(n, 0);
  std::vector<double> values(n, 0.0);
  while (true) {
    long double prob = 1.0L;
    for (std::size_t i = 0; i < n; ++i) {
      prob *= support[i][digit[i]].p;
      values[i] = support[i][digit[i]].v;
    }
    if (prob > 0.0L) visit(static_cast<double>(prob), std::span<const double>(values));
    std::size_t i = 0;
    while (i < n && ++digit[i] == support[i].size()) digit[i++] = 0;
    if (i == n) break;
  }
}

/// Realized value of accepting the first positive value >= zeta.
double first_accepted(std::span<const double> values, double zeta);

/// Direct expectation of the worst-case-prediction threshold rule.
double enumerate_tal_alpha(const BernoulliInstance& instance, double tau, QualityAlpha alpha);
double enumerate_tal_alpha(const DiscreteInstance& instance, double tau, QualityAlpha alpha);

/// Policy value by enumeration; a randomized base is integrated piecewise
/// over the support values inside the window.
double enumerate_policy(const DiscreteInstance& instance, const ThresholdPolicy& policy);

/// E[max] by enumeration.
double enumerate_opt(const BernoulliInstance& instance);
double enumerate_opt(const DiscreteInstance& instance);

struct BestThreshold {
  double tau = 0.0;
  double value = 0.0;
};

/// Best base threshold over the candidates that cover every distinct
/// behaviour: each support value, a midpoint above each value, and 0.
/// Ties keep the earliest candidate in that order.
BestThreshold best_threshold(const BernoulliInstance& instance, QualityAlpha alpha);

/// Optimal online value without prediction: V_{n+1} = 0, V_i = E[max(X_i, V_{i+1})].
double dp_optimal_online(const BernoulliInstance& instance);
double dp_optimal_online(const DiscreteInstance& instance);

}  // namespace prophetlab
