#include "prophetlab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace prophetlab {

namespace {

// Neumaier-compensated long double sum.
class Accumulator {
 public:
  void add(long double x) {
    const long double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) comp_ += (sum_ - t) + x;
    else comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return static_cast<double>(sum_ + comp_); }

 private:
  long double sum_ = 0.0L;
  long double comp_ = 0.0L;
};

}  // namespace

DiscreteInstance to_discrete(const BernoulliInstance& instance) {
  DiscreteInstance out;
  out.reserve(instance.size());
  for (const auto& x : instance.vars()) out.push_back(make_point_mass({{x.v, x.p}}));
  return out;
}

std::uint64_t outcome_count(const DiscreteInstance& instance) {
  std::uint64_t count = 1;
  for (const auto& x : instance) {
    count *= x.atoms.size() + 1;
    if (count > kMaxOutcomes) return kMaxOutcomes + 1;
  }
  return count;
}

std::optional<DiscreteInstance> as_discrete(const GeneralInstance& instance) {
  if (!all_point_mass(instance)) return std::nullopt;
  DiscreteInstance out;
  for (const auto& d : instance.vars) out.push_back(std::get<PointMass>(d));
  return out;
}

double first_accepted(std::span<const double> values, double zeta) {
  for (double v : values) {
    if (v > 0.0 && v >= zeta) return v;
  }
  return 0.0;
}

double enumerate_tal_alpha(const DiscreteInstance& instance, double tau, QualityAlpha alpha) {
  Accumulator acc;
  for_each_outcome(instance, [&](double prob, std::span<const double> values) {
    const double m = *std::max_element(values.begin(), values.end());
    const double zeta = std::max(tau, alpha.value() * m);
    acc.add(static_cast<long double>(prob) * first_accepted(values, zeta));
  });
  return acc.value();
}

double enumerate_policy(const DiscreteInstance& instance, const ThresholdPolicy& policy) {
  if (!policy.delta) return enumerate_tal_alpha(instance, policy.base, policy.alpha);
  const double tau = policy.base;
  const double delta = *policy.delta;
  if (!(delta > 0.0)) throw std::invalid_argument("randomization width must be positive");
  std::vector<double> edges{tau, tau + delta};
  for (const auto& x : instance) {
    for (const auto& a : x.atoms) {
      if (a.v > tau && a.v < tau + delta) edges.push_back(a.v);
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  long double total = 0.0L;
  for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
    const double mid = 0.5 * (edges[k] + edges[k + 1]);
    total += static_cast<long double>(edges[k + 1] - edges[k]) * enumerate_tal_alpha(instance, mid, policy.alpha);
  }
  return static_cast<double>(total / delta);
}

double enumerate_tal_alpha(const BernoulliInstance& instance, double tau, QualityAlpha alpha) {
  return enumerate_tal_alpha(to_discrete(instance), tau, alpha);
}

double enumerate_opt(const DiscreteInstance& instance) {
  Accumulator acc;
  for_each_outcome(instance, [&](double prob, std::span<const double> values) {
    acc.add(static_cast<long double>(prob) * *std::max_element(values.begin(), values.end()));
  });
  return acc.value();
}

double enumerate_opt(const BernoulliInstance& instance) { return enumerate_opt(to_discrete(instance)); }

BestThreshold best_threshold(const BernoulliInstance& instance, QualityAlpha alpha) {
  require_sorted(instance, "best_threshold");
  std::vector<double> values;
  for (const auto& x : instance.vars()) values.push_back(x.v);
  values.erase(std::unique(values.begin(), values.end()), values.end());

  std::vector<double> candidates = values;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) candidates.push_back(0.5 * (values[i] + values[i + 1]));
  candidates.push_back(0.0);

  const auto discrete = to_discrete(instance);
  BestThreshold best{candidates.front(), enumerate_tal_alpha(discrete, candidates.front(), alpha)};
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const double value = enumerate_tal_alpha(discrete, candidates[i], alpha);
    if (value > best.value) best = {candidates[i], value};
  }
  return best;
}

double dp_optimal_online(const DiscreteInstance& instance) {
  long double continuation = 0.0L;
  for (auto it = instance.rbegin(); it != instance.rend(); ++it) {
    long double next = it->zero_mass() * continuation;
    for (const auto& a : it->atoms) next += a.p * std::max<long double>(a.v, continuation);
    continuation = next;
  }
  return static_cast<double>(continuation);
}

double dp_optimal_online(const BernoulliInstance& instance) { return dp_optimal_online(to_discrete(instance)); }

}  // namespace prophetlab
