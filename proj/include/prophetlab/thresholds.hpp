#pragma once

#include <cstddef>
#include <optional>

#include "json.hpp"

#include "prophetlab/core.hpp"
#include "prophetlab/dist.hpp"

namespace prophetlab {

/// A base threshold, optionally randomized as base + U[0, delta], together
/// with the prediction quality used to form the effective threshold.
struct ThresholdPolicy {
  double base = 0.0;
  std::optional<double> delta;
  QualityAlpha alpha;

  ThresholdPolicy with_alpha(QualityAlpha a) const {
    auto out = *this;
    out.alpha = a;
    return out;
  }
};

nlohmann::json to_json(const ThresholdPolicy& policy);
ThresholdPolicy policy_from_json(const nlohmann::json& j);

/// sup{tau >= 0 : TAL(I, tau) >= tau}. Sorted instances only.
double sc_threshold(const BernoulliInstance& instance);

struct TauStar {
  double tau = 0.0;
  std::size_t s = 0;  // 1-based prefix length; 0 when no prefix qualifies
  bool fallback() const noexcept { return s == 0; }
};

/// SC-threshold of the longest prefix I^(k) with eta(I^(k)) >= alpha * v_k.
/// Falls back to (0, 0) when no prefix qualifies.
TauStar tau_star(const BernoulliInstance& instance, QualityAlpha alpha);

/// Relative slack used when testing eta(I^(k)) >= alpha * v_k.
inline constexpr double kTauStarSlack = 1e-12;

/// Threshold T with E[M 1[M >= T]] = c * OPT.
///
/// Discrete laws generally have no such deterministic T; the returned policy
/// is then randomized (base + U[0, delta]) so that the equation holds in
/// expectation over the randomization. delta is half the smallest gap between
/// consecutive support points of M (0 included), capped at 1e-3 * max value.
/// When c * OPT hits a tail sum exactly the policy is deterministic.
ThresholdPolicy tail_threshold(const BernoulliInstance& instance, double c);
ThresholdPolicy tail_threshold(const GeneralInstance& instance, double c);
ThresholdPolicy tail_threshold(const MaxLaw& law, double c);

/// Relative tolerance for snapping a discrete tail threshold to an atom.
inline constexpr double kTailSnap = 1e-12;

/// max(base + eps, alpha * m); eps is ignored for deterministic policies.
double effective_threshold(const ThresholdPolicy& policy, double m, double eps = 0.0);

/// Exact value of a policy on a sorted Bernoulli instance (worst-case
/// prediction), integrating out the randomization when present.
double evaluate_policy(const BernoulliInstance& instance, const ThresholdPolicy& policy);

}  // namespace prophetlab
