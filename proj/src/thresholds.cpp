#include "prophetlab/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "prophetlab/exact_eval.hpp"

namespace prophetlab {

namespace {

void require_c(double c) {
  if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("tail mass fraction c must lie in (0,1)");
}

}  // namespace

nlohmann::json to_json(const ThresholdPolicy& policy) {
  nlohmann::json j;
  j["base"] = policy.base;
  j["delta"] = policy.delta ? nlohmann::json(*policy.delta) : nlohmann::json(nullptr);
  j["alpha"] = policy.alpha.value();
  return j;
}

ThresholdPolicy policy_from_json(const nlohmann::json& j) {
  ThresholdPolicy p;
  p.base = j.at("base").get<double>();
  if (j.contains("delta") && !j.at("delta").is_null()) p.delta = j.at("delta").get<double>();
  p.alpha = QualityAlpha(j.value("alpha", 0.0));
  if (p.base < 0.0) throw std::invalid_argument("policy base must be nonnegative");
  if (p.delta && !(*p.delta > 0.0)) throw std::invalid_argument("policy delta must be positive");
  return p;
}

double sc_threshold(const BernoulliInstance& instance) {
  require_sorted(instance, "sc_threshold");
  const auto vars = instance.vars();
  const std::size_t n = vars.size();
  // suffix[r] = TAL(I, v_r) when r starts a group of equal values.
  std::vector<long double> suffix(n + 1, 0.0L);
  for (std::size_t r = n; r-- > 0;) {
    suffix[r] = static_cast<long double>(vars[r].p) * vars[r].v + (1.0L - vars[r].p) * suffix[r + 1];
  }
  double eta = 0.0;
  double prev_value = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    if (r > 0 && vars[r].v == vars[r - 1].v) continue;
    const double segment_tal = static_cast<double>(suffix[r]);
    // On (prev_value, v_r] TAL is constant; the first segment also holds tau = 0.
    if (segment_tal > prev_value || r == 0) eta = std::max(eta, std::min(vars[r].v, segment_tal));
    prev_value = vars[r].v;
  }
  return eta;
}

TauStar tau_star(const BernoulliInstance& instance, QualityAlpha alpha) {
  require_sorted(instance, "tau_star");
  for (std::size_t k = instance.size(); k >= 1; --k) {
    const double vk = instance[k - 1].v;
    const double eta = sc_threshold(prefix(instance, k));
    if (eta >= alpha.value() * vk - kTauStarSlack * vk) return {eta, k};
  }
  return {};
}

ThresholdPolicy tail_threshold(const MaxLaw& law, double c) {
  require_c(c);
  const auto& atoms = law.atoms;
  long double opt = 0.0L;
  for (const auto& a : atoms) opt += static_cast<long double>(a.v) * a.p;
  if (!(opt > 0.0L)) throw std::domain_error("tail threshold undefined when OPT = 0");
  const long double target = c * opt;

  double gap = std::numeric_limits<double>::infinity();
  double prev = 0.0;
  for (const auto& a : atoms) {
    gap = std::min(gap, a.v - prev);
    prev = a.v;
  }
  const double delta = std::min(0.5 * gap, 1e-3 * atoms.back().v);

  // upper = E[M 1[M >= u_k]], lower = E[M 1[M > u_k]]
  long double lower = 0.0L;
  for (std::size_t k = atoms.size(); k-- > 0;) {
    const long double mass = static_cast<long double>(atoms[k].v) * atoms[k].p;
    const long double upper = lower + mass;
    if (target <= upper) {
      ThresholdPolicy policy;
      if (std::fabs(static_cast<double>(upper - target)) <= kTailSnap * static_cast<double>(opt)) {
        policy.base = atoms[k].v;
        return policy;
      }
      // P_eps[u_k >= tau + eps] = (u_k - tau) / delta supplies the missing mass.
      const double theta = static_cast<double>((target - lower) / mass);
      policy.base = atoms[k].v - theta * delta;
      policy.delta = delta;
      return policy;
    }
    lower = upper;
  }
  ThresholdPolicy policy;
  policy.base = atoms.front().v;
  return policy;
}

ThresholdPolicy tail_threshold(const BernoulliInstance& instance, double c) {
  return tail_threshold(max_law(instance), c);
}

ThresholdPolicy tail_threshold(const GeneralInstance& instance, double c) {
  require_c(c);
  require_valid(instance);
  if (auto law = discrete_max_law(instance)) return tail_threshold(*law, c);

  const double opt = expected_max(instance);
  if (!(opt > 0.0)) throw std::domain_error("tail threshold undefined when OPT = 0");
  const double target = c * opt;
  double lo = 0.0;
  double hi = opt;
  while (max_partial_expectation(instance, hi) >= target) {
    lo = hi;
    hi *= 2.0;
  }
  // t -> E[M 1[M >= t]] is nonincreasing; keep partial(lo) >= target > partial(hi).
  while (hi - lo > 1e-12 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (max_partial_expectation(instance, mid) >= target) lo = mid;
    else hi = mid;
  }
  ThresholdPolicy policy;
  policy.base = 0.5 * (lo + hi);
  return policy;
}

double effective_threshold(const ThresholdPolicy& policy, double m, double eps) {
  const double base = policy.base + (policy.delta ? eps : 0.0);
  return std::max(base, policy.alpha.value() * m);
}

double evaluate_policy(const BernoulliInstance& instance, const ThresholdPolicy& policy) {
  if (policy.delta) return tal_alpha_randomized(instance, policy.base, *policy.delta, policy.alpha);
  return tal_alpha(instance, policy.base, policy.alpha);
}

}  // namespace prophetlab
