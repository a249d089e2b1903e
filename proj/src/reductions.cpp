#include "prophetlab/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace prophetlab {

namespace {

// inf{v >= 0 : E[(M - v)^+] <= budget}.
double truncation_level(const GeneralInstance& instance, double budget) {
  if (auto law = discrete_max_law(instance)) {
    // E[(M - v)^+] is piecewise linear: A_k - B_k v between consecutive atoms.
    long double slope = 0.0L;
    long double intercept = 0.0L;
    for (std::size_t k = law->atoms.size(); k-- > 0;) {
      slope += law->atoms[k].p;
      intercept += static_cast<long double>(law->atoms[k].p) * law->atoms[k].v;
      const double floor_v = k == 0 ? 0.0 : law->atoms[k - 1].v;
      if (intercept - slope * floor_v > budget) {
        return static_cast<double>((intercept - budget) / slope);
      }
    }
    return 0.0;
  }
  if (max_excess(instance, 0.0) <= budget) return 0.0;
  double lo = 0.0;
  double hi = std::max(1.0, expected_max(instance));
  while (max_excess(instance, hi) > budget) {
    lo = hi;
    hi *= 2.0;
  }
  // Keep excess(lo) > budget >= excess(hi); hi is always a valid level.
  while (hi - lo > 1e-13 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (max_excess(instance, mid) > budget) lo = mid;
    else hi = mid;
  }
  return hi;
}

}  // namespace

Discretization discretize(const GeneralInstance& instance, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("discretization delta must lie in (0,1)");
  require_valid(instance);
  Discretization out;
  out.delta = delta;
  out.expected_max = expected_max(instance);
  if (!(out.expected_max > 0.0)) throw std::domain_error("cannot discretize an instance with E[max] = 0");
  out.truncation = truncation_level(instance, delta * out.expected_max);

  const double base = delta * out.expected_max;
  // Tolerate round-off when M' / (delta M) is an exact power of (1 + delta).
  const double exponent = std::log(out.truncation / base) / std::log1p(delta);
  const int top = std::max(0, static_cast<int>(std::ceil(exponent - 1e-9)));
  for (int k = 0; k <= top; ++k) out.grid.push_back(base * std::pow(1.0 + delta, k));

  const double cap = out.truncation;
  for (const auto& d : instance.vars) {
    // X' = V_k exactly when min(X, M') lies in (V_{k-1}, V_k].
    std::vector<Atom> atoms;
    double lower = 0.0;
    for (double g : out.grid) {
      double p = 0.0;
      if (g >= cap) {
        p = 1.0 - cdf(d, lower);
        atoms.push_back({g, std::max(0.0, p)});
        break;
      }
      p = cdf(d, g) - cdf(d, lower);
      atoms.push_back({g, std::max(0.0, p)});
      lower = g;
    }
    if (cdf(d, base) - cdf(d, 0.0) > 0.0 && std::nextafter(base, 0.0) > 0.0 &&
        cdf(d, std::nextafter(base, 0.0)) - cdf(d, 0.0) > 0.0) {
      out.support_below_grid = true;
    }
    out.instance.push_back(make_point_mass(std::move(atoms)));
  }
  return out;
}

BernoulliInstance bernoullify(const DiscreteInstance& instance) {
  std::vector<BernoulliVar> vars;
  for (const auto& x : instance) {
    const std::size_t k = x.atoms.size();
    std::vector<BernoulliVar> copies(k);
    // P[X <= v^j] = 1 - sum_{l > j} p_l, accumulated from the top so the
    // highest copy keeps its probability unchanged.
    long double above = 0.0L;
    for (std::size_t j = k; j-- > 0;) {
      const long double at_most = 1.0L - above;
      const long double q = at_most > 0.0L ? x.atoms[j].p / at_most : 0.0L;
      copies[j] = {x.atoms[j].v, static_cast<double>(std::min(1.0L, q))};
      above += x.atoms[j].p;
    }
    vars.insert(vars.end(), copies.begin(), copies.end());
  }
  if (vars.empty()) return sort_instance(BernoulliInstance{});
  return BernoulliInstance::from_vars(std::move(vars));
}

ReducedInstance full_reduction(const GeneralInstance& instance, double delta, QualityAlpha alpha) {
  auto disc = discretize(instance, delta);
  auto sorted = sort_instance(bernoullify(disc.instance));
  const auto adjusted = disc.adjusted_alpha(alpha);
  return {std::move(sorted), adjusted, std::move(disc)};
}

}  // namespace prophetlab
