#include "prophetlab/exact_eval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace prophetlab {

namespace {

using Acc = long double;

// Breakpoints of a threshold drawn from [tau, tau + delta]: the support values
// strictly inside the window. Between consecutive breakpoints every evaluator
// in this file is constant in the threshold.
std::vector<double> window_pieces(std::span<const BernoulliVar> vars, double tau, double delta) {
  std::vector<double> edges{tau, tau + delta};
  for (const auto& x : vars) {
    if (x.v > tau && x.v < tau + delta) edges.push_back(x.v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

void require_delta(double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw std::invalid_argument("randomization width must be positive");
}

}  // namespace

std::string to_string(EvalMethod m) {
  switch (m) {
    case EvalMethod::exact: return "exact";
    case EvalMethod::enumerated: return "enumerated";
    case EvalMethod::montecarlo: return "montecarlo";
  }
  return "unknown";
}

double competitive_ratio(double alg, double opt) { return opt > 0.0 ? alg / opt : 1.0; }

EvalReport make_report(double opt, double alg, EvalMethod method) {
  EvalReport r;
  r.opt = opt;
  r.alg = alg;
  r.ratio = competitive_ratio(alg, opt);
  r.method = method;
  return r;
}

nlohmann::json to_json(const EvalReport& report) {
  nlohmann::json j;
  j["opt"] = report.opt;
  j["alg"] = report.alg;
  j["ratio"] = report.ratio;
  j["method"] = to_string(report.method);
  if (report.ci_halfwidth) j["ci"] = *report.ci_halfwidth;
  return j;
}

double opt_value(const BernoulliInstance& instance) {
  const auto sorted = instance.is_sorted() ? instance : sort_instance(instance);
  // OPT(I^(k)) = v_k p_k + (1 - p_k) OPT(I^(k-1))
  Acc opt = 0.0L;
  for (const auto& [v, p] : sorted.vars()) opt = static_cast<Acc>(v) * p + (1.0L - p) * opt;
  return static_cast<double>(opt);
}

double tal(const BernoulliInstance& instance, double tau) {
  const auto vars = instance.vars();
  if (instance.is_sorted()) {
    // tau in (v_{r-1}, v_r] behaves as v_r; TAL(v_r) = p_r v_r + (1 - p_r) TAL(v_{r+1}).
    const auto first = std::lower_bound(vars.begin(), vars.end(), tau,
                                        [](const BernoulliVar& x, double t) { return x.v < t; });
    Acc value = 0.0L;
    for (auto it = vars.end(); it != first;) {
      --it;
      value = static_cast<Acc>(it->p) * it->v + (1.0L - it->p) * value;
    }
    return static_cast<double>(value);
  }
  Acc value = 0.0L;
  Acc reach = 1.0L;
  for (const auto& [v, p] : vars) {
    if (v >= tau) {
      value += reach * p * v;
      reach *= 1.0L - p;
    }
  }
  return static_cast<double>(value);
}

double tal_alpha(const BernoulliInstance& instance, double tau, QualityAlpha alpha) {
  require_sorted(instance, "tal_alpha");
  const auto vars = instance.vars();
  const std::size_t n = vars.size();
  const double a = alpha.value();

  // none_above[j] = P[X_i = 0 for all i >= j]
  std::vector<Acc> none_above(n + 1, 1.0L);
  for (std::size_t j = n; j-- > 0;) none_above[j] = none_above[j + 1] * (1.0L - vars[j].p);

  Acc total = 0.0L;
  for (std::size_t j = 0; j < n; ++j) {
    const Acc top_prob = vars[j].p * none_above[j + 1];
    if (top_prob == 0.0L) continue;
    // Conditioned on j being the largest realized index, m(R) = v_j and the
    // earlier variables keep their own laws.
    const double zeta = std::max(tau, a * vars[j].v);
    Acc value = 0.0L;
    Acc reach = 1.0L;
    for (std::size_t i = 0; i < j; ++i) {
      if (vars[i].v >= zeta) {
        value += reach * vars[i].p * vars[i].v;
        reach *= 1.0L - vars[i].p;
      }
    }
    if (vars[j].v >= zeta) value += reach * vars[j].v;
    total += top_prob * value;
  }
  return static_cast<double>(total);
}

double tal_alpha_randomized(const BernoulliInstance& instance, double tau, double delta, QualityAlpha alpha) {
  require_sorted(instance, "tal_alpha_randomized");
  require_delta(delta);
  const auto edges = window_pieces(instance.vars(), tau, delta);
  Acc total = 0.0L;
  for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
    const double mid = 0.5 * (edges[k] + edges[k + 1]);
    total += static_cast<Acc>(edges[k + 1] - edges[k]) * tal_alpha(instance, mid, alpha);
  }
  return static_cast<double>(total / delta);
}

MaxTail max_tail(const BernoulliInstance& instance, double t) {
  const auto sorted = instance.is_sorted() ? instance : sort_instance(instance);
  const auto vars = sorted.vars();
  const std::size_t n = vars.size();
  Acc none_above = 1.0L;
  Acc prob = 0.0L;
  Acc partial = 0.0L;
  for (std::size_t j = n; j-- > 0;) {
    const Acc top_prob = vars[j].p * none_above;
    if (vars[j].v >= t) {
      prob += top_prob;
      partial += top_prob * vars[j].v;
    }
    none_above *= 1.0L - vars[j].p;
  }
  // M = 0 when nothing is realized; that event clears t only when t <= 0.
  if (t <= 0.0) prob += none_above;
  return {static_cast<double>(prob), static_cast<double>(partial)};
}

MaxTail max_tail_randomized(const BernoulliInstance& instance, double t, double delta) {
  require_delta(delta);
  const auto edges = window_pieces(instance.vars(), t, delta);
  Acc prob = 0.0L;
  Acc partial = 0.0L;
  for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
    const auto piece = max_tail(instance, 0.5 * (edges[k] + edges[k + 1]));
    const Acc w = static_cast<Acc>(edges[k + 1] - edges[k]) / delta;
    prob += w * piece.prob;
    partial += w * piece.partial_exp;
  }
  return {static_cast<double>(prob), static_cast<double>(partial)};
}

}  // namespace prophetlab
