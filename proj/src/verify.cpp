#include "prophetlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "prophetlab/bounds.hpp"
#include "prophetlab/exact_eval.hpp"
#include "prophetlab/generators.hpp"
#include "prophetlab/oracle.hpp"
#include "prophetlab/reductions.hpp"
#include "prophetlab/rng.hpp"
#include "prophetlab/thresholds.hpp"

namespace prophetlab {

namespace {

using nlohmann::json;

// Running worst case of a checked quantity.
struct Worst {
  double value = 0.0;
  std::size_t failures = 0;
  std::size_t cases = 0;
  void record(double v, bool ok) {
    value = std::max(value, v);
    ++cases;
    if (!ok) ++failures;
  }
  Check check(std::string name) const {
    return {std::move(name), failures == 0, {{"cases", cases}, {"failures", failures}, {"worst", value}}};
  }
};

BernoulliInstance shuffled(const BernoulliInstance& instance, CounterRng& rng) {
  std::vector<BernoulliVar> vars(instance.vars().begin(), instance.vars().end());
  for (std::size_t i = vars.size(); i > 1; --i) std::swap(vars[i - 1], vars[rng.between(0, i - 1)]);
  return BernoulliInstance::from_vars(std::move(vars));
}

SuiteReport oracle_suite(const VerifyOptions& o) {
  const std::size_t cases = o.n_cases ? o.n_cases : 500;
  Worst tal_diff, opt_diff, best, dp;
  for (std::size_t c = 0; c < cases; ++c) {
    CounterRng rng(o.seed, 1, c);
    const auto n = static_cast<std::size_t>(rng.between(1, 12));
    const auto inst = gen::random_bernoulli(n, o.seed, 1000 + c);
    const double tau = 1.2 * inst.max_value() * rng.uniform();
    const QualityAlpha alpha(rng.uniform());
    const double d = std::abs(tal_alpha(inst, tau, alpha) - enumerate_tal_alpha(inst, tau, alpha));
    tal_diff.record(d, d <= 1e-10);
    const double e = std::abs(opt_value(inst) - enumerate_opt(inst));
    opt_diff.record(e, e <= 1e-12 * std::max(1.0, opt_value(inst)));
    const auto star = tau_star(inst, alpha);
    const double gap = tal_alpha(inst, star.tau, alpha) - best_threshold(inst, alpha).value;
    best.record(gap, gap <= 1e-10);
    const double slack = tal(inst, tau) - dp_optimal_online(inst);
    dp.record(slack, slack <= 1e-10);
  }
  return {"oracle",
          {tal_diff.check("tal_alpha matches enumeration"), opt_diff.check("opt matches enumeration"),
           best.check("best threshold dominates tau*"), dp.check("optimal online dominates every threshold")}};
}

SuiteReport bounds_suite(const VerifyOptions& o) {
  using namespace bounds;
  SuiteReport r{"bounds", {}};
  const std::pair<double, double> cases[] = {{2, 3}, {4, 3}, {10, 1}, {1.25, 3}};
  for (auto [k, t] : cases) {
    const double closed = three_point_closed_form(k, t);
    const auto grid = three_point_grid_search(k, t, kConfig.three_point_resolution);
    const double rnd = three_point_random_search(k, t, kConfig.three_point_random_samples, o.seed);
    const std::string at = "(k=" + json(k).dump() + ", t=" + json(t).dump() + ")";
    r.checks.push_back({"closed form matches boundary grid " + at,
                        std::abs(closed - grid.value) <= kConfig.three_point_tolerance,
                        {{"closed", closed}, {"grid", grid.value}, {"x2", grid.x2}}});
    r.checks.push_back({"closed form below random search " + at, closed <= rnd + kConfig.three_point_tolerance,
                        {{"closed", closed}, {"random", rnd}}});
  }
  r.checks.push_back({"g_robust(1/2) = 1/2", std::abs(g_robust(0.5) - 0.5) <= kConfig.identity_tolerance,
                      {{"value", g_robust(0.5)}}});
  Worst g, ident, comb, order;
  for (int i = 1; i < kConfig.alpha_grid; ++i) {
    const double x = static_cast<double>(i) / kConfig.alpha_grid;
    g.record(0.5 - g_robust(x), g_robust(x) >= 0.5 - 1e-15);
  }
  for (int i = 0; i <= kConfig.alpha_grid; ++i) {
    const double a = static_cast<double>(i) / kConfig.alpha_grid;
    if (a > 0.0) {
      const double d = std::abs(smallvalues_ratio(0.75, a, true) - (2.0 + a) / 3.0);
      ident.record(d, d <= kConfig.identity_tolerance);
    }
    const double lhs = combined(a);
    comb.record((2.0 + a * a * a) / 3.0 - lhs, lhs >= (2.0 + a * a * a) / 3.0 - 1e-15);
    const auto b = bound_oblivious(a);
    order.record(b.lower - b.upper, b.lower <= b.upper);
  }
  r.checks.push_back(g.check("g_robust >= 1/2 on grid"));
  r.checks.push_back(ident.check("conditional small-value ratio at c = 3/4"));
  r.checks.push_back(comb.check("combined >= (2 + a^3)/3"));
  r.checks.push_back(order.check("oblivious lower <= upper"));
  return r;
}

SuiteReport reductions_suite(const VerifyOptions& o) {
  const std::size_t cases = o.n_cases ? o.n_cases : 1000;
  Worst sort_gap, bern_gap, disc_gap, law_diff, mass_loss;
  for (std::size_t c = 0; c < cases; ++c) {
    CounterRng rng(o.seed, 2, c);
    const QualityAlpha alpha(rng.uniform());

    // Arrival order versus sorted order.
    const auto sorted = gen::random_bernoulli(static_cast<std::size_t>(rng.between(2, 8)), o.seed, 2000 + c);
    const auto arrival = shuffled(sorted, rng);
    const double tau = 1.1 * sorted.max_value() * rng.uniform();
    const double s = enumerate_tal_alpha(sorted, tau, alpha) - enumerate_tal_alpha(arrival, tau, alpha);
    sort_gap.record(s, s <= 1e-10);

    // Multi-atom variables versus their Bernoulli copies.
    const auto disc = gen::random_discrete(static_cast<std::size_t>(rng.between(1, 4)), 3, o.seed, 3000 + c);
    const auto copies = bernoullify(disc);
    const double tau2 = 12.0 * rng.uniform();
    const double b = enumerate_tal_alpha(copies, tau2, alpha) - enumerate_tal_alpha(disc, tau2, alpha);
    bern_gap.record(b, b <= 1e-10);
    std::size_t at = 0;
    for (const auto& x : disc) {
      DiscreteInstance single{x};
      std::vector<BernoulliVar> group(copies.vars().begin() + at, copies.vars().begin() + at + x.atoms.size());
      at += x.atoms.size();
      const auto law = max_law(BernoulliInstance::from_vars(group));
      double d = std::abs(law.zero_mass - x.zero_mass());
      for (std::size_t j = 0; j < x.atoms.size(); ++j) {
        d = std::max(d, std::abs(law.atoms[j].v - x.atoms[j].v));
        d = std::max(d, std::abs(law.atoms[j].p - x.atoms[j].p));
      }
      law_diff.record(d, d <= 1e-12);
    }

    // Truncation and rounding onto the geometric grid.
    GeneralInstance general;
    for (const auto& x : disc) general.vars.emplace_back(x);
    const double delta = 0.05 + 0.2 * rng.uniform();
    const auto red = discretize(general, delta);
    const double tau3 = red.grid[rng.between(0, red.grid.size() - 1)];
    const double d = enumerate_tal_alpha(red.instance, tau3, red.adjusted_alpha(alpha)) -
                     enumerate_tal_alpha(disc, tau3, alpha);
    disc_gap.record(d, d <= 1e-10);
    const double loss = (1.0 - delta) * red.expected_max - enumerate_opt(red.instance);
    mass_loss.record(loss, loss <= 1e-12 * red.expected_max);
  }
  return {"reductions",
          {sort_gap.check("sorting never helps"), bern_gap.check("bernoulli copies never help"),
           law_diff.check("bernoulli copies keep the per-variable law"),
           disc_gap.check("discretization with adjusted alpha never helps"),
           mass_loss.check("discretized E[max] >= (1 - delta) E[max]")}};
}

SuiteReport monotonicity_suite(const VerifyOptions& o) {
  const std::size_t cases = o.n_cases ? o.n_cases : 200;
  SuiteReport r{"monotonicity", {}};
  Worst fraction;
  for (int i = 1; i <= 20; ++i) {
    const double a = i / 20.0;
    fraction.record(0.0, bounds::smallvalues_monotone_check(a));
  }
  r.checks.push_back(fraction.check("small-value fraction nonincreasing in c"));
  Worst tail, eta;
  for (std::size_t c = 0; c < cases; ++c) {
    const auto inst = gen::random_bernoulli(0, o.seed, 4000 + c);
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= 19; ++k) {
      const auto p = tail_threshold(inst, k / 20.0);
      const double t = p.base + 0.5 * p.delta.value_or(0.0);
      tail.record(t - prev, t <= prev * (1.0 + 1e-12));
      prev = t;
    }
    double last = 0.0;
    for (std::size_t k = 1; k <= inst.size(); ++k) {
      const double e = sc_threshold(prefix(inst, k));
      eta.record(last - e, e >= last * (1.0 - 1e-12));
      last = e;
    }
  }
  r.checks.push_back(tail.check("tail threshold nonincreasing in c"));
  r.checks.push_back(eta.check("prefix SC-threshold nondecreasing in k"));
  Worst known, lower;
  for (int i = 1; i <= bounds::kConfig.alpha_grid; ++i) {
    const double a0 = (i - 1.0) / bounds::kConfig.alpha_grid;
    const double a1 = static_cast<double>(i) / bounds::kConfig.alpha_grid;
    known.record(bounds::bound_known(a0) - bounds::bound_known(a1), bounds::bound_known(a0) <= bounds::bound_known(a1));
    lower.record(bounds::bound_oblivious(a0).lower - bounds::bound_oblivious(a1).lower,
                 bounds::bound_oblivious(a0).lower <= bounds::bound_oblivious(a1).lower);
  }
  r.checks.push_back(known.check("known-quality bound increasing"));
  r.checks.push_back(lower.check("oblivious lower bound increasing"));
  return r;
}

SuiteReport impossibility_suite(const VerifyOptions& o) {
  const std::size_t points = o.n_cases ? o.n_cases : 10000;
  SuiteReport r{"impossibility", {}};
  const double eps = 1e-4;
  Worst both;
  for (std::size_t i = 0; i <= points; ++i) {
    const double p = static_cast<double>(i) / points;
    const auto s = bounds::unknown_quality_scenarios(p, eps);
    const bool fails_robust = s.alg_no_advice / s.opt <= 0.5;
    const bool fails_consistent = s.alg_full_advice / s.opt <= 0.75 + std::sqrt(eps);
    both.record(0.0, fails_robust || fails_consistent);
  }
  r.checks.push_back(both.check("no p is both 1/2-robust and (3/4 + sqrt(eps))-consistent"));
  const double eps2 = 1e-3;
  const double cap = 2.0 / (2.0 - eps2);
  Worst cr;
  const int grid = 200;
  for (int i = 0; i <= grid; ++i) {
    for (int j = 0; j <= grid; ++j) {
      const auto t = bounds::general_prediction_tradeoff(static_cast<double>(i) / grid, static_cast<double>(j) / grid, eps2);
      const double sum = t.consistency + t.robustness;
      cr.record(sum - cap, sum <= cap + 1e-12);
    }
  }
  r.checks.push_back(cr.check("C + R <= 2/(2 - eps) on the (p,q) grid"));
  Worst frontier;
  for (int i = 0; i <= 64; ++i) {
    const double R = i / 128.0;
    const auto f = bounds::cr_frontier(R);
    frontier.record(std::abs(f.consistency + R - 1.0), f.consistency + R == 1.0);
  }
  r.checks.push_back(frontier.check("frontier meets C + R = 1"));
  return r;
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

json to_json(const SuiteReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"suite", report.suite}, {"passed", report.passed()}, {"checks", checks}};
}

std::vector<std::string> suite_names() { return {"oracle", "bounds", "reductions", "monotonicity", "impossibility"}; }

SuiteReport run_suite(const std::string& suite, const VerifyOptions& options) {
  if (suite == "oracle") return oracle_suite(options);
  if (suite == "bounds") return bounds_suite(options);
  if (suite == "reductions") return reductions_suite(options);
  if (suite == "monotonicity") return monotonicity_suite(options);
  if (suite == "impossibility") return impossibility_suite(options);
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace prophetlab
