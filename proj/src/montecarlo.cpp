#include "prophetlab/montecarlo.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "prophetlab/bounds.hpp"
#include "prophetlab/oracle.hpp"
#include "prophetlab/rng.hpp"

namespace prophetlab {

namespace {


struct Moments {
  long double alg = 0.0L;
  long double alg2 = 0.0L;
  long double opt = 0.0L;
  long double opt2 = 0.0L;
  long double cross = 0.0L;

  void add(double a, double o) {
    alg += a;
    alg2 += static_cast<long double>(a) * a;
    opt += o;
    opt2 += static_cast<long double>(o) * o;
    cross += static_cast<long double>(a) * o;
  }
  void merge(const Moments& m) {
    alg += m.alg;
    alg2 += m.alg2;
    opt += m.opt;
    opt2 += m.opt2;
    cross += m.cross;
  }
};


// One realization: values first, then the threshold jitter, then the
// prediction draw, so both prediction modes see the same values.
McPath draw(const GeneralInstance& instance, const ThresholdPolicy& policy, std::uint64_t seed, std::uint64_t index,
            std::vector<double>& values) {
  CounterRng rng(seed, 0, index);
  double m = 0.0;
  for (std::size_t i = 0; i < instance.vars.size(); ++i) {
    values[i] = sample(instance.vars[i], rng.uniform());
    m = std::max(m, values[i]);
  }
  const double eps = policy.delta ? rng.uniform() * *policy.delta : 0.0;
  const double u = rng.uniform();
  const double a = policy.alpha.value();
  const double base = policy.base + eps;
  McPath path;
  path.opt = m;
  path.worst_case = first_accepted(values, std::max(base, a * m));
  path.uniform_feasible = first_accepted(values, std::max(base, a * m + u * (m - a * m)));
  return path;
}

std::string format_number(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf, end);
}

}  // namespace

void validate(const McConfig& cfg) {
  if (cfg.samples < 1) throw std::invalid_argument("samples must be at least 1");
  if (cfg.chunks < 1) throw std::invalid_argument("chunks must be at least 1");
}

unsigned mc_threads(const McConfig& cfg) {
  unsigned n = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("PROPHETLAB_THREADS")) {
    const long c = std::strtol(cap, nullptr, 10);
    if (c >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(c));
  }
  return static_cast<unsigned>(std::min<std::uint64_t>(n, cfg.chunks));
}

McPath mc_sample_path(const GeneralInstance& instance, const ThresholdPolicy& policy, std::uint64_t seed,
                      std::uint64_t index) {
  std::vector<double> values(instance.vars.size());
  return draw(instance, policy, seed, index, values);
}

McReport mc_estimate(const GeneralInstance& instance, const ThresholdPolicy& policy, const McConfig& cfg) {
  validate(cfg);
  require_valid(instance);
  const std::uint64_t n = cfg.samples;
  const std::uint64_t blocks = (n + kMcBlock - 1) / kMcBlock;
  const std::uint64_t chunks = std::min(cfg.chunks, blocks);
  std::vector<Moments> block_sums(blocks);
  const bool uniform = cfg.prediction_mode == PredictionMode::uniform_feasible;

  auto run_chunk = [&](std::uint64_t c) {
    std::vector<double> values(instance.vars.size());
    const std::uint64_t first = c * blocks / chunks;
    const std::uint64_t last = (c + 1) * blocks / chunks;
    for (std::uint64_t b = first; b < last; ++b) {
      Moments m;
      const std::uint64_t end = std::min(n, (b + 1) * kMcBlock);
      for (std::uint64_t i = b * kMcBlock; i < end; ++i) {
        const auto path = draw(instance, policy, cfg.seed, i, values);
        m.add(uniform ? path.uniform_feasible : path.worst_case, path.opt);
      }
      block_sums[b] = m;
    }
  };

  const unsigned workers = std::min<std::uint64_t>(mc_threads(cfg), chunks);
  if (workers <= 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t c = w; c < chunks; c += workers) run_chunk(c);
      });
    }
    for (auto& t : pool) t.join();
  }

  Moments total;
  for (const auto& m : block_sums) total.merge(m);

  const long double count = static_cast<long double>(n);
  const long double alg = total.alg / count;
  const long double opt = total.opt / count;
  const long double denom = n > 1 ? count - 1.0L : 1.0L;
  const long double var_alg = std::max(0.0L, (total.alg2 - count * alg * alg) / denom);
  const long double var_opt = std::max(0.0L, (total.opt2 - count * opt * opt) / denom);
  const long double cov = (total.cross - count * alg * opt) / denom;

  McReport out;
  out.report = make_report(static_cast<double>(opt), static_cast<double>(alg), EvalMethod::montecarlo);
  out.alg_stderr = static_cast<double>(std::sqrt(var_alg / count));
  out.opt_stderr = static_cast<double>(std::sqrt(var_opt / count));
  double half = 0.0;
  if (opt > 0.0L) {
    const long double r = alg / opt;
    const long double var_r = std::max(0.0L, (var_alg - 2.0L * r * cov + r * r * var_opt) / (opt * opt * count));
    half = static_cast<double>(1.96L * std::sqrt(var_r));
  }
  out.report.ci_halfwidth = half;
  return out;
}

EvalReport mc_evaluate(const GeneralInstance& instance, const ThresholdPolicy& policy, const McConfig& cfg) {
  return mc_estimate(instance, policy, cfg).report;
}

void write_csv(std::ostream& out, const SweepResult& result) {
  out << "instance,alpha,ratio,ci,lower_bound,upper_bound,method,flags\n";
  for (const auto& r : result.rows) {
    out << r.instance << ',' << format_number(r.alpha) << ',' << format_number(r.ratio) << ',' << format_number(r.ci)
        << ',' << format_number(r.lower_bound) << ',' << format_number(r.upper_bound) << ',' << to_string(r.method)
        << ',' << r.flags << '\n';
  }
}

EvalMethod choose_method(const GeneralInstance& instance) {
  const auto bernoulli = as_bernoulli(instance);
  if (bernoulli && !bernoulli->empty() && bernoulli->is_sorted()) return EvalMethod::exact;
  const auto discrete = as_discrete(instance);
  if (discrete && outcome_count(*discrete) <= kEnumerateLimit) return EvalMethod::enumerated;
  return EvalMethod::montecarlo;
}

EvalReport evaluate(const GeneralInstance& instance, const ThresholdPolicy& policy, EvalMethod method,
                    const McConfig& cfg) {
  require_valid(instance);
  switch (method) {
    case EvalMethod::exact: {
      const auto bernoulli = as_bernoulli(instance);
      if (!bernoulli || bernoulli->empty() || !bernoulli->is_sorted()) {
        throw std::invalid_argument("exact evaluation needs a sorted Bernoulli instance");
      }
      return make_report(opt_value(*bernoulli), evaluate_policy(*bernoulli, policy), EvalMethod::exact);
    }
    case EvalMethod::enumerated: {
      const auto discrete = as_discrete(instance);
      if (!discrete) throw std::invalid_argument("enumeration needs point-mass variables");
      if (outcome_count(*discrete) > kEnumerateLimit) throw std::invalid_argument("too many outcomes to enumerate");
      return make_report(enumerate_opt(*discrete), enumerate_policy(*discrete, policy), EvalMethod::enumerated);
    }
    case EvalMethod::montecarlo:
      break;
  }
  return mc_evaluate(instance, policy, cfg);
}

SweepResult mc_ratio_sweep(const GeneralInstance& instance, double c, const std::vector<double>& alphas,
                           const McConfig& cfg) {
  require_valid(instance);
  const auto base_policy = tail_threshold(instance, c);
  const auto bernoulli = as_bernoulli(instance);
  const auto discrete = as_discrete(instance);
  const auto method = choose_method(instance);
  const bool exact = method == EvalMethod::exact;
  const bool enumerable = method == EvalMethod::enumerated;
  std::string flags;
  if (base_policy.delta) flags = "randomized_threshold";
  if (exact && bernoulli->has_ties()) flags += flags.empty() ? "ties" : ";ties";

  SweepResult result;
  const double opt = exact ? opt_value(*bernoulli) : enumerable ? enumerate_opt(*discrete) : 0.0;
  for (double a : alphas) {
    const auto policy = base_policy.with_alpha(QualityAlpha(a));
    const auto interval = bounds::bound_oblivious(a);
    SweepRow row;
    row.alpha = a;
    row.lower_bound = interval.lower;
    row.upper_bound = interval.upper;
    row.flags = flags;
    if (exact) {
      row.ratio = competitive_ratio(evaluate_policy(*bernoulli, policy), opt);
      row.method = EvalMethod::exact;
    } else if (enumerable) {
      row.ratio = competitive_ratio(enumerate_policy(*discrete, policy), opt);
      row.method = EvalMethod::enumerated;
    } else {
      const auto report = mc_evaluate(instance, policy, cfg);
      row.ratio = report.ratio;
      row.ci = report.ci_halfwidth.value_or(0.0);
      row.method = EvalMethod::montecarlo;
    }
    result.rows.push_back(row);
  }
  return result;
}

}  // namespace prophetlab
