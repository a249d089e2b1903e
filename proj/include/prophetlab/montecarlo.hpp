#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "prophetlab/dist.hpp"
#include "prophetlab/exact_eval.hpp"
#include "prophetlab/thresholds.hpp"

namespace prophetlab {

enum class PredictionMode {
  worst_case,        // prediction = alpha * m
  uniform_feasible,  // prediction ~ U[alpha * m, m]
};

struct McConfig {
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  PredictionMode prediction_mode = PredictionMode::worst_case;
  std::uint64_t chunks = 1;
  unsigned threads = 0;  // 0: hardware concurrency, capped by PROPHETLAB_THREADS
};

void validate(const McConfig& cfg);

/// Samples are summed in fixed blocks of this size and the block sums are
/// combined in block order, so the chunk count never changes the result.
inline constexpr std::uint64_t kMcBlock = 4096;

struct McReport {
  EvalReport report;
  double alg_stderr = 0.0;
  double opt_stderr = 0.0;
};

/// OPT and ALG from the same draws; the ratio CI uses the delta method on the
/// paired means (approximate).
McReport mc_estimate(const GeneralInstance& instance, const ThresholdPolicy& policy, const McConfig& cfg);
EvalReport mc_evaluate(const GeneralInstance& instance, const ThresholdPolicy& policy, const McConfig& cfg);

/// Realized value of one draw under both prediction modes, for coupling tests.
struct McPath {
  double opt = 0.0;
  double worst_case = 0.0;
  double uniform_feasible = 0.0;
};
McPath mc_sample_path(const GeneralInstance& instance, const ThresholdPolicy& policy, std::uint64_t seed,
                      std::uint64_t index);

struct SweepRow {
  std::string instance;
  double alpha = 0.0;
  double ratio = 0.0;
  double ci = 0.0;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  EvalMethod method = EvalMethod::exact;
  std::string flags;
};

struct SweepResult {
  std::vector<SweepRow> rows;
};

void write_csv(std::ostream& out, const SweepResult& result);

/// Ratio of TAL_alpha with the tail threshold T(c), built once, for each
/// alpha. Sorted Bernoulli instances are evaluated exactly, small discrete
/// ones by enumeration, everything else by sampling.
SweepResult mc_ratio_sweep(const GeneralInstance& instance, double c, const std::vector<double>& alphas,
                           const McConfig& cfg);

/// Outcome-count limit for evaluation by enumeration.
inline constexpr std::uint64_t kEnumerateLimit = std::uint64_t{1} << 20;

/// exact for sorted Bernoulli instances, enumerated for point-mass instances
/// with at most kEnumerateLimit outcomes, montecarlo otherwise.
EvalMethod choose_method(const GeneralInstance& instance);

/// Evaluates the policy with `method`; exact needs a sorted Bernoulli
/// instance and enumerated a point-mass one (std::invalid_argument otherwise).
EvalReport evaluate(const GeneralInstance& instance, const ThresholdPolicy& policy, EvalMethod method,
                    const McConfig& cfg);

/// Worker count actually used for a configuration.
unsigned mc_threads(const McConfig& cfg);

}  // namespace prophetlab
