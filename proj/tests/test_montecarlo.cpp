#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "prophetlab/exact_eval.hpp"
#include "prophetlab/generators.hpp"
#include "prophetlab/montecarlo.hpp"
#include "prophetlab/thresholds.hpp"

using namespace prophetlab;

TEST_CASE("tight two-variable instance at alpha = 1") {
  const auto y = to_general(gen::tight_oblivious(1, 0));
  McConfig cfg;
  cfg.samples = 1'000'000;
  cfg.seed = 3;
  cfg.chunks = 8;
  const auto r = mc_estimate(y, ThresholdPolicy{2.0, std::nullopt, QualityAlpha(1)}, cfg);
  CHECK(std::abs(r.report.alg - 1.0) <= 4 * r.alg_stderr);
  CHECK(std::abs(r.report.opt - 4.0 / 3.0) <= 4 * r.opt_stderr);
  CHECK(std::abs(r.report.ratio - 0.75) <= 2 * *r.report.ci_halfwidth);
  CHECK(r.report.method == EvalMethod::montecarlo);
}

TEST_CASE("deterministic value has zero variance") {
  const GeneralInstance g{{make_point_mass({{2.5, 1}})}};
  McConfig cfg;
  cfg.samples = 1000;
  const auto r = mc_estimate(g, ThresholdPolicy{1.0, std::nullopt, QualityAlpha(0.3)}, cfg);
  CHECK(r.report.alg == 2.5);
  CHECK(r.alg_stderr == 0.0);
  CHECK(*r.report.ci_halfwidth == 0.0);
}

TEST_CASE("half-mean threshold is at least half of OPT") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto g = gen::random_continuous(4, 51, s);
    McConfig cfg;
    cfg.samples = 100000;
    cfg.seed = s;
    const auto r = mc_evaluate(g, ThresholdPolicy{expected_max(g) / 2, std::nullopt, QualityAlpha(0)}, cfg);
    CHECK(r.ratio >= 0.5 - 3 * *r.ci_halfwidth);
  }
}

TEST_CASE("chunking and threads never change the estimate") {
  const auto g = gen::random_continuous(5, 52, 0);
  const ThresholdPolicy p{1.0, 0.1, QualityAlpha(0.4)};
  McConfig serial;
  serial.samples = 50'000;
  serial.seed = 9;
  serial.threads = 1;
  const auto a = mc_estimate(g, p, serial);
  for (std::uint64_t chunks : {2, 3, 7, 64}) {
    McConfig par = serial;
    par.chunks = chunks;
    par.threads = 4;
    const auto b = mc_estimate(g, p, par);
    CHECK(a.report.alg == b.report.alg);
    CHECK(a.report.opt == b.report.opt);
    CHECK(*a.report.ci_halfwidth == *b.report.ci_halfwidth);
  }
  const auto again = mc_estimate(g, p, serial);
  CHECK(again.report.alg == a.report.alg);
}

TEST_CASE("feasible predictions never do worse on the same path") {
  const auto g = gen::random_continuous(6, 53, 0);
  const ThresholdPolicy p{0.5, std::nullopt, QualityAlpha(0.5)};
  for (std::uint64_t i = 0; i < 20000; ++i) {
    const auto path = mc_sample_path(g, p, 1, i);
    CHECK(path.uniform_feasible >= path.worst_case);
  }
}

TEST_CASE("config validation") {
  McConfig bad;
  bad.samples = 0;
  CHECK_THROWS(validate(bad));
  bad.samples = 1;
  bad.chunks = 0;
  CHECK_THROWS(validate(bad));
}

TEST_CASE("thread cap from the environment") {
  McConfig cfg;
  cfg.chunks = 16;
  cfg.threads = 8;
  ::setenv("PROPHETLAB_THREADS", "2", 1);
  CHECK(mc_threads(cfg) == 2);
  ::unsetenv("PROPHETLAB_THREADS");
  CHECK(mc_threads(cfg) == 8);
}

TEST_CASE("ratio sweep on the tight family") {
  const double eps = 1e-3;
  for (double a : {0.2, 0.5, 0.8}) {
    const auto inst = to_general(gen::tight_oblivious(a, eps));
    const auto sweep = mc_ratio_sweep(inst, 0.75, {a}, McConfig{});
    REQUIRE(sweep.rows.size() == 1);
    CHECK(sweep.rows[0].method == EvalMethod::exact);
    CHECK(sweep.rows[0].ratio == doctest::Approx(0.5 + a / 4 + eps / (4 * (1 + eps))).epsilon(1e-12));
  }
}

TEST_CASE("ratio sweep alpha = 0 column stays above one half") {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto inst = to_general(gen::random_bernoulli(0, 54, s));
    const auto sweep = mc_ratio_sweep(inst, 0.75, {0.0, 1.0}, McConfig{});
    CHECK(sweep.rows[0].ratio >= 0.5 - 1e-9);
  }
}

TEST_CASE("single uniform at alpha = 1") {
  McConfig cfg;
  cfg.samples = 20000;
  const GeneralInstance u{{Uniform{0, 1}}};
  // The prediction equals the only value, so only the base threshold can reject.
  const auto plain = mc_evaluate(u, ThresholdPolicy{0.0, std::nullopt, QualityAlpha(1)}, cfg);
  CHECK(plain.ratio == 1.0);
  // With the tail threshold T(3/4) = 1/2 the rule keeps exactly the top 3/4 of the mass.
  const auto sweep = mc_ratio_sweep(u, 0.75, {1.0}, cfg);
  CHECK(sweep.rows[0].method == EvalMethod::montecarlo);
  CHECK(std::abs(sweep.rows[0].ratio - 0.75) <= 4 * sweep.rows[0].ci + 1e-12);
}

TEST_CASE("sweep csv layout") {
  SweepResult r;
  r.rows.push_back({"x", 0.5, 0.6, 0.0, 0.53125, 0.625, EvalMethod::exact, ""});
  std::ostringstream out;
  write_csv(out, r);
  CHECK(out.str() == "instance,alpha,ratio,ci,lower_bound,upper_bound,method,flags\nx,0.5,0.6,0,0.53125,0.625,exact,\n");
}

TEST_CASE("method choice and forced evaluation") {
  const auto sorted = to_general(gen::known_lb(0.5));
  const auto unsorted = to_general(BernoulliInstance::from_vars({{2, 0.5}, {1, 1}}));
  const GeneralInstance cont{{Uniform{0, 1}, Exponential{2}}};
  CHECK(choose_method(sorted) == EvalMethod::exact);
  CHECK(choose_method(unsorted) == EvalMethod::enumerated);
  CHECK(choose_method(cont) == EvalMethod::montecarlo);

  const ThresholdPolicy p{1.0, std::nullopt, QualityAlpha(0.5)};
  McConfig cfg;
  cfg.samples = 50000;
  const auto exact = evaluate(sorted, p, EvalMethod::exact, cfg);
  const auto enumerated = evaluate(sorted, p, EvalMethod::enumerated, cfg);
  const auto sampled = evaluate(sorted, p, EvalMethod::montecarlo, cfg);
  CHECK(exact.ratio == doctest::Approx(2.0 / 3).epsilon(1e-14));
  CHECK(enumerated.ratio == doctest::Approx(exact.ratio).epsilon(1e-12));
  CHECK(std::abs(sampled.ratio - exact.ratio) <= 4 * *sampled.ci_halfwidth);
  CHECK_THROWS_AS(evaluate(unsorted, p, EvalMethod::exact, cfg), std::invalid_argument);
  CHECK_THROWS_AS(evaluate(cont, p, EvalMethod::enumerated, cfg), std::invalid_argument);
}
