// prophetlab command-line driver. stdout carries data only; diagnostics go to
// stderr. Exit codes: 0 success, 1 failed check, 2 usage or input error.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "prophetlab/bounds.hpp"
#include "prophetlab/exact_eval.hpp"
#include "prophetlab/generators.hpp"
#include "prophetlab/instance_io.hpp"
#include "prophetlab/montecarlo.hpp"
#include "prophetlab/thresholds.hpp"
#include "prophetlab/verify.hpp"

namespace fs = std::filesystem;
using namespace prophetlab;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_number(const std::string& text, const char* what) {
  double x = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, x);
  if (ec != std::errc() || ptr != end || !std::isfinite(x)) {
    throw UsageError(std::string(what) + ": not a number: '" + text + "'");
  }
  return x;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_number(item, "--alphas"));
  if (out.empty()) throw UsageError("--alphas: empty list");
  return out;
}

// Unsorted Bernoulli input is sorted for the operations that need it.
BernoulliInstance sorted_bernoulli(const Instance& inst, const char* who) {
  std::optional<BernoulliInstance> b;
  if (const auto* p = std::get_if<BernoulliInstance>(&inst)) b = *p;
  else b = as_bernoulli(std::get<GeneralInstance>(inst));
  if (!b || b->empty()) throw UsageError(std::string(who) + " needs a non-empty Bernoulli instance");
  if (!b->is_sorted()) {
    std::cerr << who << ": sorting the instance by value\n";
    return sort_instance(*b);
  }
  return *b;
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_eval(const std::string& file, double tau, double alpha, bool exact, std::optional<std::uint64_t> mc,
             std::uint64_t seed) {
  const auto inst = load_instance(file);
  const auto general = as_general(inst);
  const ThresholdPolicy policy{tau, std::nullopt, QualityAlpha(alpha)};
  McConfig cfg;
  cfg.seed = seed;
  if (mc) cfg.samples = *mc;
  EvalMethod method = choose_method(general);
  if (mc) method = EvalMethod::montecarlo;
  if (exact && method == EvalMethod::montecarlo) {
    throw UsageError("--exact: instance is neither a sorted Bernoulli nor a small point-mass instance");
  }
  print(to_json(evaluate(general, policy, method, cfg)));
  return kOk;
}

int cmd_threshold(const std::string& file, bool sc, std::optional<double> star_alpha, std::optional<double> c) {
  const auto inst = load_instance(file);
  json out;
  if (sc) {
    out = to_json(ThresholdPolicy{sc_threshold(sorted_bernoulli(inst, "--sc")), std::nullopt, QualityAlpha(0.0)});
  } else if (star_alpha) {
    const QualityAlpha a(*star_alpha);
    const auto star = tau_star(sorted_bernoulli(inst, "--tau-star"), a);
    out = to_json(ThresholdPolicy{star.tau, std::nullopt, a});
    out["s"] = star.s;
    out["fallback"] = star.fallback();
  } else {
    if (!(*c > 0.0 && *c <= 1.0)) throw UsageError("--tail: c must lie in (0, 1]");
    out = std::visit([&](const auto& x) { return to_json(tail_threshold(x, *c)); }, inst);
  }
  print(out);
  return kOk;
}

std::vector<fs::path> instance_files(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw UsageError("--instances: not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw UsageError("--instances: no .json files in " + dir.string());
  return files;
}

void write_bound_curves(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path.string());
  const auto curves = bounds::all_curves();
  out << "alpha";
  for (const auto& c : curves) out << ',' << c.name;
  out << '\n';
  char buf[64];
  auto put = [&](double x) {
    const auto r = std::to_chars(buf, buf + sizeof(buf), x);
    out.write(buf, r.ptr - buf);
  };
  for (int i = 0; i <= 100; ++i) {
    const double a = i / 100.0;
    put(a);
    for (const auto& c : curves) {
      out << ',';
      put(c.evaluate(a));
    }
    out << '\n';
  }
}

int cmd_sweep(const std::string& mode, const std::string& dir, const std::string& alphas_text, const std::string& out,
              std::uint64_t samples, std::uint64_t seed) {
  const auto alphas = parse_list(alphas_text);
  for (double a : alphas) {
    if (!(a >= 0.0 && a <= 1.0)) throw UsageError("--alphas: values must lie in [0, 1]");
  }
  const auto files = instance_files(dir);
  McConfig cfg;
  cfg.samples = samples;
  cfg.seed = seed;

  SweepResult result;
  for (const auto& file : files) {
    const auto inst = load_instance(file);
    const auto name = file.stem().string();
    std::cerr << "sweep: " << name << '\n';
    if (mode == "oblivious") {
      auto part = mc_ratio_sweep(as_general(inst), 0.75, alphas, cfg);
      for (auto& row : part.rows) {
        row.instance = name;
        result.rows.push_back(std::move(row));
      }
      continue;
    }
    const auto b = sorted_bernoulli(inst, "known mode");
    const double opt = opt_value(b);
    for (double a : alphas) {
      const auto star = tau_star(b, QualityAlpha(a));
      SweepRow row;
      row.instance = name;
      row.alpha = a;
      row.ratio = competitive_ratio(tal_alpha(b, star.tau, QualityAlpha(a)), opt);
      row.lower_bound = row.upper_bound = bounds::bound_known(a);
      row.method = EvalMethod::exact;
      if (star.fallback()) row.flags = "tau_star_fallback";
      if (b.has_ties()) row.flags += row.flags.empty() ? "ties" : ";ties";
      result.rows.push_back(std::move(row));
    }
  }

  const fs::path out_path(out);
  {
    std::ofstream f(out_path);
    if (!f) throw UsageError("cannot write " + out);
    write_csv(f, result);
  }
  auto curves_path = out_path;
  curves_path.replace_filename(out_path.stem().string() + "_bounds.csv");
  write_bound_curves(curves_path);
  std::cerr << "sweep: wrote " << result.rows.size() << " rows to " << out << " and curves to " << curves_path.string()
            << '\n';
  return kOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, std::size_t n_cases) {
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) throw UsageError("unknown suite: " + suite);
  const auto report = run_suite(suite, {seed, n_cases});
  print(to_json(report));
  for (const auto& c : report.checks) {
    if (!c.passed) std::cerr << "verify: FAILED " << c.name << '\n';
  }
  return report.passed() ? kOk : kCheckFailed;
}

Instance generate(const std::vector<std::string>& words, std::uint64_t stream) {
  const auto& family = words.at(0);
  const auto args = words.size() - 1;
  auto need = [&](std::size_t k) {
    if (args != k) throw UsageError("--family " + family + " takes " + std::to_string(k) + " argument(s)");
  };
  auto num = [&](std::size_t i) { return parse_number(words[i], family.c_str()); };
  auto count = [&](std::size_t i) {
    const double x = num(i);
    if (x < 0 || x != std::floor(x)) throw UsageError(family + ": expected a non-negative integer");
    return static_cast<std::uint64_t>(x);
  };
  if (family == "known-lb") return need(1), gen::known_lb(num(1));
  if (family == "oblivious-lb") return need(1), gen::oblivious_lb(num(1));
  if (family == "tight-oblivious") return need(2), gen::tight_oblivious(num(1), num(2));
  if (family == "appendixB") return need(2), gen::appendix_b(num(1), num(2));
  if (family == "appendixA") return need(1), gen::appendix_a(num(1));
  if (family == "random") return need(2), gen::random_bernoulli(count(1), count(2), stream);
  throw UsageError("unknown family: " + family);
}

int cmd_gen(const std::vector<std::string>& words, const std::string& out, std::size_t count) {
  if (count > 0) {
    if (words.at(0) != "random") throw UsageError("--count applies to the random family only");
    if (out.empty()) throw UsageError("--count needs --out DIR");
    fs::create_directories(out);
    for (std::size_t k = 0; k < count; ++k) {
      char name[48];
      std::snprintf(name, sizeof(name), "random_%04zu.json", k);
      save_instance(fs::path(out) / name, generate(words, k));
    }
    std::cerr << "gen: wrote " << count << " instances to " << out << '\n';
    return kOk;
  }
  const auto inst = generate(words, 0);
  if (out.empty()) std::cout << canonical_json(inst);
  else save_instance(out, inst);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Threshold algorithms for the prophet inequality with predictions"};
  app.require_subcommand(1);

  std::string instance;
  double tau = 0.0, alpha = 0.0;
  bool exact = false;
  std::uint64_t mc_samples = 0, seed = 0;
  auto* eval = app.add_subcommand("eval", "Evaluate TAL_alpha at a base threshold");
  eval->add_option("--instance", instance, "Instance JSON file")->required();
  eval->add_option("--tau", tau, "Base threshold")->required()->check(CLI::NonNegativeNumber);
  eval->add_option("--alpha", alpha, "Prediction quality in [0,1]")->required()->check(CLI::Range(0.0, 1.0));
  auto* exact_flag = eval->add_flag("--exact", exact, "Exact or enumerated evaluation only");
  auto* mc_opt = eval->add_option("--mc", mc_samples, "Monte Carlo with N samples")->check(CLI::PositiveNumber);
  exact_flag->excludes(mc_opt);
  eval->add_option("--seed", seed, "Monte Carlo seed");

  bool sc = false;
  double star_alpha = 0.0, tail_c = 0.0;
  auto* thr = app.add_subcommand("threshold", "Compute a threshold");
  thr->add_option("--instance", instance, "Instance JSON file")->required();
  auto* sc_flag = thr->add_flag("--sc", sc, "SC-threshold");
  auto* star_opt = thr->add_option("--tau-star", star_alpha, "tau* for quality A")->check(CLI::Range(0.0, 1.0));
  auto* tail_opt = thr->add_option("--tail", tail_c, "Tail threshold T(C)");
  auto* group = thr->add_option_group("kind");
  group->add_option(sc_flag);
  group->add_option(star_opt);
  group->add_option(tail_opt);
  group->require_option(1);

  std::string mode, dir, alphas = "0,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1", out;
  std::uint64_t sweep_samples = 100000;
  auto* sweep = app.add_subcommand("sweep", "Competitive ratio per instance and alpha, plus bound curves");
  sweep->add_option("--mode", mode, "known or oblivious")->required()->check(CLI::IsMember({"known", "oblivious"}));
  sweep->add_option("--instances", dir, "Directory of instance JSON files")->required();
  sweep->add_option("--alphas", alphas, "Comma-separated alpha list");
  sweep->add_option("--out", out, "Output CSV (curves go to <stem>_bounds.csv)")->required();
  sweep->add_option("--samples", sweep_samples, "Monte Carlo samples for continuous instances")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--seed", seed, "Monte Carlo seed");

  std::string suite;
  std::size_t n_cases = 0;
  std::uint64_t verify_seed = 1;
  auto* ver = app.add_subcommand("verify", "Run an invariant suite");
  ver->add_option("--suite", suite, "oracle|bounds|reductions|monotonicity|impossibility")->required();
  ver->add_option("--seed", verify_seed, "Seed");
  ver->add_option("--n-cases", n_cases, "Random cases (0: suite default)");

  std::vector<std::string> family;
  std::string gen_out;
  std::size_t count = 0;
  auto* gen = app.add_subcommand("gen", "Write a named instance");
  gen->add_option("--family", family, "FAMILY [ARGS...]")->required()->expected(1, 3);
  gen->add_option("--out", gen_out, "Output file (directory with --count); stdout if omitted");
  gen->add_option("--count", count, "Number of random instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*eval) {
      return cmd_eval(instance, tau, alpha, exact, *mc_opt ? std::optional(mc_samples) : std::nullopt, seed);
    }
    if (*thr) {
      return cmd_threshold(instance, sc, *star_opt ? std::optional(star_alpha) : std::nullopt,
                           *tail_opt ? std::optional(tail_c) : std::nullopt);
    }
    if (*sweep) return cmd_sweep(mode, dir, alphas, out, sweep_samples, seed);
    if (*ver) return cmd_verify(suite, verify_seed, n_cases);
    if (*gen) return cmd_gen(family, gen_out, count);
  } catch (const std::exception& e) {
    // Every remaining failure is bad input: unreadable files, malformed
    // instances, or parameters outside a generator's domain.
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
