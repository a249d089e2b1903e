#include "prophetlab/generators.hpp"

#include <cmath>
#include <stdexcept>

#include "prophetlab/rng.hpp"

namespace prophetlab::gen {

namespace {

void require_open_unit(double x, const char* what) {
  if (!(x > 0.0 && x < 1.0)) throw std::invalid_argument(std::string(what) + " must lie in (0,1)");
}

}  // namespace

BernoulliInstance known_lb(double a) {
  if (!(a > 0.0 && a <= 1.0)) throw std::invalid_argument("known-lb parameter must lie in (0,1]");
  return BernoulliInstance::from_vars({{1.0, 1.0}, {1.0 / a, a}}, true);
}

BernoulliInstance oblivious_lb(double eps) {
  require_open_unit(eps, "eps");
  return BernoulliInstance::from_vars({{1.0, 1.0}, {1.0 / eps + 1.0 / std::sqrt(eps), eps}}, true);
}

BernoulliInstance tight_oblivious(double a, double eps) {
  if (a == 1.0) return BernoulliInstance::from_vars({{1.0, 2.0 / 3.0}, {2.0, 0.5}}, true);
  require_open_unit(a, "tight-oblivious alpha");
  if (!(eps > 0.0) || !(1.0 + eps < 1.0 / a)) throw std::invalid_argument("tight-oblivious needs 0 < eps and 1 + eps < 1/alpha");
  return BernoulliInstance::from_vars(
      {{1.0, (1.0 + eps) / (1.0 + 2.0 * eps)}, {1.0 + eps, 1.0 / (2.0 * (1.0 + eps))}, {1.0 / a, a / (a + 1.0)}}, true);
}

BernoulliInstance appendix_b(double p2, double p3) {
  return BernoulliInstance::from_vars({{1.0, 1.0}, {2.0, p2}, {4.0, p3}}, true);
}

BernoulliInstance appendix_a(double eps) {
  require_open_unit(eps, "eps");
  return BernoulliInstance::from_vars({{1.0, 1.0}, {1.0 / eps, eps}}, true);
}

BernoulliInstance random_bernoulli(std::size_t n, std::uint64_t seed, std::uint64_t stream) {
  CounterRng rng(seed, stream, 0);
  if (n == 0) n = static_cast<std::size_t>(rng.between(2, 10));
  std::vector<BernoulliVar> vars(n);
  for (auto& x : vars) {
    x.v = std::pow(10.0, 3.0 * rng.uniform());
    x.p = rng.uniform_open_closed();
  }
  return sort_instance(BernoulliInstance::from_vars(std::move(vars)));
}

DiscreteInstance random_discrete(std::size_t n, std::size_t max_atoms, std::uint64_t seed, std::uint64_t stream) {
  CounterRng rng(seed, stream, 0);
  DiscreteInstance out;
  for (std::size_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(rng.between(1, max_atoms));
    std::vector<Atom> atoms;
    // Raw weights, one extra for the zero outcome, normalized below.
    std::vector<double> w(k + 1);
    double total = 0.0;
    for (auto& x : w) total += (x = rng.uniform_open_closed());
    for (std::size_t j = 0; j < k; ++j) {
      atoms.push_back({1.0 + static_cast<double>(rng.between(0, 40)) * 0.25, w[j + 1] / total});
    }
    out.push_back(make_point_mass(std::move(atoms)));
  }
  return out;
}

GeneralInstance random_continuous(std::size_t n, std::uint64_t seed, std::uint64_t stream) {
  CounterRng rng(seed, stream, 0);
  GeneralInstance out;
  for (std::size_t i = 0; i < n; ++i) {
    if (rng.uniform() < 0.5) {
      const double lo = 5.0 * rng.uniform();
      out.vars.emplace_back(Uniform{lo, lo + 0.1 + 10.0 * rng.uniform()});
    } else {
      out.vars.emplace_back(Exponential{0.1 + 2.0 * rng.uniform()});
    }
  }
  return out;
}

}  // namespace prophetlab::gen
