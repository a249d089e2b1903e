#include "doctest.h"

#include <cmath>

#include "prophetlab/dist.hpp"
#include "prophetlab/exact_eval.hpp"
#include "prophetlab/generators.hpp"

using namespace prophetlab;

TEST_CASE("closed-form tails of single variables") {
  CHECK(tail_integral(Uniform{0, 1}, 0.5) == doctest::Approx(0.125));
  CHECK(mean(Uniform{2, 4}) == doctest::Approx(3.0));
  CHECK(tail_integral(Exponential{2}, 1.0) == doctest::Approx(std::exp(-2.0) / 2.0));
  CHECK(mean(make_point_mass({{1, 0.3}, {2, 0.2}})) == doctest::Approx(0.7));
  CHECK(cdf(Exponential{1}, -1.0) == 0.0);
  CHECK(cdf(Uniform{0, 2}, 1.0) == doctest::Approx(0.5));
}

TEST_CASE("point mass normalization merges and sorts") {
  const auto pm = make_point_mass({{2, 0.1}, {1, 0.2}, {2, 0.1}, {0, 0.3}, {5, 0}});
  REQUIRE(pm.atoms.size() == 2);
  CHECK(pm.atoms[0] == Atom{1, 0.2});
  CHECK(pm.atoms[1].p == doctest::Approx(0.2));
  CHECK(pm.zero_mass() == doctest::Approx(0.6));
}

TEST_CASE("distribution validation") {
  CHECK(!validate(DistSpec{Uniform{1, 1}}).empty());
  CHECK(!validate(DistSpec{Uniform{-1, 1}}).empty());
  CHECK(!validate(DistSpec{Exponential{0}}).empty());
  CHECK(!validate(DistSpec{PointMass{{{1, 0.7}, {2, 0.6}}}}).empty());
  CHECK(!validate(GeneralInstance{}).empty());
}

TEST_CASE("inverse-cdf sampling lands on the support") {
  const auto pm = make_point_mass({{1, 0.3}, {2, 0.2}});
  CHECK(sample(pm, 0.1) == 0.0);
  CHECK(sample(pm, 0.6) == 1.0);
  CHECK(sample(pm, 0.95) == 2.0);
  CHECK(sample(Uniform{2, 4}, 0.5) == 3.0);
}

TEST_CASE("max of independent uniforms by quadrature") {
  // Two U[0,1]: E[max] = 2/3; E[(M - t)^+] = (1 - t) - (1 - t^3)/3.
  GeneralInstance g{{Uniform{0, 1}, Uniform{0, 1}}};
  CHECK(expected_max(g) == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
  const double t = 0.4;
  CHECK(max_excess(g, t) == doctest::Approx((1 - t) - (1 - t * t * t) / 3.0).epsilon(1e-12));
  // E[M 1[M >= t]] = integral_t^1 2x^2 dx.
  CHECK(max_partial_expectation(g, t) == doctest::Approx(2.0 / 3.0 * (1 - t * t * t)).epsilon(1e-12));
}

TEST_CASE("max of exponentials by quadrature") {
  // max of Exp(1) and Exp(2): E = 1 + 1/2 - 1/3.
  GeneralInstance g{{Exponential{1}, Exponential{2}}};
  CHECK(expected_max(g) == doctest::Approx(1.0 + 0.5 - 1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("discrete max law agrees with the Bernoulli product form") {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto inst = gen::random_bernoulli(0, 3, s);
    const auto a = max_law(inst);
    const auto b = discrete_max_law(to_general(inst));
    REQUIRE(b);
    REQUIRE(a.atoms.size() == b->atoms.size());
    for (std::size_t i = 0; i < a.atoms.size(); ++i) {
      CHECK(a.atoms[i].v == b->atoms[i].v);
      CHECK(a.atoms[i].p == doctest::Approx(b->atoms[i].p).epsilon(1e-12));
    }
    CHECK(expected_max(to_general(inst)) == doctest::Approx(opt_value(inst)).epsilon(1e-13));
  }
}

TEST_CASE("as_bernoulli only accepts single-atom point masses") {
  GeneralInstance g{{make_point_mass({{1, 0.5}}), make_point_mass({{3, 0.25}})}};
  const auto b = as_bernoulli(g);
  REQUIRE(b);
  CHECK(b->size() == 2);
  g.vars.emplace_back(Uniform{0, 1});
  CHECK(!as_bernoulli(g));
}
