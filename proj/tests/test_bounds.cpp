#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "prophetlab/bounds.hpp"

using namespace prophetlab::bounds;

TEST_CASE("known and oblivious curves") {
  CHECK(bound_known(0) == 0.5);
  CHECK(bound_known(1) == 1.0);
  CHECK(bound_known(0.5) == doctest::Approx(2.0 / 3.0));
  CHECK(bound_oblivious(1).lower == 0.75);
  CHECK(bound_oblivious(1).upper == 0.75);
  CHECK(bound_oblivious(0).lower == 0.5);
  CHECK(bound_oblivious(0).upper == 0.5);
  CHECK(bound_oblivious(0.5).lower == 0.53125);
  CHECK(bound_oblivious(0.5).upper == 0.625);
  for (int i = 1; i < 1000; ++i) {
    const auto b = bound_oblivious(i / 1000.0);
    CHECK(b.lower < b.upper);
  }
}

TEST_CASE("g_robust") {
  CHECK(g_robust(0.5) == 0.5);
  CHECK(g_robust(0.25) == doctest::Approx(1.75 / 3.0));
  CHECK(g_robust(0.999) > g_robust(0.99));
  CHECK(g_robust(0.999) > 100.0);
  CHECK_THROWS_AS(g_robust(1.0), std::domain_error);
  CHECK_THROWS_AS(g_robust(0.0), std::domain_error);
  for (int i = 1; i < 1000; ++i) CHECK(g_robust(i / 1000.0) >= 0.5);
}

TEST_CASE("small-value ratio") {
  for (double a : {0.1, 0.5, 0.9, 1.0}) {
    CHECK(smallvalues_ratio(0.75, a * a * a, true) == doctest::Approx((2 + a * a * a) / 3.0).epsilon(1e-14));
    CHECK(smallvalues_ratio(0.75, a, false) == doctest::Approx(0.5 + a / 4.0).epsilon(1e-14));
  }
  CHECK(smallvalues_ratio(0.0, 0.3, false) == 0.0);
  CHECK(smallvalues_ratio(0.0, 0.3, true) == 1.0);
}

TEST_CASE("three-point program closed form") {
  for (double k : {1.5, 2.0, 4.0, 10.0}) CHECK(three_point_closed_form(k, 3) == doctest::Approx(0.5 + 1 / (4 * k)));
  for (double a : {0.2, 0.5, 0.8}) CHECK(three_point_closed_form(1 / a, 3) == doctest::Approx(0.5 + a / 4));
  CHECK(three_point_closed_form(2, 3) == doctest::Approx(0.625));
  CHECK_THROWS(three_point_closed_form(1, 3));
}

TEST_CASE("three-point program numeric oracles") {
  const auto a = three_point_grid_search(2, 3, 2000);
  CHECK(a.value == doctest::Approx(0.625).epsilon(1e-3));
  CHECK(three_point_grid_search(4, 3, 2000).value == doctest::Approx(0.5625).epsilon(1e-3));
  CHECK(a.x2 == doctest::Approx(three_point_argmin_x2(2, 3)).epsilon(2e-3));
  CHECK(three_point_random_search(2, 3, 100000, 5) >= three_point_closed_form(2, 3) - 1e-3);
  CHECK_THROWS(three_point_grid_search(2, 3, 10));
}

TEST_CASE("tail caps and the combined ratio") {
  CHECK(tail_g(1) == doctest::Approx(0.75));
  CHECK(combined(1) == doctest::Approx(1.0));
  CHECK(combined(1e-6) == doctest::Approx(1.0));
  CHECK(combined(0.5) >= (2 + 0.125) / 3);
  CHECK(tail_probability_cap(1) == doctest::Approx(0.75));
  for (int i = 0; i <= 1000; ++i) {
    const double x = i / 1000.0;
    CHECK(combined(x) >= (2 + x * x * x) / 3 - 1e-15);
  }
}

TEST_CASE("consistency-robustness frontier") {
  CHECK(cr_frontier(0.25).consistency == 0.75);
  CHECK(cr_frontier(0.25).p == 0.5);
  CHECK(cr_frontier(0.5).consistency == 0.5);
  CHECK(cr_frontier(0.5).p == 0.0);
  CHECK(cr_frontier(0).consistency == 1.0);
  CHECK(cr_frontier(0).p == 1.0);
  CHECK_THROWS(cr_frontier(0.6));
}

TEST_CASE("small-value fraction is nonincreasing") {
  CHECK(smallvalues_monotone_check(0.3));
  CHECK(smallvalues_monotone_check(0.9));
  CHECK(smallvalues_monotone_check(1.0));
}

TEST_CASE("two-scenario and tradeoff closed forms") {
  const double eps = 0.01;
  const auto s = unknown_quality_scenarios(0.5, eps);
  CHECK(s.opt == doctest::Approx(2 + std::sqrt(eps) - eps));
  CHECK(s.alg_no_advice == doctest::Approx(0.5 + 0.5 * (1 + std::sqrt(eps))));
  CHECK(s.alg_full_advice == doctest::Approx(1 + std::sqrt(eps) + (1 - eps) * 0.5));
  for (double p : {0.0, 0.3, 1.0}) {
    for (double q : {0.0, 0.7, 1.0}) {
      const auto t = general_prediction_tradeoff(p, q, 1e-3);
      CHECK(t.consistency + t.robustness == doctest::Approx(2 / (2 - 1e-3)).epsilon(1e-14));
    }
  }
}

TEST_CASE("curve table") {
  const auto curves = all_curves();
  REQUIRE(curves.size() == 3);
  CHECK(curves[0].evaluate(0.5) == doctest::Approx(2.0 / 3.0));
}
