#include "doctest.h"

#include <algorithm>

#include "prophetlab/core.hpp"
#include "prophetlab/generators.hpp"

using namespace prophetlab;

namespace {

bool has_error(const std::vector<std::string>& errors, const std::string& needle) {
  return std::any_of(errors.begin(), errors.end(), [&](const std::string& e) { return e.find(needle) != std::string::npos; });
}

}  // namespace

TEST_CASE("validate reports each violation") {
  std::vector<BernoulliVar> ok{{1, 1}, {2, 0.5}};
  CHECK(validate(ok).empty());
  std::vector<BernoulliVar> over{{1, 1.2}};
  CHECK(has_error(validate(over), "probability > 1"));
  CHECK(has_error(validate(std::vector<BernoulliVar>{}), "empty instance"));
  std::vector<BernoulliVar> bad{{-1, 0.5}, {1, -0.1}};
  const auto errors = validate(bad);
  CHECK(errors.size() == 2);
  CHECK(has_error(errors, "negative value"));
  CHECK(has_error(errors, "probability < 0"));
  CHECK_THROWS_AS(BernoulliInstance::from_vars({{1, 1.2}}), InstanceError);
}

TEST_CASE("quality alpha is range checked") {
  CHECK(QualityAlpha(0.0).value() == 0.0);
  CHECK(QualityAlpha(1.0).value() == 1.0);
  CHECK_THROWS_AS(QualityAlpha(1.5), std::invalid_argument);
  CHECK_THROWS_AS(QualityAlpha(-0.1), std::invalid_argument);
}

TEST_CASE("zero atoms are dropped on construction") {
  const auto inst = BernoulliInstance::from_vars({{5, 0}, {1, 1}, {0, 0.5}});
  REQUIRE(inst.size() == 1);
  CHECK(inst[0].v == 1.0);
}

TEST_CASE("sort_instance") {
  auto two = sort_instance(BernoulliInstance::from_vars({{4, 0.2}, {1, 1}}));
  CHECK(two[0] == BernoulliVar{1, 1});
  CHECK(two[1] == BernoulliVar{4, 0.2});
  CHECK(two.sorted_flag());

  const auto already = BernoulliInstance::from_vars({{1, 1}, {2, 0.5}});
  const auto same = sort_instance(already);
  CHECK(std::equal(same.vars().begin(), same.vars().end(), already.vars().begin(), already.vars().end()));

  const auto ties = sort_instance(BernoulliInstance::from_vars({{2, 0.3}, {2, 0.4}, {1, 1}}));
  CHECK(ties[0] == BernoulliVar{1, 1});
  CHECK(ties[1] == BernoulliVar{2, 0.3});
  CHECK(ties[2] == BernoulliVar{2, 0.4});
  CHECK(ties.has_ties());
}

TEST_CASE("sort_instance is a nondecreasing permutation") {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto sorted = gen::random_bernoulli(0, 7, s);
    std::vector<BernoulliVar> rev(sorted.vars().rbegin(), sorted.vars().rend());
    const auto again = sort_instance(BernoulliInstance::from_vars(rev));
    CHECK(again.is_sorted());
    auto key = [](const BernoulliVar& a, const BernoulliVar& b) { return std::tie(a.v, a.p) < std::tie(b.v, b.p); };
    std::vector<BernoulliVar> a(again.vars().begin(), again.vars().end());
    std::sort(a.begin(), a.end(), key);
    std::sort(rev.begin(), rev.end(), key);
    CHECK(a == rev);
  }
}

TEST_CASE("prefix") {
  const auto inst = BernoulliInstance::from_vars({{1, 1}, {2, 0.5}, {4, 0.2}}, true);
  const auto two = prefix(inst, 2);
  REQUIRE(two.size() == 2);
  CHECK(two[1] == BernoulliVar{2, 0.5});
  CHECK(prefix(inst, 3).size() == 3);
  CHECK_THROWS_AS(prefix(inst, 0), std::out_of_range);
  CHECK_THROWS_AS(prefix(inst, 4), std::out_of_range);
}

TEST_CASE("sorted flag must match the values") {
  CHECK_THROWS_AS(BernoulliInstance::from_vars({{2, 1}, {1, 1}}, true), InstanceError);
}

TEST_CASE("realization caches its maximum") {
  const auto r = make_realization({0, 3, 1});
  CHECK(r.max == 3.0);
}
