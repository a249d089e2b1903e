#include "doctest.h"

#include <filesystem>

#include "prophetlab/generators.hpp"
#include "prophetlab/instance_io.hpp"

using namespace prophetlab;

TEST_CASE("parse a one-variable Bernoulli instance") {
  const auto inst = parse_instance(R"({"type":"bernoulli","vars":[{"v":1,"p":1}]})");
  const auto& b = std::get<BernoulliInstance>(inst);
  REQUIRE(b.size() == 1);
  CHECK(b[0] == BernoulliVar{1, 1});
}

TEST_CASE("invalid input is rejected") {
  CHECK_THROWS_AS(parse_instance(R"({"type":"bernoulli","vars":[{"v":-1,"p":0.5}]})"), InstanceError);
  CHECK_THROWS_AS(parse_instance(R"({"type":"bernoulli","vars":[]})"), InstanceError);
  CHECK_THROWS_AS(parse_instance(R"({"type":"bernoulli","vars":[{"v":"x","p":0.5}]})"), InputError);
  CHECK_THROWS_AS(parse_instance(R"({"type":"other","vars":[]})"), InputError);
  CHECK_THROWS_AS(parse_instance("{\n\"type\":\n"), InputError);
  CHECK_THROWS_AS(parse_instance(R"({"type":"general","vars":[{"family":"uniform","lo":2,"hi":1}]})"), InstanceError);
  CHECK_THROWS_AS(load_instance("/nonexistent/file.json"), InputError);
}

TEST_CASE("parse errors name the line") {
  try {
    parse_instance("{\n\"type\": \"bernoulli\",\n\"vars\": [,]\n}");
    FAIL("expected a parse error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  try {
    parse_instance(R"({"type":"bernoulli","vars":[{"v":1}]})");
    FAIL("expected a field error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("$.vars[0].p") != std::string::npos);
  }
}

TEST_CASE("canonical round trip is byte identical") {
  const Instance a = gen::appendix_b(0.4, 0.2);
  const auto text = canonical_json(a);
  CHECK(canonical_json(parse_instance(text)) == text);
  const Instance g = GeneralInstance{{Uniform{0, 1}, Exponential{0.5}, make_point_mass({{1, 0.25}, {3, 0.5}})}};
  const auto gtext = canonical_json(g);
  CHECK(canonical_json(parse_instance(gtext)) == gtext);
  CHECK(std::get<GeneralInstance>(parse_instance(gtext)) == std::get<GeneralInstance>(g));
}

TEST_CASE("save and load") {
  const auto path = std::filesystem::temp_directory_path() / "prophetlab_io_test.json";
  const Instance a = gen::known_lb(0.5);
  save_instance(path, a);
  const auto back = load_instance(path);
  CHECK(canonical_json(back) == canonical_json(a));
  CHECK(std::get<BernoulliInstance>(back).sorted_flag());
  std::filesystem::remove(path);
}

TEST_CASE("zero-probability atoms are dropped at load") {
  const auto inst = parse_instance(R"({"type":"bernoulli","vars":[{"v":1,"p":1},{"v":5,"p":0}]})");
  CHECK(std::get<BernoulliInstance>(inst).size() == 1);
}
