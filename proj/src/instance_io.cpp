#include "prophetlab/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace prophetlab {

namespace {

using nlohmann::json;

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw InputError(path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(path + "." + key + ": missing");
  return *it;
}

double number(const json& j, const char* key, const std::string& path) {
  const auto& x = field(j, key, path);
  if (!x.is_number()) throw InputError(path + "." + key + ": expected a number");
  return x.get<double>();
}

const json& array(const json& j, const char* key, const std::string& path) {
  const auto& x = field(j, key, path);
  if (!x.is_array()) throw InputError(path + "." + key + ": expected an array");
  return x;
}

DistSpec dist_from_json(const json& j, const std::string& path) {
  const auto& family = field(j, "family", path);
  if (!family.is_string()) throw InputError(path + ".family: expected a string");
  const auto name = family.get<std::string>();
  if (name == "uniform") return Uniform{number(j, "lo", path), number(j, "hi", path)};
  if (name == "exponential") return Exponential{number(j, "rate", path)};
  if (name == "pointmass") {
    const auto& atoms = array(j, "atoms", path);
    std::vector<Atom> out;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      const auto at = path + ".atoms[" + std::to_string(i) + "]";
      out.push_back({number(atoms[i], "v", at), number(atoms[i], "p", at)});
    }
    // Validate the raw atoms so negative values are reported, not merged away.
    auto errors = validate(DistSpec{PointMass{out}});
    if (!errors.empty()) throw InstanceError(std::move(errors));
    return make_point_mass(std::move(out));
  }
  throw InputError(path + ".family: unknown family '" + name + "'");
}

}  // namespace

Instance instance_from_json(const json& j) {
  const auto& type = field(j, "type", "$");
  if (!type.is_string()) throw InputError("$.type: expected a string");
  const auto& vars = array(j, "vars", "$");
  if (type == "bernoulli") {
    bool sorted = false;
    if (auto it = j.find("sorted"); it != j.end()) {
      if (!it->is_boolean()) throw InputError("$.sorted: expected a boolean");
      sorted = it->get<bool>();
    }
    std::vector<BernoulliVar> out;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      const auto at = "$.vars[" + std::to_string(i) + "]";
      out.push_back({number(vars[i], "v", at), number(vars[i], "p", at)});
    }
    return BernoulliInstance::from_vars(std::move(out), sorted);
  }
  if (type == "general") {
    GeneralInstance out;
    for (std::size_t i = 0; i < vars.size(); ++i) out.vars.push_back(dist_from_json(vars[i], "$.vars[" + std::to_string(i) + "]"));
    require_valid(out);
    return out;
  }
  throw InputError("$.type: expected \"bernoulli\" or \"general\"");
}

json to_json(const BernoulliInstance& instance) {
  json vars = json::array();
  for (const auto& x : instance.vars()) vars.push_back({{"v", x.v}, {"p", x.p}});
  return {{"type", "bernoulli"}, {"sorted", instance.sorted_flag()}, {"vars", vars}};
}

json to_json(const GeneralInstance& instance) {
  json vars = json::array();
  for (const auto& d : instance.vars) {
    if (const auto* u = std::get_if<Uniform>(&d)) {
      vars.push_back({{"family", "uniform"}, {"lo", u->lo}, {"hi", u->hi}});
    } else if (const auto* e = std::get_if<Exponential>(&d)) {
      vars.push_back({{"family", "exponential"}, {"rate", e->rate}});
    } else {
      json atoms = json::array();
      for (const auto& a : std::get<PointMass>(d).atoms) atoms.push_back({{"v", a.v}, {"p", a.p}});
      vars.push_back({{"family", "pointmass"}, {"atoms", atoms}});
    }
  }
  return {{"type", "general"}, {"vars", vars}};
}

json to_json(const Instance& instance) {
  return std::visit([](const auto& x) { return to_json(x); }, instance);
}

std::string canonical_json(const Instance& instance) { return to_json(instance).dump(2) + "\n"; }

Instance parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // Map the byte offset back to a line number.
    const auto upto = text.substr(0, std::min<std::size_t>(e.byte, text.size()));
    const auto line = 1 + std::count(upto.begin(), upto.end(), '\n');
    throw InputError("JSON parse error at line " + std::to_string(line) + ": " + e.what());
  }
  return instance_from_json(j);
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_instance(buf.str());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void save_instance(const std::filesystem::path& path, const Instance& instance) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << canonical_json(instance);
}

GeneralInstance as_general(const Instance& instance) {
  if (const auto* b = std::get_if<BernoulliInstance>(&instance)) return to_general(*b);
  return std::get<GeneralInstance>(instance);
}

}  // namespace prophetlab
