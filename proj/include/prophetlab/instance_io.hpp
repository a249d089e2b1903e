#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <variant>

#include "json.hpp"

#include "prophetlab/core.hpp"
#include "prophetlab/dist.hpp"

namespace prophetlab {

/// Malformed file or field; the message names the line or the JSON path.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Instance = std::variant<BernoulliInstance, GeneralInstance>;

Instance instance_from_json(const nlohmann::json& j);
nlohmann::json to_json(const BernoulliInstance& instance);
nlohmann::json to_json(const GeneralInstance& instance);
nlohmann::json to_json(const Instance& instance);

/// Keys sorted, numbers in shortest round-trip form, trailing newline.
std::string canonical_json(const Instance& instance);

Instance parse_instance(const std::string& text);
Instance load_instance(const std::filesystem::path& path);
void save_instance(const std::filesystem::path& path, const Instance& instance);

GeneralInstance as_general(const Instance& instance);

}  // namespace prophetlab
