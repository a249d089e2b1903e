#include "prophetlab/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace prophetlab {

namespace {

std::string join(const std::vector<std::string>& errors) {
  std::ostringstream out;
  out << "invalid instance";
  for (const auto& e : errors) out << "; " << e;
  return out.str();
}

}  // namespace

InstanceError::InstanceError(std::vector<std::string> errors)
    : std::runtime_error(join(errors)), errors_(std::move(errors)) {}

QualityAlpha::QualityAlpha(double a) : value_(a) {
  if (!(a >= 0.0 && a <= 1.0)) {
    throw std::invalid_argument("prediction quality must lie in [0,1]");
  }
}

std::vector<std::string> validate(std::span<const BernoulliVar> vars) {
  std::vector<std::string> errors;
  if (vars.empty()) errors.emplace_back("empty instance");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const auto& [v, p] = vars[i];
    const std::string at = " (var " + std::to_string(i) + ")";
    if (!std::isfinite(v)) errors.push_back("value not finite" + at);
    else if (v < 0.0) errors.push_back("negative value" + at);
    if (std::isnan(p)) errors.push_back("probability is NaN" + at);
    else if (p < 0.0) errors.push_back("probability < 0" + at);
    else if (p > 1.0) errors.push_back("probability > 1" + at);
  }
  return errors;
}

BernoulliInstance BernoulliInstance::from_vars(std::vector<BernoulliVar> vars, bool sorted_flag) {
  auto errors = validate(vars);
  if (!errors.empty()) throw InstanceError(std::move(errors));
  std::erase_if(vars, [](const BernoulliVar& x) { return x.p == 0.0 || x.v == 0.0; });
  BernoulliInstance out;
  out.vars_ = std::move(vars);
  out.sorted_flag_ = sorted_flag;
  if (sorted_flag && !out.is_sorted()) {
    throw InstanceError({"flagged sorted but values decrease"});
  }
  return out;
}

bool BernoulliInstance::is_sorted() const noexcept {
  return std::is_sorted(vars_.begin(), vars_.end(),
                        [](const BernoulliVar& a, const BernoulliVar& b) { return a.v < b.v; });
}

double BernoulliInstance::max_value() const noexcept {
  double m = 0.0;
  for (const auto& x : vars_) m = std::max(m, x.v);
  return m;
}

bool BernoulliInstance::has_ties() const noexcept {
  std::vector<double> values;
  values.reserve(vars_.size());
  for (const auto& x : vars_) values.push_back(x.v);
  std::sort(values.begin(), values.end());
  return std::adjacent_find(values.begin(), values.end()) != values.end();
}

BernoulliInstance sort_instance(const BernoulliInstance& instance) {
  std::vector<BernoulliVar> vars(instance.vars().begin(), instance.vars().end());
  std::stable_sort(vars.begin(), vars.end(),
                   [](const BernoulliVar& a, const BernoulliVar& b) { return a.v < b.v; });
  BernoulliInstance out;
  out.vars_ = std::move(vars);
  out.sorted_flag_ = true;
  return out;
}

BernoulliInstance prefix(const BernoulliInstance& instance, std::size_t k) {
  if (k < 1 || k > instance.size()) {
    throw std::out_of_range("prefix length " + std::to_string(k) + " outside [1, " +
                            std::to_string(instance.size()) + "]");
  }
  std::vector<BernoulliVar> vars(instance.vars().begin(), instance.vars().begin() + k);
  return BernoulliInstance::from_vars(std::move(vars), instance.sorted_flag());
}

Realization make_realization(std::vector<double> values) {
  Realization r;
  r.max = values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
  r.values = std::move(values);
  return r;
}

void require_sorted(const BernoulliInstance& instance, const char* who) {
  if (!instance.is_sorted()) {
    throw std::logic_error(std::string(who) + " requires a value-sorted instance");
  }
}

}  // namespace prophetlab
