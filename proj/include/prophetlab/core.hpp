#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace prophetlab {

/// Raised when an instance (or a file describing one) breaks an invariant.
/// Carries every violation found, not just the first.
class InstanceError : public std::runtime_error {
 public:
  explicit InstanceError(std::vector<std::string> errors);
  const std::vector<std::string>& errors() const noexcept { return errors_; }

 private:
  std::vector<std::string> errors_;
};

/// Multiplicative prediction quality in [0,1]. The prediction is known to lie
/// in [alpha * max, max].
class QualityAlpha {
 public:
  constexpr QualityAlpha() = default;
  explicit QualityAlpha(double a);
  constexpr double value() const noexcept { return value_; }

 private:
  double value_ = 0.0;
};

/// A scaled Bernoulli variable: value v with probability p, 0 otherwise.
struct BernoulliVar {
  double v = 0.0;
  double p = 0.0;
  friend bool operator==(const BernoulliVar&, const BernoulliVar&) = default;
};

/// Returns every invariant violation of a raw variable list (empty = ok).
std::vector<std::string> validate(std::span<const BernoulliVar> vars);

/// Ordered list of independent scaled Bernoulli variables.
///
/// Construction drops atoms that can never be observed (p == 0 or v == 0);
/// a realized zero is treated as "nothing arrived" everywhere in the library.
/// The input list must be nonempty, but the normalized list may be empty.
class BernoulliInstance {
 public:
  BernoulliInstance() = default;

  /// Throws InstanceError listing all violations. When `sorted_flag` is set the
  /// values must already be nondecreasing.
  static BernoulliInstance from_vars(std::vector<BernoulliVar> vars, bool sorted_flag = false);

  std::span<const BernoulliVar> vars() const noexcept { return vars_; }
  std::size_t size() const noexcept { return vars_.size(); }
  bool empty() const noexcept { return vars_.empty(); }
  const BernoulliVar& operator[](std::size_t i) const { return vars_[i]; }

  /// Flag carried through serialization; implies is_sorted().
  bool sorted_flag() const noexcept { return sorted_flag_; }
  bool is_sorted() const noexcept;

  /// Largest support value, 0 for an empty instance.
  double max_value() const noexcept;

  /// True when two variables share a value (tie-heavy instances get flagged).
  bool has_ties() const noexcept;

  friend bool operator==(const BernoulliInstance&, const BernoulliInstance&) = default;
  friend BernoulliInstance sort_instance(const BernoulliInstance& instance);

 private:
  std::vector<BernoulliVar> vars_;
  bool sorted_flag_ = false;
};

/// Stable sort by value. The result carries sorted_flag = true.
BernoulliInstance sort_instance(const BernoulliInstance& instance);

/// First k variables, 1 <= k <= n. Throws std::out_of_range otherwise.
BernoulliInstance prefix(const BernoulliInstance& instance, std::size_t k);

/// One outcome of an instance.
struct Realization {
  std::vector<double> values;
  double max = 0.0;
};

Realization make_realization(std::vector<double> values);

/// Throws std::logic_error unless the instance is nondecreasing in value.
void require_sorted(const BernoulliInstance& instance, const char* who);

}  // namespace prophetlab
