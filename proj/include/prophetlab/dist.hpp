#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "prophetlab/core.hpp"

namespace prophetlab {

struct Atom {
  double v = 0.0;
  double p = 0.0;
  friend bool operator==(const Atom&, const Atom&) = default;
};

struct Uniform {
  double lo = 0.0;
  double hi = 1.0;
  friend bool operator==(const Uniform&, const Uniform&) = default;
};

struct Exponential {
  double rate = 1.0;
  friend bool operator==(const Exponential&, const Exponential&) = default;
};

/// Finite discrete law. Atoms are strictly increasing and positive; the mass
/// missing from the atoms sits at 0.
struct PointMass {
  std::vector<Atom> atoms;
  double zero_mass() const noexcept;
  friend bool operator==(const PointMass&, const PointMass&) = default;
};

/// Sorts, merges equal values, and moves zero-valued or zero-probability
/// atoms into the residual.
PointMass make_point_mass(std::vector<Atom> atoms);

using DistSpec = std::variant<Uniform, Exponential, PointMass>;

std::vector<std::string> validate(const DistSpec& d);

/// P[X <= x].
double cdf(const DistSpec& d, double x);
/// Inverse-CDF draw from a uniform u in [0,1).
double sample(const DistSpec& d, double u);
double mean(const DistSpec& d);
/// E[(X - t)^+].
double tail_integral(const DistSpec& d, double t);
bool is_continuous(const DistSpec& d);
/// Points where the CDF jumps or has a kink.
std::vector<double> breakpoints(const DistSpec& d);
/// Supremum of the support (infinity for unbounded families).
double support_sup(const DistSpec& d);

struct GeneralInstance {
  std::vector<DistSpec> vars;
  friend bool operator==(const GeneralInstance&, const GeneralInstance&) = default;
};

std::vector<std::string> validate(const GeneralInstance& instance);
void require_valid(const GeneralInstance& instance);

/// Each Bernoulli variable becomes a one-atom point mass.
GeneralInstance to_general(const BernoulliInstance& instance);

/// The Bernoulli view of a general instance whose variables each have at most
/// one positive atom. Order is preserved.
std::optional<BernoulliInstance> as_bernoulli(const GeneralInstance& instance);

bool all_point_mass(const GeneralInstance& instance);
bool all_continuous(const GeneralInstance& instance);

/// Law of M = max_i X_i for an instance of point masses.
struct MaxLaw {
  std::vector<Atom> atoms;  // strictly increasing positive values
  double zero_mass = 0.0;
};

std::optional<MaxLaw> discrete_max_law(const GeneralInstance& instance);
MaxLaw max_law(const BernoulliInstance& instance);

/// P[M <= x].
double max_cdf(const GeneralInstance& instance, double x);
/// E[(M - t)^+]; exact for point masses, adaptive quadrature otherwise.
double max_excess(const GeneralInstance& instance, double t);
/// E[M].
double expected_max(const GeneralInstance& instance);
/// E[M * 1[M >= t]].
double max_partial_expectation(const GeneralInstance& instance, double t);

}  // namespace prophetlab
