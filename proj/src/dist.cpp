#include "prophetlab/dist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace prophetlab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMassSlack = 1e-12;

// P[X > x], computed without the 1 - F cancellation where possible.
double survival(const DistSpec& d, double x) {
  return std::visit(
      overloaded{
          [x](const Uniform& u) {
            if (x < u.lo) return 1.0;
            if (x >= u.hi) return 0.0;
            return (u.hi - x) / (u.hi - u.lo);
          },
          [x](const Exponential& e) { return x < 0.0 ? 1.0 : std::exp(-e.rate * x); },
          [x](const PointMass& pm) {
            if (x < 0.0) return 1.0;
            double s = 0.0;
            for (auto it = pm.atoms.rbegin(); it != pm.atoms.rend() && it->v > x; ++it) s += it->p;
            return s;
          },
      },
      d);
}

double max_survival(const GeneralInstance& instance, double x) {
  double log_cdf = 0.0;
  for (const auto& d : instance.vars) {
    const double s = survival(d, x);
    if (s >= 1.0) return 1.0;
    log_cdf += std::log1p(-s);
  }
  return -std::expm1(log_cdf);
}

}  // namespace

double PointMass::zero_mass() const noexcept {
  double s = 0.0;
  for (const auto& a : atoms) s += a.p;
  return std::max(0.0, 1.0 - s);
}

PointMass make_point_mass(std::vector<Atom> atoms) {
  std::erase_if(atoms, [](const Atom& a) { return a.p == 0.0 || a.v == 0.0; });
  std::stable_sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) { return a.v < b.v; });
  PointMass out;
  for (const auto& a : atoms) {
    if (!out.atoms.empty() && out.atoms.back().v == a.v) {
      out.atoms.back().p += a.p;
    } else {
      out.atoms.push_back(a);
    }
  }
  return out;
}

std::vector<std::string> validate(const DistSpec& d) {
  std::vector<std::string> errors;
  std::visit(overloaded{
                 [&](const Uniform& u) {
                   if (!std::isfinite(u.lo) || !std::isfinite(u.hi)) errors.emplace_back("uniform bounds not finite");
                   else if (u.lo < 0.0) errors.emplace_back("uniform lower bound negative");
                   else if (!(u.lo < u.hi)) errors.emplace_back("uniform requires lo < hi");
                 },
                 [&](const Exponential& e) {
                   if (!std::isfinite(e.rate) || !(e.rate > 0.0)) errors.emplace_back("exponential rate must be positive");
                 },
                 [&](const PointMass& pm) {
                   double total = 0.0;
                   for (const auto& a : pm.atoms) {
                     if (!std::isfinite(a.v)) errors.emplace_back("atom value not finite");
                     else if (a.v < 0.0) errors.emplace_back("negative value");
                     if (std::isnan(a.p) || a.p < 0.0) errors.emplace_back("probability < 0");
                     else if (a.p > 1.0) errors.emplace_back("probability > 1");
                     else total += a.p;
                   }
                   if (total > 1.0 + kMassSlack) errors.emplace_back("point-mass probabilities sum above 1");
                 },
             },
             d);
  return errors;
}

double cdf(const DistSpec& d, double x) { return 1.0 - survival(d, x); }

double sample(const DistSpec& d, double u) {
  return std::visit(overloaded{
                        [u](const Uniform& x) { return x.lo + u * (x.hi - x.lo); },
                        [u](const Exponential& x) { return -std::log1p(-u) / x.rate; },
                        [u](const PointMass& x) {
                          double acc = x.zero_mass();
                          if (u < acc) return 0.0;
                          for (const auto& a : x.atoms) {
                            acc += a.p;
                            if (u < acc) return a.v;
                          }
                          // u beyond the accumulated mass only through round-off
                          return x.atoms.empty() ? 0.0 : x.atoms.back().v;
                        },
                    },
                    d);
}

double mean(const DistSpec& d) { return tail_integral(d, 0.0); }

double tail_integral(const DistSpec& d, double t) {
  return std::visit(overloaded{
                        [t](const Uniform& u) {
                          if (t <= u.lo) return 0.5 * (u.lo + u.hi) - t;
                          if (t >= u.hi) return 0.0;
                          return (u.hi - t) * (u.hi - t) / (2.0 * (u.hi - u.lo));
                        },
                        [t](const Exponential& e) {
                          return t <= 0.0 ? 1.0 / e.rate - t : std::exp(-e.rate * t) / e.rate;
                        },
                        [t](const PointMass& pm) {
                          double s = 0.0;
                          for (const auto& a : pm.atoms) s += a.p * std::max(0.0, a.v - t);
                          if (t < 0.0) s -= pm.zero_mass() * t;
                          return s;
                        },
                    },
                    d);
}

bool is_continuous(const DistSpec& d) { return !std::holds_alternative<PointMass>(d); }

std::vector<double> breakpoints(const DistSpec& d) {
  return std::visit(overloaded{
                        [](const Uniform& u) { return std::vector<double>{u.lo, u.hi}; },
                        [](const Exponential&) { return std::vector<double>{0.0}; },
                        [](const PointMass& pm) {
                          std::vector<double> out{0.0};
                          for (const auto& a : pm.atoms) out.push_back(a.v);
                          return out;
                        },
                    },
                    d);
}

double support_sup(const DistSpec& d) {
  return std::visit(overloaded{
                        [](const Uniform& u) { return u.hi; },
                        [](const Exponential&) { return kInf; },
                        [](const PointMass& pm) { return pm.atoms.empty() ? 0.0 : pm.atoms.back().v; },
                    },
                    d);
}

std::vector<std::string> validate(const GeneralInstance& instance) {
  std::vector<std::string> errors;
  if (instance.vars.empty()) errors.emplace_back("empty instance");
  for (std::size_t i = 0; i < instance.vars.size(); ++i) {
    for (auto& e : validate(instance.vars[i])) errors.push_back(e + " (var " + std::to_string(i) + ")");
  }
  return errors;
}

void require_valid(const GeneralInstance& instance) {
  auto errors = validate(instance);
  if (!errors.empty()) throw InstanceError(std::move(errors));
}

GeneralInstance to_general(const BernoulliInstance& instance) {
  GeneralInstance out;
  out.vars.reserve(instance.size());
  for (const auto& x : instance.vars()) out.vars.emplace_back(make_point_mass({{x.v, x.p}}));
  return out;
}

std::optional<BernoulliInstance> as_bernoulli(const GeneralInstance& instance) {
  std::vector<BernoulliVar> vars;
  for (const auto& d : instance.vars) {
    const auto* pm = std::get_if<PointMass>(&d);
    if (pm == nullptr || pm->atoms.size() > 1) return std::nullopt;
    if (!pm->atoms.empty()) vars.push_back({pm->atoms[0].v, pm->atoms[0].p});
  }
  if (vars.empty()) return BernoulliInstance{};
  return BernoulliInstance::from_vars(std::move(vars));
}

bool all_point_mass(const GeneralInstance& instance) {
  return std::all_of(instance.vars.begin(), instance.vars.end(),
                     [](const DistSpec& d) { return std::holds_alternative<PointMass>(d); });
}

bool all_continuous(const GeneralInstance& instance) {
  return std::all_of(instance.vars.begin(), instance.vars.end(), [](const DistSpec& d) { return is_continuous(d); });
}

std::optional<MaxLaw> discrete_max_law(const GeneralInstance& instance) {
  if (!all_point_mass(instance)) return std::nullopt;
  std::vector<double> support;
  for (const auto& d : instance.vars) {
    for (const auto& a : std::get<PointMass>(d).atoms) support.push_back(a.v);
  }
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());

  MaxLaw law;
  law.zero_mass = max_cdf(instance, 0.0);
  double prev = law.zero_mass;
  for (double v : support) {
    // P[M = v] = P[M <= v] - P[M < v]; the latter is P[M <= previous support point].
    const double f = max_cdf(instance, v);
    law.atoms.push_back({v, std::max(0.0, f - prev)});
    prev = f;
  }
  return law;
}

MaxLaw max_law(const BernoulliInstance& instance) {
  std::vector<BernoulliVar> vars(instance.vars().begin(), instance.vars().end());
  std::stable_sort(vars.begin(), vars.end(), [](const BernoulliVar& a, const BernoulliVar& b) { return a.v < b.v; });
  MaxLaw law;
  // P[M = u] = (1 - prod_{v_i = u}(1-p_i)) * prod_{v_i > u}(1-p_i), scanned from the top.
  long double above_none = 1.0L;
  std::size_t end = vars.size();
  while (end > 0) {
    std::size_t begin = end - 1;
    while (begin > 0 && vars[begin - 1].v == vars[end - 1].v) --begin;
    long double group_none = 1.0L;
    for (std::size_t i = begin; i < end; ++i) group_none *= 1.0L - vars[i].p;
    law.atoms.push_back({vars[begin].v, static_cast<double>((1.0L - group_none) * above_none)});
    above_none *= group_none;
    end = begin;
  }
  std::reverse(law.atoms.begin(), law.atoms.end());
  law.zero_mass = static_cast<double>(above_none);
  return law;
}

double max_cdf(const GeneralInstance& instance, double x) {
  double f = 1.0;
  for (const auto& d : instance.vars) f *= cdf(d, x);
  return f;
}

double max_excess(const GeneralInstance& instance, double t) {
  if (auto law = discrete_max_law(instance)) {
    long double s = 0.0L;
    for (const auto& a : law->atoms) {
      if (a.v > t) s += static_cast<long double>(a.p) * (a.v - t);
    }
    if (t < 0.0) s -= static_cast<long double>(law->zero_mass) * t;
    return static_cast<double>(s);
  }

  double upper = 0.0;
  std::vector<double> cuts;
  for (const auto& d : instance.vars) {
    upper = std::max(upper, support_sup(d));
    for (double b : breakpoints(d)) cuts.push_back(b);
  }
  double below = 0.0;
  if (t < 0.0) {
    below = -t;
    t = 0.0;
  }
  cuts.push_back(t);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::erase_if(cuts, [&](double c) { return c < t || c > upper; });

  using Quad = boost::math::quadrature::gauss_kronrod<double, 61>;
  auto integrand = [&](double x) { return max_survival(instance, x); };
  long double total = below;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    total += Quad::integrate(integrand, cuts[i], cuts[i + 1], 15, 1e-14);
  }
  if (!cuts.empty() && std::isinf(upper)) {
    total += Quad::integrate(integrand, cuts.back(), kInf, 15, 1e-14);
  }
  return static_cast<double>(total);
}

double expected_max(const GeneralInstance& instance) { return max_excess(instance, 0.0); }

double max_partial_expectation(const GeneralInstance& instance, double t) {
  if (t <= 0.0) return expected_max(instance);
  // E[M 1[M >= t]] = t P[M >= t] + E[(M - t)^+]; P[M >= t] uses the left limit.
  const double left = std::nextafter(t, 0.0);
  const double tail_prob = max_survival(instance, left);
  return t * tail_prob + max_excess(instance, t);
}

}  // namespace prophetlab
