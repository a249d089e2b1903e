#pragma once

#include <cstddef>
#include <cstdint>

#include "prophetlab/core.hpp"
#include "prophetlab/dist.hpp"
#include "prophetlab/oracle.hpp"

namespace prophetlab::gen {

/// [(1,1), (1/a, a)]: no online rule beats 1 while OPT = 2 - a.
BernoulliInstance known_lb(double a);

/// [(1,1), (1/eps + 1/sqrt(eps), eps)].
BernoulliInstance oblivious_lb(double eps);

/// Three-variable tight family for the oblivious threshold; a = 1 gives the
/// two-variable [(1,2/3), (2,1/2)] and ignores eps. Requires 1 + eps < 1/a
/// for a in (0,1).
BernoulliInstance tight_oblivious(double a, double eps);

/// [(1,1), (2,p2), (4,p3)].
BernoulliInstance appendix_b(double p2, double p3);

/// [(1,1), (1/eps, eps)].
BernoulliInstance appendix_a(double eps);

/// Sorted corpus instance: values log-uniform on [1, 1000], probabilities
/// U(0,1]. n = 0 draws n from U{2..10}.
BernoulliInstance random_bernoulli(std::size_t n, std::uint64_t seed, std::uint64_t stream = 0);

/// Small point-mass instance in arrival order: n variables with 1..max_atoms
/// atoms on a coarse value set, for enumeration tests.
DiscreteInstance random_discrete(std::size_t n, std::size_t max_atoms, std::uint64_t seed, std::uint64_t stream = 0);

/// Mix of uniform and exponential variables.
GeneralInstance random_continuous(std::size_t n, std::uint64_t seed, std::uint64_t stream = 0);

}  // namespace prophetlab::gen
