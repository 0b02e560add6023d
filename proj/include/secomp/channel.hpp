#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "secomp/gf2.hpp"
#include "secomp/rng.hpp"

namespace secomp {

/// Default cap on exact-enumeration work, in summed terms. Overridable per
/// call and via the SECOMP_MAX_ENUM_TERMS environment variable (see
/// enum_budget()).
inline constexpr std::size_t kDefaultEnumBudget = std::size_t{1} << 26;

/// Effective enumeration budget: SECOMP_MAX_ENUM_TERMS if set, else the
/// default. Read once per process.
std::size_t enum_budget();

/// Memoryless modulo-2 adder multiple-access wiretap channel: the legitimate
/// receiver sees the xor of all inputs through BSC(p), the eavesdropper sees
/// it through BSC(q).
struct MawcParams {
  int num_transmitters = 2;
  double p = 0.0;
  double q = 0.0;

  /// Throws DomainError unless M >= 1 and p, q in [0,1].
  void validate() const;
  /// q beyond 1/2 is accepted for exploratory sweeps but flagged.
  bool q_exploratory() const { return q > 0.5; }
};

/// One channel use per position: y = xor of inputs + Bern(p) noise, z
/// likewise with Bern(q). The two noise sequences come from independent
/// sub-streams spawned from `rng`.
std::pair<BitVector, BitVector> transmit(const std::vector<BitVector>& x, const MawcParams& params,
                                         RngStream& rng);

/// Exact product-Bernoulli law on {0,1}^n, tabulated by weight:
/// P(e) = crossover^wt(e) (1-crossover)^(n-wt(e)).
struct NoisePmf {
  std::size_t n = 0;
  double crossover = 0.0;
  std::vector<double> by_weight;  // index = Hamming weight

  double operator()(const BitVector& e) const { return by_weight[e.weight()]; }
  double prob_weight(std::size_t w) const { return by_weight[w]; }
};

/// Builds the exact noise law; requires 2^n within the enumeration budget.
NoisePmf noise_pmf(double crossover, std::size_t n, std::size_t max_terms = enum_budget());

/// Crossover of BSC(p) cascaded with BSC(q'): p + q' - 2 p q'.
double compose_bsc(double p, double q_prime);

/// Solves q = q'(1-2p) + p for q'. Returns q' when it lands in (0, 1/2]
/// (the degraded-eavesdropper hypothesis); nullopt otherwise, including the
/// p = 1/2 division-by-zero case.
std::optional<double> degradedness_gap(double p, double q);

}  // namespace secomp
