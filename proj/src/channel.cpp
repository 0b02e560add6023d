#include "secomp/channel.hpp"

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>

#include "secomp/errors.hpp"

namespace secomp {

std::size_t enum_budget() {
  static const std::size_t cached = [] {
    const char* env = std::getenv("SECOMP_MAX_ENUM_TERMS");
    if (env != nullptr) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultEnumBudget;
  }();
  return cached;
}

void MawcParams::validate() const {
  if (num_transmitters < 1) throw DomainError("MawcParams: need at least one transmitter");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("MawcParams: p must be in [0,1]");
  if (!(q >= 0.0 && q <= 1.0)) throw DomainError("MawcParams: q must be in [0,1]");
}

std::pair<BitVector, BitVector> transmit(const std::vector<BitVector>& x, const MawcParams& params,
                                         RngStream& rng) {
  params.validate();
  if (x.size() != static_cast<std::size_t>(params.num_transmitters))
    throw DimensionError("transmit: expected " + std::to_string(params.num_transmitters) +
                         " inputs, got " + std::to_string(x.size()));
  const std::size_t n = x[0].size();
  BitVector sum = x[0];
  for (std::size_t m = 1; m < x.size(); ++m) {
    if (x[m].size() != n) throw DimensionError("transmit: input length mismatch");
    sum ^= x[m];
  }
  RngStream ny = rng.spawn();
  RngStream nz = rng.spawn();
  BitVector y = sum ^ random_noise(n, params.p, ny);
  BitVector z = sum ^ random_noise(n, params.q, nz);
  return {std::move(y), std::move(z)};
}

NoisePmf noise_pmf(double crossover, std::size_t n, std::size_t max_terms) {
  if (!(crossover >= 0.0 && crossover <= 1.0))
    throw DomainError("noise_pmf: crossover must be in [0,1]");
  if (n > 62 || (std::size_t{1} << n) > max_terms)
    throw ResourceError("noise_pmf: 2^" + std::to_string(n) + " patterns exceed the budget of " +
                            std::to_string(max_terms) + " terms",
                        n > 62 ? SIZE_MAX : std::size_t{1} << n, max_terms);
  NoisePmf pmf;
  pmf.n = n;
  pmf.crossover = crossover;
  pmf.by_weight.resize(n + 1);
  for (std::size_t w = 0; w <= n; ++w)
    pmf.by_weight[w] = std::pow(crossover, static_cast<double>(w)) *
                       std::pow(1.0 - crossover, static_cast<double>(n - w));
  return pmf;
}

double compose_bsc(double p, double q_prime) {
  if (!(p >= 0.0 && p <= 1.0) || !(q_prime >= 0.0 && q_prime <= 1.0))
    throw DomainError("compose_bsc: probabilities must be in [0,1]");
  return p + q_prime - 2.0 * p * q_prime;
}

std::optional<double> degradedness_gap(double p, double q) {
  if (!(p >= 0.0 && p < 0.5)) return std::nullopt;
  if (!(q >= 0.0 && q <= 1.0)) return std::nullopt;
  const double q_prime = (q - p) / (1.0 - 2.0 * p);
  if (q_prime > 0.0 && q_prime <= 0.5) return q_prime;
  return std::nullopt;
}

}  // namespace secomp
