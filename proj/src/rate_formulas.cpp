#include "secomp/rate_formulas.hpp"

#include <cmath>
#include <limits>

#include "secomp/channel.hpp"
#include "secomp/errors.hpp"
#include "secomp/source_model.hpp"

namespace secomp {

namespace {
RateValue degenerate_rate() {
  RateValue r;
  r.value = std::numeric_limits<double>::quiet_NaN();
  r.degenerate = true;
  return r;
}
}  // namespace

RateValue computation_capacity(double p, double h_u) {
  if (!(p >= 0.0 && p <= 0.5)) throw DomainError("computation_capacity: p must be in [0,1/2]");
  if (!(h_u >= 0.0 && h_u <= 1.0)) throw DomainError("computation_capacity: H(U) must be in [0,1]");
  if (h_u == 0.0) return degenerate_rate();
  return {(1.0 - binary_entropy(p)) / h_u, false, false};
}

RateValue secrecy_computation_capacity(double p, double h_u) {
  return computation_capacity(p, h_u);
}

RateValue separation_computation_rate(double p, double theta) {
  if (!(theta >= 0.0 && theta <= 1.0))
    throw DomainError("separation_computation_rate: theta must be in [0,1]");
  const double h_theta = binary_entropy(theta);
  if (h_theta == 0.0) return degenerate_rate();
  RateValue r = computation_capacity(p, h_theta);
  r.value *= 0.5;
  return r;
}

RateValue separation_secrecy_rate(double p, double q, double theta) {
  if (!(p >= 0.0 && p < 0.5)) throw DomainError("separation_secrecy_rate: p must be in [0,1/2)");
  if (!degradedness_gap(p, q).has_value())
    throw PreconditionError(
        "separation_secrecy_rate: eavesdropper channel is not a degraded cascade of the "
        "legitimate one",
        "q = q'(1-2p)+p admits no q' in (0,1/2]");
  if (!(theta >= 0.0 && theta <= 1.0))
    throw DomainError("separation_secrecy_rate: theta must be in [0,1]");
  const double h_theta = binary_entropy(theta);
  if (h_theta == 0.0) return degenerate_rate();
  return {0.5 * (binary_entropy(q) - binary_entropy(p)) / h_theta, false, false};
}

RateValue bsc_wiretap_secrecy_capacity(double p, double q) {
  if (!(p >= 0.0 && p <= 1.0) || !(q >= 0.0 && q <= 1.0))
    throw DomainError("bsc_wiretap_secrecy_capacity: probabilities must be in [0,1]");
  const double diff = binary_entropy(q) - binary_entropy(p);
  if (diff < 0.0) return {0.0, false, true};
  return {diff, false, false};
}

}  // namespace secomp
