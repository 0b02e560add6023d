#pragma once

namespace secomp {

/// Closed-form rate with explicit degenerate/clamp tags instead of silent
/// infinities. `degenerate` marks the constant-function case (zero source
/// entropy: any rate trivially achievable, value left NaN). `clamped` marks
/// a secrecy capacity cut off at zero.
struct RateValue {
  double value = 0.0;
  bool degenerate = false;
  bool clamped = false;
};

/// (1 - H(p)) / H_U, function values per channel use.
/// Requires p in [0, 1/2] and H_U in [0, 1]; H_U = 0 is degenerate.
RateValue computation_capacity(double p, double h_u);

/// Equal to computation_capacity by the headline coding theorem; kept as a
/// distinct named operation. Valid as a secrecy capacity only when every
/// source is independent of the sum (see condition_check); note that q does
/// not enter.
RateValue secrecy_computation_capacity(double p, double h_u);

/// Best separation-based computation rate for two doubly-symmetric sources:
/// half the computation capacity at H_U = H(theta).
RateValue separation_computation_rate(double p, double theta);

/// Best separation-based secrecy computation-rate, (H(q) - H(p)) / (2 H(theta)).
/// Requires the degraded-eavesdropper hypothesis q = q'(1-2p) + p with
/// q' in (0, 1/2]; throws PreconditionError when it fails.
RateValue separation_secrecy_rate(double p, double q, double theta);

/// Secrecy capacity of the BSC(p) -> BSC(q) wiretap pair: max(H(q) - H(p), 0),
/// with `clamped` set when the difference was negative.
RateValue bsc_wiretap_secrecy_capacity(double p, double q);

}  // namespace secomp
