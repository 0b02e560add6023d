#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "secomp/channel.hpp"
#include "secomp/gf2.hpp"
#include "secomp/rng.hpp"
#include "secomp/source_model.hpp"

namespace secomp {

/// Largest exponent the exhaustive decoders will enumerate (2^dim candidates).
inline constexpr std::size_t kMaxDecodeDim = 20;

/// Random linear computation code: the inner matrix A (n x ell) protects
/// against channel noise, the outer matrix B (ell x k) compresses the
/// function sequence toward its entropy. Every terminal encodes with the
/// same composite AB.
struct CompCode {
  BitMatrix a;  // n x ell
  BitMatrix b;  // ell x k
  std::size_t k = 0, ell = 0, n = 0;
};

/// Admissible inner-code lengths: integers ell with k*H_U < ell < n*(1-H(p)).
struct RateWindow {
  std::size_t k = 0, n = 0;
  double h_u = 0.0;
  double capacity = 0.0;  // 1 - H(p)
  double lo = 0.0;        // k * H_U
  double hi = 0.0;        // n * capacity
  bool empty = true;
  std::size_t ell_min = 0, ell_max = 0;  // valid only when !empty

  bool contains(std::size_t ell) const { return !empty && ell >= ell_min && ell <= ell_max; }
  std::size_t midpoint() const { return (ell_min + ell_max) / 2; }
};

RateWindow rate_window(std::size_t k, std::size_t n, double h_u, double p);

/// Samples A then B with i.i.d. uniform entries from the stream. The caller
/// may pass any ell, including one outside the rate window; window membership
/// is the caller's concern (see SimEstimate::ell_in_window).
CompCode construct(std::size_t k, std::size_t n, std::size_t ell, RngStream& rng);

/// x = A (B s), identical at every terminal.
BitVector encode(const CompCode& code, const BitVector& s);

/// Min-Hamming-distance decoding of w from y = A w + noise by full codebook
/// enumeration (ML for a BSC with p < 1/2). Ties pick the lexicographically
/// smallest w. Throws ResourceError if 2^ell exceeds the enumeration cap.
BitVector decode_inner(const CompCode& code, const BitVector& y, double p,
                       std::size_t max_dim = kMaxDecodeDim);

/// Among {u : B u = w} returns the u with the largest i.i.d. prior
/// prod_i P_U(u_i), with P_U(1) = p_u_one. If w is not in the column space
/// of B, falls back to the nearest achievable image (min Hamming distance of
/// B u to w). Ties at both levels are lexicographic.
BitVector decode_outer(const CompCode& code, const BitVector& w, double p_u_one,
                       std::size_t max_dim = kMaxDecodeDim);

/// Two-stage decoder: decode_outer after decode_inner.
BitVector decode(const CompCode& code, const BitVector& y, double p, double p_u_one,
                 std::size_t max_dim = kMaxDecodeDim);

/// Oracle decoder: maximizes prod_i P_U(u_i) * p^d (1-p)^(n-d) with
/// d = dist(A B u, y) over all 2^k candidates; lexicographic ties.
BitVector joint_ml_decode(const CompCode& code, const BitVector& y, double p, double p_u_one,
                          std::size_t max_dim = kMaxDecodeDim);

/// The noiseless-case scheme: each terminal transmits its samples as-is.
std::vector<BitVector> uncoded_transmit(const SourceBlock& block);

enum class DecoderKind { TwoStage, JointMl, Uncoded };

struct SimConfig {
  JointPMF joint;
  MawcParams params;
  std::size_t k = 0;
  std::size_t n = 0;
  std::optional<std::size_t> ell;  // ignored for Uncoded
  DecoderKind decoder = DecoderKind::TwoStage;
};

struct SimEstimate {
  double mean_error_rate = 0.0;
  double ci95_half_width = 0.0;
  std::vector<double> per_code_error_rates;
  std::size_t num_codes = 0;
  std::size_t trials_per_code = 0;
  std::size_t ell_used = 0;
  bool ell_in_window = false;
  RateWindow window;
  std::uint64_t master_seed = 0;
};

/// Monte Carlo block-error estimate of P[decoded function sequence != true
/// one], averaged over `num_codes` independently drawn codes and
/// `trials_per_code` trials each. Fully reproducible: trial (c, t) uses the
/// stream derived from (master_seed, code tag, c, t), and the reduction is a
/// fixed-order sum, so the result is independent of worker count.
SimEstimate simulate_error_prob(const SimConfig& config, std::size_t num_codes,
                                std::size_t trials_per_code, std::uint64_t master_seed,
                                int workers = 1);

}  // namespace secomp
