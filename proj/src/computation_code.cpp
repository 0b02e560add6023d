#include "secomp/computation_code.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "secomp/errors.hpp"
#include "secomp/parallel.hpp"

namespace secomp {

namespace {

constexpr std::uint64_t kCodeStreamTag = 0xc0de;
constexpr std::uint64_t kTrialStreamTag = 0x7e1a;

void check_decode_dim(std::size_t dim, std::size_t max_dim, const char* what) {
  if (dim > max_dim)
    throw ResourceError(std::string(what) + ": 2^" + std::to_string(dim) +
                            " candidates exceed the configured enumeration cap 2^" +
                            std::to_string(max_dim),
                        dim >= 63 ? SIZE_MAX : (std::size_t{1} << dim),
                        std::size_t{1} << max_dim);
}

/// Per-weight i.i.d. prior table: prior[c] = p1^c (1-p1)^(len-c), evaluated
/// canonically via pow so equal weights always compare exactly equal.
std::vector<double> weight_prior(double p1, std::size_t len) {
  std::vector<double> prior(len + 1);
  for (std::size_t c = 0; c <= len; ++c)
    prior[c] =
        std::pow(p1, static_cast<double>(c)) * std::pow(1.0 - p1, static_cast<double>(len - c));
  return prior;
}

}  // namespace

RateWindow rate_window(std::size_t k, std::size_t n, double h_u, double p) {
  if (k < 1 || n < 1) throw DomainError("rate_window: k and n must be >= 1");
  if (!(h_u >= 0.0 && h_u <= 1.0)) throw DomainError("rate_window: H(U) must be in [0,1]");
  if (!(p >= 0.0 && p <= 0.5)) throw DomainError("rate_window: p must be in [0,1/2]");
  RateWindow w;
  w.k = k;
  w.n = n;
  w.h_u = h_u;
  w.capacity = 1.0 - binary_entropy(p);
  w.lo = static_cast<double>(k) * h_u;
  w.hi = static_cast<double>(n) * w.capacity;
  // Smallest integer strictly above lo, largest strictly below hi.
  const double lo_floor = std::floor(w.lo);
  const double hi_ceil = std::ceil(w.hi);
  double ell_min = lo_floor + 1.0;
  double ell_max = (hi_ceil == w.hi) ? w.hi - 1.0 : hi_ceil - 1.0;
  if (ell_min < 1.0) ell_min = 1.0;
  if (ell_max >= ell_min && ell_max >= 1.0) {
    w.empty = false;
    w.ell_min = static_cast<std::size_t>(ell_min);
    w.ell_max = static_cast<std::size_t>(ell_max);
  }
  return w;
}

CompCode construct(std::size_t k, std::size_t n, std::size_t ell, RngStream& rng) {
  if (k < 1 || n < 1 || ell < 1) throw DomainError("construct: dimensions must be >= 1");
  CompCode code;
  code.k = k;
  code.n = n;
  code.ell = ell;
  code.a = random_matrix(n, ell, rng);
  code.b = random_matrix(ell, k, rng);
  return code;
}

BitVector encode(const CompCode& code, const BitVector& s) {
  if (s.size() != code.k) throw DimensionError("encode: source block length != k");
  return mat_vec_mul(code.a, mat_vec_mul(code.b, s));
}

BitVector decode_inner(const CompCode& code, const BitVector& y, double p, std::size_t max_dim) {
  if (y.size() != code.n) throw DimensionError("decode_inner: received length != n");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("decode_inner: p must be in [0,1]");
  check_decode_dim(code.ell, max_dim, "decode_inner");

  const std::vector<BitVector> cols = code.a.columns();
  // Gray-code walk over all codewords; candidate identity tracked as the
  // integer whose MSB is component 0, so numeric order is lexicographic.
  BitVector cur(code.n);
  std::size_t best_d = hamming_distance(cur, y);
  std::uint64_t best_w = 0;
  const std::uint64_t total = std::uint64_t{1} << code.ell;
  for (std::uint64_t i = 1; i < total; ++i) {
    const unsigned flip = std::countr_zero(i);
    cur ^= cols[code.ell - 1 - flip];
    const std::uint64_t w_val = i ^ (i >> 1);
    const std::size_t d = hamming_distance(cur, y);
    if (d < best_d || (d == best_d && w_val < best_w)) {
      best_d = d;
      best_w = w_val;
    }
  }
  return BitVector::from_index(best_w, code.ell);
}

namespace {

/// Shared coset maximum-likelihood search: over all u, minimize the Hamming
/// distance of M u to w (0 on the coset itself), then maximize the i.i.d.
/// prior, then take the lexicographically smallest u.
BitVector coset_ml_search(const BitMatrix& m, const BitVector& w, double p_one,
                          std::size_t max_dim, const char* what) {
  if (w.size() != m.rows()) throw DimensionError(std::string(what) + ": syndrome length mismatch");
  if (!(p_one >= 0.0 && p_one <= 1.0))
    throw DomainError(std::string(what) + ": P_U(1) must be in [0,1]");
  const std::size_t dim = m.cols();
  check_decode_dim(dim, max_dim, what);

  const std::vector<double> prior = weight_prior(p_one, dim);
  const std::vector<BitVector> cols = m.columns();
  BitVector cur(m.rows());
  std::size_t best_d = hamming_distance(cur, w);
  double best_prior = prior[0];
  std::uint64_t best_u = 0;
  const std::uint64_t total = std::uint64_t{1} << dim;
  for (std::uint64_t i = 1; i < total; ++i) {
    const unsigned flip = std::countr_zero(i);
    cur ^= cols[dim - 1 - flip];
    const std::uint64_t u_val = i ^ (i >> 1);
    const std::size_t d = hamming_distance(cur, w);
    if (d > best_d) continue;
    const double pr = prior[std::popcount(u_val)];
    if (d < best_d || pr > best_prior || (pr == best_prior && u_val < best_u)) {
      best_d = d;
      best_prior = pr;
      best_u = u_val;
    }
  }
  return BitVector::from_index(best_u, dim);
}

}  // namespace

BitVector decode_outer(const CompCode& code, const BitVector& w, double p_u_one,
                       std::size_t max_dim) {
  return coset_ml_search(code.b, w, p_u_one, max_dim, "decode_outer");
}

BitVector decode(const CompCode& code, const BitVector& y, double p, double p_u_one,
                 std::size_t max_dim) {
  return decode_outer(code, decode_inner(code, y, p, max_dim), p_u_one, max_dim);
}

BitVector joint_ml_decode(const CompCode& code, const BitVector& y, double p, double p_u_one,
                          std::size_t max_dim) {
  if (y.size() != code.n) throw DimensionError("joint_ml_decode: received length != n");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("joint_ml_decode: p must be in [0,1]");
  if (!(p_u_one >= 0.0 && p_u_one <= 1.0))
    throw DomainError("joint_ml_decode: P_U(1) must be in [0,1]");
  check_decode_dim(code.k, max_dim, "joint_ml_decode");

  const BitMatrix ab = mat_mat_mul(code.a, code.b);
  const std::vector<BitVector> cols = ab.columns();
  const std::vector<double> prior = weight_prior(p_u_one, code.k);
  const std::vector<double> channel = weight_prior(p, code.n);  // p^d (1-p)^(n-d)

  BitVector cur(code.n);
  double best_score = prior[0] * channel[hamming_distance(cur, y)];
  std::uint64_t best_u = 0;
  const std::uint64_t total = std::uint64_t{1} << code.k;
  for (std::uint64_t i = 1; i < total; ++i) {
    const unsigned flip = std::countr_zero(i);
    cur ^= cols[code.k - 1 - flip];
    const std::uint64_t u_val = i ^ (i >> 1);
    const double score = prior[std::popcount(u_val)] * channel[hamming_distance(cur, y)];
    if (score > best_score || (score == best_score && u_val < best_u)) {
      best_score = score;
      best_u = u_val;
    }
  }
  return BitVector::from_index(best_u, code.k);
}

std::vector<BitVector> uncoded_transmit(const SourceBlock& block) { return block.seq; }

SimEstimate simulate_error_prob(const SimConfig& config, std::size_t num_codes,
                                std::size_t trials_per_code, std::uint64_t master_seed,
                                int workers) {
  config.params.validate();
  if (config.joint.num_sources() != config.params.num_transmitters)
    throw DimensionError("simulate_error_prob: source count != transmitter count");
  if (num_codes < 1 || trials_per_code < 1)
    throw DomainError("simulate_error_prob: need at least one code and one trial");
  if (config.k < 1) throw DomainError("simulate_error_prob: k must be >= 1");

  const bool uncoded = config.decoder == DecoderKind::Uncoded;
  if (uncoded && config.k != config.n)
    throw DomainError("simulate_error_prob: uncoded transmission requires k == n");
  std::size_t ell = 0;
  if (!uncoded) {
    if (!config.ell.has_value())
      throw DomainError("simulate_error_prob: coded decoders require ell");
    ell = *config.ell;
  }

  SimEstimate est;
  est.num_codes = num_codes;
  est.trials_per_code = trials_per_code;
  est.master_seed = master_seed;
  est.ell_used = ell;
  const double p_u_one = function_pmf(config.joint)[1];
  if (!uncoded) {
    est.window = rate_window(config.k, config.n, entropy({1.0 - p_u_one, p_u_one}), config.params.p);
    est.ell_in_window = est.window.contains(ell);
  }

  std::vector<std::size_t> errors_per_code(num_codes, 0);
  run_parallel(num_codes, workers, [&](std::size_t c) {
    CompCode code;
    if (!uncoded) {
      RngStream code_rng = RngStream::derive(master_seed, {kCodeStreamTag, c});
      code = construct(config.k, config.n, ell, code_rng);
    }
    std::size_t errs = 0;
    for (std::size_t t = 0; t < trials_per_code; ++t) {
      RngStream trial_rng = RngStream::derive(master_seed, {kTrialStreamTag, c, t});
      const SourceBlock block = sample_block(config.joint, config.k, trial_rng);
      const BitVector u = block.function_values();
      std::vector<BitVector> x;
      x.reserve(block.seq.size());
      if (uncoded) {
        x = uncoded_transmit(block);
      } else {
        for (const BitVector& s : block.seq) x.push_back(encode(code, s));
      }
      const auto [y, z] = transmit(x, config.params, trial_rng);
      BitVector u_hat;
      switch (config.decoder) {
        case DecoderKind::Uncoded:
          u_hat = y;
          break;
        case DecoderKind::TwoStage:
          u_hat = decode(code, y, config.params.p, p_u_one);
          break;
        case DecoderKind::JointMl:
          u_hat = joint_ml_decode(code, y, config.params.p, p_u_one);
          break;
      }
      if (u_hat != u) ++errs;
    }
    errors_per_code[c] = errs;
  });

  est.per_code_error_rates.resize(num_codes);
  std::size_t total_errs = 0;
  for (std::size_t c = 0; c < num_codes; ++c) {
    est.per_code_error_rates[c] =
        static_cast<double>(errors_per_code[c]) / static_cast<double>(trials_per_code);
    total_errs += errors_per_code[c];
  }
  const double total_trials = static_cast<double>(num_codes) * static_cast<double>(trials_per_code);
  est.mean_error_rate = static_cast<double>(total_errs) / total_trials;
  est.ci95_half_width =
      1.96 * std::sqrt(est.mean_error_rate * (1.0 - est.mean_error_rate) / total_trials);
  return est;
}

}  // namespace secomp
