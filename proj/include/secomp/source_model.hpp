#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "secomp/gf2.hpp"
#include "secomp/rng.hpp"

namespace secomp {

/// Joint PMF of M binary sources for one symbol time. The table has 2^M
/// entries indexed with source 1 as the most significant bit.
class JointPMF {
 public:
  JointPMF(int num_sources, std::vector<double> probs);

  /// Two-source PMF with equal diagonal mass (1-theta)/2 and equal
  /// off-diagonal mass theta/2.
  static JointPMF doubly_symmetric(double theta);

  /// Product of independent Bernoulli(p_m) sources.
  static JointPMF product_bernoulli(const std::vector<double>& p);

  int num_sources() const { return m_; }
  const std::vector<double>& probs() const { return probs_; }
  double prob(std::uint32_t idx) const { return probs_[idx]; }

  /// One joint outcome, encoded as the table index; inverse-CDF draw.
  std::uint32_t sample(RngStream& rng) const;

 private:
  int m_;
  std::vector<double> probs_;
};

/// One length-k i.i.d. block from each of the M sources.
struct SourceBlock {
  std::vector<BitVector> seq;

  std::size_t num_sources() const { return seq.size(); }
  std::size_t block_length() const { return seq.empty() ? 0 : seq[0].size(); }
  /// Componentwise xor across sources: the sequence of function values.
  BitVector function_values() const;
};

/// Modulo-2 sum of the entries of s. Throws DomainError on empty input.
int mod2_sum(const BitVector& s);

/// Binary entropy in bits, with the 0 log 0 = 0 convention.
double binary_entropy(double p);

/// Entropy in bits of an arbitrary PMF given as a table.
double entropy(const std::vector<double>& pmf);

/// Distribution {P(U=0), P(U=1)} of the modulo-2 sum under `joint`.
std::array<double, 2> function_pmf(const JointPMF& joint);

/// Marginal PMF of source m (1-based).
std::array<double, 2> marginal(const JointPMF& joint, int m);

/// Largest deviation max_{m,s,u} |P_{S_m U}(s,u) - P_{S_m}(s) P_U(u)|,
/// computed by exact enumeration of all 2^M outcomes.
double condition_gap(const JointPMF& joint);

/// True iff every source is independent of the modulo-2 sum, within tol.
bool condition_check(const JointPMF& joint, double tol);

/// For M = 2: true iff P(0,0) = P(1,1) and P(0,1) = P(1,0) within tol.
bool is_doubly_symmetric(const JointPMF& joint, double tol);

/// k i.i.d. joint draws, split into one length-k sequence per source.
SourceBlock sample_block(const JointPMF& joint, std::size_t k, RngStream& rng);

struct ScanDisagreement {
  std::vector<double> probs;
  bool condition;
  bool doubly_symmetric;
};

/// Result of the independence-condition vs. double-symmetry equivalence
/// scan over random and theta-grid PMFs (M = 2).
struct Theorem2Report {
  std::size_t num_random = 0;
  std::size_t num_grid = 0;
  double tol = 0;
  std::vector<ScanDisagreement> disagreements;
  std::size_t num_condition_pass = 0;
  /// max_m |P_{S_m}(0) - 1/2| over condition-passing PMFs.
  double max_marginal_gap_passing = 0;
  /// Range of the condition gap over rejected PMFs.
  double min_gap_rejected = 0;
  double max_gap_rejected = 0;
};

/// Samples `num_trials` PMFs uniformly from the 3-simplex (normalized
/// exponentials) plus a `grid_points` sweep of doubly-symmetric PMFs, and
/// compares condition_check against is_doubly_symmetric on each.
Theorem2Report theorem2_scan(std::size_t num_trials, std::uint64_t master_seed, double tol,
                             std::size_t grid_points = 101);

}  // namespace secomp
