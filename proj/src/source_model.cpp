#include "secomp/source_model.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "secomp/errors.hpp"

namespace secomp {

namespace {
constexpr double kPmfSumTol = 1e-12;
constexpr std::uint64_t kScanStreamTag = 0x5ca0;
}  // namespace

JointPMF::JointPMF(int num_sources, std::vector<double> probs)
    : m_(num_sources), probs_(std::move(probs)) {
  if (m_ < 1 || m_ > 20) throw DomainError("JointPMF: need 1 <= M <= 20");
  if (probs_.size() != (std::size_t{1} << m_))
    throw DomainError("JointPMF: table must have 2^M entries");
  double sum = 0;
  for (double p : probs_) {
    if (!(p >= 0.0)) throw DomainError("JointPMF: probabilities must be >= 0");
    sum += p;
  }
  if (std::abs(sum - 1.0) > kPmfSumTol) throw DomainError("JointPMF: probabilities must sum to 1");
}

JointPMF JointPMF::doubly_symmetric(double theta) {
  if (!(theta >= 0.0 && theta <= 1.0)) throw DomainError("doubly_symmetric: theta must be in [0,1]");
  const double diag = (1.0 - theta) / 2.0;
  const double off = theta / 2.0;
  return JointPMF(2, {diag, off, off, diag});
}

JointPMF JointPMF::product_bernoulli(const std::vector<double>& p) {
  const int m = static_cast<int>(p.size());
  if (m < 1 || m > 20) throw DomainError("product_bernoulli: need 1 <= M <= 20");
  for (double pm : p)
    if (!(pm >= 0.0 && pm <= 1.0)) throw DomainError("product_bernoulli: p must be in [0,1]");
  std::vector<double> table(std::size_t{1} << m);
  for (std::uint32_t idx = 0; idx < table.size(); ++idx) {
    double v = 1.0;
    for (int j = 0; j < m; ++j) {
      const bool bit = (idx >> (m - 1 - j)) & 1u;
      v *= bit ? p[j] : 1.0 - p[j];
    }
    table[idx] = v;
  }
  return JointPMF(m, std::move(table));
}

std::uint32_t JointPMF::sample(RngStream& rng) const {
  const double u = rng.next_double();
  double acc = 0;
  for (std::uint32_t idx = 0; idx + 1 < probs_.size(); ++idx) {
    acc += probs_[idx];
    if (u < acc) return idx;
  }
  return static_cast<std::uint32_t>(probs_.size() - 1);
}

BitVector SourceBlock::function_values() const {
  if (seq.empty()) throw DomainError("SourceBlock: no sources");
  BitVector u = seq[0];
  for (std::size_t m = 1; m < seq.size(); ++m) u ^= seq[m];
  return u;
}

int mod2_sum(const BitVector& s) {
  if (s.empty()) throw DomainError("mod2_sum: empty input");
  return static_cast<int>(s.weight() & 1u);
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("binary_entropy: p must be in [0,1]");
  double h = 0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

double entropy(const std::vector<double>& pmf) {
  double sum = 0;
  for (double p : pmf) {
    if (!(p >= 0.0)) throw DomainError("entropy: probabilities must be >= 0");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw DomainError("entropy: probabilities must sum to 1");
  double h = 0;
  for (double p : pmf)
    if (p > 0.0) h -= p * std::log2(p);
  return h;
}

std::array<double, 2> function_pmf(const JointPMF& joint) {
  std::array<double, 2> pu{0.0, 0.0};
  const auto& probs = joint.probs();
  for (std::uint32_t idx = 0; idx < probs.size(); ++idx)
    pu[std::popcount(idx) & 1u] += probs[idx];
  return pu;
}

std::array<double, 2> marginal(const JointPMF& joint, int m) {
  if (m < 1 || m > joint.num_sources()) throw DomainError("marginal: source index out of range");
  std::array<double, 2> pm{0.0, 0.0};
  const int shift = joint.num_sources() - m;
  const auto& probs = joint.probs();
  for (std::uint32_t idx = 0; idx < probs.size(); ++idx) pm[(idx >> shift) & 1u] += probs[idx];
  return pm;
}

double condition_gap(const JointPMF& joint) {
  const int num = joint.num_sources();
  const auto& probs = joint.probs();
  const std::array<double, 2> pu = function_pmf(joint);
  double gap = 0;
  for (int m = 1; m <= num; ++m) {
    const int shift = num - m;
    double joint_su[2][2] = {{0, 0}, {0, 0}};
    for (std::uint32_t idx = 0; idx < probs.size(); ++idx) {
      const int s = (idx >> shift) & 1u;
      const int u = std::popcount(idx) & 1u;
      joint_su[s][u] += probs[idx];
    }
    const std::array<double, 2> pm = marginal(joint, m);
    for (int s = 0; s < 2; ++s)
      for (int u = 0; u < 2; ++u)
        gap = std::max(gap, std::abs(joint_su[s][u] - pm[s] * pu[u]));
  }
  return gap;
}

bool condition_check(const JointPMF& joint, double tol) {
  if (!(tol > 0.0)) throw DomainError("condition_check: tol must be > 0");
  return condition_gap(joint) <= tol;
}

bool is_doubly_symmetric(const JointPMF& joint, double tol) {
  if (joint.num_sources() != 2) throw DomainError("is_doubly_symmetric: defined for M = 2 only");
  const auto& p = joint.probs();
  return std::abs(p[0b00] - p[0b11]) <= tol && std::abs(p[0b01] - p[0b10]) <= tol;
}

SourceBlock sample_block(const JointPMF& joint, std::size_t k, RngStream& rng) {
  if (k < 1) throw DomainError("sample_block: k must be >= 1");
  const int num = joint.num_sources();
  SourceBlock block;
  block.seq.assign(num, BitVector(k));
  for (std::size_t t = 0; t < k; ++t) {
    const std::uint32_t outcome = joint.sample(rng);
    for (int m = 0; m < num; ++m)
      if ((outcome >> (num - 1 - m)) & 1u) block.seq[m].set(t, true);
  }
  return block;
}

Theorem2Report theorem2_scan(std::size_t num_trials, std::uint64_t master_seed, double tol,
                             std::size_t grid_points) {
  Theorem2Report report;
  report.num_random = num_trials;
  report.num_grid = grid_points;
  report.tol = tol;
  bool any_rejected = false;

  auto visit = [&](const JointPMF& j) {
    const double gap = condition_gap(j);
    const bool cond = gap <= tol;
    const bool ds = is_doubly_symmetric(j, tol);
    if (cond != ds) report.disagreements.push_back({j.probs(), cond, ds});
    if (cond) {
      ++report.num_condition_pass;
      for (int m = 1; m <= 2; ++m)
        report.max_marginal_gap_passing =
            std::max(report.max_marginal_gap_passing, std::abs(marginal(j, m)[0] - 0.5));
    } else {
      if (!any_rejected) {
        report.min_gap_rejected = report.max_gap_rejected = gap;
        any_rejected = true;
      } else {
        report.min_gap_rejected = std::min(report.min_gap_rejected, gap);
        report.max_gap_rejected = std::max(report.max_gap_rejected, gap);
      }
    }
  };

  for (std::size_t trial = 0; trial < num_trials; ++trial) {
    RngStream rng = RngStream::derive(master_seed, {kScanStreamTag, trial});
    // Normalized exponentials: uniform on the simplex.
    std::array<double, 4> e;
    double sum = 0;
    for (double& x : e) {
      x = -std::log(1.0 - rng.next_double());
      sum += x;
    }
    std::vector<double> probs(4);
    double acc = 0;
    for (int i = 0; i < 3; ++i) {
      probs[i] = e[i] / sum;
      acc += probs[i];
    }
    probs[3] = std::max(0.0, 1.0 - acc);
    visit(JointPMF(2, probs));
  }

  for (std::size_t i = 0; i < grid_points; ++i) {
    const double theta =
        grid_points == 1 ? 0.5 : static_cast<double>(i) / static_cast<double>(grid_points - 1);
    visit(JointPMF::doubly_symmetric(theta));
  }
  return report;
}

}  // namespace secomp
