// Copyright 2026 The ncftpl Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NCFTPL_HARNESS_HPP
#define NCFTPL_HARNESS_HPP

#include <functional>
#include <span>
#include <vector>

#include "ncftpl/learner.hpp"
#include "ncftpl/oracle.hpp"
#include "ncftpl/rng.hpp"
#include "ncftpl/stats.hpp"

namespace ncftpl {

struct RegretReport {
  double total_regret = 0.0;
  double average_regret = 0.0;
  std::vector<double> best_in_hindsight_w;
  double best_in_hindsight_value = 0.0;
  double discretization_slack = 0.0;  // error bound of the hindsight oracle call
};

/// Regret of a finished run against the best fixed point in hindsight
/// (one extra offline call with sigma = 0).
RegretReport compute_regret(const Trajectory& trajectory,
                            std::span<const LossFunction> losses,
                            const OfflineOracle& oracle, const BoxDomain& domain,
                            CallCounter& counter);

struct FtlBtlResult {
  double lhs = 0.0;  // realized regret
  double rhs = 0.0;  // regularizer span plus per-round instability
  double slack = 0.0;
  bool holds = false;
};

/// Pathwise FTL-BTL decomposition check on a single-draw trajectory,
/// with the convention R(w) = -sigma.w and the extra point w_{T+1}
/// minimizing the full sequence under the same noise. Slack accumulates
/// the oracle error bounds used by the telescoping argument.
FtlBtlResult ftl_btl_check(const Trajectory& trajectory,
                           std::span<const LossFunction> losses,
                           const OfflineOracle& oracle, const BoxDomain& domain,
                           CallCounter& counter);

struct StabilityReport {
  std::vector<double> step_gaps;  // per draw: ||w_t(sigma) - w_{t+1}(sigma)||_1
  double mean_gap = 0.0;
  double gap_std_error = 0.0;
  int monotonicity_violations = 0;
  int one_sided_violations = 0;
  int draws = 0;
  int coordinate_checks = 0;
  double delta_used = 0.0;
  double shift_used = 0.0;
  double tolerance = 0.0;  // grid slack applied to the comparisons
};

/// 1-D minimizer-monotonicity probe: for each drawn sigma computes the
/// four minimizers of (prefix | prefix+next) under (sigma | sigma+2G)
/// and counts violations of w_min(sigma+2G) >= w_max(sigma) and of the
/// three one-sided relations, beyond the scan resolution.
StabilityReport stability_probe_1d(std::span<const LossFunction> prefix,
                                   const LossFunction& next_loss, double eta,
                                   int num_draws, const OfflineOracle& scan_oracle,
                                   const BoxDomain& domain, RngStream& rng);

/// Per-coordinate probe of the k-dimensional margin inequality
/// w_{k,min}(sigma + (3B/delta) e_k) >= w_{k,max}(sigma) - delta.
StabilityReport stability_probe_kd(std::span<const LossFunction> prefix,
                                   const LossFunction& next_loss, double eta,
                                   double delta, int num_draws,
                                   const OfflineOracle& grid_oracle,
                                   const BoxDomain& domain, RngStream& rng);

struct ScalingOutcome {
  double avg_regret = 0.0;
  double avg_slack = 0.0;
};

struct ScalingPointSummary {
  std::int64_t horizon = 0;
  double mean_avg_regret = 0.0;  // value used in the fit (after flooring)
  double raw_mean = 0.0;
  double mean_slack = 0.0;
  double std_error = 0.0;
  bool floored = false;
};

struct ScalingFit {
  double exponent = 0.0;
  double intercept = 0.0;
  std::vector<ScalingPointSummary> points;
  int floored_count = 0;
};

/// Fits log(mean average regret) against log T over a horizon grid.
/// Nonpositive means are floored at the discretization slack before
/// the log and flagged in the output.
ScalingFit scaling_fit(const std::function<ScalingOutcome(std::int64_t horizon, int trial)>& run_trial,
                       std::span<const std::int64_t> horizon_grid, int trials);

struct BatchResult {
  std::vector<double> w_hat;
  int picked_round = 0;  // 1-based
  double risk_estimate = 0.0;
};

/// Online-to-batch conversion: runs the learner over the sample in
/// order, returns a uniformly random iterate, and estimates its risk
/// on a held-out sample through the value oracle. The training sample
/// size is charged to sample_count.
BatchResult online_to_batch(std::span<const LossFunction> sample,
                            std::span<const LossFunction> heldout,
                            const std::function<Trajectory(std::span<const LossFunction>)>& learner,
                            const BoxDomain& domain, RngStream& rng, CallCounter& counter);

}  // namespace ncftpl

#endif  // NCFTPL_HARNESS_HPP
