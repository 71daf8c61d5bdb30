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

#include "ncftpl/harness.hpp"

#include <cmath>
#include <memory>

namespace ncftpl {

RegretReport compute_regret(const Trajectory& trajectory,
                            std::span<const LossFunction> losses,
                            const OfflineOracle& oracle, const BoxDomain& domain,
                            CallCounter& counter) {
  if (losses.size() != trajectory.rounds.size()) {
    throw DimensionMismatch("compute_regret: loss sequence length does not match trajectory");
  }
  const std::vector<double> zero(domain.dim(), 0.0);
  OracleAnswer best = oracle.minimize(OracleRequest{losses, zero, &domain}, counter);

  double incurred = 0.0;
  for (const TrajectoryRound& r : trajectory.rounds) incurred += r.incurred_loss;

  RegretReport rep;
  rep.best_in_hindsight_w = std::move(best.w_hat);
  rep.best_in_hindsight_value = best.objective;
  rep.discretization_slack = best.error_bound;
  rep.total_regret = incurred - best.objective;
  rep.average_regret = rep.total_regret / static_cast<double>(trajectory.rounds.size());
  return rep;
}

FtlBtlResult ftl_btl_check(const Trajectory& trajectory,
                           std::span<const LossFunction> losses,
                           const OfflineOracle& oracle, const BoxDomain& domain,
                           CallCounter& counter) {
  if (trajectory.algorithm != "ftpl" || trajectory.noise_mode != NoiseMode::kSingleDraw) {
    throw ConfigError("ftl_btl_check: requires a single-draw FTPL trajectory");
  }
  if (losses.size() != trajectory.rounds.size() || losses.empty()) {
    throw DimensionMismatch("ftl_btl_check: loss sequence length does not match trajectory");
  }
  const std::span<const double> sigma(trajectory.rounds.front().sigma);

  const std::vector<double> zero(domain.dim(), 0.0);
  const OracleAnswer best = oracle.minimize(OracleRequest{losses, zero, &domain}, counter);
  const OracleAnswer last = oracle.minimize(OracleRequest{losses, sigma, &domain}, counter);

  double incurred = 0.0;
  for (const TrajectoryRound& r : trajectory.rounds) incurred += r.incurred_loss;

  FtlBtlResult res;
  res.lhs = incurred - best.objective;

  // R(w*) - R(w_1) with R(w) = -sigma.w
  const std::span<const double> w1(trajectory.rounds.front().w);
  res.rhs = -dot(sigma, std::span<const double>(best.w_hat)) + dot(sigma, w1);
  res.slack = last.error_bound;
  for (std::size_t t = 0; t < losses.size(); ++t) {
    const std::span<const double> w_next =
        t + 1 < losses.size() ? std::span<const double>(trajectory.rounds[t + 1].w)
                              : std::span<const double>(last.w_hat);
    res.rhs += trajectory.rounds[t].incurred_loss - losses[t].value(w_next);
    res.slack += trajectory.rounds[t].oracle_error;
  }
  res.holds = res.lhs <= res.rhs + res.slack;
  return res;
}

namespace {

struct ProbeSessions {
  std::unique_ptr<PrefixSession> prefix;  // sum of prefix losses
  std::unique_ptr<PrefixSession> full;    // prefix plus the new loss
};

ProbeSessions make_probe_sessions(std::span<const LossFunction> prefix,
                                  const LossFunction& next_loss,
                                  const OfflineOracle& oracle, const BoxDomain& domain) {
  ProbeSessions s;
  s.prefix = oracle.make_session(domain);
  s.full = oracle.make_session(domain);
  for (const LossFunction& l : prefix) {
    s.prefix->push(l);
    s.full->push(l);
  }
  s.full->push(next_loss);
  return s;
}

void finish_gap_stats(StabilityReport& rep) {
  RunningStat stat;
  for (double g : rep.step_gaps) stat.add(g);
  rep.mean_gap = stat.mean();
  rep.gap_std_error = stat.std_error();
}

}  // namespace

StabilityReport stability_probe_1d(std::span<const LossFunction> prefix,
                                   const LossFunction& next_loss, double eta,
                                   int num_draws, const OfflineOracle& scan_oracle,
                                   const BoxDomain& domain, RngStream& rng) {
  if (domain.dim() != 1) throw DimensionMismatch("stability_probe_1d: requires dim 1");
  ProbeSessions s = make_probe_sessions(prefix, next_loss, scan_oracle, domain);
  CallCounter probe_counter;

  StabilityReport rep;
  rep.draws = num_draws;
  rep.shift_used = 2.0 * next_loss.lipschitz_G;
  rep.step_gaps.reserve(num_draws);

  for (int i = 0; i < num_draws; ++i) {
    const double sigma = rng.exponential(eta);
    const std::vector<double> s0{sigma};
    const std::vector<double> s1{sigma + rep.shift_used};
    const double wt = s.prefix->minimize(s0, probe_counter).w_hat[0];
    const double wt1 = s.full->minimize(s0, probe_counter).w_hat[0];
    const OracleAnswer at_shift = s.prefix->minimize(s1, probe_counter);
    const double wt_s = at_shift.w_hat[0];
    const double wt1_s = s.full->minimize(s1, probe_counter).w_hat[0];

    rep.tolerance = at_shift.grid_resolution;
    const double tol = rep.tolerance;
    if (std::min(wt_s, wt1_s) < std::max(wt, wt1) - tol) ++rep.monotonicity_violations;
    if (wt_s < wt1 - tol) ++rep.one_sided_violations;
    if (wt1_s < wt - tol) ++rep.one_sided_violations;
    if (wt_s < wt - tol) ++rep.one_sided_violations;
    rep.step_gaps.push_back(std::abs(wt - wt1));
    ++rep.coordinate_checks;
  }
  finish_gap_stats(rep);
  return rep;
}

StabilityReport stability_probe_kd(std::span<const LossFunction> prefix,
                                   const LossFunction& next_loss, double eta,
                                   double delta, int num_draws,
                                   const OfflineOracle& grid_oracle,
                                   const BoxDomain& domain, RngStream& rng) {
  if (domain.dim() < 2) throw DimensionMismatch("stability_probe_kd: requires dim >= 2");
  if (!(delta > 0.0)) throw DomainViolation("stability_probe_kd: delta must be positive");
  const int d = domain.dim();
  ProbeSessions s = make_probe_sessions(prefix, next_loss, grid_oracle, domain);
  CallCounter probe_counter;

  StabilityReport rep;
  rep.draws = num_draws;
  rep.delta_used = delta;
  rep.shift_used = 3.0 * next_loss.bound_B / delta;
  rep.step_gaps.reserve(num_draws);

  for (int i = 0; i < num_draws; ++i) {
    const NoiseVector nv = sample_exp_noise(eta, d, rng);
    const OracleAnswer base_t = s.prefix->minimize(nv.sigma, probe_counter);
    const OracleAnswer base_t1 = s.full->minimize(nv.sigma, probe_counter);
    rep.tolerance = base_t.grid_resolution;
    const double tol = rep.tolerance;
    rep.step_gaps.push_back(l1_distance(std::span<const double>(base_t.w_hat),
                                        std::span<const double>(base_t1.w_hat)));

    for (int k = 0; k < d; ++k) {
      std::vector<double> shifted = nv.sigma;
      shifted[k] += rep.shift_used;
      const double wk_t = s.prefix->minimize(shifted, probe_counter).w_hat[k];
      const double wk_t1 = s.full->minimize(shifted, probe_counter).w_hat[k];
      const double w_min_shift = std::min(wk_t, wk_t1);
      const double w_max_base = std::max(base_t.w_hat[k], base_t1.w_hat[k]);
      if (w_min_shift < w_max_base - delta - tol) ++rep.monotonicity_violations;
      ++rep.coordinate_checks;
    }
  }
  finish_gap_stats(rep);
  return rep;
}

ScalingFit scaling_fit(const std::function<ScalingOutcome(std::int64_t, int)>& run_trial,
                       std::span<const std::int64_t> horizon_grid, int trials) {
  if (horizon_grid.size() < 4) {
    throw ConfigError("scaling_fit: need at least four horizons");
  }
  if (trials < 1) throw ConfigError("scaling_fit: trials must be positive");

  ScalingFit fit;
  std::vector<double> xs, ys;
  for (std::int64_t horizon : horizon_grid) {
    RunningStat regret_stat;
    RunningStat slack_stat;
    for (int trial = 0; trial < trials; ++trial) {
      const ScalingOutcome out = run_trial(horizon, trial);
      regret_stat.add(out.avg_regret);
      slack_stat.add(out.avg_slack);
    }
    ScalingPointSummary p;
    p.horizon = horizon;
    p.raw_mean = regret_stat.mean();
    p.mean_slack = slack_stat.mean();
    p.std_error = regret_stat.std_error();
    p.mean_avg_regret = p.raw_mean;
    if (!(p.mean_avg_regret > 0.0)) {
      p.mean_avg_regret = std::max(p.mean_slack, 1e-12);
      p.floored = true;
      ++fit.floored_count;
    }
    xs.push_back(static_cast<double>(horizon));
    ys.push_back(p.mean_avg_regret);
    fit.points.push_back(std::move(p));
  }
  const LineFit lf = fit_loglog(xs, ys);
  fit.exponent = lf.slope;
  fit.intercept = lf.intercept;
  return fit;
}

BatchResult online_to_batch(std::span<const LossFunction> sample,
                            std::span<const LossFunction> heldout,
                            const std::function<Trajectory(std::span<const LossFunction>)>& learner,
                            const BoxDomain& domain, RngStream& rng, CallCounter& counter) {
  if (sample.empty()) throw DomainViolation("online_to_batch: empty sample");
  counter.add_samples(sample.size());
  const Trajectory traj = learner(sample);
  if (traj.rounds.size() != sample.size()) {
    throw DimensionMismatch("online_to_batch: learner did not cover the sample");
  }
  const int j = rng.uniform_int(static_cast<int>(sample.size()));
  BatchResult res;
  res.w_hat = traj.rounds[static_cast<std::size_t>(j)].w;
  res.picked_round = j + 1;
  if (!heldout.empty()) {
    double acc = 0.0;
    for (const LossFunction& l : heldout) {
      acc += evaluate(l, domain, res.w_hat, counter);
    }
    res.risk_estimate = acc / static_cast<double>(heldout.size());
  }
  return res;
}

}  // namespace ncftpl
