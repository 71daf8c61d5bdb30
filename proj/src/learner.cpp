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

#include "ncftpl/learner.hpp"

#include <cmath>

namespace ncftpl {

Schedule schedule_params(std::int64_t horizon, int dim) {
  if (horizon < 1) throw ConfigError("schedule_params: horizon must be at least 1");
  if (dim < 1) throw DimensionMismatch("schedule_params: dim must be positive");
  Schedule s;
  s.horizon = horizon;
  s.dim = dim;
  const double t = static_cast<double>(horizon);
  // cbrt/sqrt keep the advertised exact powers exact (e.g. 64^(-2/3) = 1/16).
  s.eta = dim == 1 ? 1.0 / std::sqrt(t) : 1.0 / std::cbrt(t * t);
  s.delta = 1.0 / std::cbrt(t);
  return s;
}

std::vector<double> ftpl_step(std::span<const LossFunction> history,
                              const NoiseVector& sigma_t, const OfflineOracle& oracle,
                              const BoxDomain& domain, CallCounter& counter) {
  if (static_cast<int>(sigma_t.sigma.size()) != domain.dim()) {
    throw DimensionMismatch("ftpl_step: noise dimension does not match domain");
  }
  OracleRequest req{history, sigma_t.sigma, &domain};
  return oracle.minimize(req, counter).w_hat;
}

namespace {

void check_adversary(const Adversary& adv, int horizon, const BoxDomain& domain) {
  if (horizon < 1) throw ConfigError("run: horizon must be at least 1");
  if (adv.dim != domain.dim()) {
    throw DimensionMismatch("run: adversary dimension does not match domain");
  }
  if (!adv.generator) throw ConfigError("run: adversary has no generator");
}

}  // namespace

Trajectory ftpl_run(const Adversary& adversary, int horizon, const FtplConfig& config,
                    const OfflineOracle& oracle, const BoxDomain& domain,
                    CallCounter& counter) {
  check_adversary(adversary, horizon, domain);
  if (!(config.eta > 0.0)) throw ConfigError("ftpl_run: eta must be positive");

  Trajectory traj;
  traj.algorithm = "ftpl";
  traj.dim = domain.dim();
  traj.eta = config.eta;
  traj.noise_mode = config.noise_mode;
  traj.seed = config.seed;
  traj.oracle_resolution = oracle.resolution();
  traj.rounds.reserve(horizon);
  traj.losses.reserve(horizon);

  RngStream rng(config.seed);
  auto session = oracle.make_session(domain);

  NoiseVector single;
  if (config.noise_mode == NoiseMode::kSingleDraw) {
    single = sample_exp_noise(config.eta, domain.dim(), rng);
  }

  for (int t = 1; t <= horizon; ++t) {
    const NoiseVector sigma_t = config.noise_mode == NoiseMode::kFreshPerRound
                                    ? sample_exp_noise(config.eta, domain.dim(), rng)
                                    : single;
    OracleAnswer ans = session->minimize(sigma_t.sigma, counter);
    // w_t commits before the round's loss is revealed.
    LossFunction loss = adversary.generator(t, &ans.w_hat);
    const double incurred = evaluate(loss, domain, ans.w_hat, counter);
    session->push(loss);
    traj.rounds.push_back(TrajectoryRound{t, sigma_t.sigma, std::move(ans.w_hat), incurred,
                                          ans.error_bound});
    traj.losses.push_back(std::move(loss));
  }
  traj.counter = counter.totals();
  return traj;
}

Trajectory ftrl_run(const Adversary& adversary, int horizon, const FtrlConfig& config,
                    const OfflineOracle& oracle, const BoxDomain& domain,
                    CallCounter& counter) {
  check_adversary(adversary, horizon, domain);
  if (config.weight < 0.0) throw ConfigError("ftrl_run: regularizer weight must be nonnegative");

  Trajectory traj;
  traj.algorithm = "ftrl";
  traj.dim = domain.dim();
  traj.oracle_resolution = oracle.resolution();
  traj.regularizer_weight = config.weight;
  traj.rounds.reserve(horizon);
  traj.losses.reserve(horizon);

  const LossFunction reg = make_regularizer(config.regularizer, config.weight, domain);
  auto session = oracle.make_session(domain);
  const std::vector<double> zero_sigma(domain.dim(), 0.0);

  for (int t = 1; t <= horizon; ++t) {
    OracleAnswer ans = session->minimize(zero_sigma, counter, &reg);
    LossFunction loss = adversary.generator(t, &ans.w_hat);
    const double incurred = evaluate(loss, domain, ans.w_hat, counter);
    session->push(loss);
    traj.rounds.push_back(TrajectoryRound{t, zero_sigma, std::move(ans.w_hat), incurred,
                                          ans.error_bound});
    traj.losses.push_back(std::move(loss));
  }
  traj.counter = counter.totals();
  return traj;
}

LossFunction make_regularizer(RegularizerKind kind, double weight, const BoxDomain& domain) {
  double m = 0.0;           // largest coordinate magnitude on the box
  double sum_sq = 0.0;      // sum over axes of max w_k^2
  double sum_abs = 0.0;
  for (int k = 0; k < domain.dim(); ++k) {
    const double mk = std::max(std::abs(domain.lower()[k]), std::abs(domain.upper()[k]));
    m = std::max(m, mk);
    sum_sq += mk * mk;
    sum_abs += mk;
  }
  LossFunction l;
  if (kind == RegularizerKind::kL2) {
    l.label = "l2-regularizer";
    l.lipschitz_G = 2.0 * weight * m;
    l.bound_B = weight * sum_sq;
    l.value = [weight](std::span<const double> w) {
      double s = 0.0;
      for (double v : w) s += v * v;
      return weight * s;
    };
  } else {
    l.label = "l1-regularizer";
    l.lipschitz_G = weight;
    l.bound_B = weight * sum_abs;
    l.value = [weight](std::span<const double> w) {
      double s = 0.0;
      for (double v : w) s += std::abs(v);
      return weight * s;
    };
  }
  return l;
}

}  // namespace ncftpl
