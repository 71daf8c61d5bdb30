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

#include "ncftpl/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ncftpl {

LossFunction x_slice_loss(const ZeroSumGame& game, std::vector<double> y) {
  LossFunction l;
  l.label = game.label + ":x-slice";
  l.lipschitz_G = game.lipschitz_G;
  l.bound_B = game.bound_B;
  l.value = [payoff = game.payoff, y = std::move(y)](std::span<const double> x) {
    return payoff(x, y);
  };
  return l;
}

LossFunction y_slice_loss(const ZeroSumGame& game, std::vector<double> x) {
  LossFunction l;
  l.label = game.label + ":y-slice";
  l.lipschitz_G = game.lipschitz_G;
  l.bound_B = game.bound_B;
  l.value = [payoff = game.payoff, x = std::move(x)](std::span<const double> y) {
    return -payoff(x, y);
  };
  return l;
}

PairedTrajectory selfplay_run(const ZeroSumGame& game, int horizon,
                              const FtplConfig& config_x, const FtplConfig& config_y,
                              const OfflineOracle& oracle, CallCounter& counter) {
  if (horizon < 1) throw ConfigError("selfplay_run: horizon must be at least 1");
  if (!(config_x.eta > 0.0) || !(config_y.eta > 0.0)) {
    throw ConfigError("selfplay_run: eta must be positive");
  }

  PairedTrajectory traj;
  traj.config_x = config_x;
  traj.config_y = config_y;
  traj.rounds.reserve(horizon);

  RngStream rng_x(config_x.seed);
  RngStream rng_y(config_y.seed);
  auto session_x = oracle.make_session(game.domain_x);
  auto session_y = oracle.make_session(game.domain_y);

  NoiseVector single_x, single_y;
  if (config_x.noise_mode == NoiseMode::kSingleDraw) {
    single_x = sample_exp_noise(config_x.eta, game.domain_x.dim(), rng_x);
  }
  if (config_y.noise_mode == NoiseMode::kSingleDraw) {
    single_y = sample_exp_noise(config_y.eta, game.domain_y.dim(), rng_y);
  }

  for (int t = 1; t <= horizon; ++t) {
    const NoiseVector sx = config_x.noise_mode == NoiseMode::kFreshPerRound
                               ? sample_exp_noise(config_x.eta, game.domain_x.dim(), rng_x)
                               : single_x;
    const NoiseVector sy = config_y.noise_mode == NoiseMode::kFreshPerRound
                               ? sample_exp_noise(config_y.eta, game.domain_y.dim(), rng_y)
                               : single_y;
    OracleAnswer ax = session_x->minimize(sx.sigma, counter);
    OracleAnswer ay = session_y->minimize(sy.sigma, counter);

    // Round t induces the slices only after both players commit.
    LossFunction lx = x_slice_loss(game, ay.w_hat);
    LossFunction ly = y_slice_loss(game, ax.w_hat);
    const double vx = evaluate(lx, game.domain_x, ax.w_hat, counter);
    const double vy = evaluate(ly, game.domain_y, ay.w_hat, counter);
    (void)vy;  // vy == -vx exactly: both evaluations reduce to payoff(x_t, y_t)

    session_x->push(lx);
    session_y->push(ly);

    PairedRound round;
    round.t = t;
    round.x = std::move(ax.w_hat);
    round.y = std::move(ay.w_hat);
    round.sigma_x = sx.sigma;
    round.sigma_y = sy.sigma;
    round.payoff_value = vx;
    round.oracle_error_x = ax.error_bound;
    round.oracle_error_y = ay.error_bound;
    traj.rounds.push_back(std::move(round));
  }
  traj.counter = counter.totals();
  return traj;
}

StrategyPair sample_pair(const PairedTrajectory& trajectory, RngStream& rng) {
  if (trajectory.rounds.empty()) throw DomainViolation("sample_pair: empty trajectory");
  const int j = rng.uniform_int(static_cast<int>(trajectory.rounds.size()));
  StrategyPair p;
  p.x = trajectory.rounds[static_cast<std::size_t>(j)].x;
  p.y = trajectory.rounds[static_cast<std::size_t>(j)].y;
  p.round = j + 1;
  return p;
}

EquilibriumCertificate equilibrium_gap(const ZeroSumGame& game,
                                       std::span<const double> x_hat,
                                       std::span<const double> y_hat,
                                       const OfflineOracle& oracle, CallCounter& counter) {
  EquilibriumCertificate cert;
  cert.x_hat.assign(x_hat.begin(), x_hat.end());
  cert.y_hat.assign(y_hat.begin(), y_hat.end());

  const double value = game.payoff(x_hat, y_hat);

  const LossFunction best_x = x_slice_loss(game, cert.y_hat);
  const std::vector<double> zero_x(game.domain_x.dim(), 0.0);
  const OracleAnswer ax = oracle.minimize(
      OracleRequest{std::span<const LossFunction>(&best_x, 1), zero_x, &game.domain_x}, counter);

  const LossFunction best_y = y_slice_loss(game, cert.x_hat);
  const std::vector<double> zero_y(game.domain_y.dim(), 0.0);
  const OracleAnswer ay = oracle.minimize(
      OracleRequest{std::span<const LossFunction>(&best_y, 1), zero_y, &game.domain_y}, counter);

  cert.gap_x = value - ax.objective;
  cert.gap_y = -ay.objective - value;  // max_y F(x^, .) = -min_y -F(x^, .)
  cert.slack = ax.error_bound + ay.error_bound;
  return cert;
}

EquilibriumCertificate certify_amplified(const ZeroSumGame& game,
                                         const PairedTrajectory& trajectory, int k_samples,
                                         RngStream& rng, const OfflineOracle& oracle,
                                         CallCounter& counter) {
  if (k_samples < 1) throw ConfigError("certify_amplified: need at least one sample");
  EquilibriumCertificate best;
  double best_sum = std::numeric_limits<double>::infinity();
  for (int i = 0; i < k_samples; ++i) {
    const StrategyPair p = sample_pair(trajectory, rng);
    EquilibriumCertificate c = equilibrium_gap(game, p.x, p.y, oracle, counter);
    const double s = c.gap_x + c.gap_y;
    if (s < best_sum) {
      best_sum = s;
      best = std::move(c);
    }
  }
  return best;
}

MixedCertificate mixed_equilibrium_gap(const ZeroSumGame& game,
                                       const PairedTrajectory& trajectory,
                                       const OfflineOracle& oracle, CallCounter& counter) {
  if (trajectory.rounds.empty()) throw DomainViolation("mixed_equilibrium_gap: empty trajectory");
  const double t_count = static_cast<double>(trajectory.rounds.size());

  MixedCertificate cert;
  for (const PairedRound& r : trajectory.rounds) cert.average_payoff += r.payoff_value;
  cert.average_payoff /= t_count;

  std::vector<std::vector<double>> xs, ys;
  xs.reserve(trajectory.rounds.size());
  ys.reserve(trajectory.rounds.size());
  for (const PairedRound& r : trajectory.rounds) {
    xs.push_back(r.x);
    ys.push_back(r.y);
  }

  LossFunction avg_x;  // (1/T) sum_t F(x, y_t)
  avg_x.label = game.label + ":avg-x";
  avg_x.lipschitz_G = game.lipschitz_G;
  avg_x.bound_B = game.bound_B;
  avg_x.value = [payoff = game.payoff, ys = std::move(ys), t_count](std::span<const double> x) {
    double s = 0.0;
    for (const auto& y : ys) s += payoff(x, y);
    return s / t_count;
  };

  LossFunction avg_y;  // -(1/T) sum_t F(x_t, y)
  avg_y.label = game.label + ":avg-y";
  avg_y.lipschitz_G = game.lipschitz_G;
  avg_y.bound_B = game.bound_B;
  avg_y.value = [payoff = game.payoff, xs = std::move(xs), t_count](std::span<const double> y) {
    double s = 0.0;
    for (const auto& x : xs) s += payoff(x, y);
    return -s / t_count;
  };

  const std::vector<double> zero_x(game.domain_x.dim(), 0.0);
  const std::vector<double> zero_y(game.domain_y.dim(), 0.0);
  const OracleAnswer ax = oracle.minimize(
      OracleRequest{std::span<const LossFunction>(&avg_x, 1), zero_x, &game.domain_x}, counter);
  const OracleAnswer ay = oracle.minimize(
      OracleRequest{std::span<const LossFunction>(&avg_y, 1), zero_y, &game.domain_y}, counter);

  cert.gap_x = cert.average_payoff - ax.objective;
  cert.gap_y = -ay.objective - cert.average_payoff;
  cert.slack = ax.error_bound + ay.error_bound;
  return cert;
}

ZeroSumGame make_bilinear_game() {
  ZeroSumGame g{
      "bilinear",
      [](std::span<const double> x, std::span<const double> y) { return x[0] * y[0]; },
      BoxDomain::cube(-1.0, 1.0, 1),
      BoxDomain::cube(-1.0, 1.0, 1),
      1.0,
      1.0};
  return g;
}

ZeroSumGame make_toy_gan_game(double target) {
  if (target < -0.5 || target > 0.5) {
    throw ConfigError("make_toy_gan_game: target must lie in [-0.5, 0.5]");
  }
  ZeroSumGame g{
      "toy-gan",
      [target](std::span<const double> x, std::span<const double> y) {
        return std::clamp(y[0] * (x[0] - target), -1.0, 1.0);
      },
      BoxDomain::cube(-1.0, 1.0, 1),
      BoxDomain::cube(-1.0, 1.0, 1),
      // |dF/dx| <= |y| <= 1 and |dF/dy| <= |x - target| <= 1.5 before saturation
      1.5,
      1.0};
  return g;
}

ZeroSumGame make_double_well_game() {
  const auto phi = [](double w) {
    const double u = w * w - 0.25;
    return u * u;
  };
  ZeroSumGame g{
      "double-well",
      [phi](std::span<const double> x, std::span<const double> y) {
        return phi(x[0]) - phi(y[0]);
      },
      BoxDomain::cube(-1.0, 1.0, 1),
      BoxDomain::cube(-1.0, 1.0, 1),
      3.0,     // |phi'(w)| = |4w(w^2 - 1/4)| <= 3 on [-1,1]
      0.5625,  // phi range [0, 0.5625]
  };
  return g;
}

}  // namespace ncftpl
