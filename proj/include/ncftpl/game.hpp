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

#ifndef NCFTPL_GAME_HPP
#define NCFTPL_GAME_HPP

#include <span>
#include <string>
#include <vector>

#include "ncftpl/learner.hpp"
#include "ncftpl/oracle.hpp"
#include "ncftpl/rng.hpp"

namespace ncftpl {

/// Two-player zero-sum game: the x-player minimizes F, the y-player
/// maximizes it. Every slice F(., y) and -F(x, .) is G-Lipschitz and
/// B-bounded; the payoff map must be pure.
struct ZeroSumGame {
  std::string label;
  std::function<double(std::span<const double>, std::span<const double>)> payoff;
  BoxDomain domain_x;
  BoxDomain domain_y;
  double lipschitz_G = 0.0;
  double bound_B = 0.0;
};

LossFunction x_slice_loss(const ZeroSumGame& game, std::vector<double> y);  //  F(., y)
LossFunction y_slice_loss(const ZeroSumGame& game, std::vector<double> x);  // -F(x, .)

struct PairedRound {
  int t = 0;
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> sigma_x;
  std::vector<double> sigma_y;
  double payoff_value = 0.0;  // F(x_t, y_t); the y-player incurs its negation
  double oracle_error_x = 0.0;
  double oracle_error_y = 0.0;
};

struct PairedTrajectory {
  FtplConfig config_x;
  FtplConfig config_y;
  std::vector<PairedRound> rounds;
  CallTotals counter;
};

/// Simultaneous self-play: both round-t points are computed from the
/// history strictly before round t, with independent noise streams; the
/// round then induces the slice losses F(., y_t) and -F(x_t, .).
PairedTrajectory selfplay_run(const ZeroSumGame& game, int horizon,
                              const FtplConfig& config_x, const FtplConfig& config_y,
                              const OfflineOracle& oracle, CallCounter& counter);

struct StrategyPair {
  std::vector<double> x;
  std::vector<double> y;
  int round = 0;  // 1-based trajectory index
};

StrategyPair sample_pair(const PairedTrajectory& trajectory, RngStream& rng);

struct EquilibriumCertificate {
  std::vector<double> x_hat;
  std::vector<double> y_hat;
  double gap_x = 0.0;  // F(x^, y^) - min_x F(x, y^)
  double gap_y = 0.0;  // max_y F(x^, y) - F(x^, y^)
  double slack = 0.0;
};

/// Best-response certification of a realized pair (two offline calls).
EquilibriumCertificate equilibrium_gap(const ZeroSumGame& game,
                                       std::span<const double> x_hat,
                                       std::span<const double> y_hat,
                                       const OfflineOracle& oracle, CallCounter& counter);

/// Confidence amplification: samples K candidate pairs, certifies each,
/// and returns the one with the smallest gap sum (2K offline calls).
EquilibriumCertificate certify_amplified(const ZeroSumGame& game,
                                         const PairedTrajectory& trajectory, int k_samples,
                                         RngStream& rng, const OfflineOracle& oracle,
                                         CallCounter& counter);

/// Certificate for the uniform mixed pair over the trajectory: the
/// averaged-comparator quantities of the equilibrium argument, which is
/// what the regret bound controls; gap_x/gap_y equal the players'
/// realized average regrets up to oracle error.
struct MixedCertificate {
  double average_payoff = 0.0;  // (1/T) sum F(x_t, y_t)
  double gap_x = 0.0;           // average_payoff - min_x (1/T) sum F(x, y_t)
  double gap_y = 0.0;           // max_y (1/T) sum F(x_t, y) - average_payoff
  double slack = 0.0;
};

MixedCertificate mixed_equilibrium_gap(const ZeroSumGame& game,
                                       const PairedTrajectory& trajectory,
                                       const OfflineOracle& oracle, CallCounter& counter);

/// F(x, y) = x.y on [-1,1]^2; saddle at the origin.
ZeroSumGame make_bilinear_game();

/// Desk-scale generator/discriminator game: the generator places a
/// point at x, the discriminator scores the offset through a saturating
/// ramp; F(x, y) = clamp(y * (x - target), -1, 1) on [-1,1]^2.
ZeroSumGame make_toy_gan_game(double target);

/// Separable non-convex game F(x, y) = phi(x) - phi(y) with phi a
/// double well; every pair of well bottoms is a saddle.
ZeroSumGame make_double_well_game();

}  // namespace ncftpl

#endif  // NCFTPL_GAME_HPP
