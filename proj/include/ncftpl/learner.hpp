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

#ifndef NCFTPL_LEARNER_HPP
#define NCFTPL_LEARNER_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ncftpl/adversary.hpp"
#include "ncftpl/domain.hpp"
#include "ncftpl/oracle.hpp"
#include "ncftpl/rng.hpp"

namespace ncftpl {

/// Algorithm 1 draws fresh noise every round; the single-draw variant
/// (one vector before round 1) is the form the oblivious-adversary
/// analysis works with. Both are first-class.
enum class NoiseMode { kFreshPerRound, kSingleDraw };

struct FtplConfig {
  double eta = 1.0;
  NoiseMode noise_mode = NoiseMode::kFreshPerRound;
  std::uint64_t seed = 0;
  double oracle_resolution = 1e-3;
};

enum class RegularizerKind { kL2, kL1 };

struct FtrlConfig {
  RegularizerKind regularizer = RegularizerKind::kL2;
  double weight = 0.0;
  double oracle_resolution = 1e-3;
};

/// Horizon-tuned parameters: eta = T^(-2/3) and delta = T^(-1/3) in
/// general; eta = T^(-1/2) in one dimension (delta is not used by the
/// 1-D analysis but is still populated).
struct Schedule {
  double eta = 1.0;
  double delta = 1.0;
  std::int64_t horizon = 1;
  int dim = 1;
};

Schedule schedule_params(std::int64_t horizon, int dim);

struct TrajectoryRound {
  int t = 0;
  std::vector<double> sigma;
  std::vector<double> w;
  double incurred_loss = 0.0;
  double oracle_error = 0.0;
};

struct Trajectory {
  std::string algorithm;  // "ftpl" | "ftrl"
  int dim = 0;
  double eta = 0.0;
  NoiseMode noise_mode = NoiseMode::kFreshPerRound;
  std::uint64_t seed = 0;
  double oracle_resolution = 0.0;
  double regularizer_weight = 0.0;
  std::vector<TrajectoryRound> rounds;
  std::vector<LossFunction> losses;  // realized sequence the run faced
  CallTotals counter;                // counter totals when the run ended
};

/// One FTPL prediction: the oracle minimizer of the history perturbed
/// by -sigma.w (exactly one offline call).
std::vector<double> ftpl_step(std::span<const LossFunction> history,
                              const NoiseVector& sigma_t, const OfflineOracle& oracle,
                              const BoxDomain& domain, CallCounter& counter);

Trajectory ftpl_run(const Adversary& adversary, int horizon, const FtplConfig& config,
                    const OfflineOracle& oracle, const BoxDomain& domain,
                    CallCounter& counter);

/// Follow-the-Regularized-Leader baseline; the regularizer rides along
/// as an extra loss term on the same oracle machinery, with sigma = 0.
Trajectory ftrl_run(const Adversary& adversary, int horizon, const FtrlConfig& config,
                    const OfflineOracle& oracle, const BoxDomain& domain,
                    CallCounter& counter);

LossFunction make_regularizer(RegularizerKind kind, double weight, const BoxDomain& domain);

}  // namespace ncftpl

#endif  // NCFTPL_LEARNER_HPP
