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

#include "ncftpl/experts.hpp"

#include <cmath>
#include <limits>

namespace ncftpl {

ExpertsEmbedding ExpertsEmbedding::make(int num_experts) {
  if (num_experts < 2) {
    throw ConfigError("ExpertsEmbedding: need at least two experts");
  }
  int dim = 0;
  while ((1 << dim) < num_experts) ++dim;
  if (dim > kMaxDim) {
    throw BudgetExceeded("ExpertsEmbedding: dimension exceeds the vertex-enumeration budget",
                         std::uint64_t{1} << dim);
  }
  return ExpertsEmbedding{num_experts, dim};
}

std::vector<double> ExpertsEmbedding::vertex_of_expert(int expert) const {
  std::vector<double> w(dim, 0.0);
  for (int i = 0; i < dim; ++i) {
    w[i] = (expert >> i) & 1 ? 1.0 : 0.0;
  }
  return w;
}

double vertex_weight(std::span<const double> x, std::uint32_t vertex, int dim) {
  double p = 1.0;
  for (int i = 0; i < dim; ++i) {
    const double xi = x[i];
    p *= (vertex >> i) & 1 ? xi : 1.0 - xi;
  }
  return p;
}

double lift_experts_loss(const ExpertsEmbedding& embedding,
                         std::span<const double> round_losses,
                         std::span<const double> x) {
  if (static_cast<int>(round_losses.size()) != embedding.num_experts) {
    throw DimensionMismatch("lift_experts_loss: wrong number of expert losses");
  }
  if (static_cast<int>(x.size()) != embedding.dim) {
    throw DimensionMismatch("lift_experts_loss: x dimension mismatch");
  }
  for (double v : round_losses) {
    if (v < 0.0 || v > 1.0) {
      throw DomainViolation("lift_experts_loss: expert losses must lie in [0, 1]");
    }
  }
  for (double v : x) {
    if (v < -1e-12 || v > 1.0 + 1e-12) {
      throw DomainViolation("lift_experts_loss: x must lie in the unit cube");
    }
  }
  const std::uint32_t vertices = std::uint32_t{1} << embedding.dim;
  double s = 0.0;
  for (std::uint32_t z = 0; z < vertices; ++z) {
    s += vertex_weight(x, z, embedding.dim) * round_losses[embedding.expert_of_vertex(z)];
  }
  return s;
}

LossFunction make_lifted_loss(const ExpertsEmbedding& embedding,
                              std::vector<double> round_losses) {
  LossFunction l;
  l.label = "lifted-experts";
  // Each |d/dx_i| is at most 1 for losses in [0,1]; declared per
  // coordinate-sum, which stays a valid l1 constant.
  l.lipschitz_G = static_cast<double>(embedding.dim);
  l.bound_B = 1.0;
  l.value = [embedding, losses = std::move(round_losses)](std::span<const double> x) {
    return lift_experts_loss(embedding, losses, x);
  };
  return l;
}

RegretReport experts_regret_run(int num_experts, int horizon,
                                const std::vector<std::vector<double>>& loss_matrix,
                                const FtplConfig& config, const OfflineOracle& oracle,
                                CallCounter& counter) {
  const ExpertsEmbedding embedding = ExpertsEmbedding::make(num_experts);
  if (static_cast<int>(loss_matrix.size()) < horizon) {
    throw DimensionMismatch("experts_regret_run: loss matrix shorter than horizon");
  }

  std::vector<LossFunction> lifted;
  lifted.reserve(horizon);
  for (int t = 0; t < horizon; ++t) {
    if (static_cast<int>(loss_matrix[t].size()) != num_experts) {
      throw DimensionMismatch("experts_regret_run: loss row width mismatch");
    }
    lifted.push_back(make_lifted_loss(embedding, loss_matrix[t]));
  }

  const BoxDomain cube = BoxDomain::cube(0.0, 1.0, embedding.dim);
  const Adversary adversary = make_recorded_adversary(lifted, embedding.dim);
  const Trajectory traj = ftpl_run(adversary, horizon, config, oracle, cube, counter);

  // Hindsight comparator: the best fixed expert, enumerated exactly.
  int best_expert = 0;
  double best_total = std::numeric_limits<double>::infinity();
  for (int i = 0; i < num_experts; ++i) {
    double s = 0.0;
    for (int t = 0; t < horizon; ++t) s += loss_matrix[t][i];
    if (s < best_total) {
      best_total = s;
      best_expert = i;
    }
  }

  double incurred = 0.0;
  for (const TrajectoryRound& r : traj.rounds) incurred += r.incurred_loss;

  RegretReport rep;
  rep.best_in_hindsight_w = embedding.vertex_of_expert(best_expert);
  rep.best_in_hindsight_value = best_total;
  rep.discretization_slack = 0.0;
  rep.total_regret = incurred - best_total;
  rep.average_regret = rep.total_regret / static_cast<double>(horizon);
  return rep;
}

}  // namespace ncftpl
