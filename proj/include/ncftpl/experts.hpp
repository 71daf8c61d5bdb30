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

#ifndef NCFTPL_EXPERTS_HPP
#define NCFTPL_EXPERTS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "ncftpl/harness.hpp"
#include "ncftpl/learner.hpp"

namespace ncftpl {

/// Hypercube embedding of N experts: vertex z in {0,1}^d carries expert
/// i(z) by binary index (surplus vertices wrap modulo N), and an
/// interior x in [0,1]^d mixes the vertices through the product
/// distribution p(z) = prod_i (z_i x_i + (1 - z_i)(1 - x_i)).
struct ExpertsEmbedding {
  int num_experts = 0;
  int dim = 0;

  static constexpr int kMaxDim = 20;

  /// N >= 2; dim = ceil(log2 N), capped at kMaxDim.
  static ExpertsEmbedding make(int num_experts);

  int expert_of_vertex(std::uint32_t vertex) const {
    return static_cast<int>(vertex % static_cast<std::uint32_t>(num_experts));
  }

  std::vector<double> vertex_of_expert(int expert) const;
};

/// Mixture weight p(z) of a vertex under x.
double vertex_weight(std::span<const double> x, std::uint32_t vertex, int dim);

/// Exact lifted loss sum_z p(z) * round_losses[i(z)] over all 2^dim
/// vertices. Requires round_losses entries in [0, 1] and x in the unit
/// cube.
double lift_experts_loss(const ExpertsEmbedding& embedding,
                         std::span<const double> round_losses,
                         std::span<const double> x);

LossFunction make_lifted_loss(const ExpertsEmbedding& embedding,
                              std::vector<double> round_losses);

/// FTPL over [0,1]^dim with the lifted losses, reported against the
/// best fixed expert (the best vertex); the hindsight comparison is an
/// exact enumeration, so the report carries no discretization slack.
RegretReport experts_regret_run(int num_experts, int horizon,
                                const std::vector<std::vector<double>>& loss_matrix,
                                const FtplConfig& config, const OfflineOracle& oracle,
                                CallCounter& counter);

}  // namespace ncftpl

#endif  // NCFTPL_EXPERTS_HPP
