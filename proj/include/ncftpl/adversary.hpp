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

#ifndef NCFTPL_ADVERSARY_HPP
#define NCFTPL_ADVERSARY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ncftpl/domain.hpp"
#include "ncftpl/rng.hpp"

namespace ncftpl {

/// Loss-sequence source. Oblivious adversaries fix the sequence in
/// advance (the generator is a pure function of t); adaptive ones may
/// inspect the learner's current prediction w_t.
struct Adversary {
  enum class Kind { kOblivious, kAdaptive };

  Kind kind = Kind::kOblivious;
  int dim = 1;
  double lipschitz_G = 0.0;  // max over servable losses
  double bound_B = 0.0;
  std::function<LossFunction(int t, const std::vector<double>* w_t)> generator;
};

// ---- loss families ----------------------------------------------------

/// ReLU regression loss (relu(w.x) - y)^2 with G, B derived in closed
/// form from the box.
LossFunction make_relu_loss(std::vector<double> x, double y, const BoxDomain& box);

/// Linear loss w . a.
LossFunction make_linear_loss(std::vector<double> a, const BoxDomain& box);

/// 1-D continuous piecewise-linear interpolant through sorted knots
/// covering the box; G is the max slope magnitude, B the max knot value.
LossFunction make_pwl_interp_loss_1d(std::vector<double> knot_x, std::vector<double> knot_y);

/// Non-convex k-d piecewise-linear landscape: min over groups of max
/// over affine pieces, clamped to [-cap, cap].
struct AffinePiece {
  std::vector<double> a;
  double b = 0.0;
};
LossFunction make_pwl_minmax_loss(std::vector<std::vector<AffinePiece>> groups, double cap,
                                  const BoxDomain& box, std::string label);

LossFunction random_pwl_loss_1d(const BoxDomain& box, RngStream& rng, int max_knots = 6);
LossFunction random_pwl_minmax_loss(const BoxDomain& box, RngStream& rng, int groups = 2,
                                    int pieces = 3, double cap = 1.0);
LossFunction random_relu_loss(const BoxDomain& box, RngStream& rng);

// ---- adversaries -------------------------------------------------------

/// Strict A,B,A,B alternation over the two-element ReLU menu
/// {(x=+1, y=1), (x=-1, y=1)} (1-D).
Adversary make_relu_alternating_adversary(const BoxDomain& box);

/// Oblivious seeded i.i.d. uniform choice from a fixed ReLU menu: the
/// two-element menu in 1-D, the 2d axis losses (x = +-e_i, y = 1) in
/// higher dimension. Valley populations follow a random walk, which is
/// what makes the sequence genuinely hard for follow-the-leader play.
Adversary make_relu_iid_adversary(const BoxDomain& box, std::uint64_t seed);

/// Oblivious seeded sequence of random ReLU instances (x_t coordinates
/// in +-[0.2, 1], y_t in [0, 1]).
Adversary make_relu_random_adversary(const BoxDomain& box, std::uint64_t seed);

/// Oblivious seeded sequence of random piecewise-linear losses.
Adversary make_pwl_random_adversary(const BoxDomain& box, std::uint64_t seed);

/// Adaptive two-element ReLU menu {(x=+1, y=1), (x=-1, y=y_b)}: serves
/// whichever menu loss is larger at the learner's current iterate
/// (ties to the first item). Drives FTL/FTRL-style play into paying a
/// constant per round while the hindsight comparator pays roughly half.
Adversary make_adaptive_relu_adversary(const BoxDomain& box, double y_b = 0.5);

/// Replays a recorded sequence as an oblivious adversary.
Adversary make_recorded_adversary(std::vector<LossFunction> losses, int dim);

Adversary make_constant_adversary(LossFunction loss, int dim);

}  // namespace ncftpl

#endif  // NCFTPL_ADVERSARY_HPP
