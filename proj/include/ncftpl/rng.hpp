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

#ifndef NCFTPL_RNG_HPP
#define NCFTPL_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "ncftpl/domain.hpp"

namespace ncftpl {

/// Nonnegative perturbation vector of i.i.d. Exp(eta) draws.
struct NoiseVector {
  std::vector<double> sigma;
  double eta = 0.0;
};

/// Seeded, platform-independent random stream (mt19937_64 behind a
/// splitmix64 seed scrambler). Substreams derived from (seed, index)
/// are independent of execution order, so parallel trials stay
/// reproducible.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  static RngStream substream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64();

  /// Uniform on (0, 1]; never returns 0, so -log(u) is always finite.
  double uniform_open_closed();

  double uniform(double lo, double hi);

  /// Uniform on {0, 1, ..., n-1}.
  int uniform_int(int n);

  /// Inverse-CDF draw: x = -log(u) / eta with u uniform on (0, 1].
  double exponential(double eta);

 private:
  std::mt19937_64 gen_;
};

std::uint64_t splitmix64(std::uint64_t& state);

/// Draws a d-vector of i.i.d. Exp(eta) coordinates (in order k = 0..d-1).
NoiseVector sample_exp_noise(double eta, int dim, RngStream& rng);

}  // namespace ncftpl

#endif  // NCFTPL_RNG_HPP
