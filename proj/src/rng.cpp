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

#include "ncftpl/rng.hpp"

#include <cmath>

namespace ncftpl {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

RngStream::RngStream(std::uint64_t seed) {
  std::uint64_t s = seed;
  gen_.seed(splitmix64(s));
}

RngStream RngStream::substream(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t s = seed;
  const std::uint64_t a = splitmix64(s);
  s = a ^ (index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
  return RngStream(splitmix64(s));
}

std::uint64_t RngStream::next_u64() { return gen_(); }

double RngStream::uniform_open_closed() {
  // 53 random bits; +1 shifts the support from [0,1) to (0,1].
  return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(next_u64() >> 11) * 0x1.0p-53);
}

int RngStream::uniform_int(int n) {
  const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  int v = static_cast<int>(u * n);
  return v < n ? v : n - 1;
}

double RngStream::exponential(double eta) {
  if (!(eta > 0.0)) throw DomainViolation("exponential: rate eta must be positive");
  return -std::log(uniform_open_closed()) / eta;
}

NoiseVector sample_exp_noise(double eta, int dim, RngStream& rng) {
  if (!(eta > 0.0)) throw DomainViolation("sample_exp_noise: rate eta must be positive");
  if (dim < 1) throw DimensionMismatch("sample_exp_noise: dim must be positive");
  NoiseVector nv;
  nv.eta = eta;
  nv.sigma.resize(dim);
  for (int k = 0; k < dim; ++k) nv.sigma[k] = rng.exponential(eta);
  return nv;
}

}  // namespace ncftpl
