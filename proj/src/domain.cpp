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

#include "ncftpl/domain.hpp"

#include <cmath>
#include <cstdlib>

namespace ncftpl {

BoxDomain::BoxDomain(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.empty() || lower_.size() != upper_.size()) {
    throw DimensionMismatch("BoxDomain: lower/upper must be nonempty and of equal dimension");
  }
  diameter_ = 0.0;
  for (std::size_t k = 0; k < lower_.size(); ++k) {
    const double len = upper_[k] - lower_[k];
    if (!(len > 0.0) || !std::isfinite(len)) {
      throw DomainViolation("BoxDomain: requires lower[k] < upper[k] with finite extent");
    }
    diameter_ = std::max(diameter_, len);
  }
}

BoxDomain BoxDomain::cube(double lo, double hi, int dim) {
  if (dim < 1) throw DimensionMismatch("BoxDomain::cube: dim must be positive");
  return BoxDomain(std::vector<double>(dim, lo), std::vector<double>(dim, hi));
}

bool BoxDomain::contains(std::span<const double> w, double tol) const {
  if (static_cast<int>(w.size()) != dim()) return false;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] < lower_[k] - tol || w[k] > upper_[k] + tol) return false;
  }
  return true;
}

double evaluate(const LossFunction& loss, const BoxDomain& domain,
                std::span<const double> w, CallCounter& counter) {
  if (static_cast<int>(w.size()) != domain.dim()) {
    throw DimensionMismatch("evaluate: point dimension does not match domain");
  }
  if (!domain.contains(w, 1e-12)) {
    throw DomainViolation("evaluate: point outside decision set");
  }
  counter.add_value();
  return loss.value(w);
}

double l1_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("l1_distance: dimension mismatch");
  }
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += std::abs(a[k] - b[k]);
  return s;
}

double l1_norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += std::abs(x);
  return s;
}

double linf_norm(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("dot: dimension mismatch");
  }
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

}  // namespace ncftpl
