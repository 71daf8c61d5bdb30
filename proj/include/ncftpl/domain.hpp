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

#ifndef NCFTPL_DOMAIN_HPP
#define NCFTPL_DOMAIN_HPP

#include <atomic>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncftpl {

class DomainViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t required_points)
      : std::runtime_error(what), required_points_(required_points) {}
  std::uint64_t required_points() const { return required_points_; }

 private:
  std::uint64_t required_points_;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Axis-aligned compact decision set with finite l-infinity diameter.
class BoxDomain {
 public:
  BoxDomain(std::vector<double> lower, std::vector<double> upper);

  /// [lo, hi]^dim.
  static BoxDomain cube(double lo, double hi, int dim);

  int dim() const { return static_cast<int>(lower_.size()); }
  const std::vector<double>& lower() const { return lower_; }
  const std::vector<double>& upper() const { return upper_; }
  double linf_diameter() const { return diameter_; }
  bool contains(std::span<const double> w, double tol = 0.0) const;

 private:
  std::vector<double> lower_;
  std::vector<double> upper_;
  double diameter_;
};

/// Black-box loss. The value map must be pure (safe to evaluate
/// concurrently); G is an l1-Lipschitz constant and B a range bound,
/// both declared by the constructor of the loss family.
struct LossFunction {
  std::string label;
  double lipschitz_G = 0.0;
  double bound_B = 0.0;
  std::function<double(std::span<const double>)> value;

  double operator()(std::span<const double> w) const { return value(w); }
};

struct CallTotals {
  std::uint64_t sample_count = 0;
  std::uint64_t value_calls = 0;
  std::uint64_t offline_calls = 0;

  std::uint64_t oracle_complexity() const {
    return sample_count + value_calls + offline_calls;
  }
};

/// Call accounting for the oracle-complexity metric. Increments are
/// atomic so concurrent probes can share a counter; totals are exact.
class CallCounter {
 public:
  CallCounter() = default;

  void add_value(std::uint64_t n = 1) { value_.fetch_add(n, std::memory_order_relaxed); }
  void add_offline(std::uint64_t n = 1) { offline_.fetch_add(n, std::memory_order_relaxed); }
  void add_samples(std::uint64_t n = 1) { samples_.fetch_add(n, std::memory_order_relaxed); }

  CallTotals totals() const {
    return CallTotals{samples_.load(std::memory_order_relaxed),
                      value_.load(std::memory_order_relaxed),
                      offline_.load(std::memory_order_relaxed)};
  }

 private:
  std::atomic<std::uint64_t> samples_{0};
  std::atomic<std::uint64_t> value_{0};
  std::atomic<std::uint64_t> offline_{0};
};

/// Value-oracle call: evaluates the loss at w and charges one unit.
/// Throws DomainViolation if w is outside the domain.
double evaluate(const LossFunction& loss, const BoxDomain& domain,
                std::span<const double> w, CallCounter& counter);

double l1_distance(std::span<const double> a, std::span<const double> b);
double l1_norm(std::span<const double> v);
double linf_norm(std::span<const double> v);
double dot(std::span<const double> a, std::span<const double> b);

}  // namespace ncftpl

#endif  // NCFTPL_DOMAIN_HPP
