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

#ifndef NCFTPL_ORACLE_HPP
#define NCFTPL_ORACLE_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "ncftpl/domain.hpp"

namespace ncftpl {

/// Input of the offline optimization oracle: minimize
///   sum_i losses[i](w) - sigma . w   over w in *domain.
/// An empty sigma is treated as the zero vector.
struct OracleRequest {
  std::span<const LossFunction> losses;
  std::span<const double> sigma;
  const BoxDomain* domain = nullptr;
};

struct OracleAnswer {
  std::vector<double> w_hat;
  double objective = 0.0;        // achieved value of the perturbed objective
  double error_bound = 0.0;      // (k*G_max + |sigma|_1) * d * h / 2
  double grid_resolution = 0.0;  // effective spacing h (max over axes)
};

inline constexpr std::uint64_t kDefaultGridBudget = std::uint64_t{1} << 23;

/// Uniform grid over a box: per axis, the smallest point count whose
/// spacing is at most the requested resolution, with both corners on
/// the grid. Effective spacing is therefore never larger than the
/// request, which keeps the OracleAnswer error bound valid.
class GridSpec {
 public:
  static GridSpec make(const BoxDomain& domain, double resolution,
                       std::uint64_t budget = kDefaultGridBudget);

  int dim() const { return static_cast<int>(counts_.size()); }
  std::int64_t count(int axis) const { return counts_[axis]; }
  double spacing(int axis) const { return spacings_[axis]; }
  double max_spacing() const { return max_spacing_; }
  std::uint64_t total_points() const { return total_; }

  double coord(int axis, std::int64_t j) const {
    return j + 1 == counts_[axis] ? upper_[axis] : lower_[axis] + static_cast<double>(j) * spacings_[axis];
  }

 private:
  GridSpec() = default;
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<double> spacings_;
  std::vector<std::int64_t> counts_;
  double max_spacing_ = 0.0;
  std::uint64_t total_ = 0;
};

/// Incremental view of the oracle over a growing loss prefix on a fixed
/// domain. The cumulative loss is cached on the grid, so adding one
/// loss costs one sweep and each perturbed argmin is a pure array scan.
/// Answers are identical to re-minimizing the whole prefix from
/// scratch; the cache is invisible to the oracle contract.
class PrefixSession {
 public:
  virtual ~PrefixSession() = default;

  virtual void push(const LossFunction& loss) = 0;

  /// One offline-oracle call on (prefix [+ extra], sigma). The optional
  /// extra term participates in the objective and the error bound but
  /// is not added to the prefix (used for FTRL's regularizer).
  virtual OracleAnswer minimize(std::span<const double> sigma, CallCounter& counter,
                                const LossFunction* extra = nullptr) = 0;

  virtual int prefix_size() const = 0;
};

class OfflineOracle {
 public:
  virtual ~OfflineOracle() = default;
  virtual OracleAnswer minimize(const OracleRequest& request, CallCounter& counter) const = 0;
  virtual std::unique_ptr<PrefixSession> make_session(const BoxDomain& domain) const = 0;
  virtual double resolution() const = 0;
};

/// Brute-force grid realization of the offline oracle. Ties are broken
/// toward the lexicographically smallest coordinate vector. Internal
/// grid evaluations are not charged to the value-oracle counter; one
/// offline call is charged per minimize.
class GridOracle final : public OfflineOracle {
 public:
  explicit GridOracle(double resolution, std::uint64_t max_points = kDefaultGridBudget);

  OracleAnswer minimize(const OracleRequest& request, CallCounter& counter) const override;
  std::unique_ptr<PrefixSession> make_session(const BoxDomain& domain) const override;
  double resolution() const override { return resolution_; }
  std::uint64_t budget() const { return max_points_; }

 private:
  double resolution_;
  std::uint64_t max_points_;
};

OracleAnswer grid_minimize(const OracleRequest& request, double resolution,
                           CallCounter& counter,
                           std::uint64_t budget = kDefaultGridBudget);

/// High-resolution 1-D specialization (resolutions down to 1e-6 on
/// [-1,1]); identical contract to grid_minimize.
OracleAnswer scan_minimize_1d(const OracleRequest& request, double resolution,
                              CallCounter& counter);

/// First-order optimality gap between two perturbed minimizers:
/// with f = sum f1 - sum f2 and sigma = sigma1 - sigma2, checks
///   f(w1) - f(w2) <= sigma . (w1 - w2) + slack,
/// slack being the two answers' discretization error bounds.
struct FirstOrderGap {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool holds = false;
};

FirstOrderGap verify_first_order_gap(std::span<const LossFunction> f1_losses,
                                     std::span<const double> sigma1,
                                     const OracleAnswer& answer1,
                                     std::span<const LossFunction> f2_losses,
                                     std::span<const double> sigma2,
                                     const OracleAnswer& answer2);

struct OracleReport {
  std::uint64_t sample_count = 0;
  std::uint64_t value_calls = 0;
  std::uint64_t offline_calls = 0;
  std::uint64_t total = 0;
};

OracleReport oracle_report(const CallCounter& counter);
OracleReport oracle_report(const CallTotals& totals);

}  // namespace ncftpl

#endif  // NCFTPL_ORACLE_HPP
