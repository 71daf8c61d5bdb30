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

#include "ncftpl/oracle.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace ncftpl {

namespace {

// Visits every grid point in lexicographic order of the coordinate
// vector (axis 0 most significant). The body receives the flat index
// and a pointer to the current d-vector.
template <typename Body>
void for_each_grid_point(const GridSpec& grid, Body&& body) {
  const int d = grid.dim();
  if (d == 1) {
    const std::int64_t n = grid.count(0);
    for (std::int64_t j = 0; j < n; ++j) {
      const double w = grid.coord(0, j);
      body(static_cast<std::uint64_t>(j), &w);
    }
    return;
  }
  std::vector<std::int64_t> idx(d, 0);
  std::vector<double> w(d);
  for (int k = 0; k < d; ++k) w[k] = grid.coord(k, 0);
  const std::uint64_t total = grid.total_points();
  for (std::uint64_t flat = 0;;) {
    body(flat, w.data());
    if (++flat == total) break;
    for (int k = d - 1; k >= 0; --k) {
      if (++idx[k] < grid.count(k)) {
        w[k] = grid.coord(k, idx[k]);
        break;
      }
      idx[k] = 0;
      w[k] = grid.coord(k, 0);
    }
  }
}

double sigma_dot(std::span<const double> sigma, const double* w, int d) {
  double s = 0.0;
  for (int k = 0; k < d; ++k) s += sigma[k] * w[k];
  return s;
}

void validate_request(const OracleRequest& req) {
  if (req.domain == nullptr) {
    throw DomainViolation("oracle: request has no domain");
  }
  if (!req.sigma.empty() && static_cast<int>(req.sigma.size()) != req.domain->dim()) {
    throw DimensionMismatch("oracle: sigma dimension does not match domain");
  }
}

double answer_error_bound(int k_losses, double g_max, std::span<const double> sigma,
                          int dim, double spacing) {
  const double sig = sigma.empty() ? 0.0 : l1_norm(sigma);
  return (static_cast<double>(k_losses) * g_max + sig) * static_cast<double>(dim) * spacing / 2.0;
}

class GridSession final : public PrefixSession {
 public:
  GridSession(const BoxDomain& domain, GridSpec grid)
      : domain_(domain), grid_(std::move(grid)), values_(grid_.total_points(), 0.0) {}

  void push(const LossFunction& loss) override {
    const int d = grid_.dim();
    for_each_grid_point(grid_, [&](std::uint64_t flat, const double* w) {
      values_[flat] += loss.value(std::span<const double>(w, static_cast<std::size_t>(d)));
    });
    ++count_;
    g_max_ = std::max(g_max_, loss.lipschitz_G);
  }

  OracleAnswer minimize(std::span<const double> sigma, CallCounter& counter,
                        const LossFunction* extra) override {
    if (!sigma.empty() && static_cast<int>(sigma.size()) != grid_.dim()) {
      throw DimensionMismatch("session minimize: sigma dimension mismatch");
    }
    counter.add_offline();
    const int d = grid_.dim();
    double best = std::numeric_limits<double>::infinity();
    std::vector<double> best_w(d);
    const bool has_sigma = !sigma.empty();
    for_each_grid_point(grid_, [&](std::uint64_t flat, const double* w) {
      double obj = values_[flat];
      if (extra != nullptr) {
        obj += extra->value(std::span<const double>(w, static_cast<std::size_t>(d)));
      }
      if (has_sigma) obj -= sigma_dot(sigma, w, d);
      if (obj < best) {
        best = obj;
        best_w.assign(w, w + d);
      }
    });
    OracleAnswer ans;
    ans.w_hat = std::move(best_w);
    ans.objective = best;
    ans.grid_resolution = grid_.max_spacing();
    const int k = count_ + (extra != nullptr ? 1 : 0);
    const double g = std::max(g_max_, extra != nullptr ? extra->lipschitz_G : 0.0);
    ans.error_bound = answer_error_bound(k, g, sigma, d, grid_.max_spacing());
    return ans;
  }

  int prefix_size() const override { return count_; }

 private:
  BoxDomain domain_;
  GridSpec grid_;
  std::vector<double> values_;
  int count_ = 0;
  double g_max_ = 0.0;
};

}  // namespace

GridSpec GridSpec::make(const BoxDomain& domain, double resolution, std::uint64_t budget) {
  if (!(resolution > 0.0)) {
    throw DomainViolation("GridSpec: resolution must be positive");
  }
  GridSpec g;
  g.lower_ = domain.lower();
  g.upper_ = domain.upper();
  const int d = domain.dim();
  g.counts_.resize(d);
  g.spacings_.resize(d);
  double total = 1.0;
  for (int k = 0; k < d; ++k) {
    const double len = g.upper_[k] - g.lower_[k];
    // Smallest segment count with spacing <= resolution; the 1e-9 slop
    // keeps an exactly-dividing resolution from gaining a segment.
    const double raw = len / resolution;
    std::int64_t segments = static_cast<std::int64_t>(std::ceil(raw - 1e-9));
    if (segments < 1) segments = 1;
    g.counts_[k] = segments + 1;
    g.spacings_[k] = len / static_cast<double>(segments);
    g.max_spacing_ = std::max(g.max_spacing_, g.spacings_[k]);
    total *= static_cast<double>(g.counts_[k]);
  }
  if (total > static_cast<double>(budget)) {
    throw BudgetExceeded(
        "grid budget exceeded: requires " + std::to_string(total) +
            " points, budget " + std::to_string(budget),
        static_cast<std::uint64_t>(total));
  }
  g.total_ = static_cast<std::uint64_t>(total + 0.5);
  return g;
}

GridOracle::GridOracle(double resolution, std::uint64_t max_points)
    : resolution_(resolution), max_points_(max_points) {
  if (!(resolution > 0.0)) {
    throw DomainViolation("GridOracle: resolution must be positive");
  }
}

OracleAnswer GridOracle::minimize(const OracleRequest& request, CallCounter& counter) const {
  return grid_minimize(request, resolution_, counter, max_points_);
}

std::unique_ptr<PrefixSession> GridOracle::make_session(const BoxDomain& domain) const {
  return std::make_unique<GridSession>(domain, GridSpec::make(domain, resolution_, max_points_));
}

OracleAnswer grid_minimize(const OracleRequest& request, double resolution,
                           CallCounter& counter, std::uint64_t budget) {
  validate_request(request);
  const GridSpec grid = GridSpec::make(*request.domain, resolution, budget);
  counter.add_offline();
  const int d = grid.dim();
  const bool has_sigma = !request.sigma.empty();
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> best_w(d);
  double g_max = 0.0;
  for (const LossFunction& l : request.losses) g_max = std::max(g_max, l.lipschitz_G);
  for_each_grid_point(grid, [&](std::uint64_t, const double* w) {
    const std::span<const double> wv(w, static_cast<std::size_t>(d));
    double obj = 0.0;
    for (const LossFunction& l : request.losses) obj += l.value(wv);
    if (has_sigma) obj -= sigma_dot(request.sigma, w, d);
    if (obj < best) {
      best = obj;
      best_w.assign(w, w + d);
    }
  });
  OracleAnswer ans;
  ans.w_hat = std::move(best_w);
  ans.objective = best;
  ans.grid_resolution = grid.max_spacing();
  ans.error_bound = answer_error_bound(static_cast<int>(request.losses.size()), g_max,
                                       request.sigma, d, grid.max_spacing());
  return ans;
}

OracleAnswer scan_minimize_1d(const OracleRequest& request, double resolution,
                              CallCounter& counter) {
  validate_request(request);
  if (request.domain->dim() != 1) {
    throw DimensionMismatch("scan_minimize_1d: domain must be one-dimensional");
  }
  return grid_minimize(request, resolution, counter);
}

FirstOrderGap verify_first_order_gap(std::span<const LossFunction> f1_losses,
                                     std::span<const double> sigma1,
                                     const OracleAnswer& answer1,
                                     std::span<const LossFunction> f2_losses,
                                     std::span<const double> sigma2,
                                     const OracleAnswer& answer2) {
  const auto f = [&](std::span<const double> w) {
    double v = 0.0;
    for (const LossFunction& l : f1_losses) v += l.value(w);
    for (const LossFunction& l : f2_losses) v -= l.value(w);
    return v;
  };
  const std::span<const double> w1(answer1.w_hat);
  const std::span<const double> w2(answer2.w_hat);
  FirstOrderGap gap;
  gap.lhs = f(w1) - f(w2);
  gap.rhs = 0.0;
  for (std::size_t k = 0; k < w1.size(); ++k) {
    const double s1 = k < sigma1.size() ? sigma1[k] : 0.0;
    const double s2 = k < sigma2.size() ? sigma2[k] : 0.0;
    gap.rhs += (s1 - s2) * (w1[k] - w2[k]);
  }
  gap.slack = answer1.error_bound + answer2.error_bound;
  gap.holds = gap.lhs <= gap.rhs + gap.slack;
  return gap;
}

OracleReport oracle_report(const CallTotals& totals) {
  OracleReport r;
  r.sample_count = totals.sample_count;
  r.value_calls = totals.value_calls;
  r.offline_calls = totals.offline_calls;
  r.total = totals.oracle_complexity();
  return r;
}

OracleReport oracle_report(const CallCounter& counter) {
  return oracle_report(counter.totals());
}

}  // namespace ncftpl
