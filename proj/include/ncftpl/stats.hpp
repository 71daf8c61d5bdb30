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

#ifndef NCFTPL_STATS_HPP
#define NCFTPL_STATS_HPP

#include <functional>
#include <span>
#include <vector>

namespace ncftpl {

// Welford accumulator.
class RunningStat {
 public:
  void add(double x);
  long long count() const { return n_; }
  double mean() const { return mean_; }
  double variance() const;  // sample variance
  double std_error() const;

 private:
  long long n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

/// Kolmogorov-Smirnov statistic of the sample against a reference CDF.
double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

LineFit fit_line(std::span<const double> x, std::span<const double> y);

/// Least-squares slope/intercept of log(y) against log(x).
LineFit fit_loglog(std::span<const double> x, std::span<const double> y);

}  // namespace ncftpl

#endif  // NCFTPL_STATS_HPP
