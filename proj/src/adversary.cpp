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

#include "ncftpl/adversary.hpp"

#include <algorithm>
#include <cmath>

namespace ncftpl {

namespace {

// Deterministic per-round menu pick, independent of call order.
int menu_choice(std::uint64_t seed, int t, int menu_size) {
  std::uint64_t s = seed ^ (0x632be59bd9b4e019ULL * static_cast<std::uint64_t>(t) + 0x9e3779b97f4a7c15ULL);
  return static_cast<int>(splitmix64(s) % static_cast<std::uint64_t>(menu_size));
}

double max_abs_on_box(std::span<const double> a, const BoxDomain& box, double* out_min,
                      double* out_max) {
  // extremes of w . a over the box
  double lo = 0.0, hi = 0.0;
  for (int k = 0; k < box.dim(); ++k) {
    const double v1 = a[k] * box.lower()[k];
    const double v2 = a[k] * box.upper()[k];
    lo += std::min(v1, v2);
    hi += std::max(v1, v2);
  }
  if (out_min != nullptr) *out_min = lo;
  if (out_max != nullptr) *out_max = hi;
  return std::max(std::abs(lo), std::abs(hi));
}

}  // namespace

LossFunction make_relu_loss(std::vector<double> x, double y, const BoxDomain& box) {
  if (static_cast<int>(x.size()) != box.dim()) {
    throw DimensionMismatch("make_relu_loss: x dimension mismatch");
  }
  double s_min = 0.0, s_max = 0.0;
  max_abs_on_box(x, box, &s_min, &s_max);
  const double r_max = std::max(0.0, s_max);
  const double m = std::max(y, r_max - y);  // max |relu(w.x) - y| over the box
  LossFunction l;
  l.label = "relu";
  l.lipschitz_G = 2.0 * m * linf_norm(x);
  l.bound_B = m * m;
  l.value = [x = std::move(x), y](std::span<const double> w) {
    double s = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k) s += w[k] * x[k];
    const double r = s > 0.0 ? s : 0.0;
    const double d = r - y;
    return d * d;
  };
  return l;
}

LossFunction make_linear_loss(std::vector<double> a, const BoxDomain& box) {
  if (static_cast<int>(a.size()) != box.dim()) {
    throw DimensionMismatch("make_linear_loss: coefficient dimension mismatch");
  }
  LossFunction l;
  l.label = "linear";
  l.lipschitz_G = linf_norm(a);
  l.bound_B = max_abs_on_box(a, box, nullptr, nullptr);
  l.value = [a = std::move(a)](std::span<const double> w) {
    double s = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k) s += w[k] * a[k];
    return s;
  };
  return l;
}

LossFunction make_pwl_interp_loss_1d(std::vector<double> knot_x, std::vector<double> knot_y) {
  if (knot_x.size() != knot_y.size() || knot_x.size() < 2) {
    throw DimensionMismatch("make_pwl_interp_loss_1d: need at least two knots");
  }
  double g = 0.0, b = 0.0;
  for (std::size_t i = 0; i + 1 < knot_x.size(); ++i) {
    if (!(knot_x[i] < knot_x[i + 1])) {
      throw DomainViolation("make_pwl_interp_loss_1d: knots must be strictly increasing");
    }
    g = std::max(g, std::abs((knot_y[i + 1] - knot_y[i]) / (knot_x[i + 1] - knot_x[i])));
  }
  for (double v : knot_y) b = std::max(b, std::abs(v));
  LossFunction l;
  l.label = "pwl1d";
  l.lipschitz_G = g;
  l.bound_B = b;
  l.value = [xs = std::move(knot_x), ys = std::move(knot_y)](std::span<const double> w) {
    const double x = w[0];
    if (x <= xs.front()) return ys.front();
    if (x >= xs.back()) return ys.back();
    std::size_t hi = 1;
    while (xs[hi] < x) ++hi;
    const double f = (x - xs[hi - 1]) / (xs[hi] - xs[hi - 1]);
    return ys[hi - 1] + f * (ys[hi] - ys[hi - 1]);
  };
  return l;
}

LossFunction make_pwl_minmax_loss(std::vector<std::vector<AffinePiece>> groups, double cap,
                                  const BoxDomain& box, std::string label) {
  if (groups.empty()) throw DomainViolation("make_pwl_minmax_loss: no groups");
  double g = 0.0;
  for (const auto& group : groups) {
    if (group.empty()) throw DomainViolation("make_pwl_minmax_loss: empty group");
    for (const AffinePiece& p : group) {
      if (static_cast<int>(p.a.size()) != box.dim()) {
        throw DimensionMismatch("make_pwl_minmax_loss: piece dimension mismatch");
      }
      g = std::max(g, linf_norm(p.a));
    }
  }
  LossFunction l;
  l.label = std::move(label);
  l.lipschitz_G = g;
  l.bound_B = cap;
  l.value = [groups = std::move(groups), cap](std::span<const double> w) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& group : groups) {
      double m = -std::numeric_limits<double>::infinity();
      for (const AffinePiece& p : group) {
        double v = p.b;
        for (std::size_t k = 0; k < w.size(); ++k) v += p.a[k] * w[k];
        m = std::max(m, v);
      }
      best = std::min(best, m);
    }
    return std::clamp(best, -cap, cap);
  };
  return l;
}

LossFunction random_pwl_loss_1d(const BoxDomain& box, RngStream& rng, int max_knots) {
  if (box.dim() != 1) throw DimensionMismatch("random_pwl_loss_1d: requires dim 1");
  const double lo = box.lower()[0];
  const double hi = box.upper()[0];
  const int interior = 1 + rng.uniform_int(std::max(1, max_knots - 2));
  std::vector<double> xs;
  xs.push_back(lo);
  for (int i = 0; i < interior; ++i) xs.push_back(rng.uniform(lo, hi));
  xs.push_back(hi);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end(),
                       [](double a, double b) { return std::abs(a - b) < 1e-9; }),
           xs.end());
  if (xs.back() < hi) xs.push_back(hi);
  std::vector<double> ys(xs.size());
  for (double& y : ys) y = rng.uniform(-1.0, 1.0);
  return make_pwl_interp_loss_1d(std::move(xs), std::move(ys));
}

LossFunction random_pwl_minmax_loss(const BoxDomain& box, RngStream& rng, int groups,
                                    int pieces, double cap) {
  std::vector<std::vector<AffinePiece>> gs(groups);
  for (auto& group : gs) {
    group.resize(pieces);
    for (AffinePiece& p : group) {
      p.a.resize(box.dim());
      for (double& c : p.a) c = rng.uniform(-1.0, 1.0);
      p.b = rng.uniform(-0.5, 0.5);
    }
  }
  return make_pwl_minmax_loss(std::move(gs), cap, box, "pwl-minmax");
}

LossFunction random_relu_loss(const BoxDomain& box, RngStream& rng) {
  std::vector<double> x(box.dim());
  for (double& c : x) {
    const double mag = rng.uniform(0.2, 1.0);
    c = rng.uniform_int(2) == 0 ? mag : -mag;
  }
  const double y = rng.uniform(0.0, 1.0);
  return make_relu_loss(std::move(x), y, box);
}

namespace {

std::vector<LossFunction> standard_relu_menu(const BoxDomain& box) {
  std::vector<LossFunction> menu;
  const int d = box.dim();
  if (d == 1) {
    menu.push_back(make_relu_loss({1.0}, 1.0, box));
    menu.push_back(make_relu_loss({-1.0}, 1.0, box));
    return menu;
  }
  for (int i = 0; i < d; ++i) {
    for (double sign : {1.0, -1.0}) {
      std::vector<double> x(d, 0.0);
      x[i] = sign;
      menu.push_back(make_relu_loss(std::move(x), 1.0, box));
    }
  }
  return menu;
}

Adversary menu_adversary(std::vector<LossFunction> menu, int dim,
                         std::function<int(int)> pick) {
  Adversary adv;
  adv.kind = Adversary::Kind::kOblivious;
  adv.dim = dim;
  for (const LossFunction& l : menu) {
    adv.lipschitz_G = std::max(adv.lipschitz_G, l.lipschitz_G);
    adv.bound_B = std::max(adv.bound_B, l.bound_B);
  }
  adv.generator = [menu = std::move(menu), pick = std::move(pick)](
                      int t, const std::vector<double>*) { return menu[pick(t)]; };
  return adv;
}

}  // namespace

Adversary make_relu_alternating_adversary(const BoxDomain& box) {
  if (box.dim() != 1) throw DimensionMismatch("relu alternating adversary is one-dimensional");
  return menu_adversary(standard_relu_menu(box), 1, [](int t) { return (t - 1) % 2; });
}

Adversary make_relu_iid_adversary(const BoxDomain& box, std::uint64_t seed) {
  auto menu = standard_relu_menu(box);
  const int m = static_cast<int>(menu.size());
  return menu_adversary(std::move(menu), box.dim(),
                        [seed, m](int t) { return menu_choice(seed, t, m); });
}

Adversary make_relu_random_adversary(const BoxDomain& box, std::uint64_t seed) {
  Adversary adv;
  adv.kind = Adversary::Kind::kOblivious;
  adv.dim = box.dim();
  // Conservative family-wide constants for |x| <= 1, y in [0, 1].
  double s_hi = 0.0;
  for (int k = 0; k < adv.dim; ++k) {
    s_hi += std::max(std::abs(box.lower()[k]), std::abs(box.upper()[k]));
  }
  const double m = std::max(1.0, s_hi);
  adv.lipschitz_G = 2.0 * m;
  adv.bound_B = m * m;
  adv.generator = [box, seed](int t, const std::vector<double>*) {
    RngStream rng = RngStream::substream(seed, static_cast<std::uint64_t>(t));
    return random_relu_loss(box, rng);
  };
  return adv;
}

Adversary make_pwl_random_adversary(const BoxDomain& box, std::uint64_t seed) {
  Adversary adv;
  adv.kind = Adversary::Kind::kOblivious;
  adv.dim = box.dim();
  adv.lipschitz_G = 1.0;
  adv.bound_B = 1.0;
  adv.generator = [box, seed](int t, const std::vector<double>*) {
    RngStream rng = RngStream::substream(seed, static_cast<std::uint64_t>(t));
    if (box.dim() == 1) return random_pwl_loss_1d(box, rng);
    return random_pwl_minmax_loss(box, rng);
  };
  return adv;
}

Adversary make_adaptive_relu_adversary(const BoxDomain& box, double y_b) {
  if (box.dim() != 1) throw DimensionMismatch("adaptive relu adversary is one-dimensional");
  std::vector<LossFunction> menu;
  menu.push_back(make_relu_loss({1.0}, 1.0, box));
  menu.push_back(make_relu_loss({-1.0}, y_b, box));
  Adversary adv;
  adv.kind = Adversary::Kind::kAdaptive;
  adv.dim = 1;
  for (const LossFunction& l : menu) {
    adv.lipschitz_G = std::max(adv.lipschitz_G, l.lipschitz_G);
    adv.bound_B = std::max(adv.bound_B, l.bound_B);
  }
  adv.generator = [menu = std::move(menu)](int, const std::vector<double>* w) {
    if (w == nullptr) {
      throw DomainViolation("adaptive adversary needs the learner's iterate");
    }
    const std::span<const double> wv(*w);
    return menu[1].value(wv) > menu[0].value(wv) ? menu[1] : menu[0];
  };
  return adv;
}

Adversary make_recorded_adversary(std::vector<LossFunction> losses, int dim) {
  if (losses.empty()) throw DomainViolation("recorded adversary: empty sequence");
  Adversary adv;
  adv.kind = Adversary::Kind::kOblivious;
  adv.dim = dim;
  for (const LossFunction& l : losses) {
    adv.lipschitz_G = std::max(adv.lipschitz_G, l.lipschitz_G);
    adv.bound_B = std::max(adv.bound_B, l.bound_B);
  }
  adv.generator = [losses = std::move(losses)](int t, const std::vector<double>*) {
    if (t < 1 || t > static_cast<int>(losses.size())) {
      throw DomainViolation("recorded adversary: round beyond recorded horizon");
    }
    return losses[static_cast<std::size_t>(t - 1)];
  };
  return adv;
}

Adversary make_constant_adversary(LossFunction loss, int dim) {
  Adversary adv;
  adv.kind = Adversary::Kind::kOblivious;
  adv.dim = dim;
  adv.lipschitz_G = loss.lipschitz_G;
  adv.bound_B = loss.bound_B;
  adv.generator = [loss = std::move(loss)](int, const std::vector<double>*) { return loss; };
  return adv;
}

}  // namespace ncftpl
