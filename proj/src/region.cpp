// Copyright 2026 The bosonic-mac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bosonic_mac/region.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bosonic_mac/scalar_search.hpp"

namespace bmac {

namespace {

constexpr int kMaxRefinePasses = 200;

double cross(RatePoint o, RatePoint a, RatePoint b) {
  return (a.r_a - o.r_a) * (b.r_b - o.r_b) - (a.r_b - o.r_b) * (b.r_a - o.r_a);
}

double grid_fraction(std::size_t i, std::size_t grid) {
  return static_cast<double>(i) / static_cast<double>(grid - 1);
}

std::vector<SignPair> resolve_signs(std::span<const SignPair> signs) {
  if (signs.empty()) return all_sign_pairs();
  for (const auto& [a, b] : signs) {
    if (a != 1 && a != -1) throw ValidationError("sign-a", "sign must be +1 or -1");
    if (b != 1 && b != -1) throw ValidationError("sign-b", "sign must be +1 or -1");
  }
  return {signs.begin(), signs.end()};
}

PhotonBudget fractions_budget(double n_a, double n_b, double p_a, double p_b, SignPair signs) {
  return SqueezeFractions{p_a, p_b, signs.first, signs.second}.to_budget(n_a, n_b);
}

BranchedRate objective_rate(const ChannelParams& params, const PhotonBudget& budget, Objective objective) {
  switch (objective) {
    case Objective::MaxRA: return individual_rate(params, budget, User::Alice);
    case Objective::MaxRB: return individual_rate(params, budget, User::Bob);
    case Objective::MaxSum: return sum_rate(params, budget);
  }
  return {};
}

}  // namespace

Pentagon Pentagon::from_limits(double r_a_max, double r_b_max, double sum_max) {
  Pentagon p;
  p.sum_max = std::max(0.0, sum_max);
  p.r_a_max = std::clamp(r_a_max, 0.0, p.sum_max);
  p.r_b_max = std::clamp(r_b_max, 0.0, p.sum_max);
  std::vector<RatePoint> raw;
  if (p.sum_max >= p.r_a_max + p.r_b_max) {
    raw = {{0.0, 0.0}, {p.r_a_max, 0.0}, {p.r_a_max, p.r_b_max}, {0.0, p.r_b_max}};
  } else {
    raw = {{0.0, 0.0},
           {p.r_a_max, 0.0},
           {p.r_a_max, p.sum_max - p.r_a_max},
           {p.sum_max - p.r_b_max, p.r_b_max},
           {0.0, p.r_b_max}};
  }
  for (const RatePoint& v : raw) {
    if (p.vertices.empty() || !(p.vertices.back() == v)) p.vertices.push_back(v);
  }
  while (p.vertices.size() > 1 && p.vertices.back() == p.vertices.front()) p.vertices.pop_back();
  return p;
}

bool Pentagon::contains(RatePoint p, double slack) const {
  return p.r_a >= -slack && p.r_b >= -slack && p.r_a <= r_a_max + slack && p.r_b <= r_b_max + slack &&
         p.r_a + p.r_b <= sum_max + slack;
}

Pentagon pentagon_at(const ChannelParams& params, const PhotonBudget& budget) {
  const RateBundle r = max_rates(params, budget);
  return Pentagon::from_limits(r.r_max_a, r.r_max_b, r.r_max_ab);
}

std::vector<SignPair> all_sign_pairs() { return {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}; }

const SurfaceCell& SqueezeSurface::at(std::size_t layer, std::size_t i, std::size_t j) const {
  return cells.at((layer * grid + i) * grid + j);
}

double SqueezeSurface::max_over_signs(std::size_t i, std::size_t j, User user) const {
  double best = 0.0;
  for (std::size_t layer = 0; layer < signs.size(); ++layer) {
    const SurfaceCell& c = at(layer, i, j);
    best = std::max(best, user == User::Alice ? c.r_max_a : c.r_max_b);
  }
  return best;
}

SqueezeSurface squeeze_surface(const ChannelParams& params, double n_a, double n_b, std::size_t grid,
                               std::span<const SignPair> signs) {
  params.validate();
  PhotonBudget::coherent(n_a, n_b).validate();
  if (grid < 2) throw ValidationError("grid", "grid must be >= 2");
  SqueezeSurface s;
  s.params = params;
  s.n_a = n_a;
  s.n_b = n_b;
  s.grid = grid;
  s.signs = resolve_signs(signs);
  s.cells.reserve(s.signs.size() * grid * grid);
  for (const SignPair& sign : s.signs) {
    for (std::size_t i = 0; i < grid; ++i) {
      for (std::size_t j = 0; j < grid; ++j) {
        SurfaceCell c{grid_fraction(i, grid), grid_fraction(j, grid), sign.first, sign.second};
        const RateBundle r = max_rates(params, fractions_budget(n_a, n_b, c.p_a, c.p_b, sign));
        c.r_max_a = r.r_max_a;
        c.r_max_b = r.r_max_b;
        c.branch_a = r.branch_a;
        c.branch_b = r.branch_b;
        s.cells.push_back(c);
      }
    }
  }
  return s;
}

const char* to_string(Objective objective) {
  switch (objective) {
    case Objective::MaxRA: return "ra";
    case Objective::MaxRB: return "rb";
    case Objective::MaxSum: return "sum";
  }
  return "ra";
}

double objective_value(const ChannelParams& params, const PhotonBudget& budget, Objective objective) {
  return objective_rate(params, budget, objective).bits;
}

SqueezeOptimum optimize_squeezing(const ChannelParams& params, double n_a, double n_b, Objective objective,
                                  std::span<const SignPair> signs, std::size_t grid) {
  params.validate();
  PhotonBudget::coherent(n_a, n_b).validate();
  if (grid < 2) throw ValidationError("grid", "grid must be >= 2");
  const std::vector<SignPair> sign_list = resolve_signs(signs);

  SqueezeOptimum best;
  best.objective = objective;
  const BranchedRate base = objective_rate(params, PhotonBudget::coherent(n_a, n_b), objective);
  best.baseline = base.bits;
  best.value = base.bits;
  best.branch = base.branch;

  const double h = 1.0 / static_cast<double>(grid - 1);
  for (const SignPair& sign : sign_list) {
    const auto value = [&](double p_a, double p_b) {
      return objective_value(params, fractions_budget(n_a, n_b, p_a, p_b, sign), objective);
    };
    double p_a = 0.0, p_b = 0.0, v = value(0.0, 0.0);
    for (std::size_t i = 0; i < grid; ++i) {
      for (std::size_t j = 0; j < grid; ++j) {
        const double cand = value(grid_fraction(i, grid), grid_fraction(j, grid));
        if (cand > v) {
          v = cand;
          p_a = grid_fraction(i, grid);
          p_b = grid_fraction(j, grid);
        }
      }
    }
    for (int pass = 0; pass < kMaxRefinePasses; ++pass) {
      double step = 0.0;
      const ScalarOptimum a = golden_section_maximize([&](double x) { return value(x, p_b); },
                                                      std::max(0.0, p_a - h), std::min(1.0, p_a + h), 1e-9);
      if (a.value > v) {
        step = std::max(step, std::abs(a.x - p_a));
        p_a = a.x;
        v = a.value;
      }
      const ScalarOptimum b = golden_section_maximize([&](double x) { return value(p_a, x); },
                                                      std::max(0.0, p_b - h), std::min(1.0, p_b + h), 1e-9);
      if (b.value > v) {
        step = std::max(step, std::abs(b.x - p_b));
        p_b = b.x;
        v = b.value;
      }
      if (step < kRefineStep) break;
    }
    if (v > best.value) {
      best.value = v;
      best.p_a = p_a;
      best.p_b = p_b;
      best.sign_a = sign.first;
      best.sign_b = sign.second;
      best.branch = objective_rate(params, fractions_budget(n_a, n_b, p_a, p_b, sign), objective).branch;
    }
  }
  return best;
}

std::vector<RatePoint> convex_hull(std::vector<RatePoint> points) {
  std::sort(points.begin(), points.end(), [](RatePoint a, RatePoint b) {
    return a.r_a < b.r_a || (a.r_a == b.r_a && a.r_b < b.r_b);
  });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) return points;
  std::vector<RatePoint> hull(2 * points.size());
  std::size_t k = 0;
  for (const RatePoint& p : points) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (auto it = points.rbegin() + 1; it != points.rend(); ++it) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], *it) <= 0.0) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  return hull;
}

bool hull_contains(std::span<const RatePoint> hull, RatePoint p, double slack) {
  if (hull.empty()) return false;
  if (hull.size() == 1) return std::abs(p.r_a - hull[0].r_a) <= slack && std::abs(p.r_b - hull[0].r_b) <= slack;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const RatePoint a = hull[i];
    const RatePoint b = hull[(i + 1) % hull.size()];
    const double len = std::hypot(b.r_a - a.r_a, b.r_b - a.r_b);
    if (len == 0.0) continue;
    // Signed distance of p to the left of edge a -> b.
    if (cross(a, b, p) / len < -slack) return false;
  }
  if (hull.size() == 2) {
    const double lo_a = std::min(hull[0].r_a, hull[1].r_a), hi_a = std::max(hull[0].r_a, hull[1].r_a);
    const double lo_b = std::min(hull[0].r_b, hull[1].r_b), hi_b = std::max(hull[0].r_b, hull[1].r_b);
    return p.r_a >= lo_a - slack && p.r_a <= hi_a + slack && p.r_b >= lo_b - slack && p.r_b <= hi_b + slack;
  }
  return true;
}

RateRegion build_region(const ChannelParams& params, double n_a, double n_b, std::span<const Encoding> encodings,
                        bool receivers) {
  params.validate();
  const PhotonBudget coherent = PhotonBudget::coherent(n_a, n_b);
  coherent.validate();
  if (encodings.empty()) throw ValidationError("encodings", "at least one encoding is required");
  RateRegion region;
  std::vector<RatePoint> points;
  for (const Encoding& e : encodings) {
    const Pentagon p = pentagon_at(params, PhotonBudget{n_a, n_b, e.r_a, e.r_b});
    points.insert(points.end(), p.vertices.begin(), p.vertices.end());
    region.provenance.push_back(e);
    region.pentagons.push_back(p);
  }
  region.hull = convex_hull(std::move(points));
  const double ub_a = outer_bound(params, coherent, User::Alice);
  const double ub_b = outer_bound(params, coherent, User::Bob);
  region.outer_box = Pentagon::from_limits(ub_a, ub_b, ub_a + ub_b);
  if (receivers) {
    region.has_receivers = true;
    region.receivers.homodyne = Pentagon::from_limits(
        receiver_individual_rate(params, coherent, Receiver::Homodyne, User::Alice),
        receiver_individual_rate(params, coherent, Receiver::Homodyne, User::Bob), homodyne_sum_rate(params, coherent));
    region.receivers.heterodyne = Pentagon::from_limits(
        receiver_individual_rate(params, coherent, Receiver::Heterodyne, User::Alice),
        receiver_individual_rate(params, coherent, Receiver::Heterodyne, User::Bob),
        heterodyne_sum_rate(params, coherent));
    region.receivers.construction =
        "pentagon from the coherent-input receiver individual and sum rates (time sharing between corner points)";
  }
  return region;
}

GlobalScanReport global_constraint_scan(const ChannelParams& params, double n_s, std::size_t split_points,
                                        std::size_t grid) {
  params.validate();
  if (!(n_s >= 0.0) || !std::isfinite(n_s)) throw ValidationError("ns", "total photon budget must be >= 0");
  if (split_points < 2) throw ValidationError("split-points", "need at least two split points");
  if (grid < 2) throw ValidationError("grid", "grid must be >= 2");
  GlobalScanReport report;
  report.n_s = n_s;
  report.split_points = split_points;
  report.grid = grid;
  bool first = true;
  const std::vector<SignPair> signs = all_sign_pairs();
  for (std::size_t k = 0; k < split_points; ++k) {
    const double s = grid_fraction(k, split_points);
    const double n_a = s * n_s;
    const double n_b = (1.0 - s) * n_s;
    for (std::size_t i = 0; i < grid; ++i) {
      for (std::size_t j = 0; j < grid; ++j) {
        const double p_a = grid_fraction(i, grid);
        const double p_b = grid_fraction(j, grid);
        for (const SignPair& sign : signs) {
          const RateBundle r = max_rates(params, fractions_budget(n_a, n_b, p_a, p_b, sign));
          const auto offer = [&](ScanArgmax& best, double value) {
            if (first || value > best.value) best = {s, p_a, p_b, sign.first, sign.second, value};
          };
          offer(report.alice, r.r_max_a);
          offer(report.bob, r.r_max_b);
          offer(report.sum, r.r_max_ab);
          first = false;
        }
      }
    }
  }
  return report;
}

}  // namespace bmac
