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

// Rate regions, squeezing surfaces and squeezing optimisation.

#ifndef BOSONIC_MAC_REGION_HPP
#define BOSONIC_MAC_REGION_HPP

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bosonic_mac/gaussian_core.hpp"
#include "bosonic_mac/rates.hpp"

namespace bmac {

inline constexpr std::size_t kDefaultGrid = 33;
inline constexpr std::size_t kDefaultSplitPoints = 101;
inline constexpr double kRefineStep = 1e-6;
inline constexpr double kVertexSlack = 1e-12;

struct RatePoint {
  double r_a = 0.0;
  double r_b = 0.0;

  friend bool operator==(const RatePoint&, const RatePoint&) = default;
};

/// Rate pairs allowed by two individual constraints and one sum constraint.
struct Pentagon {
  double r_a_max = 0.0;
  double r_b_max = 0.0;
  double sum_max = 0.0;
  std::vector<RatePoint> vertices;  // counter-clockwise from the origin

  /// Builds the vertex list. Individual maxima above sum_max are clipped to it,
  /// and repeated vertices are dropped.
  static Pentagon from_limits(double r_a_max, double r_b_max, double sum_max);
  bool contains(RatePoint p, double slack = kVertexSlack) const;
};

Pentagon pentagon_at(const ChannelParams& params, const PhotonBudget& budget);

using SignPair = std::pair<int, int>;

/// (+,+), (+,-), (-,+), (-,-).
std::vector<SignPair> all_sign_pairs();

struct SurfaceCell {
  double p_a = 0.0;
  double p_b = 0.0;
  int sign_a = 1;
  int sign_b = 1;
  double r_max_a = 0.0;
  double r_max_b = 0.0;
  Branch branch_a = Branch::One;
  Branch branch_b = Branch::One;
};

/// Individual rates over a uniform (p_A, p_B) grid, one layer per sign pair.
/// Cells are ordered by layer, then p_A, then p_B.
struct SqueezeSurface {
  ChannelParams params;
  double n_a = 0.0;
  double n_b = 0.0;
  std::size_t grid = kDefaultGrid;
  std::vector<SignPair> signs;
  std::vector<SurfaceCell> cells;

  const SurfaceCell& at(std::size_t layer, std::size_t i, std::size_t j) const;
  /// Best r_max_a (or r_max_b) over sign layers at grid point (i, j).
  double max_over_signs(std::size_t i, std::size_t j, User user) const;
};

/// grid >= 2; an empty sign list means all four pairs.
SqueezeSurface squeeze_surface(const ChannelParams& params, double n_a, double n_b,
                               std::size_t grid = kDefaultGrid, std::span<const SignPair> signs = {});

enum class Objective { MaxRA, MaxRB, MaxSum };

const char* to_string(Objective objective);

struct SqueezeOptimum {
  Objective objective = Objective::MaxRA;
  double p_a = 0.0;
  double p_b = 0.0;
  int sign_a = 1;
  int sign_b = 1;
  double value = 0.0;
  double baseline = 0.0;  // coherent value of the objective
  Branch branch = Branch::One;
};

double objective_value(const ChannelParams& params, const PhotonBudget& budget, Objective objective);

/// Coarse grid search followed by coordinate-wise golden-section passes until
/// the step falls below kRefineStep. Never returns less than the coherent value.
SqueezeOptimum optimize_squeezing(const ChannelParams& params, double n_a, double n_b, Objective objective,
                                  std::span<const SignPair> signs = {}, std::size_t grid = kDefaultGrid);

struct Encoding {
  double r_a = 0.0;
  double r_b = 0.0;
};

/// Convex polygon, counter-clockwise, no collinear points.
std::vector<RatePoint> convex_hull(std::vector<RatePoint> points);
bool hull_contains(std::span<const RatePoint> hull, RatePoint p, double slack = 1e-12);

struct ReceiverRegions {
  Pentagon homodyne;
  Pentagon heterodyne;
  /// How these regions are assembled; emitted alongside the data.
  std::string construction;
};

struct RateRegion {
  std::vector<RatePoint> hull;
  std::vector<Encoding> provenance;
  std::vector<Pentagon> pentagons;  // one per provenance entry
  Pentagon outer_box;               // [0, R_ubA] x [0, R_ubB]
  bool has_receivers = false;
  ReceiverRegions receivers;
};

/// Convex hull of the pentagons for each encoding. Each encoding keeps the
/// photon budget; its squeeze is paid out of the displacement. With
/// `receivers`, also evaluates the homodyne and heterodyne pentagons of the
/// coherent encoding.
RateRegion build_region(const ChannelParams& params, double n_a, double n_b, std::span<const Encoding> encodings,
                        bool receivers = true);

struct ScanArgmax {
  double s = 0.0;
  double p_a = 0.0;
  double p_b = 0.0;
  int sign_a = 1;
  int sign_b = 1;
  double value = 0.0;

  bool coherent() const noexcept { return p_a == 0.0 && p_b == 0.0; }
};

struct GlobalScanReport {
  double n_s = 0.0;
  std::size_t split_points = kDefaultSplitPoints;
  std::size_t grid = kDefaultGrid;
  ScanArgmax alice;
  ScanArgmax bob;
  ScanArgmax sum;
};

/// n_A = s n_S, n_B = (1 - s) n_S over s in [0, 1] and every squeeze fraction
/// and sign. Ties keep the first cell in scan order (s, p_A, p_B ascending).
GlobalScanReport global_constraint_scan(const ChannelParams& params, double n_s,
                                        std::size_t split_points = kDefaultSplitPoints,
                                        std::size_t grid = kDefaultGrid);

}  // namespace bmac

#endif  // BOSONIC_MAC_REGION_HPP
