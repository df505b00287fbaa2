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

// Seeded self-checks: closed forms against the mode-level simulator, the
// Monte-Carlo receiver, branch continuity and outer-bound containment.

#ifndef BOSONIC_MAC_VERIFY_HPP
#define BOSONIC_MAC_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bosonic_mac/gaussian_core.hpp"

namespace bmac {

struct VerifyCheck {
  std::string name;
  bool passed = false;
  double metric = 0.0;     // worst observed error, or the |z| score for Monte-Carlo
  double tolerance = 0.0;  // pass iff metric < tolerance
  std::string detail;
};

inline constexpr double kOracleTolerance = 1e-10;
inline constexpr double kContinuityTolerance = 1e-9;
inline constexpr double kContainmentSlack = 1e-12;
inline constexpr double kMcStandardErrors = 3.0;

/// Largest relative difference between the simulated and closed-form receiver
/// covariance over `draws` random channels and squeezes.
VerifyCheck covariance_oracle_check(std::size_t draws, std::uint64_t seed, double tolerance = kOracleTolerance);

/// Monte-Carlo heterodyne estimate against the closed-form heterodyne sum rate,
/// in standard errors.
VerifyCheck mc_heterodyne_check(const ChannelParams& params, const PhotonBudget& budget, std::size_t samples,
                                std::uint64_t seed, double standard_errors = kMcStandardErrors);

struct ContinuityPoint {
  ChannelParams params;
  PhotonBudget budget;  // r_a sits on the branch threshold
  double branch1 = 0.0;
  double branch2 = 0.0;
};

/// Locates r_a with N_C^A = |V1 - V2| for random draws and compares the two
/// branches there.
std::vector<ContinuityPoint> branch_crossings(std::size_t draws, std::uint64_t seed);
VerifyCheck continuity_check(std::size_t draws, std::uint64_t seed, double tolerance = kContinuityTolerance);

/// Every pentagon and every two-encoding hull stays inside its outer-bound box.
VerifyCheck containment_check(std::size_t draws, std::uint64_t seed, double slack = kContainmentSlack);

struct VerifyConfig {
  ChannelParams params;
  PhotonBudget budget = PhotonBudget::coherent(1.0, 1.0);
  std::size_t draws = 1000;
  std::size_t samples = 1'000'000;
  std::uint64_t seed = 1;
  double tolerance = kOracleTolerance;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;

  bool passed() const;
  std::vector<std::string> failing() const;
};

VerifyReport run_verification(const VerifyConfig& config);

}  // namespace bmac

#endif  // BOSONIC_MAC_VERIFY_HPP
