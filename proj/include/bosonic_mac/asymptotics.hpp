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

// Numerical limit probes. Each probe evaluates a rate ratio along a geometric
// photon-number schedule and certifies convergence toward a target value.
//
// Verdict rule: |ratio - target| must be non-increasing (up to `resolution`)
// over the last `monotone_window` schedule points, and the gap at the final
// point must be below `final_gap`.

#ifndef BOSONIC_MAC_ASYMPTOTICS_HPP
#define BOSONIC_MAC_ASYMPTOTICS_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bosonic_mac/gaussian_core.hpp"
#include "bosonic_mac/rates.hpp"

namespace bmac {

enum class Verdict { Converged, Diverged, Skipped };

const char* to_string(Verdict verdict);

struct ProbeTolerances {
  double final_gap = 0.01;
  std::size_t monotone_window = 4;
  double resolution = 1e-9;
};

inline constexpr double kLemma1Tolerance = 0.01;
inline constexpr double kLemma2Tolerance = 0.01;
inline constexpr double kHomodyneHalfTolerance = 0.05;
inline constexpr double kPureLossHomodyneTolerance = 0.1;
inline constexpr double kReceiverGapTolerance = 0.1;
inline constexpr double kBMaxRootTolerance = 1e-9;

struct LimitProbe {
  std::string lemma;
  std::vector<double> schedule;
  std::vector<double> inner_schedule;  // empty unless the probe nests two limits
  std::vector<double> ratios;
  double target = 1.0;
  double gap = 0.0;
  ProbeTolerances tolerances;
  Verdict verdict = Verdict::Diverged;
  std::vector<Branch> branches;     // rate branch per point, when tracked
  std::vector<double> optimal_r_a;  // homodyne probes only
  std::string note;
};

/// Fills `gap` and `verdict` from `ratios`, `target` and `tolerances`.
void certify(LimitProbe& probe);

/// start, start*factor, ..., `points` values.
std::vector<double> geometric_schedule(double start, double factor, std::size_t points);

/// 10^first, 10^(first +/- 1), ..., 10^last, each the double nearest the decade.
std::vector<double> decade_schedule(int first, int last);

/// 1e0 .. 1e8, used for n -> infinity probes.
std::vector<double> high_power_schedule();
/// 1e2 .. 1e-6, used for n -> 0 probes.
std::vector<double> low_power_schedule();

/// Inner variable sits this factor deeper than the outer one in nested limits.
inline constexpr double kInnerDepth = 1e-3;

// ---- high photon number -----------------------------------------------------

/// Coherent heterodyne individual rate over the outer bound for `user`.
double lemma1_ratio(double n_user, const ChannelParams& params, User user = User::Alice);

LimitProbe lemma1_probe(const ChannelParams& params, User user = User::Alice,
                        std::span<const double> schedule = {});

struct HomodyneRatio {
  double ratio = 0.0;
  double best_r_a = 0.0;
  double rate = 0.0;
};

/// Bob spends all n_b photons on squeezing the measured quadrature
/// (r_b = -asinh(sqrt(n_b))); r_a is optimised by golden section on
/// [-min(10, asinh(sqrt(n_a))), +min(...)]. Returns C_hom / R_ubA.
HomodyneRatio homodyne_asymptotic_ratio(double n_a, double n_b, const ChannelParams& params);

/// n_a = n_b along the schedule (default 1e-2 .. 1e6); target 1/2.
LimitProbe homodyne_half_probe(const ChannelParams& params, std::span<const double> schedule = {});

/// Same optimisation on the pure-loss channel (eta2 = 1, no thermal port);
/// target 1 with a looser tolerance, default schedule 1e0 .. 1e8.
LimitProbe homodyne_pure_loss_probe(double eta1, std::span<const double> schedule = {});

// ---- low photon number ------------------------------------------------------

/// Coherent inputs; outer n_a on the schedule, inner n_b = kInnerDepth * n_a.
/// Ratio R_maxA / C_A.
LimitProbe lemma2_case1(const ChannelParams& params, std::span<const double> schedule = {});

/// Bob squeezes all photons, r_b = asinh(sqrt(n_b)); Alice coherent. Outer n_b
/// on the schedule, inner n_a = kInnerDepth * n_b. Diverges unless Branch::Two
/// is active at every point.
LimitProbe lemma2_case2(const ChannelParams& params, std::span<const double> schedule = {});

struct CaseThreeConfig {
  double a = 1.0;      // n_a = a * n
  double b = 1.0;      // n_b = b * n in the Branch::Two sub-case
  double kappa = 1.0;  // b = kappa * b_max_a1(n) in the Branch::One sub-case
  double p_a = 0.5;    // Alice's displacement fraction in the Branch::Two sub-case

  void validate() const;
};

/// Largest b for which Bob's full squeeze asinh(sqrt(b n)) keeps Alice on
/// Branch::One (N_C^A >= |V1 - V2|) with coherent Alice holding a*n photons:
/// b = (eta1 - 1 + sqrt(1 - eta1 (2 - eta1 (1 + 4 a^2 n^2)))) / (2 (1 - eta1) n).
/// Throws std::domain_error for eta1 = 1, where the constraint is vacuous.
double b_max_a1(double a, double n, const ChannelParams& params);

struct BMaxCheck {
  double n = 0.0;
  double closed_form = 0.0;
  double bisection = 0.0;
  double relative_difference = 0.0;
  double constraint_residual = 0.0;  // |N_C^A - |V1 - V2|| / N_C^A at closed_form
};

/// Solves N_C^A = |V1 - V2| for b by bisection on the covariance model and
/// compares against b_max_a1.
BMaxCheck check_b_max_a1(double a, double n, const ChannelParams& params);

struct CaseThreeResult {
  LimitProbe branch1;  // R_maxA1 / C_A with b = kappa * b_max_a1
  LimitProbe branch2;  // G12 / G11|_{r=0}
  std::vector<BMaxCheck> b_max_checks;
  bool b_max_verified = false;
  /// |ratio(kappa) - ratio(kappa = 0)| along the Branch::One schedule.
  std::vector<double> squeeze_effect;
};

CaseThreeResult lemma2_case3(const CaseThreeConfig& config, const ChannelParams& params,
                             std::span<const double> schedule = {});

struct ReceiverGapResult {
  LimitProbe heterodyne;  // C_hetA / R_maxA
  LimitProbe homodyne;    // C_homA / R_maxA
};

/// Coherent inputs n_a = n_b = n along the schedule; target 0. Both probes are
/// Skipped when n_thermal = 0.
ReceiverGapResult receiver_gap_at_low_power(const ChannelParams& params, std::span<const double> schedule = {});

}  // namespace bmac

#endif  // BOSONIC_MAC_ASYMPTOTICS_HPP
