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

// Closed-form rates for the two-user thermal-loss bosonic MAC with Gaussian
// inputs. All rates are in bits per channel use.

#ifndef BOSONIC_MAC_RATES_HPP
#define BOSONIC_MAC_RATES_HPP

#include "bosonic_mac/gaussian_core.hpp"

namespace bmac {

/// Which half of the piecewise maximum-rate formula applies. One is the
/// "enough signal to fill the squeezing asymmetry" case, N >= threshold.
enum class Branch { One, Two };

enum class Receiver { Homodyne, Heterodyne };

const char* to_string(Branch branch);
const char* to_string(Receiver receiver);

struct BranchedRate {
  double bits = 0.0;
  Branch branch = Branch::One;
};

struct RateBundle {
  double r_max_a = 0.0;
  double r_max_b = 0.0;
  double r_max_ab = 0.0;
  Branch branch_a = Branch::One;
  Branch branch_b = Branch::One;
  Branch branch_ab = Branch::One;
};

/// g(V1 + V2 + N - 1/2).
double big_g11(double n, const CovMatrix2& v);

/// The full-form G12 including the V12 terms:
/// g(2 [ ((V1+V2+N)/2)^2 - (sqrt(((V1-V2)/2)^2 + V12^2) - N/2)^2 ]^(1/2) - 1/2).
double big_g12(double n, const CovMatrix2& v);

/// G12 specialised to V12 = 0: g(2 sqrt(Vmax (Vmin + N)) - 1/2), where Vmax is
/// the larger diagonal entry. Cross-check for big_g12.
double big_g12_diagonal(double n, const CovMatrix2& v);

/// g(2 sqrt(det V) - 1/2).
double big_g2(const CovMatrix2& v);

/// sqrt((V1 - V2)^2 + 4 V12^2); Branch::One applies when N >= threshold.
double branch_threshold(const CovMatrix2& v);

/// G1x(N, V) - G2(V) on the requested branch, clamped at zero. Evaluated as a
/// g increment over the G2 argument so tiny N keep full relative precision.
double max_rate_on_branch(double n, const CovMatrix2& v, Branch branch);

/// Piecewise maximum rate for signal photons `n` through covariance `v`.
BranchedRate max_rate(double n, const CovMatrix2& v);

BranchedRate individual_rate(const ChannelParams& params, const PhotonBudget& budget, User user);
BranchedRate sum_rate(const ChannelParams& params, const PhotonBudget& budget);
RateBundle max_rates(const ChannelParams& params, const PhotonBudget& budget);

/// C(x, y) = g(x + y) - g(y): thermal-noise point-to-point capacity with x
/// signal and y noise photons at the receiver.
double point_to_point(double signal, double noise);

/// Capacity of one user's link when the other sends vacuum, e.g.
/// C(eta1 eta2 nA, (1 - eta2) nT) for Alice.
double single_user_capacity(const ChannelParams& params, const PhotonBudget& budget, User user);

/// Interference-free ceiling C(eta2 n_user, (1 - eta2) nT). eta1 does not enter.
double outer_bound(const ChannelParams& params, const PhotonBudget& budget, User user);

/// C(eta2 (eta1 nA + (1 - eta1) nB), (1 - eta2) nT). Squeezing is ignored.
double sum_rate_capacity_coherent(const ChannelParams& params, const PhotonBudget& budget);

/// Squeezed-state homodyne sum rate, referenced to Alice's path:
/// 1/2 log2(1 + 4 (n_alpha + k n_beta) / (e^{2rA} + k e^{2rB} + (1-eta2)(1+2nT)/(eta1 eta2))),
/// k = (1 - eta1)/eta1. Throws when eta1 or eta2 is zero.
double homodyne_sum_rate(const ChannelParams& params, const PhotonBudget& budget);

/// Coherent-state heterodyne sum rate
/// log2(1 + (eta1 nA + (1 - eta1) nB) / (1 + (1 - eta2)(1 + 2 nT)/eta2)).
/// Throws when squeezing is requested or eta2 is zero.
double heterodyne_sum_rate(const ChannelParams& params, const PhotonBudget& budget);

/// Sum-rate receiver formula with the other user's photon number set to zero.
/// For homodyne the other user's squeezing stays in the noise term.
double receiver_individual_rate(const ChannelParams& params, const PhotonBudget& budget,
                                Receiver receiver, User user);

}  // namespace bmac

#endif  // BOSONIC_MAC_RATES_HPP
