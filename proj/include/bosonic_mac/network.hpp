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

// Mode-level simulator for passive beamsplitter networks. It propagates
// Gaussian first and second moments through the full multi-mode transform and
// serves as the independent check on the closed-form receiver covariance and
// rate formulas.

#ifndef BOSONIC_MAC_NETWORK_HPP
#define BOSONIC_MAC_NETWORK_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "bosonic_mac/gaussian_core.hpp"

namespace bmac {

struct Beamsplitter {
  double transmissivity = 1.0;
  double phase = 0.0;  // carried for completeness; only phase = 0 is simulated
  std::size_t mode_a = 0;
  std::size_t mode_b = 1;
};

class BeamsplitterNetwork {
 public:
  BeamsplitterNetwork(std::size_t num_modes, std::vector<Beamsplitter> splitters,
                      std::size_t receiver_mode);

  /// Triangular mesh for K transmitters (modes 0..K-1) plus one environment
  /// mode K. The receiver is mode 0: splitter j couples mode j into it for
  /// j = 1..K, then the remaining K(K-1)/2 splitters mix the loss ports.
  /// `transmissivities` must hold K(K+1)/2 values in that order.
  static BeamsplitterNetwork canonical(std::size_t num_transmitters,
                                       std::span<const double> transmissivities);

  /// Alice = mode 0, Bob = mode 1, environment = mode 2, receiver = mode 0.
  /// `eta3` only mixes the two loss outputs.
  static BeamsplitterNetwork two_user(const ChannelParams& params, double eta3 = 0.5);

  std::size_t num_modes() const noexcept { return num_modes_; }
  std::size_t receiver_mode() const noexcept { return receiver_mode_; }
  const std::vector<Beamsplitter>& splitters() const noexcept { return splitters_; }

 private:
  std::size_t num_modes_;
  std::vector<Beamsplitter> splitters_;
  std::size_t receiver_mode_;
};

/// Real orthogonal matrix mapping input mode operators to output ones. Each
/// splitter acts as [sqrt(t), sqrt(1-t); -sqrt(1-t), sqrt(t)] on its pair, and
/// splitters are applied in list order.
Eigen::MatrixXd mode_transform(const BeamsplitterNetwork& net);

/// Product of independent single-mode Gaussian states.
struct ModeEnsemble {
  std::vector<Eigen::Vector2d> means;
  std::vector<CovMatrix2> covs;
};

struct PropagatedEnsemble {
  std::vector<Eigen::Vector2d> means;
  /// 2M x 2M covariance, quadratures interleaved as (q0, p0, q1, p1, ...).
  Eigen::MatrixXd joint_covariance;
  Eigen::Vector2d receiver_mean;
  CovMatrix2 receiver;
};

PropagatedEnsemble propagate(const BeamsplitterNetwork& net, const ModeEnsemble& input);

/// Input ensemble for the two-user channel: zero-mean Alice/Bob states with
/// the budget's squeezing and a thermal environment.
ModeEnsemble two_user_inputs(const PhotonBudget& budget, const ChannelParams& params);

/// Sum over modes of |mean|^2 + (v11 + v22) - 1/2.
double total_mean_photons(std::span<const Eigen::Vector2d> means, const Eigen::MatrixXd& joint_covariance);

struct McEstimate {
  double rate_bits = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
};

/// Monte-Carlo sum-rate estimate for coherent-state heterodyne detection.
/// Displacements are drawn from circular complex Gaussians at each user's
/// budget, pushed through the network's receiver row, and observed with the
/// receiver-mode noise plus one vacuum unit per quadrature. The rate is the
/// Gaussian mutual information of the empirical per-quadrature channel; the
/// standard error comes from batch means. Seed-deterministic.
McEstimate mc_heterodyne_rate(const ChannelParams& params, const PhotonBudget& budget,
                              std::size_t num_samples, std::uint64_t seed);

inline constexpr std::size_t kMinMcSamples = 10'000;

}  // namespace bmac

#endif  // BOSONIC_MAC_NETWORK_HPP
