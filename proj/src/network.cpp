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

#include "bosonic_mac/network.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace bmac {

BeamsplitterNetwork::BeamsplitterNetwork(std::size_t num_modes, std::vector<Beamsplitter> splitters,
                                         std::size_t receiver_mode)
    : num_modes_(num_modes), splitters_(std::move(splitters)), receiver_mode_(receiver_mode) {
  if (num_modes_ < 2) throw std::invalid_argument("a network needs at least two modes");
  if (receiver_mode_ >= num_modes_) throw std::out_of_range("receiver mode index out of range");
  for (const auto& s : splitters_) {
    if (s.mode_a >= num_modes_ || s.mode_b >= num_modes_) {
      throw std::out_of_range("beamsplitter mode index out of range");
    }
    if (s.mode_a == s.mode_b) throw std::invalid_argument("beamsplitter couples a mode to itself");
    if (!(s.transmissivity >= 0.0 && s.transmissivity <= 1.0)) {
      throw std::invalid_argument("beamsplitter transmissivity must lie in [0, 1]");
    }
  }
}

BeamsplitterNetwork BeamsplitterNetwork::canonical(std::size_t num_transmitters,
                                                   std::span<const double> transmissivities) {
  const std::size_t k = num_transmitters;
  if (k < 1) throw std::invalid_argument("need at least one transmitter");
  if (transmissivities.size() != k * (k + 1) / 2) {
    throw std::invalid_argument("expected K(K+1)/2 = " + std::to_string(k * (k + 1) / 2) +
                                " transmissivities, got " + std::to_string(transmissivities.size()));
  }
  std::vector<Beamsplitter> splitters;
  splitters.reserve(transmissivities.size());
  std::size_t next = 0;
  for (std::size_t j = 1; j <= k; ++j) {
    splitters.push_back({transmissivities[next++], 0.0, 0, j});
  }
  for (std::size_t i = 1; i < k; ++i) {
    for (std::size_t j = i + 1; j <= k; ++j) {
      splitters.push_back({transmissivities[next++], 0.0, i, j});
    }
  }
  return BeamsplitterNetwork(k + 1, std::move(splitters), 0);
}

BeamsplitterNetwork BeamsplitterNetwork::two_user(const ChannelParams& params, double eta3) {
  const std::array<double, 3> t{params.eta1, params.eta2, eta3};
  return canonical(2, t);
}

Eigen::MatrixXd mode_transform(const BeamsplitterNetwork& net) {
  const auto m = static_cast<Eigen::Index>(net.num_modes());
  Eigen::MatrixXd total = Eigen::MatrixXd::Identity(m, m);
  for (const auto& s : net.splitters()) {
    const double t = std::sqrt(s.transmissivity);
    const double r = std::sqrt(1.0 - s.transmissivity);
    const auto a = static_cast<Eigen::Index>(s.mode_a);
    const auto b = static_cast<Eigen::Index>(s.mode_b);
    // Left-multiply by the 2x2 rotation embedded on rows (a, b).
    const Eigen::RowVectorXd row_a = total.row(a);
    const Eigen::RowVectorXd row_b = total.row(b);
    total.row(a) = t * row_a + r * row_b;
    total.row(b) = -r * row_a + t * row_b;
  }
  return total;
}

PropagatedEnsemble propagate(const BeamsplitterNetwork& net, const ModeEnsemble& input) {
  const std::size_t modes = net.num_modes();
  if (input.means.size() != modes || input.covs.size() != modes) {
    throw std::invalid_argument("ensemble has " + std::to_string(input.covs.size()) +
                                " modes, network has " + std::to_string(modes));
  }
  const Eigen::MatrixXd transform = mode_transform(net);
  const auto m = static_cast<Eigen::Index>(modes);

  Eigen::MatrixXd input_cov = Eigen::MatrixXd::Zero(2 * m, 2 * m);
  Eigen::MatrixXd mean_in(m, 2);
  for (Eigen::Index k = 0; k < m; ++k) {
    const auto& c = input.covs[static_cast<std::size_t>(k)];
    input_cov(2 * k, 2 * k) = c.v11;
    input_cov(2 * k, 2 * k + 1) = c.v12;
    input_cov(2 * k + 1, 2 * k) = c.v12;
    input_cov(2 * k + 1, 2 * k + 1) = c.v22;
    mean_in.row(k) = input.means[static_cast<std::size_t>(k)].transpose();
  }

  // Zero phases act identically on both quadratures: S = M (x) I2.
  Eigen::MatrixXd symplectic = Eigen::MatrixXd::Zero(2 * m, 2 * m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      symplectic(2 * i, 2 * j) = transform(i, j);
      symplectic(2 * i + 1, 2 * j + 1) = transform(i, j);
    }
  }

  PropagatedEnsemble out;
  out.joint_covariance = symplectic * input_cov * symplectic.transpose();
  const Eigen::MatrixXd mean_out = transform * mean_in;
  out.means.reserve(modes);
  for (Eigen::Index k = 0; k < m; ++k) out.means.emplace_back(mean_out(k, 0), mean_out(k, 1));

  const auto rx = static_cast<Eigen::Index>(net.receiver_mode());
  out.receiver_mean = out.means[net.receiver_mode()];
  out.receiver = {out.joint_covariance(2 * rx, 2 * rx), out.joint_covariance(2 * rx + 1, 2 * rx + 1),
                  out.joint_covariance(2 * rx, 2 * rx + 1)};
  return out;
}

ModeEnsemble two_user_inputs(const PhotonBudget& budget, const ChannelParams& params) {
  const auto covs = input_covariances(budget, params);
  return {{Eigen::Vector2d::Zero(), Eigen::Vector2d::Zero(), Eigen::Vector2d::Zero()},
          {covs.alice, covs.bob, covs.environment}};
}

double total_mean_photons(std::span<const Eigen::Vector2d> means, const Eigen::MatrixXd& joint_covariance) {
  double total = 0.0;
  for (std::size_t k = 0; k < means.size(); ++k) {
    const auto i = static_cast<Eigen::Index>(2 * k);
    total += means[k].squaredNorm() + joint_covariance(i, i) + joint_covariance(i + 1, i + 1) -
             2.0 * kVacuumVariance;
  }
  return total;
}

namespace {

struct QuadratureMoments {
  double sum_x = 0.0, sum_xx = 0.0, sum_z = 0.0, sum_zz = 0.0;
  std::size_t n = 0;

  void add(double x, double z) {
    sum_x += x;
    sum_xx += x * x;
    sum_z += z;
    sum_zz += z * z;
    ++n;
  }
  void merge(const QuadratureMoments& o) {
    sum_x += o.sum_x;
    sum_xx += o.sum_xx;
    sum_z += o.sum_z;
    sum_zz += o.sum_zz;
    n += o.n;
  }
  static double variance(double s, double ss, std::size_t n) {
    const double mean = s / static_cast<double>(n);
    return std::max(0.0, ss / static_cast<double>(n) - mean * mean);
  }
  // 1/2 log2(1 + S/N) for the channel y = x + z.
  double bits() const {
    const double signal = variance(sum_x, sum_xx, n);
    const double noise = variance(sum_z, sum_zz, n);
    if (signal == 0.0) return 0.0;
    return 0.5 * std::log1p(signal / noise) / std::numbers::ln2;
  }
};

constexpr std::size_t kBatches = 100;

}  // namespace

McEstimate mc_heterodyne_rate(const ChannelParams& params, const PhotonBudget& budget,
                              std::size_t num_samples, std::uint64_t seed) {
  params.validate();
  budget.validate();
  if (budget.r_a != 0.0) throw ValidationError("ra", "heterodyne estimate needs coherent inputs (ra = 0)");
  if (budget.r_b != 0.0) throw ValidationError("rb", "heterodyne estimate needs coherent inputs (rb = 0)");
  if (num_samples < kMinMcSamples) {
    throw ValidationError("samples", "need at least " + std::to_string(kMinMcSamples) + " samples");
  }

  const auto net = BeamsplitterNetwork::two_user(params);
  const Eigen::MatrixXd transform = mode_transform(net);
  const auto rx = static_cast<Eigen::Index>(net.receiver_mode());
  const double gain_a = transform(rx, 0);
  const double gain_b = transform(rx, 1);
  const CovMatrix2 state = propagate(net, two_user_inputs(budget, params)).receiver;

  // Displacement quadratures are N(0, n/2) each, E|alpha|^2 = n.
  const double sd_a = std::sqrt(budget.n_a / 2.0);
  const double sd_b = std::sqrt(budget.n_b / 2.0);
  const double sd_noise_q = std::sqrt(state.v11 + kVacuumVariance);
  const double sd_noise_p = std::sqrt(state.v22 + kVacuumVariance);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> unit(0.0, 1.0);

  std::array<QuadratureMoments, 2> total{};
  std::vector<double> batch_bits;
  batch_bits.reserve(kBatches);
  for (std::size_t b = 0; b < kBatches; ++b) {
    const std::size_t begin = b * num_samples / kBatches;
    const std::size_t end = (b + 1) * num_samples / kBatches;
    std::array<QuadratureMoments, 2> batch{};
    for (std::size_t i = begin; i < end; ++i) {
      const double aq = sd_a * unit(rng), ap = sd_a * unit(rng);
      const double bq = sd_b * unit(rng), bp = sd_b * unit(rng);
      const double zq = sd_noise_q * unit(rng), zp = sd_noise_p * unit(rng);
      batch[0].add(gain_a * aq + gain_b * bq, zq);
      batch[1].add(gain_a * ap + gain_b * bp, zp);
    }
    batch_bits.push_back(batch[0].bits() + batch[1].bits());
    total[0].merge(batch[0]);
    total[1].merge(batch[1]);
  }

  double mean = 0.0;
  for (double v : batch_bits) mean += v;
  mean /= static_cast<double>(kBatches);
  double ss = 0.0;
  for (double v : batch_bits) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / static_cast<double>(kBatches - 1));

  return {total[0].bits() + total[1].bits(), sd / std::sqrt(static_cast<double>(kBatches)), num_samples};
}

}  // namespace bmac
