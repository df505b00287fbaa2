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

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "bosonic_mac/network.hpp"
#include "bosonic_mac/rates.hpp"

using namespace bmac;
using doctest::Approx;

namespace {

/// Coherent heterodyne rate with one vacuum unit of detection noise per
/// quadrature, written out from the receiver statistics.
double vacuum_noise_heterodyne(const ChannelParams& p, double n_a, double n_b) {
  const double signal = p.eta2 * (p.eta1 * n_a + (1.0 - p.eta1) * n_b);
  return std::log2(1.0 + signal / (1.0 + (1.0 - p.eta2) * p.n_thermal));
}

}  // namespace

TEST_CASE("mode transform is orthogonal") {
  const std::array<double, 6> t{0.3, 0.8, 0.5, 0.1, 0.9, 0.6};
  const Eigen::MatrixXd m = mode_transform(BeamsplitterNetwork::canonical(3, t));
  CHECK((m * m.transpose() - Eigen::MatrixXd::Identity(4, 4)).norm() < 1e-14);
}

TEST_CASE("two-user network has the expected receiver gains") {
  const ChannelParams p{0.3, 0.8, 1.0};
  const Eigen::MatrixXd m = mode_transform(BeamsplitterNetwork::two_user(p));
  CHECK(m(0, 0) == Approx(std::sqrt(0.3 * 0.8)));
  CHECK(m(0, 1) == Approx(std::sqrt(0.7 * 0.8)));
  CHECK(m(0, 2) == Approx(std::sqrt(0.2)));
}

TEST_CASE("simulated receiver covariance equals the closed form") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const ChannelParams p{unit(rng), unit(rng), 10.0 * unit(rng)};
    const double r_a = 4.0 * unit(rng) - 2.0, r_b = 4.0 * unit(rng) - 2.0;
    const PhotonBudget b{squeezing_cost(r_a) + 1.0, squeezing_cost(r_b) + 1.0, r_a, r_b};
    const CovMatrix2 closed = receiver_covariance(b, p);
    const CovMatrix2 sim = propagate(BeamsplitterNetwork::two_user(p, unit(rng)), two_user_inputs(b, p)).receiver;
    CHECK(sim.v11 == Approx(closed.v11).epsilon(1e-12));
    CHECK(sim.v22 == Approx(closed.v22).epsilon(1e-12));
    CHECK(std::abs(sim.v12) < 1e-15);
  }
}

TEST_CASE("passive networks conserve photons") {
  const std::array<double, 6> t{0.3, 0.8, 0.5, 0.1, 0.9, 0.6};
  const BeamsplitterNetwork net = BeamsplitterNetwork::canonical(3, t);
  ModeEnsemble in;
  in.means = {Eigen::Vector2d(1.0, -0.5), Eigen::Vector2d(0.0, 2.0), Eigen::Vector2d(0.3, 0.3),
              Eigen::Vector2d::Zero()};
  in.covs = {CovMatrix2::diagonal(0.25 * std::exp(1.0), 0.25 * std::exp(-1.0)), CovMatrix2::vacuum(),
             CovMatrix2::thermal(2.0), CovMatrix2::thermal(0.5)};
  const PropagatedEnsemble out = propagate(net, in);
  Eigen::MatrixXd joint_in = Eigen::MatrixXd::Zero(8, 8);
  for (int k = 0; k < 4; ++k) {
    joint_in(2 * k, 2 * k) = in.covs[k].v11;
    joint_in(2 * k + 1, 2 * k + 1) = in.covs[k].v22;
  }
  CHECK(total_mean_photons(out.means, out.joint_covariance) ==
        Approx(total_mean_photons(in.means, joint_in)).epsilon(1e-13));
  const Eigen::MatrixXd m = mode_transform(net);
  Eigen::Vector2d expected = Eigen::Vector2d::Zero();
  for (int k = 0; k < 4; ++k) expected += m(0, k) * in.means[k];
  CHECK((out.receiver_mean - expected).norm() < 1e-14);
}

TEST_CASE("network construction rejects malformed layouts") {
  CHECK_THROWS_AS(BeamsplitterNetwork(3, {{0.5, 0.0, 0, 3}}, 0), std::out_of_range);
  CHECK_THROWS_AS(BeamsplitterNetwork(3, {{0.5, 0.0, 1, 1}}, 0), std::invalid_argument);
  CHECK_THROWS_AS(BeamsplitterNetwork(3, {{1.5, 0.0, 0, 1}}, 0), std::invalid_argument);
  CHECK_THROWS_AS(BeamsplitterNetwork(3, {}, 5), std::out_of_range);
  const std::array<double, 2> two{0.5, 0.5};
  CHECK_THROWS_AS(BeamsplitterNetwork::canonical(2, two), std::invalid_argument);
  ModeEnsemble short_input;
  short_input.means = {Eigen::Vector2d::Zero()};
  short_input.covs = {CovMatrix2::vacuum()};
  CHECK_THROWS_AS(propagate(BeamsplitterNetwork::two_user(ChannelParams{}), short_input), std::invalid_argument);
}

TEST_CASE("Monte-Carlo heterodyne estimate is seed-deterministic") {
  const ChannelParams p{0.5, 0.9, 1.0};
  const PhotonBudget b = PhotonBudget::coherent(2.0, 3.0);
  const McEstimate a = mc_heterodyne_rate(p, b, 20'000, 42);
  const McEstimate c = mc_heterodyne_rate(p, b, 20'000, 42);
  const McEstimate d = mc_heterodyne_rate(p, b, 20'000, 43);
  CHECK(a.rate_bits == c.rate_bits);
  CHECK(a.std_error == c.std_error);
  CHECK(a.rate_bits != d.rate_bits);
  CHECK(a.samples == 20'000);
}

TEST_CASE("Monte-Carlo heterodyne matches the closed form on a vacuum environment") {
  const ChannelParams p{0.25, 0.9, 0.0};
  const PhotonBudget b = PhotonBudget::coherent(1.0, 1000.0);
  const McEstimate mc = mc_heterodyne_rate(p, b, 200'000, 9);
  CHECK(std::abs(mc.rate_bits - heterodyne_sum_rate(p, b)) < 3.0 * mc.std_error);
}

TEST_CASE("Monte-Carlo heterodyne matches the vacuum-noise receiver model") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 5; ++i) {
    const ChannelParams p{unit(rng), 0.2 + 0.8 * unit(rng), 5.0 * unit(rng)};
    const double n_a = 20.0 * unit(rng), n_b = 20.0 * unit(rng);
    const McEstimate mc = mc_heterodyne_rate(p, PhotonBudget::coherent(n_a, n_b), 100'000, 100 + i);
    CHECK(std::abs(mc.rate_bits - vacuum_noise_heterodyne(p, n_a, n_b)) < 4.0 * mc.std_error);
  }
}

TEST_CASE("closed-form heterodyne rate departs from the simulated receiver on a thermal environment") {
  const ChannelParams p{0.25, 0.9, 1.0};
  const PhotonBudget b = PhotonBudget::coherent(1.0, 1000.0);
  const McEstimate mc = mc_heterodyne_rate(p, b, 1'000'000, 1);
  CHECK(std::abs(mc.rate_bits - vacuum_noise_heterodyne(p, 1.0, 1000.0)) < 3.0 * mc.std_error);
  CHECK(std::abs(mc.rate_bits - heterodyne_sum_rate(p, b)) > 3.0 * mc.std_error);
}

TEST_CASE("Monte-Carlo heterodyne input checks") {
  const ChannelParams p;
  CHECK_THROWS_AS(mc_heterodyne_rate(p, PhotonBudget{2.0, 2.0, 0.5, 0.0}, 20'000, 1), ValidationError);
  CHECK_THROWS_AS(mc_heterodyne_rate(p, PhotonBudget::coherent(1, 1), 100, 1), ValidationError);
}
