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

#include "bosonic_mac/rates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bmac {

namespace {

void require_signal(double n) {
  if (!(n >= 0.0)) throw ValidationError("n", "received signal photons must be >= 0");
}

struct CovGeometry {
  double mean;      // (V1 + V2) / 2
  double spread;    // sqrt(((V1 - V2)/2)^2 + V12^2)
  double spread2;   // spread^2
  double sqrt_det;  // sqrt(V1 V2 - V12^2)
};

CovGeometry geometry(const CovMatrix2& v) {
  const double half_diff = 0.5 * (v.v11 - v.v22);
  const double spread2 = half_diff * half_diff + v.v12 * v.v12;
  return {0.5 * (v.v11 + v.v22), std::sqrt(spread2), spread2, std::sqrt(std::max(0.0, v.det()))};
}

double homodyne_rate(const ChannelParams& params, double n_alpha, double n_beta, double r_a, double r_b) {
  if (params.eta1 == 0.0) throw ValidationError("eta1", "homodyne rate is referenced to eta1 and needs eta1 > 0");
  if (params.eta2 == 0.0) throw ValidationError("eta2", "homodyne rate needs eta2 > 0");
  const double k = (1.0 - params.eta1) / params.eta1;
  const double noise = std::exp(2.0 * r_a) + k * std::exp(2.0 * r_b) +
                       (1.0 - params.eta2) * (1.0 + 2.0 * params.n_thermal) / (params.eta1 * params.eta2);
  return 0.5 * std::log1p(4.0 * (n_alpha + k * n_beta) / noise) / std::numbers::ln2;
}

double heterodyne_rate(const ChannelParams& params, double n_a, double n_b) {
  if (params.eta2 == 0.0) throw ValidationError("eta2", "heterodyne rate needs eta2 > 0");
  const double signal = params.eta1 * n_a + (1.0 - params.eta1) * n_b;
  const double noise = 1.0 + (1.0 - params.eta2) * (1.0 + 2.0 * params.n_thermal) / params.eta2;
  return std::log1p(signal / noise) / std::numbers::ln2;
}

void require_coherent(const PhotonBudget& budget) {
  if (budget.r_a != 0.0) throw ValidationError("ra", "heterodyne rates assume coherent inputs (ra = 0)");
  if (budget.r_b != 0.0) throw ValidationError("rb", "heterodyne rates assume coherent inputs (rb = 0)");
}

}  // namespace

const char* to_string(Branch branch) { return branch == Branch::One ? "branch1" : "branch2"; }
const char* to_string(Receiver receiver) { return receiver == Receiver::Homodyne ? "homodyne" : "heterodyne"; }

double big_g11(double n, const CovMatrix2& v) {
  require_signal(n);
  return g_entropy(v.v11 + v.v22 + n - 0.5);
}

double big_g12(double n, const CovMatrix2& v) {
  require_signal(n);
  const double spread = std::sqrt(std::pow((v.v11 - v.v22) / 2.0, 2) + v.v12 * v.v12);
  const double inner = -std::pow(spread - n / 2.0, 2) + std::pow((v.v11 + v.v22 + n) / 2.0, 2);
  return g_entropy(2.0 * std::sqrt(inner) - 0.5);
}

double big_g12_diagonal(double n, const CovMatrix2& v) {
  require_signal(n);
  if (v.v12 != 0.0) throw std::invalid_argument("big_g12_diagonal needs v12 = 0");
  const double hi = std::max(v.v11, v.v22);
  const double lo = std::min(v.v11, v.v22);
  return g_entropy(2.0 * std::sqrt(hi * (lo + n)) - 0.5);
}

double big_g2(const CovMatrix2& v) { return g_entropy(2.0 * std::sqrt(v.det()) - 0.5); }

double branch_threshold(const CovMatrix2& v) {
  const double d = v.v11 - v.v22;
  return std::sqrt(d * d + 4.0 * v.v12 * v.v12);
}

double max_rate_on_branch(double n, const CovMatrix2& v, Branch branch) {
  require_signal(n);
  const CovGeometry geo = geometry(v);
  const double base = 2.0 * geo.sqrt_det - 0.5;
  double delta = 0.0;
  if (branch == Branch::One) {
    // (V1 + V2 + N - 1/2) - base = N + 2 (mean - sqrt_det), and
    // mean - sqrt_det = spread^2 / (mean + sqrt_det) exactly.
    delta = n + 2.0 * geo.spread2 / (geo.mean + geo.sqrt_det);
  } else {
    // The G12 radicand factors as det + N (mean + spread), so the increment over
    // the G2 argument is 2 N (mean + spread) / (sqrt(radicand) + sqrt_det).
    const double radicand = geo.sqrt_det * geo.sqrt_det + n * (geo.mean + geo.spread);
    const double sum = std::sqrt(radicand) + geo.sqrt_det;
    delta = sum > 0.0 ? 2.0 * n * (geo.mean + geo.spread) / sum : 0.0;
  }
  return std::max(0.0, g_increment(std::max(0.0, base), delta));
}

BranchedRate max_rate(double n, const CovMatrix2& v) {
  const Branch branch = n >= branch_threshold(v) ? Branch::One : Branch::Two;
  return {max_rate_on_branch(n, v, branch), branch};
}

BranchedRate individual_rate(const ChannelParams& params, const PhotonBudget& budget, User user) {
  params.validate();
  budget.validate();
  return max_rate(received_photons(budget, params).of(user), receiver_covariance(budget, params));
}

BranchedRate sum_rate(const ChannelParams& params, const PhotonBudget& budget) {
  params.validate();
  budget.validate();
  return max_rate(received_photons(budget, params).total(), receiver_covariance(budget, params));
}

RateBundle max_rates(const ChannelParams& params, const PhotonBudget& budget) {
  params.validate();
  budget.validate();
  const CovMatrix2 v = receiver_covariance(budget, params);
  const ReceivedPhotons n = received_photons(budget, params);
  const BranchedRate a = max_rate(n.alice, v);
  const BranchedRate b = max_rate(n.bob, v);
  const BranchedRate ab = max_rate(n.total(), v);
  return {a.bits, b.bits, ab.bits, a.branch, b.branch, ab.branch};
}

double point_to_point(double signal, double noise) {
  if (!(signal >= 0.0)) throw ValidationError("x", "signal photons must be >= 0");
  if (!(noise >= 0.0)) throw ValidationError("y", "noise photons must be >= 0");
  return std::max(0.0, g_increment(noise, signal));
}

double single_user_capacity(const ChannelParams& params, const PhotonBudget& budget, User user) {
  params.validate();
  const double weight = user == User::Alice ? params.eta1 * params.eta2 : (1.0 - params.eta1) * params.eta2;
  const double n = user == User::Alice ? budget.n_a : budget.n_b;
  return point_to_point(weight * n, (1.0 - params.eta2) * params.n_thermal);
}

double outer_bound(const ChannelParams& params, const PhotonBudget& budget, User user) {
  params.validate();
  const double n = user == User::Alice ? budget.n_a : budget.n_b;
  return point_to_point(params.eta2 * n, (1.0 - params.eta2) * params.n_thermal);
}

double sum_rate_capacity_coherent(const ChannelParams& params, const PhotonBudget& budget) {
  params.validate();
  const double signal = params.eta2 * (params.eta1 * budget.n_a + (1.0 - params.eta1) * budget.n_b);
  return point_to_point(signal, (1.0 - params.eta2) * params.n_thermal);
}

double homodyne_sum_rate(const ChannelParams& params, const PhotonBudget& budget) {
  params.validate();
  budget.validate();
  return homodyne_rate(params, budget.displacement_a(), budget.displacement_b(), budget.r_a, budget.r_b);
}

double heterodyne_sum_rate(const ChannelParams& params, const PhotonBudget& budget) {
  params.validate();
  budget.validate();
  require_coherent(budget);
  return heterodyne_rate(params, budget.n_a, budget.n_b);
}

double receiver_individual_rate(const ChannelParams& params, const PhotonBudget& budget, Receiver receiver,
                                User user) {
  params.validate();
  budget.validate();
  const bool alice = user == User::Alice;
  if (receiver == Receiver::Heterodyne) {
    require_coherent(budget);
    return heterodyne_rate(params, alice ? budget.n_a : 0.0, alice ? 0.0 : budget.n_b);
  }
  return homodyne_rate(params, alice ? budget.displacement_a() : 0.0, alice ? 0.0 : budget.displacement_b(),
                       budget.r_a, budget.r_b);
}

}  // namespace bmac
