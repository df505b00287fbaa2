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

#include "bosonic_mac/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <spdlog/spdlog.h>

#include "bosonic_mac/network.hpp"
#include "bosonic_mac/rates.hpp"
#include "bosonic_mac/region.hpp"
#include "bosonic_mac/scalar_search.hpp"

namespace bmac {

namespace {

class Draws {
 public:
  explicit Draws(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  ChannelParams channel(double max_thermal = 10.0) {
    return {uniform(0.0, 1.0), uniform(0.0, 1.0), uniform(0.0, max_thermal)};
  }

  /// Budget that covers the squeeze plus some displacement.
  PhotonBudget squeezed_budget(double max_r, double max_extra) {
    const double r_a = uniform(-max_r, max_r);
    const double r_b = uniform(-max_r, max_r);
    return {squeezing_cost(r_a) + uniform(0.0, max_extra), squeezing_cost(r_b) + uniform(0.0, max_extra), r_a, r_b};
  }

 private:
  std::mt19937_64 rng_;
};

double threshold_margin(const ChannelParams& params, PhotonBudget budget, double r_a) {
  budget.r_a = r_a;
  return received_photons(budget, params).alice - branch_threshold(receiver_covariance(budget, params));
}

std::string describe(const ChannelParams& p) {
  std::ostringstream os;
  os.precision(17);
  os << "eta1=" << p.eta1 << " eta2=" << p.eta2 << " nt=" << p.n_thermal;
  return os.str();
}

}  // namespace

VerifyCheck covariance_oracle_check(std::size_t draws, std::uint64_t seed, double tolerance) {
  VerifyCheck check{"covariance-oracle", false, 0.0, tolerance, {}};
  Draws rng(seed);
  for (std::size_t i = 0; i < draws; ++i) {
    const ChannelParams params = rng.channel();
    const PhotonBudget budget = rng.squeezed_budget(2.0, 5.0);
    const CovMatrix2 closed = receiver_covariance(budget, params);
    const CovMatrix2 sim =
        propagate(BeamsplitterNetwork::two_user(params, rng.uniform(0.0, 1.0)), two_user_inputs(budget, params))
            .receiver;
    const double scale = std::max({std::abs(closed.v11), std::abs(closed.v22), kVacuumVariance});
    const double err = std::max({std::abs(sim.v11 - closed.v11), std::abs(sim.v22 - closed.v22),
                                 std::abs(sim.v12 - closed.v12)}) /
                       scale;
    if (err > check.metric) {
      check.metric = err;
      check.detail = describe(params);
    }
  }
  check.passed = check.metric < tolerance;
  spdlog::debug("covariance oracle: worst relative error {:.3e} over {} draws", check.metric, draws);
  return check;
}

VerifyCheck mc_heterodyne_check(const ChannelParams& params, const PhotonBudget& budget, std::size_t samples,
                                std::uint64_t seed, double standard_errors) {
  VerifyCheck check{"mc-heterodyne", false, 0.0, standard_errors, {}};
  const McEstimate mc = mc_heterodyne_rate(params, budget, samples, seed);
  const double closed = heterodyne_sum_rate(params, budget);
  check.metric = std::abs(mc.rate_bits - closed) / mc.std_error;
  check.passed = check.metric < standard_errors;
  std::ostringstream os;
  os.precision(17);
  os << "mc=" << mc.rate_bits << " se=" << mc.std_error << " closed_form=" << closed;
  check.detail = os.str();
  spdlog::debug("mc heterodyne: {}", check.detail);
  return check;
}

std::vector<ContinuityPoint> branch_crossings(std::size_t draws, std::uint64_t seed) {
  Draws rng(seed);
  std::vector<ContinuityPoint> out;
  out.reserve(draws);
  while (out.size() < draws) {
    ContinuityPoint pt;
    pt.params = rng.channel(5.0);
    pt.budget = PhotonBudget::coherent(rng.uniform(0.01, 10.0), rng.uniform(0.0, 10.0));
    pt.budget.r_b = rng.uniform(-1.0, 1.0) * std::asinh(std::sqrt(pt.budget.n_b));
    const double r_top = std::asinh(std::sqrt(pt.budget.n_a));
    const auto margin = [&](double r_a) { return threshold_margin(pt.params, pt.budget, r_a); };
    if (!(margin(0.0) > 0.0) || !(margin(r_top) < 0.0) || pt.params.eta1 * pt.params.eta2 < 1e-3) continue;
    pt.budget.r_a = bisect_root(margin, 0.0, r_top, 1e-16);
    const CovMatrix2 v = receiver_covariance(pt.budget, pt.params);
    const double n = received_photons(pt.budget, pt.params).alice;
    pt.branch1 = max_rate_on_branch(n, v, Branch::One);
    pt.branch2 = max_rate_on_branch(n, v, Branch::Two);
    out.push_back(pt);
  }
  return out;
}

VerifyCheck continuity_check(std::size_t draws, std::uint64_t seed, double tolerance) {
  VerifyCheck check{"branch-continuity", false, 0.0, tolerance, {}};
  for (const ContinuityPoint& pt : branch_crossings(draws, seed)) {
    const double diff = std::abs(pt.branch1 - pt.branch2);
    if (diff > check.metric) {
      check.metric = diff;
      check.detail = describe(pt.params);
    }
  }
  check.passed = check.metric < tolerance;
  return check;
}

VerifyCheck containment_check(std::size_t draws, std::uint64_t seed, double slack) {
  VerifyCheck check{"outer-bound-containment", false, 0.0, slack, {}};
  Draws rng(seed);
  for (std::size_t i = 0; i < draws; ++i) {
    const ChannelParams params = rng.channel();
    const PhotonBudget budget = rng.squeezed_budget(1.5, 20.0);
    const Encoding encodings[] = {{0.0, 0.0}, {budget.r_a, budget.r_b}};
    const RateRegion region = build_region(params, budget.n_a, budget.n_b, encodings, false);
    const double ub_a = region.outer_box.r_a_max;
    const double ub_b = region.outer_box.r_b_max;
    for (const RatePoint& p : region.hull) {
      const double excess = std::max({p.r_a - ub_a, p.r_b - ub_b, -p.r_a, -p.r_b});
      if (excess > check.metric) {
        check.metric = excess;
        check.detail = describe(params);
      }
    }
  }
  check.passed = check.metric < slack;
  return check;
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

std::vector<std::string> VerifyReport::failing() const {
  std::vector<std::string> out;
  for (const VerifyCheck& c : checks) {
    if (!c.passed) out.push_back(c.name);
  }
  return out;
}

VerifyReport run_verification(const VerifyConfig& config) {
  VerifyReport report;
  report.checks.push_back(covariance_oracle_check(config.draws, config.seed, config.tolerance));
  report.checks.push_back(mc_heterodyne_check(config.params, config.budget, config.samples, config.seed));
  report.checks.push_back(continuity_check(std::max<std::size_t>(1, config.draws / 100), config.seed));
  report.checks.push_back(containment_check(config.draws, config.seed));
  return report;
}

}  // namespace bmac
