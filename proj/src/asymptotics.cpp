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

#include "bosonic_mac/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "bosonic_mac/scalar_search.hpp"

namespace bmac {

namespace {

constexpr double kHomodyneSearchLimit = 10.0;
constexpr double kHomodyneSearchTol = 1e-8;

std::vector<double> or_default(std::span<const double> schedule, std::vector<double> fallback) {
  if (schedule.empty()) return fallback;
  return {schedule.begin(), schedule.end()};
}

void require_strictly_monotone(const std::vector<double>& schedule) {
  if (schedule.size() < 2) throw std::invalid_argument("a limit schedule needs at least two points");
  const bool up = schedule[1] > schedule[0];
  for (std::size_t i = 1; i < schedule.size(); ++i) {
    if (up ? !(schedule[i] > schedule[i - 1]) : !(schedule[i] < schedule[i - 1])) {
      throw std::invalid_argument("limit schedule must be strictly monotone");
    }
  }
}

LimitProbe make_probe(std::string lemma, std::vector<double> schedule, double target, double final_gap) {
  require_strictly_monotone(schedule);
  LimitProbe probe;
  probe.lemma = std::move(lemma);
  probe.schedule = std::move(schedule);
  probe.target = target;
  probe.tolerances.final_gap = final_gap;
  probe.ratios.reserve(probe.schedule.size());
  return probe;
}

// Numerator / denominator, with 0/0 read as 0 (no signal, no rate).
double safe_ratio(double num, double den) {
  if (num == 0.0) return 0.0;
  return num / den;
}

}  // namespace

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Converged: return "converged";
    case Verdict::Diverged: return "diverged";
    case Verdict::Skipped: return "skipped";
  }
  return "diverged";
}

void certify(LimitProbe& probe) {
  if (probe.verdict == Verdict::Skipped) return;
  if (probe.ratios.empty() || probe.ratios.size() != probe.schedule.size()) {
    throw std::invalid_argument("probe ratios do not match its schedule");
  }
  const auto distance = [&](double r) { return std::abs(r - probe.target); };
  bool finite = std::all_of(probe.ratios.begin(), probe.ratios.end(), [](double r) { return std::isfinite(r); });
  probe.gap = distance(probe.ratios.back());

  bool monotone = true;
  const std::size_t n = probe.ratios.size();
  const std::size_t window = std::min(probe.tolerances.monotone_window, n);
  for (std::size_t i = n - window + 1; i < n; ++i) {
    if (distance(probe.ratios[i]) > distance(probe.ratios[i - 1]) + probe.tolerances.resolution) {
      monotone = false;
    }
  }
  probe.verdict = finite && monotone && probe.gap < probe.tolerances.final_gap ? Verdict::Converged
                                                                             : Verdict::Diverged;
  if (!finite) probe.note += "non-finite ratio; ";
  if (!monotone) probe.note += "approach not monotone over the final window; ";
}

std::vector<double> geometric_schedule(double start, double factor, std::size_t points) {
  std::vector<double> out;
  out.reserve(points);
  for (std::size_t i = 0; i < points; ++i) out.push_back(start * std::pow(factor, static_cast<double>(i)));
  return out;
}

std::vector<double> decade_schedule(int first, int last) {
  std::vector<double> out;
  const int step = last >= first ? 1 : -1;
  for (int k = first;; k += step) {
    out.push_back(std::stod("1e" + std::to_string(k)));
    if (k == last) break;
  }
  return out;
}

std::vector<double> high_power_schedule() { return decade_schedule(0, 8); }
std::vector<double> low_power_schedule() { return decade_schedule(2, -6); }

double lemma1_ratio(double n_user, const ChannelParams& params, User user) {
  if (!(n_user > 0.0)) throw ValidationError(user == User::Alice ? "na" : "nb", "photon number must be > 0");
  const PhotonBudget budget = user == User::Alice ? PhotonBudget::coherent(n_user, 0.0)
                                                  : PhotonBudget::coherent(0.0, n_user);
  return receiver_individual_rate(params, budget, Receiver::Heterodyne, user) / outer_bound(params, budget, user);
}

LimitProbe lemma1_probe(const ChannelParams& params, User user, std::span<const double> schedule) {
  LimitProbe probe = make_probe(user == User::Alice ? "lemma1-alice" : "lemma1-bob",
                                or_default(schedule, high_power_schedule()), 1.0, kLemma1Tolerance);
  for (double n : probe.schedule) probe.ratios.push_back(lemma1_ratio(n, params, user));
  certify(probe);
  return probe;
}

HomodyneRatio homodyne_asymptotic_ratio(double n_a, double n_b, const ChannelParams& params) {
  params.validate();
  if (!(n_a >= 0.0)) throw ValidationError("na", "na must be >= 0");
  if (!(n_b >= 0.0)) throw ValidationError("nb", "nb must be >= 0");
  if (n_a == 0.0) return {};
  const double r_b = squeeze_for_cost(n_b, -1);
  const double bound = outer_bound(params, PhotonBudget::coherent(n_a, 0.0), User::Alice);
  const double reach = std::min(kHomodyneSearchLimit, std::asinh(std::sqrt(n_a)));
  const auto rate = [&](double r_a) {
    const double r = std::clamp(r_a, -reach, reach);
    return homodyne_sum_rate(params, PhotonBudget{n_a, n_b, r, r_b});
  };
  const ScalarOptimum best = golden_section_maximize(rate, -reach, reach, kHomodyneSearchTol);
  return {safe_ratio(best.value, bound), best.x, best.value};
}

LimitProbe homodyne_half_probe(const ChannelParams& params, std::span<const double> schedule) {
  LimitProbe probe = make_probe("homodyne-half", or_default(schedule, decade_schedule(-2, 6)), 0.5,
                                kHomodyneHalfTolerance);
  probe.inner_schedule = probe.schedule;
  for (double n : probe.schedule) {
    const HomodyneRatio h = homodyne_asymptotic_ratio(n, n, params);
    probe.ratios.push_back(h.ratio);
    probe.optimal_r_a.push_back(h.best_r_a);
  }
  certify(probe);
  return probe;
}

LimitProbe homodyne_pure_loss_probe(double eta1, std::span<const double> schedule) {
  const ChannelParams pure_loss{eta1, 1.0, 0.0};
  LimitProbe probe = make_probe("homodyne-pure-loss", or_default(schedule, high_power_schedule()), 1.0,
                                kPureLossHomodyneTolerance);
  probe.inner_schedule = probe.schedule;
  for (double n : probe.schedule) {
    const HomodyneRatio h = homodyne_asymptotic_ratio(n, n, pure_loss);
    probe.ratios.push_back(h.ratio);
    probe.optimal_r_a.push_back(h.best_r_a);
  }
  certify(probe);
  return probe;
}

LimitProbe lemma2_case1(const ChannelParams& params, std::span<const double> schedule) {
  LimitProbe probe = make_probe("lemma2-case1", or_default(schedule, low_power_schedule()), 1.0, kLemma2Tolerance);
  for (double n_a : probe.schedule) {
    const double n_b = kInnerDepth * n_a;
    probe.inner_schedule.push_back(n_b);
    const PhotonBudget budget = PhotonBudget::coherent(n_a, n_b);
    const BranchedRate r = individual_rate(params, budget, User::Alice);
    probe.branches.push_back(r.branch);
    probe.ratios.push_back(safe_ratio(r.bits, single_user_capacity(params, budget, User::Alice)));
  }
  certify(probe);
  return probe;
}

LimitProbe lemma2_case2(const ChannelParams& params, std::span<const double> schedule) {
  LimitProbe probe = make_probe("lemma2-case2", or_default(schedule, low_power_schedule()), 1.0, kLemma2Tolerance);
  for (double n_b : probe.schedule) {
    const double n_a = kInnerDepth * n_b;
    probe.inner_schedule.push_back(n_a);
    const PhotonBudget budget{n_a, n_b, 0.0, squeeze_for_cost(n_b)};
    const BranchedRate r = individual_rate(params, budget, User::Alice);
    probe.branches.push_back(r.branch);
    probe.ratios.push_back(safe_ratio(r.bits, single_user_capacity(params, budget, User::Alice)));
  }
  certify(probe);
  const bool branch2 =
      std::all_of(probe.branches.begin(), probe.branches.end(), [](Branch b) { return b == Branch::Two; });
  if (!branch2) {
    probe.verdict = Verdict::Diverged;
    probe.note += "branch2 not active at every point; ";
  }
  return probe;
}

void CaseThreeConfig::validate() const {
  if (!(a > 0.0) || !std::isfinite(a)) throw ValidationError("a", "a must be > 0");
  if (!(b > 0.0) || !std::isfinite(b)) throw ValidationError("b", "b must be > 0");
  if (!(kappa >= 0.0 && kappa <= 1.0)) throw ValidationError("kappa", "kappa must lie in [0, 1]");
  if (!(p_a >= 0.0 && p_a <= 1.0)) throw ValidationError("pa-disp", "displacement fraction must lie in [0, 1]");
}

double b_max_a1(double a, double n, const ChannelParams& params) {
  params.validate();
  if (params.eta1 == 1.0) throw std::domain_error("b_max_a1 is unbounded for eta1 = 1 (Bob is decoupled)");
  if (!(n > 0.0)) throw ValidationError("n", "n must be > 0");
  const double e1 = params.eta1;
  const double lossy = 1.0 - e1;
  const double s = 2.0 * e1 * a * n;
  // (-lossy + sqrt(lossy^2 + s^2)) / (2 lossy n), rationalised.
  return s * s / (2.0 * lossy * n * (std::sqrt(lossy * lossy + s * s) + lossy));
}

namespace {

double branch_one_margin(double a, double b, double n, const ChannelParams& params) {
  const PhotonBudget budget{a * n, b * n, 0.0, squeeze_for_cost(b * n)};
  const CovMatrix2 v = receiver_covariance(budget, params);
  return received_photons(budget, params).alice - std::abs(v.v11 - v.v22);
}

}  // namespace

BMaxCheck check_b_max_a1(double a, double n, const ChannelParams& params) {
  BMaxCheck check;
  check.n = n;
  check.closed_form = b_max_a1(a, n, params);
  const auto margin = [&](double b) { return branch_one_margin(a, b, n, params); };
  double hi = 1.0;
  while (margin(hi) > 0.0) hi *= 2.0;
  check.bisection = bisect_root(margin, 0.0, hi, 1e-15);
  check.relative_difference = std::abs(check.bisection - check.closed_form) / check.closed_form;
  const double n_c = params.eta1 * params.eta2 * a * n;
  check.constraint_residual = std::abs(margin(check.closed_form)) / n_c;
  return check;
}

CaseThreeResult lemma2_case3(const CaseThreeConfig& config, const ChannelParams& params,
                             std::span<const double> schedule) {
  config.validate();
  params.validate();
  CaseThreeResult out;
  out.branch1 = make_probe("lemma2-case3-branch1", or_default(schedule, low_power_schedule()), 1.0, kLemma2Tolerance);
  out.branch2 = make_probe("lemma2-case3-branch2", out.branch1.schedule, 1.0, kLemma2Tolerance);

  out.b_max_verified = true;
  for (double n : out.branch1.schedule) {
    const PhotonBudget alice_only = PhotonBudget::coherent(config.a * n, 0.0);
    const double c_a = single_user_capacity(params, alice_only, User::Alice);

    // Branch::One: Alice coherent, Bob squeezes kappa * b_max photons per n.
    const double b1 = config.kappa * b_max_a1(config.a, n, params);
    const PhotonBudget squeezed{config.a * n, b1 * n, 0.0, squeeze_for_cost(b1 * n)};
    const double rate1 = max_rate_on_branch(received_photons(squeezed, params).alice,
                                            receiver_covariance(squeezed, params), Branch::One);
    const double coherent1 = max_rate_on_branch(received_photons(alice_only, params).alice,
                                                receiver_covariance(alice_only, params), Branch::One);
    out.branch1.inner_schedule.push_back(b1 * n);
    out.branch1.branches.push_back(Branch::One);
    out.branch1.ratios.push_back(safe_ratio(rate1, c_a));
    out.squeeze_effect.push_back(std::abs(safe_ratio(rate1, c_a) - safe_ratio(coherent1, c_a)));

    // Branch::Two: Alice keeps a fraction p_a for displacement, Bob squeezes b*n.
    const PhotonBudget mixed{config.a * n, config.b * n, squeeze_from_displacement_fraction(config.a * n, config.p_a),
                             squeeze_for_cost(config.b * n)};
    const CovMatrix2 v = receiver_covariance(mixed, params);
    const double n_c = received_photons(mixed, params).alice;
    const double g11_coherent = big_g11(params.eta1 * params.eta2 * config.a * n, receiver_covariance(alice_only, params));
    out.branch2.inner_schedule.push_back(config.b * n);
    out.branch2.branches.push_back(max_rate(n_c, v).branch);
    out.branch2.ratios.push_back(safe_ratio(big_g12(n_c, v), g11_coherent));

    const BMaxCheck check = check_b_max_a1(config.a, n, params);
    out.b_max_verified = out.b_max_verified && check.relative_difference < kBMaxRootTolerance &&
                         check.constraint_residual < kBMaxRootTolerance;
    out.b_max_checks.push_back(check);
  }
  certify(out.branch1);
  certify(out.branch2);
  return out;
}

ReceiverGapResult receiver_gap_at_low_power(const ChannelParams& params, std::span<const double> schedule) {
  params.validate();
  ReceiverGapResult out;
  out.heterodyne = make_probe("receiver-gap-heterodyne", or_default(schedule, low_power_schedule()), 0.0,
                              kReceiverGapTolerance);
  out.homodyne = make_probe("receiver-gap-homodyne", out.heterodyne.schedule, 0.0, kReceiverGapTolerance);
  if (params.n_thermal == 0.0) {
    for (LimitProbe* p : {&out.heterodyne, &out.homodyne}) {
      p->verdict = Verdict::Skipped;
      p->note = "pure-loss channel (nt = 0) is outside this check";
    }
    return out;
  }
  for (double n : out.heterodyne.schedule) {
    const PhotonBudget budget = PhotonBudget::coherent(n, n);
    const double joint = individual_rate(params, budget, User::Alice).bits;
    out.heterodyne.ratios.push_back(
        safe_ratio(receiver_individual_rate(params, budget, Receiver::Heterodyne, User::Alice), joint));
    out.homodyne.ratios.push_back(
        safe_ratio(receiver_individual_rate(params, budget, Receiver::Homodyne, User::Alice), joint));
  }
  certify(out.heterodyne);
  certify(out.homodyne);
  return out;
}

}  // namespace bmac
