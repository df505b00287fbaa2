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

#include "bosonic_mac/gaussian_core.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace bmac {

namespace {

constexpr double kNegativeClampTol = 1e-12;
constexpr double kUnderflow = 1e-300;

void require_unit_interval(double value, const char* field) {
  if (!std::isfinite(value) || value < 0.0 || value > 1.0) {
    throw ValidationError(field, std::string(field) + " must lie in [0, 1]");
  }
}

void require_non_negative(double value, const char* field) {
  if (!std::isfinite(value) || value < 0.0) {
    throw ValidationError(field, std::string(field) + " must be a finite value >= 0");
  }
}

double displacement(double n, double r, const char* field) {
  const double cost = squeezing_cost(r);
  const double left = n - cost;
  if (left >= 0.0) return left;
  if (cost <= n * (1.0 + kBudgetRelTol)) return 0.0;
  throw ValidationError(field, std::string("squeezing ") + field + " costs " + std::to_string(cost) +
                                   " photons, more than the budget " + std::to_string(n));
}

}  // namespace

ValidationError::ValidationError(std::string field, const std::string& message)
    : std::invalid_argument(message), field_(std::move(field)) {}

const char* to_string(User user) { return user == User::Alice ? "alice" : "bob"; }

void ChannelParams::validate() const {
  require_unit_interval(eta1, "eta1");
  require_unit_interval(eta2, "eta2");
  require_non_negative(n_thermal, "nt");
}

double PhotonBudget::displacement_a() const { return displacement(n_a, r_a, "ra"); }
double PhotonBudget::displacement_b() const { return displacement(n_b, r_b, "rb"); }

void PhotonBudget::validate() const {
  require_non_negative(n_a, "na");
  require_non_negative(n_b, "nb");
  if (!std::isfinite(r_a)) throw ValidationError("ra", "ra must be finite");
  if (!std::isfinite(r_b)) throw ValidationError("rb", "rb must be finite");
  (void)displacement_a();
  (void)displacement_b();
}

CovMatrix2 CovMatrix2::thermal(double n_mean) {
  const double v = kVacuumVariance * (2.0 * n_mean + 1.0);
  return diagonal(v, v);
}

bool CovMatrix2::is_physical(double rel_tol) const noexcept {
  constexpr double kMinDet = kVacuumVariance * kVacuumVariance;
  return v11 > 0.0 && v22 > 0.0 && det() >= kMinDet * (1.0 - rel_tol);
}

void SqueezeFractions::validate() const {
  require_unit_interval(p_a, "pa");
  require_unit_interval(p_b, "pb");
  if (sign_a != 1 && sign_a != -1) throw ValidationError("sign-a", "sign-a must be +1 or -1");
  if (sign_b != 1 && sign_b != -1) throw ValidationError("sign-b", "sign-b must be +1 or -1");
}

PhotonBudget SqueezeFractions::to_budget(double n_a, double n_b) const {
  validate();
  return {n_a, n_b, squeeze_for_cost(p_a * n_a, sign_a), squeeze_for_cost(p_b * n_b, sign_b)};
}

double g_entropy(double x) {
  if (std::isnan(x) || x < -kNegativeClampTol) {
    throw ValidationError("x", "g_entropy argument " + std::to_string(x) + " is negative");
  }
  if (x < kUnderflow) return 0.0;
  // (1+x)ln(1+x) - x ln x == ln(1+x) + x ln(1 + 1/x).
  return (std::log1p(x) + x * std::log1p(1.0 / x)) / std::numbers::ln2;
}

double g_increment(double base, double delta) {
  if (std::isnan(base) || std::isnan(delta) || base < -kNegativeClampTol ||
      base + delta < -kNegativeClampTol) {
    throw ValidationError("x", "g_increment arguments leave the domain x >= 0");
  }
  if (delta == 0.0) return 0.0;
  if (delta < 0.0) return -g_increment(base + delta, -delta);
  if (base < kUnderflow) return g_entropy(base + delta);
  const double x = delta;
  const double y = base;
  const double nats =
      (1.0 + y) * std::log1p(x / (1.0 + y)) - y * std::log1p(x / y) + x * std::log1p(1.0 / (x + y));
  return nats / std::numbers::ln2;
}

double squeezing_cost(double r) {
  // cosh(2r)/2 - 1/2 == sinh(r)^2.
  const double s = std::sinh(r);
  return s * s;
}

double squeeze_for_cost(double photons, int sign) {
  require_non_negative(photons, "photons");
  return (sign < 0 ? -1.0 : 1.0) * std::asinh(std::sqrt(photons));
}

double squeeze_from_displacement_fraction(double n, double displacement_fraction, int sign) {
  require_unit_interval(displacement_fraction, "displacement fraction");
  return squeeze_for_cost((1.0 - displacement_fraction) * n, sign);
}

InputCovariances input_covariances(const PhotonBudget& budget, const ChannelParams& params) {
  const double ea = std::exp(2.0 * budget.r_a);
  const double eb = std::exp(2.0 * budget.r_b);
  return {
      CovMatrix2::diagonal(kVacuumVariance * ea, kVacuumVariance / ea),
      CovMatrix2::diagonal(kVacuumVariance * eb, kVacuumVariance / eb),
      CovMatrix2::thermal(params.n_thermal),
  };
}

CovMatrix2 receiver_covariance(const PhotonBudget& budget, const ChannelParams& params) {
  const double wa = params.eta1 * params.eta2;
  const double wb = (1.0 - params.eta1) * params.eta2;
  const double env = (1.0 - params.eta2) * (2.0 * params.n_thermal + 1.0);
  const double ea = std::exp(2.0 * budget.r_a);
  const double eb = std::exp(2.0 * budget.r_b);
  return CovMatrix2::diagonal(kVacuumVariance * (wa * ea + wb * eb + env),
                              kVacuumVariance * (wa / ea + wb / eb + env));
}

ReceivedPhotons received_photons(const PhotonBudget& budget, const ChannelParams& params) {
  return {params.eta1 * params.eta2 * budget.displacement_a(),
          (1.0 - params.eta1) * params.eta2 * budget.displacement_b()};
}

}  // namespace bmac
