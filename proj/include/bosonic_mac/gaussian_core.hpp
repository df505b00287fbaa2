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

#ifndef BOSONIC_MAC_GAUSSIAN_CORE_HPP
#define BOSONIC_MAC_GAUSSIAN_CORE_HPP

#include <stdexcept>
#include <string>

namespace bmac {

/// Quadrature variance of the vacuum. Every covariance in the library is
/// expressed in these units, so a coherent state is diag(1/4, 1/4).
inline constexpr double kVacuumVariance = 0.25;

/// Slack allowed when a squeezing cost is compared against a photon budget,
/// relative to the budget. Absorbs the rounding in sinh(asinh(sqrt(n)))^2.
inline constexpr double kBudgetRelTol = 1e-12;

/// Thrown for out-of-domain inputs. `field()` names the offending parameter
/// using the command-line flag spelling (eta1, na, rb, ...).
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string field, const std::string& message);
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

enum class User { Alice, Bob };

const char* to_string(User user);

/// Lossy thermal channel seen by the receiver: Alice and Bob are combined on a
/// beamsplitter of transmissivity eta1, the result is mixed with a thermal
/// environment mode on a beamsplitter of transmissivity eta2.
struct ChannelParams {
  double eta1 = 0.5;
  double eta2 = 0.9;
  double n_thermal = 1.0;

  void validate() const;
};

/// Per-user mean photon budgets together with the squeezing each user applies.
/// Squeezing costs sinh^2(r) photons; the remainder drives the displacement.
struct PhotonBudget {
  double n_a = 0.0;
  double n_b = 0.0;
  double r_a = 0.0;
  double r_b = 0.0;

  static PhotonBudget coherent(double n_a, double n_b) { return {n_a, n_b, 0.0, 0.0}; }

  bool is_coherent() const noexcept { return r_a == 0.0 && r_b == 0.0; }

  /// Photons left for modulating the mean, clamped at zero inside the budget
  /// tolerance. Throws ValidationError when the squeeze overspends.
  double displacement_a() const;
  double displacement_b() const;

  void validate() const;
};

/// Single-mode quadrature covariance matrix [[v11, v12], [v12, v22]].
struct CovMatrix2 {
  double v11 = kVacuumVariance;
  double v22 = kVacuumVariance;
  double v12 = 0.0;

  static CovMatrix2 diagonal(double a, double b) { return {a, b, 0.0}; }
  static CovMatrix2 vacuum() { return {}; }
  static CovMatrix2 thermal(double n_mean);

  double det() const noexcept { return v11 * v22 - v12 * v12; }
  double trace() const noexcept { return v11 + v22; }

  /// Positive diagonal and det >= 1/16 (up to a relative slack).
  bool is_physical(double rel_tol = 1e-12) const noexcept;
};

/// Fractions of each user's budget spent on squeezing, p = sinh^2(r) / n, plus
/// the orientation of the squeezed quadrature (+1 inflates v11).
struct SqueezeFractions {
  double p_a = 0.0;
  double p_b = 0.0;
  int sign_a = 1;
  int sign_b = 1;

  void validate() const;
  PhotonBudget to_budget(double n_a, double n_b) const;
};

/// (1+x) log2(1+x) - x log2(x): entropy in bits of a thermal state holding x
/// photons. Values in [-1e-12, 0) are treated as 0; anything lower throws.
double g_entropy(double x);

/// g(base + delta) - g(base) without the cancellation of the naive difference.
/// Accurate to a few ulps relative even when delta << base.
double g_increment(double base, double delta);

/// Mean photons consumed by a squeeze of parameter r: cosh(2r)/2 - 1/2.
double squeezing_cost(double r);

/// Signed squeeze parameter that costs exactly `photons`: sign * asinh(sqrt(photons)).
double squeeze_for_cost(double photons, int sign = 1);

/// Squeeze parameter when a fraction `displacement_fraction` of `n` drives the
/// displacement and the remainder is spent on squeezing.
double squeeze_from_displacement_fraction(double n, double displacement_fraction, int sign = 1);

struct InputCovariances {
  CovMatrix2 alice;
  CovMatrix2 bob;
  CovMatrix2 environment;
};

InputCovariances input_covariances(const PhotonBudget& budget, const ChannelParams& params);

/// eta1*eta2*X + (1-eta1)*eta2*Y + (1-eta2)*Z.
CovMatrix2 receiver_covariance(const PhotonBudget& budget, const ChannelParams& params);

struct ReceivedPhotons {
  double alice = 0.0;
  double bob = 0.0;
  double total() const noexcept { return alice + bob; }
  double of(User user) const noexcept { return user == User::Alice ? alice : bob; }
};

/// Displacement photons reaching the receiver from each user.
ReceivedPhotons received_photons(const PhotonBudget& budget, const ChannelParams& params);

}  // namespace bmac

#endif  // BOSONIC_MAC_GAUSSIAN_CORE_HPP
