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

#include <cmath>
#include <random>

#include "doctest.h"
#include "bosonic_mac/gaussian_core.hpp"

using namespace bmac;
using doctest::Approx;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("g_entropy matches high-precision reference values") {
  CHECK(rel(g_entropy(0.5), 1.3774437510817342722) < 1e-15);
  CHECK(rel(g_entropy(1.0), 2.0) < 1e-15);
  CHECK(rel(g_entropy(1e-8), 2.8018119807201337371e-7) < 1e-14);
  CHECK(rel(g_entropy(1e6), 21.37426433156041749) < 1e-15);
  CHECK(g_entropy(0.0) == 0.0);
}

TEST_CASE("g_entropy clamps round-off negatives and rejects real negatives") {
  CHECK(g_entropy(-1e-13) == 0.0);
  CHECK_THROWS_AS(g_entropy(-1e-6), ValidationError);
  CHECK_THROWS_AS(g_entropy(std::nan("")), ValidationError);
}

TEST_CASE("g_increment keeps relative precision for tiny increments") {
  CHECK(rel(g_increment(3.2, 1e-9), 3.923174227250885984e-10) < 1e-12);
  CHECK(rel(g_increment(0.0, 1e-8), 2.8018119807201337371e-7) < 1e-14);
  CHECK(g_increment(2.0, 0.0) == 0.0);
  CHECK(g_increment(2.0, -0.5) == Approx(-(g_entropy(2.0) - g_entropy(1.5))).epsilon(1e-14));
}

TEST_CASE("g_increment agrees with the plain difference where that is well conditioned") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 50.0);
  for (int i = 0; i < 1000; ++i) {
    const double y = u(rng), x = u(rng);
    CHECK(g_increment(y, x) == Approx(g_entropy(x + y) - g_entropy(y)).epsilon(1e-12));
  }
}

TEST_CASE("squeezing cost and its inverse") {
  CHECK(squeezing_cost(0.0) == 0.0);
  CHECK(squeezing_cost(0.7) == Approx(0.5 * std::cosh(1.4) - 0.5).epsilon(1e-14));
  CHECK(squeezing_cost(squeeze_for_cost(5.0)) == Approx(5.0).epsilon(1e-14));
  CHECK(squeeze_for_cost(5.0, -1) == Approx(-std::asinh(std::sqrt(5.0))));
  CHECK(squeeze_from_displacement_fraction(8.0, 0.25) == Approx(std::asinh(std::sqrt(6.0))));
  CHECK_THROWS_AS(squeeze_from_displacement_fraction(8.0, 1.5), ValidationError);
}

TEST_CASE("validation names the offending field") {
  const auto field_of = [](auto&& f) {
    try {
      f();
    } catch (const ValidationError& e) {
      return e.field();
    }
    return std::string("none");
  };
  CHECK(field_of([] { ChannelParams{1.5, 0.9, 1.0}.validate(); }) == "eta1");
  CHECK(field_of([] { ChannelParams{0.5, -0.1, 1.0}.validate(); }) == "eta2");
  CHECK(field_of([] { ChannelParams{0.5, 0.9, -1.0}.validate(); }) == "nt");
  CHECK(field_of([] { PhotonBudget{-1.0, 1.0, 0.0, 0.0}.validate(); }) == "na");
  CHECK(field_of([] { PhotonBudget{1.0, std::nan(""), 0.0, 0.0}.validate(); }) == "nb");
  CHECK(field_of([] { PhotonBudget{1.0, 1.0, 2.0, 0.0}.validate(); }) == "ra");
  CHECK(field_of([] { PhotonBudget{1.0, 1.0, 0.0, -2.0}.validate(); }) == "rb");
  CHECK(field_of([] { SqueezeFractions{1.2, 0.0}.validate(); }) == "pa");
  CHECK(field_of([] { SqueezeFractions{0.0, 0.0, 1, 0}.validate(); }) == "sign-b");
}

TEST_CASE("a squeeze that spends the whole budget leaves zero displacement") {
  const double n = 3.0;
  const PhotonBudget b{n, n, squeeze_for_cost(n), squeeze_for_cost(n, -1)};
  CHECK_NOTHROW(b.validate());
  CHECK(b.displacement_a() == Approx(0.0).epsilon(1e-12).scale(1.0));
  CHECK(b.displacement_b() >= 0.0);
}

TEST_CASE("receiver covariance matches the reference model") {
  const ChannelParams p{0.3, 0.8, 2.0};
  const PhotonBudget b{5.0, 5.0, 0.4, -0.7};
  const CovMatrix2 v = receiver_covariance(b, p);
  CHECK(rel(v.v11, 0.41805603066137296305) < 1e-14);
  CHECK(rel(v.v22, 0.8446877332052877377) < 1e-14);
  CHECK(v.v12 == 0.0);
  CHECK(v.is_physical());
}

TEST_CASE("coherent inputs give a thermal receiver state") {
  const ChannelParams p{0.37, 0.6, 3.0};
  const CovMatrix2 v = receiver_covariance(PhotonBudget::coherent(2.0, 9.0), p);
  const double expected = 0.25 * (0.6 + 0.4 * 7.0);
  CHECK(v.v11 == Approx(expected).epsilon(1e-15));
  CHECK(v.v22 == Approx(expected).epsilon(1e-15));
}

TEST_CASE("input covariances are pure squeezed and thermal states") {
  const InputCovariances in = input_covariances(PhotonBudget{4.0, 4.0, 0.9, -0.3}, ChannelParams{0.5, 0.9, 2.0});
  CHECK(in.alice.det() == Approx(1.0 / 16.0).epsilon(1e-14));
  CHECK(in.bob.det() == Approx(1.0 / 16.0).epsilon(1e-14));
  CHECK(in.alice.v11 > in.alice.v22);
  CHECK(in.bob.v11 < in.bob.v22);
  CHECK(in.environment.v11 == Approx(1.25));
}

TEST_CASE("received photons subtract the squeeze cost") {
  const ChannelParams p{0.25, 0.9, 1.0};
  const ReceivedPhotons n = received_photons(PhotonBudget{1.0, 1000.0, 0.0, 3.0}, p);
  CHECK(n.alice == Approx(0.225).epsilon(1e-15));
  CHECK(n.bob == Approx(0.75 * 0.9 * (1000.0 - std::sinh(3.0) * std::sinh(3.0))).epsilon(1e-14));
  CHECK(n.total() == Approx(n.alice + n.bob));
  CHECK(n.of(User::Bob) == n.bob);
}

TEST_CASE("squeeze fractions convert to a budget") {
  const PhotonBudget b = SqueezeFractions{0.25, 1.0, -1, 1}.to_budget(4.0, 8.0);
  CHECK(b.r_a == Approx(-std::asinh(1.0)));
  CHECK(squeezing_cost(b.r_b) == Approx(8.0));
  CHECK(b.displacement_a() == Approx(3.0));
  CHECK(b.displacement_b() == Approx(0.0).scale(1.0));
}
