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
#include "bosonic_mac/rates.hpp"

using namespace bmac;
using doctest::Approx;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

const ChannelParams kFig2{0.2, 0.9, 4.0};
const ChannelParams kFig3{0.25, 0.9, 1.0};

}  // namespace

TEST_CASE("point-to-point capacity reference values") {
  CHECK(rel(point_to_point(1.0, 1.0), 0.75488750216346854436) < 1e-15);
  CHECK(rel(point_to_point(0.72, 0.4), 0.90672886520145756145) < 1e-15);
  CHECK(rel(point_to_point(1e-6, 0.1), 3.4594250609564120216e-6) < 1e-12);
  CHECK(point_to_point(0.0, 3.0) == 0.0);
  CHECK_THROWS_AS(point_to_point(-1.0, 0.0), ValidationError);
}

TEST_CASE("maximum rates reproduce the reference evaluation") {
  struct Case {
    ChannelParams params;
    PhotonBudget budget;
    double a, b, ab;
    Branch branch_a;
  };
  const Case cases[] = {
      {kFig2, {4, 8, 0, 0}, 0.90672886520145756145, 2.9684908887634754982, 3.1168418391978030644, Branch::One},
      {kFig3, {1, 1000, 0, 0}, 0.5814769133993569786, 10.359273741489834119, 10.359754132849242664, Branch::One},
      {kFig3, {1, 1000, 0, 3}, 0.71989612349393176136, 6.8182580898523156997, 6.8187384812117242448, Branch::Two},
      {{0.5, 0.9, 1.0}, {1e-6, 1e-6, 0, 0}, 1.5567429004537486543e-6, 1.5567429004537486543e-6,
       3.1134831450501189669e-6, Branch::One},
      {{0.4, 0.7, 0.5}, {2, 3, 0.3, -0.5}, 0.85466244166683936635, 1.4222557581296163486, 1.780107486768513091,
       Branch::One},
  };
  for (const Case& c : cases) {
    const RateBundle r = max_rates(c.params, c.budget);
    CHECK(rel(r.r_max_a, c.a) < 1e-12);
    CHECK(rel(r.r_max_b, c.b) < 1e-12);
    CHECK(rel(r.r_max_ab, c.ab) < 1e-12);
    CHECK(r.branch_a == c.branch_a);
  }
}

TEST_CASE("full-form G12 equals the diagonal form when V12 = 0") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.25, 20.0), nn(0.0, 30.0);
  for (int i = 0; i < 500; ++i) {
    const CovMatrix2 v = CovMatrix2::diagonal(u(rng), u(rng));
    const double n = nn(rng);
    CHECK(big_g12(n, v) == Approx(big_g12_diagonal(n, v)).epsilon(1e-12));
  }
  CHECK_THROWS(big_g12_diagonal(1.0, CovMatrix2{1.0, 1.0, 0.1}));
}

TEST_CASE("stable branch evaluation matches the G-function differences") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0.25, 10.0), nn(0.0, 10.0), off(-0.5, 0.5);
  for (int i = 0; i < 500; ++i) {
    CovMatrix2 v{u(rng), u(rng), 0.0};
    v.v12 = off(rng) * std::sqrt(v.v11 * v.v22 - 1.0 / 16.0 > 0 ? v.v11 * v.v22 - 1.0 / 16.0 : 0.0);
    const double n = nn(rng);
    CHECK(max_rate_on_branch(n, v, Branch::One) == Approx(big_g11(n, v) - big_g2(v)).epsilon(1e-10).scale(1e-12));
    CHECK(max_rate_on_branch(n, v, Branch::Two) == Approx(big_g12(n, v) - big_g2(v)).epsilon(1e-10).scale(1e-12));
  }
}

TEST_CASE("branch rule follows the threshold") {
  const CovMatrix2 v = CovMatrix2::diagonal(2.0, 0.5);
  CHECK(branch_threshold(v) == Approx(1.5));
  CHECK(max_rate(1.5, v).branch == Branch::One);
  CHECK(max_rate(1.4999, v).branch == Branch::Two);
  CHECK(branch_threshold(CovMatrix2{1.0, 1.0, 0.5}) == Approx(1.0));
}

TEST_CASE("branches meet continuously at the threshold") {
  const CovMatrix2 v = CovMatrix2::diagonal(3.0, 0.7);
  const double n = branch_threshold(v);
  CHECK(std::abs(max_rate_on_branch(n, v, Branch::One) - max_rate_on_branch(n, v, Branch::Two)) < 1e-12);
}

TEST_CASE("coherent individual rate reduces to the single-user capacity") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0), photons(0.0, 100.0);
  for (int i = 0; i < 300; ++i) {
    const ChannelParams p{unit(rng), unit(rng), 10.0 * unit(rng)};
    const PhotonBudget b = PhotonBudget::coherent(photons(rng), photons(rng));
    CHECK(individual_rate(p, b, User::Alice).bits ==
          Approx(single_user_capacity(p, b, User::Alice)).epsilon(1e-12).scale(1e-14));
    CHECK(individual_rate(p, b, User::Bob).bits ==
          Approx(single_user_capacity(p, b, User::Bob)).epsilon(1e-12).scale(1e-14));
    CHECK(sum_rate(p, b).bits == Approx(sum_rate_capacity_coherent(p, b)).epsilon(1e-12).scale(1e-14));
  }
}

TEST_CASE("rates stay below the outer bound") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const ChannelParams p{unit(rng), unit(rng), 10.0 * unit(rng)};
    const double r_a = 4.0 * unit(rng) - 2.0, r_b = 4.0 * unit(rng) - 2.0;
    const PhotonBudget b{squeezing_cost(r_a) + 50.0 * unit(rng), squeezing_cost(r_b) + 50.0 * unit(rng), r_a, r_b};
    CHECK(individual_rate(p, b, User::Alice).bits <= outer_bound(p, b, User::Alice) + 1e-12);
    CHECK(individual_rate(p, b, User::Bob).bits <= outer_bound(p, b, User::Bob) + 1e-12);
    const RateBundle r = max_rates(p, b);
    CHECK(r.r_max_a <= r.r_max_ab + 1e-12);
    CHECK(r.r_max_b <= r.r_max_ab + 1e-12);
  }
}

TEST_CASE("zero budgets give zero rates") {
  const RateBundle r = max_rates(kFig3, PhotonBudget::coherent(0.0, 0.0));
  CHECK(r.r_max_a == 0.0);
  CHECK(r.r_max_b == 0.0);
  CHECK(r.r_max_ab == 0.0);
}

TEST_CASE("receiver formulas match reference values") {
  const ChannelParams p{0.4, 0.7, 0.5};
  CHECK(rel(homodyne_sum_rate(p, PhotonBudget{2, 3, 0.3, -0.5}), 1.3292158786919526577) < 1e-14);
  CHECK(rel(heterodyne_sum_rate(p, PhotonBudget::coherent(2, 3)), 1.2630344058337938336) < 1e-14);
  CHECK_THROWS_AS(heterodyne_sum_rate(p, PhotonBudget{2, 3, 0.3, 0.0}), ValidationError);
  CHECK_THROWS_AS(homodyne_sum_rate(ChannelParams{0.0, 0.7, 0.5}, PhotonBudget::coherent(1, 1)), ValidationError);
}

TEST_CASE("receiver individual rates drop the other user's signal only") {
  const ChannelParams p{0.4, 0.7, 0.5};
  const PhotonBudget squeezed{2, 3, 0.3, -0.5};
  const PhotonBudget alice_only{2, squeezing_cost(-0.5), 0.3, -0.5};
  CHECK(receiver_individual_rate(p, squeezed, Receiver::Homodyne, User::Alice) ==
        Approx(homodyne_sum_rate(p, alice_only)).epsilon(1e-14));
  const PhotonBudget coherent = PhotonBudget::coherent(2, 3);
  CHECK(receiver_individual_rate(p, coherent, Receiver::Heterodyne, User::Bob) ==
        Approx(heterodyne_sum_rate(p, PhotonBudget::coherent(0, 3))).epsilon(1e-14));
}

TEST_CASE("coherent receivers sit inside the joint-detection rates at the reference channel") {
  const PhotonBudget b = PhotonBudget::coherent(1.0, 1000.0);
  const RateBundle r = max_rates(kFig3, b);
  CHECK(heterodyne_sum_rate(kFig3, b) < r.r_max_ab);
  CHECK(homodyne_sum_rate(kFig3, b) < r.r_max_ab);
  CHECK(receiver_individual_rate(kFig3, b, Receiver::Heterodyne, User::Alice) < r.r_max_a);
  CHECK(receiver_individual_rate(kFig3, b, Receiver::Homodyne, User::Alice) < r.r_max_a);
}
