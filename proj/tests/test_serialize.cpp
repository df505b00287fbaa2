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

#include <algorithm>

#include "doctest.h"
#include "bosonic_mac/serialize.hpp"

using namespace bmac;
using nlohmann::json;

namespace {

template <class T>
T round_trip(const T& value) {
  return json::parse(json(value).dump()).get<T>();
}

}  // namespace

TEST_CASE("rates record round-trips through JSON") {
  const RatesRecord r = rates_record(ChannelParams{0.2, 0.9, 4.0}, PhotonBudget::coherent(4.0, 8.0));
  const RatesRecord back = round_trip(r);
  CHECK(json(back) == json(r));
  CHECK(back.rates.r_max_a == r.rates.r_max_a);
  CHECK(back.heterodyne_sum.has_value());
}

TEST_CASE("undefined receiver rates serialize as null") {
  const RatesRecord r = rates_record(ChannelParams{0.5, 0.9, 1.0}, PhotonBudget{2.0, 2.0, 0.3, 0.0});
  const json j = r;
  CHECK(j.at("heterodyne_sum").is_null());
  CHECK_FALSE(round_trip(r).heterodyne_sum.has_value());
}

TEST_CASE("probe and region records round-trip through JSON") {
  const LimitProbe p = lemma2_case2(ChannelParams{});
  CHECK(json(round_trip(p)) == json(p));
  const CaseThreeResult c = lemma2_case3({}, ChannelParams{});
  CHECK(json(round_trip(c)) == json(c));
  const Encoding enc[] = {{0.0, 0.0}, {0.0, 3.0}};
  const RateRegion region = build_region(ChannelParams{0.25, 0.9, 1.0}, 1.0, 1000.0, enc);
  const RateRegion back = round_trip(region);
  CHECK(back.hull == region.hull);
  CHECK(json(back) == json(region));
  const SqueezeSurface s = squeeze_surface(ChannelParams{}, 1.0, 2.0, 3);
  CHECK(json(round_trip(s)) == json(s));
  const SqueezeOptimum o = optimize_squeezing(ChannelParams{0.2, 0.9, 4.0}, 4.0, 8.0, Objective::MaxRA);
  CHECK(json(round_trip(o)) == json(o));
  const GlobalScanReport g = global_constraint_scan(ChannelParams{}, 2.0, 5, 3);
  CHECK(json(round_trip(g)) == json(g));
  const McEstimate m{1.25, 0.01, 10000};
  CHECK(json(round_trip(m)) == json(m));
}

TEST_CASE("JSON numbers round-trip exactly") {
  const double x = 0.1 + 0.2;
  CHECK(json::parse(json(x).dump()).get<double>() == x);
}

TEST_CASE("surface CSV layout") {
  const SqueezeSurface s = squeeze_surface(ChannelParams{0.2, 0.9, 4.0}, 4.0, 8.0, 2);
  const std::string csv = surface_csv(s);
  CHECK(csv.rfind("p_A,p_B,sign_A,sign_B,r_max_a,r_max_b\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 17);
  CHECK(csv.find('\r') == std::string::npos);
  CHECK(csv.find("\n0,0,1,1,0.90672886520145757,") != std::string::npos);
}

TEST_CASE("numbers are written with 17 significant digits") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(2.0) == "2");
  CHECK(std::stod(format_number(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("region CSV lists every dataset") {
  const Encoding enc[] = {{0.0, 0.0}, {0.0, 3.0}};
  const std::string csv = region_csv(build_region(ChannelParams{0.25, 0.9, 1.0}, 1.0, 1000.0, enc));
  for (const char* name : {"gaussian(r_a=0;r_b=0)", "gaussian(r_a=0;r_b=3)", "hull", "homodyne", "heterodyne",
                           "outer_bound"}) {
    CHECK(csv.find(std::string("\n") + name + ",") != std::string::npos);
  }
}
