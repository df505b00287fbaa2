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

// JSON and CSV encodings of every result record. JSON numbers use the
// shortest text that parses back to the same double.

#ifndef BOSONIC_MAC_SERIALIZE_HPP
#define BOSONIC_MAC_SERIALIZE_HPP

#include <optional>
#include <string>

#include "json.hpp"

#include "bosonic_mac/asymptotics.hpp"
#include "bosonic_mac/gaussian_core.hpp"
#include "bosonic_mac/network.hpp"
#include "bosonic_mac/rates.hpp"
#include "bosonic_mac/region.hpp"
#include "bosonic_mac/verify.hpp"

namespace bmac {

/// Everything `rates` reports for one channel and budget.
struct RatesRecord {
  ChannelParams params;
  PhotonBudget budget;
  RateBundle rates;
  double outer_bound_a = 0.0;
  double outer_bound_b = 0.0;
  double capacity_a = 0.0;  // single-user capacities
  double capacity_b = 0.0;
  std::optional<double> homodyne_a, homodyne_b, homodyne_sum;
  std::optional<double> heterodyne_a, heterodyne_b, heterodyne_sum;
};

/// Receiver formulas are left empty where they are undefined (homodyne with
/// eta1 = 0 or eta2 = 0, heterodyne with squeezing or eta2 = 0).
RatesRecord rates_record(const ChannelParams& params, const PhotonBudget& budget);

NLOHMANN_JSON_SERIALIZE_ENUM(Branch, {{Branch::One, "branch1"}, {Branch::Two, "branch2"}})
NLOHMANN_JSON_SERIALIZE_ENUM(Verdict, {{Verdict::Converged, "converged"},
                                       {Verdict::Diverged, "diverged"},
                                       {Verdict::Skipped, "skipped"}})
NLOHMANN_JSON_SERIALIZE_ENUM(Objective, {{Objective::MaxRA, "ra"}, {Objective::MaxRB, "rb"}, {Objective::MaxSum, "sum"}})

void to_json(nlohmann::json& j, const ChannelParams& v);
void from_json(const nlohmann::json& j, ChannelParams& v);
void to_json(nlohmann::json& j, const PhotonBudget& v);
void from_json(const nlohmann::json& j, PhotonBudget& v);
void to_json(nlohmann::json& j, const RateBundle& v);
void from_json(const nlohmann::json& j, RateBundle& v);
void to_json(nlohmann::json& j, const RatesRecord& v);
void from_json(const nlohmann::json& j, RatesRecord& v);
void to_json(nlohmann::json& j, const ProbeTolerances& v);
void from_json(const nlohmann::json& j, ProbeTolerances& v);
void to_json(nlohmann::json& j, const LimitProbe& v);
void from_json(const nlohmann::json& j, LimitProbe& v);
void to_json(nlohmann::json& j, const BMaxCheck& v);
void from_json(const nlohmann::json& j, BMaxCheck& v);
void to_json(nlohmann::json& j, const CaseThreeResult& v);
void from_json(const nlohmann::json& j, CaseThreeResult& v);
void to_json(nlohmann::json& j, const ReceiverGapResult& v);
void from_json(const nlohmann::json& j, ReceiverGapResult& v);
void to_json(nlohmann::json& j, const RatePoint& v);
void from_json(const nlohmann::json& j, RatePoint& v);
void to_json(nlohmann::json& j, const Pentagon& v);
void from_json(const nlohmann::json& j, Pentagon& v);
void to_json(nlohmann::json& j, const Encoding& v);
void from_json(const nlohmann::json& j, Encoding& v);
void to_json(nlohmann::json& j, const RateRegion& v);
void from_json(const nlohmann::json& j, RateRegion& v);
void to_json(nlohmann::json& j, const SurfaceCell& v);
void from_json(const nlohmann::json& j, SurfaceCell& v);
void to_json(nlohmann::json& j, const SqueezeSurface& v);
void from_json(const nlohmann::json& j, SqueezeSurface& v);
void to_json(nlohmann::json& j, const SqueezeOptimum& v);
void from_json(const nlohmann::json& j, SqueezeOptimum& v);
void to_json(nlohmann::json& j, const ScanArgmax& v);
void from_json(const nlohmann::json& j, ScanArgmax& v);
void to_json(nlohmann::json& j, const GlobalScanReport& v);
void from_json(const nlohmann::json& j, GlobalScanReport& v);
void to_json(nlohmann::json& j, const VerifyCheck& v);
void from_json(const nlohmann::json& j, VerifyCheck& v);
void to_json(nlohmann::json& j, const VerifyReport& v);
void from_json(const nlohmann::json& j, VerifyReport& v);
void to_json(nlohmann::json& j, const McEstimate& v);
void from_json(const nlohmann::json& j, McEstimate& v);

/// Number formatting used in every CSV: 17 significant digits.
std::string format_number(double x);

/// Header plus one row: the RatesRecord fields in declaration order.
std::string rates_csv(const RatesRecord& record);

/// Columns p_A,p_B,sign_A,sign_B,r_max_a,r_max_b; rows in surface order.
std::string surface_csv(const SqueezeSurface& surface);

/// Columns dataset,vertex,r_a,r_b. Datasets: one "gaussian(r_a=..;r_b=..)"
/// pentagon per encoding, then "hull", "homodyne", "heterodyne", "outer_bound".
std::string region_csv(const RateRegion& region);

/// Columns lemma,index,n,inner_n,ratio,target,branch; one row per schedule point.
std::string probes_csv(const std::vector<LimitProbe>& probes);

std::string optimum_csv(const SqueezeOptimum& optimum);

std::string verify_csv(const VerifyReport& report);

}  // namespace bmac

#endif  // BOSONIC_MAC_SERIALIZE_HPP
