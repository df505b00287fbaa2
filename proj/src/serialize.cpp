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

#include "bosonic_mac/serialize.hpp"

#include <fmt/format.h>

namespace bmac {

using nlohmann::json;

namespace {

json optional_number(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

std::optional<double> read_optional(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<double>();
}

template <class F>
std::optional<double> try_rate(F&& f) {
  try {
    return f();
  } catch (const ValidationError&) {
    return std::nullopt;
  }
}

std::string csv_optional(const std::optional<double>& x) { return x ? format_number(*x) : std::string(); }

}  // namespace

RatesRecord rates_record(const ChannelParams& params, const PhotonBudget& budget) {
  params.validate();
  budget.validate();
  RatesRecord r;
  r.params = params;
  r.budget = budget;
  r.rates = max_rates(params, budget);
  r.outer_bound_a = outer_bound(params, budget, User::Alice);
  r.outer_bound_b = outer_bound(params, budget, User::Bob);
  r.capacity_a = single_user_capacity(params, budget, User::Alice);
  r.capacity_b = single_user_capacity(params, budget, User::Bob);
  r.homodyne_a = try_rate([&] { return receiver_individual_rate(params, budget, Receiver::Homodyne, User::Alice); });
  r.homodyne_b = try_rate([&] { return receiver_individual_rate(params, budget, Receiver::Homodyne, User::Bob); });
  r.homodyne_sum = try_rate([&] { return homodyne_sum_rate(params, budget); });
  r.heterodyne_a =
      try_rate([&] { return receiver_individual_rate(params, budget, Receiver::Heterodyne, User::Alice); });
  r.heterodyne_b = try_rate([&] { return receiver_individual_rate(params, budget, Receiver::Heterodyne, User::Bob); });
  r.heterodyne_sum = try_rate([&] { return heterodyne_sum_rate(params, budget); });
  return r;
}

void to_json(json& j, const ChannelParams& v) {
  j = json{{"eta1", v.eta1}, {"eta2", v.eta2}, {"nt", v.n_thermal}};
}
void from_json(const json& j, ChannelParams& v) {
  j.at("eta1").get_to(v.eta1);
  j.at("eta2").get_to(v.eta2);
  j.at("nt").get_to(v.n_thermal);
}

void to_json(json& j, const PhotonBudget& v) {
  j = json{{"na", v.n_a}, {"nb", v.n_b}, {"ra", v.r_a}, {"rb", v.r_b}};
}
void from_json(const json& j, PhotonBudget& v) {
  j.at("na").get_to(v.n_a);
  j.at("nb").get_to(v.n_b);
  j.at("ra").get_to(v.r_a);
  j.at("rb").get_to(v.r_b);
}

void to_json(json& j, const RateBundle& v) {
  j = json{{"r_max_a", v.r_max_a},   {"r_max_b", v.r_max_b},   {"r_max_ab", v.r_max_ab},
           {"branch_a", v.branch_a}, {"branch_b", v.branch_b}, {"branch_ab", v.branch_ab}};
}
void from_json(const json& j, RateBundle& v) {
  j.at("r_max_a").get_to(v.r_max_a);
  j.at("r_max_b").get_to(v.r_max_b);
  j.at("r_max_ab").get_to(v.r_max_ab);
  j.at("branch_a").get_to(v.branch_a);
  j.at("branch_b").get_to(v.branch_b);
  j.at("branch_ab").get_to(v.branch_ab);
}

void to_json(json& j, const RatesRecord& v) {
  j = json{{"params", v.params},
           {"budget", v.budget},
           {"rates", v.rates},
           {"outer_bound_a", v.outer_bound_a},
           {"outer_bound_b", v.outer_bound_b},
           {"capacity_a", v.capacity_a},
           {"capacity_b", v.capacity_b},
           {"homodyne_a", optional_number(v.homodyne_a)},
           {"homodyne_b", optional_number(v.homodyne_b)},
           {"homodyne_sum", optional_number(v.homodyne_sum)},
           {"heterodyne_a", optional_number(v.heterodyne_a)},
           {"heterodyne_b", optional_number(v.heterodyne_b)},
           {"heterodyne_sum", optional_number(v.heterodyne_sum)}};
}
void from_json(const json& j, RatesRecord& v) {
  j.at("params").get_to(v.params);
  j.at("budget").get_to(v.budget);
  j.at("rates").get_to(v.rates);
  j.at("outer_bound_a").get_to(v.outer_bound_a);
  j.at("outer_bound_b").get_to(v.outer_bound_b);
  j.at("capacity_a").get_to(v.capacity_a);
  j.at("capacity_b").get_to(v.capacity_b);
  v.homodyne_a = read_optional(j, "homodyne_a");
  v.homodyne_b = read_optional(j, "homodyne_b");
  v.homodyne_sum = read_optional(j, "homodyne_sum");
  v.heterodyne_a = read_optional(j, "heterodyne_a");
  v.heterodyne_b = read_optional(j, "heterodyne_b");
  v.heterodyne_sum = read_optional(j, "heterodyne_sum");
}

void to_json(json& j, const ProbeTolerances& v) {
  j = json{{"final_gap", v.final_gap}, {"monotone_window", v.monotone_window}, {"resolution", v.resolution}};
}
void from_json(const json& j, ProbeTolerances& v) {
  j.at("final_gap").get_to(v.final_gap);
  j.at("monotone_window").get_to(v.monotone_window);
  j.at("resolution").get_to(v.resolution);
}

void to_json(json& j, const LimitProbe& v) {
  j = json{{"lemma", v.lemma},
           {"schedule", v.schedule},
           {"inner_schedule", v.inner_schedule},
           {"ratios", v.ratios},
           {"target", v.target},
           {"gap", v.gap},
           {"tolerances", v.tolerances},
           {"verdict", v.verdict},
           {"branches", v.branches},
           {"optimal_r_a", v.optimal_r_a},
           {"note", v.note}};
}
void from_json(const json& j, LimitProbe& v) {
  j.at("lemma").get_to(v.lemma);
  j.at("schedule").get_to(v.schedule);
  j.at("inner_schedule").get_to(v.inner_schedule);
  j.at("ratios").get_to(v.ratios);
  j.at("target").get_to(v.target);
  j.at("gap").get_to(v.gap);
  j.at("tolerances").get_to(v.tolerances);
  j.at("verdict").get_to(v.verdict);
  j.at("branches").get_to(v.branches);
  j.at("optimal_r_a").get_to(v.optimal_r_a);
  j.at("note").get_to(v.note);
}

void to_json(json& j, const BMaxCheck& v) {
  j = json{{"n", v.n},
           {"closed_form", v.closed_form},
           {"bisection", v.bisection},
           {"relative_difference", v.relative_difference},
           {"constraint_residual", v.constraint_residual}};
}
void from_json(const json& j, BMaxCheck& v) {
  j.at("n").get_to(v.n);
  j.at("closed_form").get_to(v.closed_form);
  j.at("bisection").get_to(v.bisection);
  j.at("relative_difference").get_to(v.relative_difference);
  j.at("constraint_residual").get_to(v.constraint_residual);
}

void to_json(json& j, const CaseThreeResult& v) {
  j = json{{"branch1", v.branch1},
           {"branch2", v.branch2},
           {"b_max_checks", v.b_max_checks},
           {"b_max_verified", v.b_max_verified},
           {"squeeze_effect", v.squeeze_effect}};
}
void from_json(const json& j, CaseThreeResult& v) {
  j.at("branch1").get_to(v.branch1);
  j.at("branch2").get_to(v.branch2);
  j.at("b_max_checks").get_to(v.b_max_checks);
  j.at("b_max_verified").get_to(v.b_max_verified);
  j.at("squeeze_effect").get_to(v.squeeze_effect);
}

void to_json(json& j, const ReceiverGapResult& v) {
  j = json{{"heterodyne", v.heterodyne}, {"homodyne", v.homodyne}};
}
void from_json(const json& j, ReceiverGapResult& v) {
  j.at("heterodyne").get_to(v.heterodyne);
  j.at("homodyne").get_to(v.homodyne);
}

void to_json(json& j, const RatePoint& v) { j = json::array({v.r_a, v.r_b}); }
void from_json(const json& j, RatePoint& v) {
  j.at(0).get_to(v.r_a);
  j.at(1).get_to(v.r_b);
}

void to_json(json& j, const Pentagon& v) {
  j = json{{"r_a_max", v.r_a_max}, {"r_b_max", v.r_b_max}, {"sum_max", v.sum_max}, {"vertices", v.vertices}};
}
void from_json(const json& j, Pentagon& v) {
  j.at("r_a_max").get_to(v.r_a_max);
  j.at("r_b_max").get_to(v.r_b_max);
  j.at("sum_max").get_to(v.sum_max);
  j.at("vertices").get_to(v.vertices);
}

void to_json(json& j, const Encoding& v) { j = json{{"ra", v.r_a}, {"rb", v.r_b}}; }
void from_json(const json& j, Encoding& v) {
  j.at("ra").get_to(v.r_a);
  j.at("rb").get_to(v.r_b);
}

void to_json(json& j, const RateRegion& v) {
  j = json{{"hull", v.hull}, {"provenance", v.provenance}, {"pentagons", v.pentagons}, {"outer_bound", v.outer_box}};
  if (v.has_receivers) {
    j["receivers"] = json{{"homodyne", v.receivers.homodyne},
                          {"heterodyne", v.receivers.heterodyne},
                          {"construction", v.receivers.construction}};
  } else {
    j["receivers"] = nullptr;
  }
}
void from_json(const json& j, RateRegion& v) {
  j.at("hull").get_to(v.hull);
  j.at("provenance").get_to(v.provenance);
  j.at("pentagons").get_to(v.pentagons);
  j.at("outer_bound").get_to(v.outer_box);
  const json& r = j.at("receivers");
  v.has_receivers = !r.is_null();
  if (v.has_receivers) {
    r.at("homodyne").get_to(v.receivers.homodyne);
    r.at("heterodyne").get_to(v.receivers.heterodyne);
    r.at("construction").get_to(v.receivers.construction);
  }
}

void to_json(json& j, const SurfaceCell& v) {
  j = json{{"p_a", v.p_a},         {"p_b", v.p_b},         {"sign_a", v.sign_a},     {"sign_b", v.sign_b},
           {"r_max_a", v.r_max_a}, {"r_max_b", v.r_max_b}, {"branch_a", v.branch_a}, {"branch_b", v.branch_b}};
}
void from_json(const json& j, SurfaceCell& v) {
  j.at("p_a").get_to(v.p_a);
  j.at("p_b").get_to(v.p_b);
  j.at("sign_a").get_to(v.sign_a);
  j.at("sign_b").get_to(v.sign_b);
  j.at("r_max_a").get_to(v.r_max_a);
  j.at("r_max_b").get_to(v.r_max_b);
  j.at("branch_a").get_to(v.branch_a);
  j.at("branch_b").get_to(v.branch_b);
}

void to_json(json& j, const SqueezeSurface& v) {
  json signs = json::array();
  for (const auto& [a, b] : v.signs) signs.push_back(json::array({a, b}));
  j = json{{"params", v.params}, {"na", v.n_a},      {"nb", v.n_b},
           {"grid", v.grid},     {"signs", signs}, {"cells", v.cells}};
}
void from_json(const json& j, SqueezeSurface& v) {
  j.at("params").get_to(v.params);
  j.at("na").get_to(v.n_a);
  j.at("nb").get_to(v.n_b);
  j.at("grid").get_to(v.grid);
  v.signs.clear();
  for (const json& s : j.at("signs")) v.signs.emplace_back(s.at(0).get<int>(), s.at(1).get<int>());
  j.at("cells").get_to(v.cells);
}

void to_json(json& j, const SqueezeOptimum& v) {
  j = json{{"objective", v.objective}, {"p_a", v.p_a},     {"p_b", v.p_b},           {"sign_a", v.sign_a},
           {"sign_b", v.sign_b},       {"value", v.value}, {"baseline", v.baseline}, {"branch", v.branch}};
}
void from_json(const json& j, SqueezeOptimum& v) {
  j.at("objective").get_to(v.objective);
  j.at("p_a").get_to(v.p_a);
  j.at("p_b").get_to(v.p_b);
  j.at("sign_a").get_to(v.sign_a);
  j.at("sign_b").get_to(v.sign_b);
  j.at("value").get_to(v.value);
  j.at("baseline").get_to(v.baseline);
  j.at("branch").get_to(v.branch);
}

void to_json(json& j, const ScanArgmax& v) {
  j = json{{"s", v.s},           {"p_a", v.p_a},           {"p_b", v.p_b},
           {"sign_a", v.sign_a}, {"sign_b", v.sign_b},     {"value", v.value}};
}
void from_json(const json& j, ScanArgmax& v) {
  j.at("s").get_to(v.s);
  j.at("p_a").get_to(v.p_a);
  j.at("p_b").get_to(v.p_b);
  j.at("sign_a").get_to(v.sign_a);
  j.at("sign_b").get_to(v.sign_b);
  j.at("value").get_to(v.value);
}

void to_json(json& j, const GlobalScanReport& v) {
  j = json{{"ns", v.n_s},       {"split_points", v.split_points}, {"grid", v.grid},
           {"alice", v.alice},  {"bob", v.bob},                   {"sum", v.sum}};
}
void from_json(const json& j, GlobalScanReport& v) {
  j.at("ns").get_to(v.n_s);
  j.at("split_points").get_to(v.split_points);
  j.at("grid").get_to(v.grid);
  j.at("alice").get_to(v.alice);
  j.at("bob").get_to(v.bob);
  j.at("sum").get_to(v.sum);
}

void to_json(json& j, const VerifyCheck& v) {
  j = json{{"name", v.name},
           {"passed", v.passed},
           {"metric", v.metric},
           {"tolerance", v.tolerance},
           {"detail", v.detail}};
}
void from_json(const json& j, VerifyCheck& v) {
  j.at("name").get_to(v.name);
  j.at("passed").get_to(v.passed);
  j.at("metric").get_to(v.metric);
  j.at("tolerance").get_to(v.tolerance);
  j.at("detail").get_to(v.detail);
}

void to_json(json& j, const VerifyReport& v) {
  j = json{{"passed", v.passed()}, {"failing", v.failing()}, {"checks", v.checks}};
}
void from_json(const json& j, VerifyReport& v) { j.at("checks").get_to(v.checks); }

void to_json(json& j, const McEstimate& v) {
  j = json{{"rate_bits", v.rate_bits}, {"std_error", v.std_error}, {"samples", v.samples}};
}
void from_json(const json& j, McEstimate& v) {
  j.at("rate_bits").get_to(v.rate_bits);
  j.at("std_error").get_to(v.std_error);
  j.at("samples").get_to(v.samples);
}

std::string format_number(double x) { return fmt::format("{:.17g}", x); }

std::string rates_csv(const RatesRecord& r) {
  std::string out =
      "eta1,eta2,nt,na,nb,ra,rb,r_max_a,r_max_b,r_max_ab,branch_a,branch_b,branch_ab,outer_bound_a,outer_bound_b,"
      "capacity_a,capacity_b,homodyne_a,homodyne_b,homodyne_sum,heterodyne_a,heterodyne_b,heterodyne_sum\n";
  const std::string numbers[] = {format_number(r.params.eta1),   format_number(r.params.eta2),
                                 format_number(r.params.n_thermal), format_number(r.budget.n_a),
                                 format_number(r.budget.n_b),    format_number(r.budget.r_a),
                                 format_number(r.budget.r_b),    format_number(r.rates.r_max_a),
                                 format_number(r.rates.r_max_b), format_number(r.rates.r_max_ab)};
  for (const std::string& n : numbers) out += n + ",";
  out += fmt::format("{},{},{},", to_string(r.rates.branch_a), to_string(r.rates.branch_b),
                     to_string(r.rates.branch_ab));
  out += fmt::format("{},{},{},{},", format_number(r.outer_bound_a), format_number(r.outer_bound_b),
                     format_number(r.capacity_a), format_number(r.capacity_b));
  out += fmt::format("{},{},{},{},{},{}\n", csv_optional(r.homodyne_a), csv_optional(r.homodyne_b),
                     csv_optional(r.homodyne_sum), csv_optional(r.heterodyne_a), csv_optional(r.heterodyne_b),
                     csv_optional(r.heterodyne_sum));
  return out;
}

std::string surface_csv(const SqueezeSurface& surface) {
  std::string out = "p_A,p_B,sign_A,sign_B,r_max_a,r_max_b\n";
  for (const SurfaceCell& c : surface.cells) {
    out += fmt::format("{},{},{},{},{},{}\n", format_number(c.p_a), format_number(c.p_b), c.sign_a, c.sign_b,
                       format_number(c.r_max_a), format_number(c.r_max_b));
  }
  return out;
}

std::string region_csv(const RateRegion& region) {
  std::string out = "dataset,vertex,r_a,r_b\n";
  const auto emit = [&](const std::string& name, const std::vector<RatePoint>& points) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      out += fmt::format("{},{},{},{}\n", name, i, format_number(points[i].r_a), format_number(points[i].r_b));
    }
  };
  for (std::size_t k = 0; k < region.pentagons.size(); ++k) {
    emit(fmt::format("gaussian(r_a={};r_b={})", format_number(region.provenance[k].r_a),
                     format_number(region.provenance[k].r_b)),
         region.pentagons[k].vertices);
  }
  emit("hull", region.hull);
  if (region.has_receivers) {
    emit("homodyne", region.receivers.homodyne.vertices);
    emit("heterodyne", region.receivers.heterodyne.vertices);
  }
  emit("outer_bound", region.outer_box.vertices);
  return out;
}

std::string probes_csv(const std::vector<LimitProbe>& probes) {
  std::string out = "lemma,index,n,inner_n,ratio,target,branch,verdict\n";
  for (const LimitProbe& p : probes) {
    for (std::size_t i = 0; i < p.schedule.size(); ++i) {
      const std::string inner = i < p.inner_schedule.size() ? format_number(p.inner_schedule[i]) : std::string();
      const std::string ratio = i < p.ratios.size() ? format_number(p.ratios[i]) : std::string();
      const std::string branch = i < p.branches.size() ? to_string(p.branches[i]) : "";
      out += fmt::format("{},{},{},{},{},{},{},{}\n", p.lemma, i, format_number(p.schedule[i]), inner, ratio,
                         format_number(p.target), branch, to_string(p.verdict));
    }
  }
  return out;
}

std::string optimum_csv(const SqueezeOptimum& o) {
  return fmt::format("objective,p_A,p_B,sign_A,sign_B,value,baseline,branch\n{},{},{},{},{},{},{},{}\n",
                     to_string(o.objective), format_number(o.p_a), format_number(o.p_b), o.sign_a, o.sign_b,
                     format_number(o.value), format_number(o.baseline), to_string(o.branch));
}

std::string verify_csv(const VerifyReport& report) {
  std::string out = "check,passed,metric,tolerance\n";
  for (const VerifyCheck& c : report.checks) {
    out += fmt::format("{},{},{},{}\n", c.name, c.passed ? "true" : "false", format_number(c.metric),
                       format_number(c.tolerance));
  }
  return out;
}

}  // namespace bmac
