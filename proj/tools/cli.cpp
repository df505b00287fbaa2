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

#include "cli.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "bosonic_mac/asymptotics.hpp"
#include "bosonic_mac/region.hpp"
#include "bosonic_mac/serialize.hpp"
#include "bosonic_mac/verify.hpp"

namespace bmac::cli {

namespace {

using nlohmann::json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  ChannelParams params;
  double n_a = 1.0;
  double n_b = 1.0;
  double r_a = 0.0;
  double r_b = 0.0;
  double p_a = 0.0;
  double p_b = 0.0;
  int sign_a = 1;
  int sign_b = 1;
  std::size_t grid = kDefaultGrid;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string out_path;

  std::string encodings = "0:0";
  bool no_receivers = false;

  std::string lemma = "all";
  std::string lemma2_case = "all";
  std::string user = "alice";
  CaseThreeConfig case3;

  std::string objective = "ra";
  std::optional<double> n_s;
  std::size_t split_points = kDefaultSplitPoints;

  std::size_t draws = 1000;
  std::size_t samples = 1'000'000;
  double tolerance = kOracleTolerance;
};

struct Flags {
  CLI::Option* ra = nullptr;
  CLI::Option* rb = nullptr;
  CLI::Option* pa = nullptr;
  CLI::Option* pb = nullptr;
  CLI::Option* sign_a = nullptr;
  CLI::Option* sign_b = nullptr;
};

bool given(const CLI::Option* opt) { return opt != nullptr && opt->count() > 0; }

PhotonBudget budget_from(const Options& o, const Flags& f) {
  const bool fractions = given(f.pa) || given(f.pb);
  if (fractions && (given(f.ra) || given(f.rb))) {
    throw ValidationError("pa", "--pa/--pb and --ra/--rb cannot be combined");
  }
  PhotonBudget::coherent(o.n_a, o.n_b).validate();
  const PhotonBudget budget = fractions ? SqueezeFractions{o.p_a, o.p_b, o.sign_a, o.sign_b}.to_budget(o.n_a, o.n_b)
                                        : PhotonBudget{o.n_a, o.n_b, o.r_a, o.r_b};
  budget.validate();
  return budget;
}

std::vector<Encoding> parse_encodings(const std::string& text) {
  std::vector<Encoding> out;
  std::stringstream list(text);
  std::string item;
  while (std::getline(list, item, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ValidationError("encodings", "expected r_a:r_b, got '" + item + "'");
    try {
      std::size_t used_a = 0, used_b = 0;
      const std::string a = item.substr(0, colon), b = item.substr(colon + 1);
      Encoding e{std::stod(a, &used_a), std::stod(b, &used_b)};
      if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument(item);
      out.push_back(e);
    } catch (const std::logic_error&) {
      throw ValidationError("encodings", "cannot parse '" + item + "'");
    }
  }
  if (out.empty()) throw ValidationError("encodings", "at least one r_a:r_b encoding is required");
  return out;
}

Objective parse_objective(const std::string& s) {
  if (s == "rb") return Objective::MaxRB;
  if (s == "sum") return Objective::MaxSum;
  return Objective::MaxRA;
}

void emit(const Options& o, const std::string& data, std::ostream& out) {
  if (o.out_path.empty()) {
    out << data;
    return;
  }
  std::ofstream file(o.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + o.out_path + "' for writing");
  file << data;
  file.flush();
  if (!file) throw IoError("failed writing '" + o.out_path + "'");
  spdlog::info("wrote {} bytes to {}", data.size(), o.out_path);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int cmd_rates(const Options& o, const Flags& f, std::ostream& out) {
  const RatesRecord record = rates_record(o.params, budget_from(o, f));
  emit(o, o.format == "csv" ? rates_csv(record) : dump(record), out);
  return kOk;
}

int cmd_surface(const Options& o, const Flags& f, std::ostream& out) {
  std::vector<SignPair> signs;
  if (given(f.sign_a) || given(f.sign_b)) signs.emplace_back(o.sign_a, o.sign_b);
  const SqueezeSurface surface = squeeze_surface(o.params, o.n_a, o.n_b, o.grid, signs);
  emit(o, o.format == "csv" ? surface_csv(surface) : dump(surface), out);
  return kOk;
}

int cmd_region(const Options& o, std::ostream& out) {
  const std::vector<Encoding> encodings = parse_encodings(o.encodings);
  const RateRegion region = build_region(o.params, o.n_a, o.n_b, encodings, !o.no_receivers);
  if (o.format == "csv") {
    emit(o, region_csv(region), out);
  } else {
    json j = region;
    j["params"] = o.params;
    j["budget"] = PhotonBudget::coherent(o.n_a, o.n_b);
    emit(o, dump(j), out);
  }
  return kOk;
}

int cmd_asymptotics(const Options& o, std::ostream& out) {
  const bool all = o.lemma == "all";
  const User user = o.user == "bob" ? User::Bob : User::Alice;
  std::vector<LimitProbe> probes;
  json extra = json::object();
  if (all || o.lemma == "1") probes.push_back(lemma1_probe(o.params, user));
  if (all || o.lemma == "hom-half") probes.push_back(homodyne_half_probe(o.params));
  if (all || o.lemma == "hom-pure-loss") probes.push_back(homodyne_pure_loss_probe(o.params.eta1));
  if (all || o.lemma == "2") {
    const bool every = o.lemma2_case == "all";
    if (every || o.lemma2_case == "1") probes.push_back(lemma2_case1(o.params));
    if (every || o.lemma2_case == "2") probes.push_back(lemma2_case2(o.params));
    if (every || o.lemma2_case == "3") {
      CaseThreeResult r = lemma2_case3(o.case3, o.params);
      if (!r.b_max_verified) {
        r.branch1.verdict = Verdict::Diverged;
        r.branch1.note += "b_max root check failed; ";
      }
      extra["case3"] = json{{"b_max_checks", r.b_max_checks},
                            {"b_max_verified", r.b_max_verified},
                            {"squeeze_effect", r.squeeze_effect}};
      probes.push_back(r.branch1);
      probes.push_back(r.branch2);
    }
  }
  if (all || o.lemma == "receiver-gap") {
    const ReceiverGapResult r = receiver_gap_at_low_power(o.params);
    probes.push_back(r.heterodyne);
    probes.push_back(r.homodyne);
  }
  bool passed = true;
  for (const LimitProbe& p : probes) {
    if (p.verdict == Verdict::Diverged) {
      passed = false;
      spdlog::warn("{} diverged: gap {} to target {}", p.lemma, p.gap, p.target);
    }
  }
  if (o.format == "csv") {
    emit(o, probes_csv(probes), out);
  } else {
    json j{{"params", o.params}, {"passed", passed}, {"probes", probes}};
    j.update(extra);
    emit(o, dump(j), out);
  }
  return passed ? kOk : kVerificationFailed;
}

int cmd_optimize(const Options& o, const Flags& f, std::ostream& out) {
  if (o.n_s) {
    const GlobalScanReport report = global_constraint_scan(o.params, *o.n_s, o.split_points, o.grid);
    if (o.format == "csv") {
      std::string text = "objective,s,p_A,p_B,sign_A,sign_B,value\n";
      const std::pair<const char*, const ScanArgmax*> rows[] = {
          {"ra", &report.alice}, {"rb", &report.bob}, {"sum", &report.sum}};
      for (const auto& [name, a] : rows) {
        text += std::string(name) + "," + format_number(a->s) + "," + format_number(a->p_a) + "," +
                format_number(a->p_b) + "," + std::to_string(a->sign_a) + "," + std::to_string(a->sign_b) + "," +
                format_number(a->value) + "\n";
      }
      emit(o, text, out);
    } else {
      json j = report;
      j["params"] = o.params;
      emit(o, dump(j), out);
    }
    return kOk;
  }
  std::vector<SignPair> signs;
  if (given(f.sign_a) || given(f.sign_b)) signs.emplace_back(o.sign_a, o.sign_b);
  const SqueezeOptimum best = optimize_squeezing(o.params, o.n_a, o.n_b, parse_objective(o.objective), signs, o.grid);
  if (o.format == "csv") {
    emit(o, optimum_csv(best), out);
  } else {
    json j = best;
    j["params"] = o.params;
    j["budget"] = PhotonBudget::coherent(o.n_a, o.n_b);
    emit(o, dump(j), out);
  }
  return kOk;
}

int cmd_verify(const Options& o, const Flags& f, std::ostream& out) {
  VerifyConfig config;
  config.params = o.params;
  config.budget = budget_from(o, f);
  config.draws = o.draws;
  config.samples = o.samples;
  config.seed = o.seed;
  config.tolerance = o.tolerance;
  const VerifyReport report = run_verification(config);
  for (const std::string& name : report.failing()) spdlog::error("check failed: {}", name);
  if (o.format == "csv") {
    emit(o, verify_csv(report), out);
  } else {
    json j = report;
    j["params"] = o.params;
    j["seed"] = o.seed;
    emit(o, dump(j), out);
  }
  return report.passed() ? kOk : kVerificationFailed;
}

void configure_logging(std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err, true);
  auto logger = std::make_shared<spdlog::logger>("bosonic-mac", sink);
  logger->set_pattern("[%l] %v");
  spdlog::level::level_enum level = spdlog::level::warn;
  if (const char* env = std::getenv("BOSONIC_MAC_LOG")) {
    const std::string name = env;
    if (name == "error") level = spdlog::level::err;
    else if (name == "warn") level = spdlog::level::warn;
    else if (name == "info") level = spdlog::level::info;
    else if (name == "debug") level = spdlog::level::debug;
  }
  logger->set_level(level);
  spdlog::set_default_logger(logger);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  configure_logging(err);
  Options o;
  Flags f;
  CLI::App app{"Gaussian-input rate regions for the two-user thermal-loss bosonic multiple access channel",
               "bosonic-mac"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat key=value file using the long flag names; flags take precedence");

  app.add_option("--eta1", o.params.eta1, "Transmissivity of the user-combining beamsplitter")->capture_default_str();
  app.add_option("--eta2", o.params.eta2, "Transmissivity of the thermal-loss beamsplitter")->capture_default_str();
  app.add_option("--nt", o.params.n_thermal, "Mean thermal photons in the environment")->capture_default_str();
  app.add_option("--na", o.n_a, "Alice's mean photon budget")->capture_default_str();
  app.add_option("--nb", o.n_b, "Bob's mean photon budget")->capture_default_str();
  f.ra = app.add_option("--ra", o.r_a, "Alice's squeeze parameter")->capture_default_str();
  f.rb = app.add_option("--rb", o.r_b, "Bob's squeeze parameter")->capture_default_str();
  f.pa = app.add_option("--pa", o.p_a, "Fraction of Alice's budget spent on squeezing")->capture_default_str();
  f.pb = app.add_option("--pb", o.p_b, "Fraction of Bob's budget spent on squeezing")->capture_default_str();
  f.sign_a = app.add_option("--sign-a", o.sign_a, "Orientation of Alice's squeeze (+1 or -1)")
                 ->check(CLI::IsMember({-1, 1}));
  f.sign_b = app.add_option("--sign-b", o.sign_b, "Orientation of Bob's squeeze (+1 or -1)")
                 ->check(CLI::IsMember({-1, 1}));
  app.add_option("--grid", o.grid, "Points per axis of squeeze-fraction grids")->capture_default_str();
  app.add_option("--seed", o.seed, "Random seed")->capture_default_str();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("--out", o.out_path, "Write data to this path instead of standard output");

  CLI::App* rates = app.add_subcommand("rates", "Maximum rates, outer bounds and receiver capacities");
  CLI::App* surface = app.add_subcommand("surface", "Individual rates over the squeeze-fraction grid");
  CLI::App* region = app.add_subcommand("region", "Rate region hull, receiver pentagons and outer-bound box");
  region->add_option("--encodings", o.encodings, "Comma-separated r_a:r_b squeeze pairs")->capture_default_str();
  region->add_flag("--no-receivers", o.no_receivers, "Skip the homodyne and heterodyne pentagons");
  CLI::App* asymptotics = app.add_subcommand("asymptotics", "Numerical limit probes");
  asymptotics->add_option("--lemma", o.lemma, "Probe to run")
      ->check(CLI::IsMember({"1", "2", "hom-half", "hom-pure-loss", "receiver-gap", "all"}))
      ->capture_default_str();
  asymptotics->add_option("--case", o.lemma2_case, "Low-power case for --lemma 2")
      ->check(CLI::IsMember({"1", "2", "3", "all"}))
      ->capture_default_str();
  asymptotics->add_option("--user", o.user, "User for --lemma 1")
      ->check(CLI::IsMember({"alice", "bob"}))
      ->capture_default_str();
  asymptotics->add_option("--kappa", o.case3.kappa, "Case 3: Bob's squeeze as a fraction of its ceiling")
      ->capture_default_str();
  asymptotics->add_option("--a", o.case3.a, "Case 3: Alice's photons per unit n")->capture_default_str();
  asymptotics->add_option("--b", o.case3.b, "Case 3: Bob's photons per unit n")->capture_default_str();
  asymptotics->add_option("--displacement-a", o.case3.p_a, "Case 3: Alice's displacement fraction")
      ->capture_default_str();
  CLI::App* optimize = app.add_subcommand("optimize", "Best squeeze fractions for one objective");
  optimize->add_option("--objective", o.objective, "Rate to maximise")
      ->check(CLI::IsMember({"ra", "rb", "sum"}))
      ->capture_default_str();
  optimize->add_option("--ns", o.n_s, "Scan a shared photon budget split between the users instead");
  optimize->add_option("--split-points", o.split_points, "Budget split points for --ns")->capture_default_str();
  CLI::App* verify = app.add_subcommand("verify", "Seeded oracle and property checks");
  verify->add_option("--draws", o.draws, "Random draws per check")->capture_default_str();
  verify->add_option("--samples", o.samples, "Monte-Carlo samples")->capture_default_str();
  verify->add_option("--tolerance", o.tolerance, "Relative tolerance of the covariance oracle")
      ->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << "bosonic-mac\n";
    return kOk;
  } catch (const CLI::FileError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }

  try {
    o.params.validate();
    if (*rates) return cmd_rates(o, f, out);
    if (*surface) return cmd_surface(o, f, out);
    if (*region) return cmd_region(o, out);
    if (*asymptotics) return cmd_asymptotics(o, out);
    if (*optimize) return cmd_optimize(o, f, out);
    if (*verify) return cmd_verify(o, f, out);
  } catch (const ValidationError& e) {
    err << "error: invalid --" << e.field() << ": " << e.what() << "\n";
    return kValidation;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
  return kValidation;
}

}  // namespace bmac::cli
