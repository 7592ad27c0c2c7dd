// Copyright 2026 The superdiscord Authors
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
#include "superdiscord/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "superdiscord/discord.hpp"
#include "superdiscord/families.hpp"
#include "superdiscord/output.hpp"
#include "superdiscord/state_io.hpp"

namespace superdiscord::cli {
namespace {

using nlohmann::json;

struct RunConfig {
  std::string state;
  std::optional<double> lambda0;
  std::optional<double> z;
  std::uint64_t seed = 0;
  int dim_a = 2;
  std::optional<int> rank;
  std::optional<std::string> strength;
  int grid = 64;
  double refine_tol = 1e-8;
  int max_refine_iters = 2000;
  double gap_tol = 1e-3;
  std::string format;
  std::string out_path;

  std::string axis = "x";
  double start = 0.0;
  double stop = 1.0;
  int steps = 10;
};

// Input problems that are not library errors (missing options and the like).
class UsageError : public Error {
 public:
  using Error::Error;
};

Strength parse_strength(const std::string& text) {
  if (text == "inf") return Strength::infinite();
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !std::isfinite(x)) {
    throw UsageError("--x must be a decimal number or 'inf', got '" + text + "'");
  }
  return Strength(x);
}

int thread_budget() {
  const char* env = std::getenv("SUPERDISCORD_THREADS");
  const int hw = std::max(1u, std::thread::hardware_concurrency());
  if (env == nullptr || *env == '\0') return hw;
  const int requested = std::atoi(env);
  return requested <= 0 ? hw : requested;
}

OptimizerConfig optimizer_config(const RunConfig& cfg) {
  OptimizerConfig opt;
  opt.grid_gamma = cfg.grid;
  opt.grid_delta = cfg.grid;
  opt.refine_tol = cfg.refine_tol;
  opt.max_refine_iters = cfg.max_refine_iters;
  opt.threads = thread_budget();
  opt.check();
  return opt;
}

double require(const std::optional<double>& v, const char* flag, const std::string& family) {
  if (!v) throw UsageError(std::string("--state ") + family + " needs " + flag);
  return *v;
}

DensityMatrix build_state(const RunConfig& cfg) {
  const std::string& s = cfg.state;
  if (s == "pure") return pure_schmidt({require(cfg.lambda0, "--lambda0", s)});
  if (s == "werner") return werner({require(cfg.z, "--z", s)});
  if (s == "bell") return pure_schmidt({0.5});
  if (s == "random") return random_state(cfg.seed, cfg.dim_a, cfg.rank.value_or(2 * cfg.dim_a));
  if (s.rfind("file:", 0) == 0) return read_state_file(s.substr(5));
  throw UsageError("unknown --state '" + s + "' (pure, werner, bell, random, file:PATH)");
}

Strength required_strength(const RunConfig& cfg) {
  if (!cfg.strength) throw UsageError("--x is required for this command");
  return parse_strength(*cfg.strength);
}

json basis_json(const QubitBasis& b) { return {{"gamma", b.gamma()}, {"delta", b.delta()}}; }

json strength_json(Strength s) {
  return s.is_infinite() ? json("inf") : json(s.value());
}

json report_json(const DiscordReport& r) {
  return {
      {"conditional_entropy_qq", r.conditional_entropy_qq},
      {"mutual_info", r.mutual_info},
      {"strong_conditional_entropy", r.strong_conditional_entropy},
      {"weak_conditional_entropy", r.weak_conditional_entropy},
      {"discord", r.discord},
      {"super_discord", r.super_discord},
      {"delta", r.delta},
      {"post_super_discord", r.post_super_discord},
      {"gap", r.gap},
      {"strong_basis", basis_json(r.strong_basis)},
      {"weak_basis", basis_json(r.weak_basis)},
      {"post_basis", basis_json(r.post_basis)},
      {"post_weak_basis", basis_json(r.post_weak_basis)},
      {"ambiguous", r.ambiguous},
      {"coincident", r.coincident},
      {"strength", strength_json(r.strength)},
  };
}

json resurrection_json(const ResurrectionRecord& r, Strength strength, double gap_tol) {
  return {
      {"delta", r.delta},
      {"post_super_discord", r.post_state_super_discord},
      {"gap", r.gap},
      {"gap_tol", gap_tol},
      {"passed", r.gap <= gap_tol},
      {"bases",
       {{"strong", basis_json(r.strong_basis)},
        {"weak", basis_json(r.weak_basis)},
        {"post", basis_json(r.post_basis)},
        {"post_weak", basis_json(r.post_weak_basis)}}},
      {"coincidence_flag", r.coincident},
      {"ambiguous", r.ambiguous},
      {"strength", strength_json(strength)},
  };
}

json sweep_row(double param, const DensityMatrix& rho, const DiscordReport& r) {
  return {
      {"param", param},
      {"S_AB", von_neumann_entropy(rho)},
      {"S_B", von_neumann_entropy(partial_trace_a(rho))},
      {"cond_entropy_strong", r.strong_conditional_entropy},
      {"cond_entropy_weak", r.weak_conditional_entropy},
      {"I", r.mutual_info},
      {"D_s", r.discord},
      {"D_w", r.super_discord},
      {"delta", r.delta},
      {"D_w_post", r.post_super_discord},
      {"gap", r.gap},
  };
}

void write_record_csv(const json& record, std::ostream& os) {
  const auto fields = flatten(record);
  for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << fields[i].first;
  os << "\n";
  for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << csv_field(fields[i].second);
  os << "\n";
}

void write_record(const json& record, const std::string& format, std::ostream& os) {
  if (format == "csv") {
    write_record_csv(record, os);
  } else {
    os << dump_json(record);
  }
}

int cmd_report(const RunConfig& cfg, std::ostream& os) {
  const DensityMatrix rho = build_state(cfg);
  const Strength x = required_strength(cfg);
  write_record(report_json(discord_report(rho, x, optimizer_config(cfg))), cfg.format, os);
  return kOk;
}

int cmd_resurrect(const RunConfig& cfg, std::ostream& os, std::ostream& err) {
  const DensityMatrix rho = build_state(cfg);
  const Strength x = required_strength(cfg);
  const ResurrectionRecord r = verify_resurrection(rho, x, optimizer_config(cfg));
  write_record(resurrection_json(r, x, cfg.gap_tol), cfg.format, os);
  if (r.gap > cfg.gap_tol) {
    err << "gap " << format_number(r.gap) << " exceeds --gap-tol " << format_number(cfg.gap_tol)
        << "\n";
    return kGapExceeded;
  }
  return kOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& os) {
  if (cfg.steps < 1) throw UsageError("--steps must be at least 1");
  std::function<DensityMatrix(double)> state_at;
  std::function<Strength(double)> strength_at;
  if (cfg.axis == "x") {
    const DensityMatrix rho = build_state(cfg);
    state_at = [rho](double) { return rho; };
    strength_at = [](double v) { return Strength(v); };
  } else if (cfg.axis == "z" || cfg.axis == "lambda0") {
    const bool is_z = cfg.axis == "z";
    if (cfg.state != (is_z ? "werner" : "pure")) {
      throw UsageError("--axis " + cfg.axis + " requires --state " + (is_z ? "werner" : "pure"));
    }
    const Strength fixed = required_strength(cfg);
    if (is_z) {
      state_at = [](double v) { return werner({v}); };
    } else {
      state_at = [](double v) { return pure_schmidt({v}); };
    }
    strength_at = [fixed](double) { return fixed; };
  } else {
    throw UsageError("--axis must be one of x, z, lambda0");
  }

  const OptimizerConfig opt = optimizer_config(cfg);
  json rows = json::array();
  for (int i = 0; i < cfg.steps; ++i) {
    const double param =
        cfg.steps == 1 ? cfg.start : cfg.start + (cfg.stop - cfg.start) * i / (cfg.steps - 1);
    const DensityMatrix rho = state_at(param);
    rows.push_back(sweep_row(param, rho, discord_report(rho, strength_at(param), opt)));
  }

  if (cfg.format == "json") {
    os << dump_json(rows);
    return kOk;
  }
  for (std::size_t c = 0; c < kSweepColumns.size(); ++c) os << (c ? "," : "") << kSweepColumns[c];
  os << "\n";
  for (const json& row : rows) {
    for (std::size_t c = 0; c < kSweepColumns.size(); ++c) {
      os << (c ? "," : "") << csv_field(row.at(kSweepColumns[c]));
    }
    os << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum discord, super discord and the post-measurement resurrection check"};
  app.name("superdiscord");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--state", cfg.state, "pure | werner | bell | random | file:PATH")->required();
  app.add_option("--lambda0", cfg.lambda0, "Schmidt weight for --state pure");
  app.add_option("--z", cfg.z, "singlet weight for --state werner");
  app.add_option("--seed", cfg.seed, "seed for --state random");
  app.add_option("--dim-a", cfg.dim_a, "dimension of A for --state random");
  app.add_option("--rank", cfg.rank, "rank for --state random (default: full)");
  app.add_option("--x", cfg.strength, "measurement strength, decimal or 'inf'");
  app.add_option("--grid", cfg.grid, "lattice points per angle")->capture_default_str();
  app.add_option("--refine-tol", cfg.refine_tol, "refinement tolerance, bits")
      ->capture_default_str();
  app.add_option("--max-refine-iters", cfg.max_refine_iters)->capture_default_str();
  app.add_option("--gap-tol", cfg.gap_tol, "resurrect: allowed gap")->capture_default_str();
  app.add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", cfg.out_path, "write results to PATH instead of stdout");

  CLI::App* report = app.add_subcommand("report", "discord, super discord and extra correlation");
  CLI::App* resurrect = app.add_subcommand("resurrect", "compare D_w - D_s with D_w of the measured state");
  CLI::App* sweep = app.add_subcommand("sweep", "CSV table over a parameter range");
  sweep->add_option("--axis", cfg.axis, "x | z | lambda0")->capture_default_str();
  sweep->add_option("--start", cfg.start)->capture_default_str();
  sweep->add_option("--stop", cfg.stop)->capture_default_str();
  sweep->add_option("--steps", cfg.steps)->capture_default_str();

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("superdiscord");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  std::ofstream file;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path);
    if (!file) {
      err << "error: cannot open --out " << cfg.out_path << "\n";
      return kInputError;
    }
  }
  std::ostream& os = cfg.out_path.empty() ? out : file;

  try {
    if (report->parsed()) {
      if (cfg.format.empty()) cfg.format = "json";
      return cmd_report(cfg, os);
    }
    if (resurrect->parsed()) {
      if (cfg.format.empty()) cfg.format = "json";
      return cmd_resurrect(cfg, os, err);
    }
    if (cfg.format.empty()) cfg.format = "csv";
    return cmd_sweep(cfg, os);
  } catch (const NoConvergence& e) {
    err << "error: " << e.what() << " (best value " << format_number(e.best_value()) << ")\n";
    return kNoConvergence;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace superdiscord::cli
