// Copyright 2026 The nlos-radar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "nlos/config.hpp"
#include "nlos/errors.hpp"
#include "nlos/formats.hpp"
#include "nlos/pipeline.hpp"
#include "nlos/svg.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitEmpty = 4;

// Raised for failures that map straight to an exit code.
struct ExitError {
  int code;
  std::string message;
};

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("nlos");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%l] %v");
  const char* env = std::getenv("NLOS_LOG");
  const std::string level = env ? env : "info";
  if (level == "off") {
    spdlog::set_level(spdlog::level::off);
  } else if (level == "debug") {
    spdlog::set_level(spdlog::level::debug);
  } else {
    spdlog::set_level(spdlog::level::info);
  }
}

nlos::PipelineConfig config_from(const std::string& path) {
  return path.empty() ? nlos::PipelineConfig{} : nlos::load_config(path);
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw nlos::IoError("cannot create directory " + dir.string());
  }
}

template <typename Write, typename Records>
void write_file(const fs::path& path, Write&& write, const Records& records) {
  auto out = nlos::open_output(path);
  write(out, records);
  if (!out) {
    throw nlos::IoError("write failed: " + path.string());
  }
}

void write_text(const fs::path& path, const std::string& text) {
  auto out = nlos::open_output(path);
  out << text;
  if (!out) {
    throw nlos::IoError("write failed: " + path.string());
  }
}

template <typename Read>
auto read_file(const fs::path& path, Read&& read) {
  auto in = nlos::open_input(path);
  return read(in);
}

nlohmann::json optional_json(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

nlohmann::json report_json(const nlos::EvaluationReport& r) {
  return {{"scenario", r.scenario},
          {"f_r", optional_json(r.f_r)},
          {"f_l", optional_json(r.f_l)},
          {"max_diff", optional_json(r.max_diff)},
          {"mean_angular_error", optional_json(r.mean_angular_error)},
          {"ae_nlos", optional_json(r.ae_nlos)},
          {"ae_los", optional_json(r.ae_los)},
          {"ae_avg", optional_json(r.ae_avg)},
          {"frames", r.frames},
          {"missed_frames", r.missed_frames},
          {"missed_pedestrians", r.missed_pedestrians},
          {"truth_f_r", optional_json(r.truth.f_r)},
          {"truth_f_l", optional_json(r.truth.f_l)}};
}

struct SimulateArgs {
  std::string scenario;
  std::uint64_t seed{42};
  std::string out;
  std::string config;
  bool noiseless{false};
};

nlos::SimulatedRun simulate_to(nlos::ScenarioId id, const nlos::PipelineConfig& config,
                               const fs::path& out) {
  ensure_dir(out);
  auto run = nlos::simulate_run(id, config);
  write_file(out / "frames.jsonl", nlos::write_frames, run.frames);
  write_file(out / "truth.jsonl", nlos::write_truth, run.truth);
  nlos::write_pgm(run.layout, out / "layout.pgm");
  auto scene_out = nlos::open_output(out / "scene.json");
  nlos::write_scene(scene_out, run.scene);
  spdlog::info("{}: {} frames written to {}", run.scene.name, run.frames.size(), out.string());
  return run;
}

int cmd_simulate(const SimulateArgs& args) {
  const auto id = nlos::parse_scenario(args.scenario);
  if (!id) {
    throw ExitError{kExitUsage, "unknown scenario '" + args.scenario +
                                    "' (expected b1-s1, b1-s2, b2-s3 or b2-s4)"};
  }
  auto config = config_from(args.config);
  if (args.noiseless) {
    config.noise = nlos::NoiseModel::noiseless();
  }
  config.noise.seed = args.seed;
  simulate_to(*id, config, args.out);
  return kExitOk;
}

struct InferArgs {
  std::string frames;
  std::string layout;
  std::string config;
  std::string out;
  bool radar_only{false};
};

int cmd_infer(const InferArgs& args) {
  const auto config = config_from(args.config);
  const auto frames = read_file(args.frames, nlos::read_frames);
  std::optional<nlos::OccupancyGrid> layout;
  const auto method = args.radar_only ? nlos::Method::RadarOnly : nlos::Method::Proposed;
  if (method == nlos::Method::Proposed) {
    if (args.layout.empty()) {
      throw ExitError{kExitUsage, "--layout is required unless --radar-only is given"};
    }
    layout = nlos::load_occupancy(args.layout);
  }
  nlos::FramePipeline pipeline(config, layout ? &*layout : nullptr, method);
  std::vector<nlos::FrameResult> results;
  int with_walls = 0;
  for (const auto& f : frames) {
    results.push_back(pipeline.process(f));
    const auto& r = results.back();
    with_walls += r.walls ? 1 : 0;
    std::cout << fmt::format("frame {}: {:.3f} ms, {} walls, {} estimates\n", r.frame_id,
                             r.seconds * 1e3, r.walls ? r.walls->walls.size() : 0,
                             r.estimates.size());
  }
  ensure_dir(args.out);
  write_file(fs::path(args.out) / "walls.jsonl", nlos::write_walls,
             nlos::walls_records(results));
  write_file(fs::path(args.out) / "estimates.jsonl", nlos::write_estimates,
             nlos::estimates_records(results));
  if (with_walls == 0) {
    throw ExitError{kExitEmpty, "no frame yielded a spatial configuration"};
  }
  return kExitOk;
}

struct EvaluateArgs {
  std::string estimates;
  std::string walls;
  std::string truth;
  std::string out;
  std::string scenario{"run"};
};

int cmd_evaluate(const EvaluateArgs& args) {
  const auto estimates = read_file(args.estimates, nlos::read_estimates);
  const auto walls = read_file(args.walls, nlos::read_walls);
  const auto truth = read_file(args.truth, nlos::read_truth);
  nlos::EvaluationReport report;
  try {
    report = nlos::evaluate_records(args.scenario, walls, estimates, truth);
  } catch (const nlos::DegenerateInput& e) {
    throw ExitError{kExitUsage, e.what()};
  } catch (const nlos::EmptyInput& e) {
    throw ExitError{kExitEmpty, e.what()};
  }
  ensure_dir(args.out);
  const std::span<const nlos::EvaluationReport> reports(&report, 1);
  write_file(fs::path(args.out) / "report.csv", nlos::write_csv, reports);
  write_text(fs::path(args.out) / "summary.json", report_json(report).dump(2) + "\n");
  nlos::write_csv(std::cout, reports);
  return kExitOk;
}

struct RunAllArgs {
  std::string config;
  std::string out;
  std::uint64_t seed{42};
  bool render{false};
};

int cmd_run_all(const RunAllArgs& args) {
  auto config = config_from(args.config);
  config.noise.seed = args.seed;
  const fs::path out(args.out);
  ensure_dir(out);

  std::vector<nlos::EvaluationReport> proposed;
  std::vector<nlos::EvaluationReport> baseline;
  for (auto id : nlos::kAllScenarios) {
    const std::string name(nlos::to_string(id));
    const fs::path dir = out / name;
    const auto run = simulate_to(id, config, dir);

    for (auto method : {nlos::Method::Proposed, nlos::Method::RadarOnly}) {
      const auto results = nlos::run_pipeline(
          run.frames, method == nlos::Method::Proposed ? &run.layout : nullptr, config, method);
      const auto walls = nlos::walls_records(results);
      const auto estimates = nlos::estimates_records(results);
      const std::string suffix = method == nlos::Method::Proposed ? "" : "_radar_only";
      write_file(dir / ("walls" + suffix + ".jsonl"), nlos::write_walls, walls);
      write_file(dir / ("estimates" + suffix + ".jsonl"), nlos::write_estimates, estimates);
      auto report = nlos::evaluate_records(name, walls, estimates, run.truth);
      (method == nlos::Method::Proposed ? proposed : baseline).push_back(report);

      if (args.render && method == nlos::Method::Proposed) {
        const std::size_t f = run.frames.size() / 2;
        write_text(out / (name + ".svg"),
                   nlos::render_svg(run.scene, run.frames[f], run.truth[f], results[f]));
      }
    }
  }

  write_file(out / "report.csv", nlos::write_csv, proposed);
  write_file(out / "baseline.csv", nlos::write_csv, baseline);
  nlohmann::json summary = {{"seed", args.seed},
                            {"proposed", nlohmann::json::array()},
                            {"radar_only", nlohmann::json::array()}};
  for (const auto& r : proposed) summary["proposed"].push_back(report_json(r));
  for (const auto& r : baseline) summary["radar_only"].push_back(report_json(r));
  write_text(out / "summary.json", summary.dump(2) + "\n");

  std::cout << "proposed\n";
  nlos::write_csv(std::cout, proposed);
  std::cout << "radar-only\n";
  nlos::write_csv(std::cout, baseline);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();

  CLI::App app{"Layout-guided NLoS pedestrian localization from 2D radar point clouds"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Generate frames, truth and layout");
  simulate->add_option("--scenario", sim.scenario, "b1-s1 | b1-s2 | b2-s3 | b2-s4")->required();
  simulate->add_option("--seed", sim.seed, "Noise seed");
  simulate->add_option("--out", sim.out, "Output directory")->required();
  simulate->add_option("--config", sim.config, "key=value config file");
  simulate->add_flag("--noiseless", sim.noiseless, "Disable noise and clutter");

  InferArgs inf;
  auto* infer = app.add_subcommand("infer", "Infer walls and pedestrians per frame");
  infer->add_option("--frames", inf.frames, "frames.jsonl")->required();
  infer->add_option("--layout", inf.layout, "Occupancy layout (PGM or ASCII grid)");
  infer->add_option("--config", inf.config, "key=value config file");
  infer->add_option("--out", inf.out, "Output directory")->required();
  infer->add_flag("--radar-only", inf.radar_only, "Fit walls from radar statics only");

  EvaluateArgs ev;
  auto* evaluate = app.add_subcommand("evaluate", "Score estimates and walls against truth");
  evaluate->add_option("--estimates", ev.estimates, "estimates.jsonl")->required();
  evaluate->add_option("--walls", ev.walls, "walls.jsonl")->required();
  evaluate->add_option("--truth", ev.truth, "truth.jsonl")->required();
  evaluate->add_option("--out", ev.out, "Output directory")->required();
  evaluate->add_option("--scenario", ev.scenario, "Name for the report row");

  RunAllArgs all;
  auto* run_all = app.add_subcommand("run-all", "Simulate, infer and evaluate every scenario");
  run_all->add_option("--config", all.config, "key=value config file");
  run_all->add_option("--out", all.out, "Output directory")->required();
  run_all->add_option("--seed", all.seed, "Noise seed");
  run_all->add_flag("--render", all.render, "Write one SVG per scenario");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*simulate) return cmd_simulate(sim);
    if (*infer) return cmd_infer(inf);
    if (*evaluate) return cmd_evaluate(ev);
    return cmd_run_all(all);
  } catch (const ExitError& e) {
    spdlog::error("{}", e.message);
    return e.code;
  } catch (const nlos::ParseError& e) {
    spdlog::error("{}", e.what());
    return kExitUsage;
  } catch (const nlos::IoError& e) {
    spdlog::error("{}", e.what());
    return kExitIo;
  } catch (const nlos::Error& e) {
    spdlog::error("{}", e.what());
    return kExitUsage;
  }
}
