#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "geosph/config.hpp"
#include "geosph/snapshot_io.hpp"
#include "geosph/solver.hpp"

namespace geosph {

struct FrameSummary {
  std::uint64_t index = 0;
  double time = 0.0;
  std::uint64_t step = 0;
  FrameDiagnostics diagnostics;
};

/// Optional observers; both see the solver after the step has completed.
struct RunHooks {
  std::function<void(const Solver&)> after_step;
  std::function<void(const Solver&, const SnapshotFrame&)> on_frame;
};

struct RunResult {
  int exit_code = 0;
  std::string status = "ok";  // ok, numerical_abort, io_error, config_error
  std::string message;
  std::size_t n_real = 0;
  std::size_t n_boundary = 0;
  double dt = 0.0;
  double final_time = 0.0;
  std::uint64_t steps = 0;
  double max_relative_residual = 0.0;
  std::vector<FrameSummary> frames;
  std::vector<std::string> files;
};

/// Runs the time loop of a validated config. Frames are emitted at the
/// steps nearest to k * snapshot_interval and at the final step. With an
/// output directory, snapshots, a per-step log (steps.csv) and report.json
/// are written there; a numerical abort also dumps abort_frame.csv.
/// Errors are reported through the result, never thrown.
RunResult run_simulation(const SimConfig& cfg, const RunHooks& hooks = {});

/// Writes report.json for a finished run.
void write_run_report(const SimConfig& cfg, const RunResult& result, const std::string& path);

struct ComparisonEntry {
  std::string label;
  StabilizerKind kind = StabilizerKind::conventional;
  double eps_as = 0.0;
  RunResult result;
};

/// The stabilizer study: conventional, artificial stress with
/// eps in {0.1, 0.2, 0.3, 0.5}, and adaptive, all from `base`. Each run
/// writes into <output_dir>/<label> when an output directory is set.
std::vector<ComparisonEntry> run_comparison(const SimConfig& base,
                                            const std::function<RunHooks(const std::string&)>& hooks = {});

/// comparison.json and comparison.md tabulating spacing statistics and
/// momentum residuals per mode at every frame time.
void write_comparison(const std::vector<ComparisonEntry>& entries, const std::string& directory);

}  // namespace geosph
