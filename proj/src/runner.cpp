#include "geosph/runner.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "geosph/diagnostics.hpp"
#include "geosph/errors.hpp"
#include "geosph/scenarios.hpp"

namespace geosph {

namespace fs = std::filesystem;

namespace {

constexpr double fracture_ratio = 1.5;  // nearest-neighbour distance / spacing

std::string frame_name(std::uint64_t index, const char* ext) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "frame_%06llu.%s", static_cast<unsigned long long>(index), ext);
  return buf;
}

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw IoError("failed writing '" + path + "'");
}

class StepLog {
 public:
  void open(const std::string& path) {
    out_.open(path, std::ios::binary);
    if (!out_) throw IoError("cannot open '" + path + "' for writing");
    out_ << "step,time,px,py,dpx,dpy,gravity_x,gravity_y,boundary_x,boundary_y,residual,relative_residual,"
            "kinetic,strain,potential,internal\n";
    out_.precision(17);
  }
  void write(const StepDiagnostics& d, const Energies& e) {
    if (!out_.is_open()) return;
    out_ << d.step << ',' << d.time << ',' << d.momentum.x << ',' << d.momentum.y << ',' << d.momentum_change.x
         << ',' << d.momentum_change.y << ',' << d.gravity_impulse.x << ',' << d.gravity_impulse.y << ','
         << d.boundary_impulse.x << ',' << d.boundary_impulse.y << ',' << d.residual << ',' << d.relative_residual
         << ',' << e.kinetic << ',' << e.strain << ',' << e.potential << ',' << e.internal << '\n';
    if (!out_) throw IoError("failed writing the step log");
  }

 private:
  std::ofstream out_;
};

FrameDiagnostics frame_diagnostics(const Solver& solver, const std::vector<char>& interior) {
  const ParticleSystem& st = solver.state();
  const SolverSettings& s = solver.settings();
  FrameDiagnostics d;
  d.max_spread = max_spread(st);
  d.momentum = total_momentum(st);
  const Energies e = energies(st, s.material, s.controls.gravity);
  d.kinetic_energy = e.kinetic;
  d.strain_energy = e.strain;
  d.potential_energy = e.potential;
  d.internal_energy = e.internal;
  d.momentum_residual = solver.last_step().relative_residual;
  const double radius = s.kernel_b * s.h;
  const std::vector<double> nearest = nearest_neighbor_distances(st, interior, radius);
  bool first = true;
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < st.n_real; ++i) {
    if (!interior[i]) continue;
    d.nn_min = first ? nearest[i] : std::min(d.nn_min, nearest[i]);
    d.nn_max = first ? nearest[i] : std::max(d.nn_max, nearest[i]);
    first = false;
    sum += nearest[i];
    ++count;
  }
  if (count > 0) d.nn_mean = sum / static_cast<double>(count);
  d.fracture_fraction = fracture_fraction(nearest, interior, fracture_ratio * s.spacing);
  return d;
}

nlohmann::json to_json(const FrameDiagnostics& d) {
  return {{"max_spread", d.max_spread},
          {"momentum", {d.momentum.x, d.momentum.y}},
          {"kinetic_energy", d.kinetic_energy},
          {"strain_energy", d.strain_energy},
          {"potential_energy", d.potential_energy},
          {"internal_energy", d.internal_energy},
          {"momentum_residual", d.momentum_residual},
          {"nn_min", d.nn_min},
          {"nn_max", d.nn_max},
          {"nn_mean", d.nn_mean},
          {"fracture_fraction", d.fracture_fraction}};
}

}  // namespace

RunResult run_simulation(const SimConfig& cfg, const RunHooks& hooks) {
  RunResult result;
  std::unique_ptr<Solver> solver;
  const bool write = !cfg.output_dir.empty();
  const bool want_csv = cfg.format == "csv" || cfg.format == "both";
  const bool want_vtk = cfg.format == "vtk" || cfg.format == "both";

  try {
    validate_config(cfg);
    solver = std::make_unique<Solver>(build_scenario(cfg), to_settings(cfg));
  } catch (const ConfigError& e) {
    result.exit_code = exit_code::config;
    result.status = "config_error";
    result.message = e.what();
    return result;
  } catch (const std::invalid_argument& e) {
    result.exit_code = exit_code::config;
    result.status = "config_error";
    result.message = e.what();
    return result;
  }

  const ParticleSystem& st = solver->state();
  result.n_real = st.n_real;
  result.n_boundary = st.n_boundary();
  result.dt = solver->dt();
  const std::vector<char> interior = full_support_mask(st, cfg.kernel_b * cfg.h);
  const auto total_steps = static_cast<std::uint64_t>(std::ceil(cfg.end_time / result.dt - 1e-9));
  StepLog log;

  auto emit_frame = [&](std::uint64_t index) {
    FrameSummary summary{index, solver->time(), solver->step_count(), frame_diagnostics(*solver, interior)};
    result.frames.push_back(summary);
    if (!write && !hooks.on_frame) return;
    const SnapshotFrame frame = make_frame(solver->state(), summary.time, summary.step, summary.diagnostics);
    if (hooks.on_frame) hooks.on_frame(*solver, frame);
    if (!write) return;
    if (want_csv) {
      const std::string path = (fs::path(cfg.output_dir) / frame_name(index, "csv")).string();
      write_snapshot(frame, path, SnapshotFormat::csv);
      result.files.push_back(path);
    }
    if (want_vtk) {
      const std::string path = (fs::path(cfg.output_dir) / frame_name(index, "vtk")).string();
      write_snapshot(frame, path, SnapshotFormat::vtk_legacy);
      result.files.push_back(path);
    }
  };

  try {
    if (write) {
      std::error_code ec;
      fs::create_directories(cfg.output_dir, ec);
      if (ec) throw IoError("cannot create output directory '" + cfg.output_dir + "': " + ec.message());
      write_text((fs::path(cfg.output_dir) / "config.txt").string(), dump_config(cfg));
      if (cfg.step_log) log.open((fs::path(cfg.output_dir) / "steps.csv").string());
    }

    std::uint64_t next_frame = 0;
    auto frame_step = [&](std::uint64_t k) {
      return static_cast<std::uint64_t>(std::llround(static_cast<double>(k) * cfg.snapshot_interval / result.dt));
    };
    emit_frame(next_frame++);
    while (frame_step(next_frame) == 0) ++next_frame;

    try {
      for (std::uint64_t n = 0; n < total_steps; ++n) {
        solver->step();
        const StepDiagnostics& d = solver->last_step();
        result.max_relative_residual = std::max(result.max_relative_residual, d.relative_residual);
        if (cfg.step_log && write) log.write(d, energies(solver->state(), solver->settings().material,
                                                          solver->settings().controls.gravity));
        if (hooks.after_step) hooks.after_step(*solver);

        const bool last = n + 1 == total_steps;
        bool emitted = false;
        while (frame_step(next_frame) <= solver->step_count()) {
          if (!emitted) emit_frame(next_frame);
          emitted = true;
          ++next_frame;
        }
        if (last && !emitted) emit_frame(next_frame++);
      }
    } catch (const NumericalAbort& e) {
      result.exit_code = exit_code::numerical;
      result.status = "numerical_abort";
      result.message = e.what();
      if (write) {
        const std::string path = (fs::path(cfg.output_dir) / "abort_frame.csv").string();
        write_snapshot(make_frame(solver->state(), solver->time(), solver->step_count()), path,
                       SnapshotFormat::csv);
        result.files.push_back(path);
      }
    }
    result.final_time = solver->time();
    result.steps = solver->step_count();
    if (write) write_run_report(cfg, result, (fs::path(cfg.output_dir) / "report.json").string());
  } catch (const IoError& e) {
    result.exit_code = exit_code::io;
    result.status = "io_error";
    result.message = e.what();
  }
  result.final_time = solver->time();
  result.steps = solver->step_count();
  return result;
}

void write_run_report(const SimConfig& cfg, const RunResult& r, const std::string& path) {
  nlohmann::json config = nlohmann::json::object();
  std::istringstream dump(dump_config(cfg));
  std::string line;
  while (std::getline(dump, line)) {
    const auto [k, v] = split_assignment(line);
    config[k] = v;
  }
  nlohmann::json frames = nlohmann::json::array();
  for (const auto& f : r.frames)
    frames.push_back({{"index", f.index}, {"time", f.time}, {"step", f.step}, {"diagnostics", to_json(f.diagnostics)}});

  nlohmann::json report = {{"status", r.status},
                           {"message", r.message},
                           {"exit_code", r.exit_code},
                           {"config", config},
                           {"simd", simd::to_string(simd::parse_level(cfg.simd))},
                           {"particles", {{"real", r.n_real}, {"boundary", r.n_boundary}}},
                           {"dt", r.dt},
                           {"steps", r.steps},
                           {"final_time", r.final_time},
                           {"max_relative_momentum_residual", r.max_relative_residual},
                           {"step_log", cfg.step_log ? "steps.csv" : ""},
                           {"frames", frames}};
  if (!r.frames.empty()) report["final"] = to_json(r.frames.back().diagnostics);
  write_text(path, report.dump(2) + "\n");
}

std::vector<ComparisonEntry> run_comparison(const SimConfig& base,
                                            const std::function<RunHooks(const std::string&)>& hooks) {
  struct Mode {
    const char* label;
    StabilizerKind kind;
    double eps;
  };
  const Mode modes[] = {{"conventional", StabilizerKind::conventional, 0.0},
                        {"artificial_stress_0.1", StabilizerKind::artificial_stress, 0.1},
                        {"artificial_stress_0.2", StabilizerKind::artificial_stress, 0.2},
                        {"artificial_stress_0.3", StabilizerKind::artificial_stress, 0.3},
                        {"artificial_stress_0.5", StabilizerKind::artificial_stress, 0.5},
                        {"adaptive", StabilizerKind::adaptive_kernel, 0.0}};
  std::vector<ComparisonEntry> entries;
  for (const Mode& m : modes) {
    SimConfig cfg = base;
    cfg.stabilizer = m.kind;
    if (m.kind == StabilizerKind::artificial_stress) cfg.eps_as = m.eps;
    if (!base.output_dir.empty()) cfg.output_dir = (fs::path(base.output_dir) / m.label).string();
    ComparisonEntry e{m.label, m.kind, m.eps, {}};
    e.result = run_simulation(cfg, hooks ? hooks(m.label) : RunHooks{});
    entries.push_back(std::move(e));
  }
  return entries;
}

void write_comparison(const std::vector<ComparisonEntry>& entries, const std::string& directory) {
  std::error_code ec;
  fs::create_directories(directory, ec);
  if (ec) throw IoError("cannot create '" + directory + "': " + ec.message());

  nlohmann::json json = nlohmann::json::array();
  std::ostringstream md;
  md << "| mode | status | time (s) | nn min | nn max | nn mean | fracture fraction | momentum residual |\n"
     << "|---|---|---|---|---|---|---|---|\n";
  for (const auto& e : entries) {
    nlohmann::json frames = nlohmann::json::array();
    for (const auto& f : e.result.frames) {
      frames.push_back({{"time", f.time}, {"diagnostics", to_json(f.diagnostics)}});
      const auto& d = f.diagnostics;
      md << "| " << e.label << " | " << e.result.status << " | " << f.time << " | " << d.nn_min << " | " << d.nn_max
         << " | " << d.nn_mean << " | " << d.fracture_fraction << " | " << d.momentum_residual << " |\n";
    }
    json.push_back({{"mode", e.label},
                    {"status", e.result.status},
                    {"message", e.result.message},
                    {"max_relative_momentum_residual", e.result.max_relative_residual},
                    {"frames", frames}});
  }
  write_text((fs::path(directory) / "comparison.json").string(), json.dump(2) + "\n");
  write_text((fs::path(directory) / "comparison.md").string(), md.str());
}

}  // namespace geosph
