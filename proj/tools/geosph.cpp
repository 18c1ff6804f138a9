// Command-line driver: run, validate-config, report.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "geosph/config.hpp"
#include "geosph/errors.hpp"
#include "geosph/runner.hpp"

namespace {

struct Options {
  std::string config_file;
  std::string scenario;
  std::string stabilizer;
  double eps = -1.0;
  double end_time = -1.0;
  std::string out;
  std::string format;
  std::vector<std::string> sets;
  bool validate_only = false;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config_file, "key = value config file");
  cmd->add_option("--scenario", o.scenario, "cylinder_drop, vertical_cut or custom");
  cmd->add_option("--stabilizer", o.stabilizer, "conventional, adaptive or artificial-stress");
  cmd->add_option("--eps", o.eps, "artificial stress coefficient");
  cmd->add_option("--end-time", o.end_time, "simulated time (s)");
  cmd->add_option("--out", o.out, "output directory");
  cmd->add_option("--format", o.format, "csv, vtk or both");
  cmd->add_option("--set", o.sets, "override, key=value (repeatable)");
}

geosph::SimConfig assemble(const Options& o) {
  std::string text;
  if (!o.config_file.empty()) {
    std::ifstream in(o.config_file);
    if (!in) throw geosph::IoError("cannot open config file '" + o.config_file + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str() + "\n";
  }
  // The flag wins over a scenario named in the file.
  if (!o.scenario.empty()) text += "scenario = " + o.scenario + "\n";
  geosph::SimConfig cfg = geosph::parse_config(text, o.config_file.empty() ? "<cli>" : o.config_file);
  if (!o.stabilizer.empty()) geosph::set_config_value(cfg, "stabilizer", o.stabilizer);
  if (o.eps >= 0.0) cfg.eps_as = o.eps;
  if (o.end_time >= 0.0) cfg.end_time = o.end_time;
  if (!o.out.empty()) cfg.output_dir = o.out;
  if (!o.format.empty()) cfg.format = o.format;
  for (const auto& s : o.sets) {
    const auto [k, v] = geosph::split_assignment(s);
    geosph::set_config_value(cfg, k, v);
  }
  return cfg;
}

int report_result(const geosph::RunResult& r) {
  if (r.exit_code == geosph::exit_code::ok) {
    std::cout << "particles: " << r.n_real << " real, " << r.n_boundary << " boundary\n"
              << "dt: " << r.dt << " s, steps: " << r.steps << ", final time: " << r.final_time << " s\n"
              << "frames: " << r.frames.size() << ", max relative momentum residual: " << r.max_relative_residual
              << "\n";
  } else {
    std::cerr << "error (" << r.status << "): " << r.message << "\n";
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2D plane-strain SPH solver for elastoplastic soil"};
  app.require_subcommand(1);
  Options run_opts, check_opts, report_opts;

  auto* run = app.add_subcommand("run", "run a simulation");
  add_common(run, run_opts);
  run->add_flag("--validate-config", run_opts.validate_only, "check the configuration and exit");

  auto* check = app.add_subcommand("validate-config", "check a configuration without running");
  add_common(check, check_opts);

  auto* report = app.add_subcommand("report", "stabilizer comparison sweep");
  add_common(report, report_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      const geosph::SimConfig cfg = assemble(run_opts);
      geosph::validate_config(cfg);
      if (run_opts.validate_only) {
        std::cout << "config ok\n";
        return geosph::exit_code::ok;
      }
      return report_result(geosph::run_simulation(cfg));
    }
    if (check->parsed()) {
      const geosph::SimConfig cfg = assemble(check_opts);
      geosph::validate_config(cfg);
      geosph::to_settings(cfg);
      std::cout << "config ok\n" << geosph::dump_config(cfg);
      return geosph::exit_code::ok;
    }
    geosph::SimConfig cfg = assemble(report_opts);
    geosph::validate_config(cfg);
    if (cfg.output_dir.empty()) cfg.output_dir = "comparison";
    const auto entries = geosph::run_comparison(cfg);
    geosph::write_comparison(entries, cfg.output_dir);
    int code = geosph::exit_code::ok;
    for (const auto& e : entries) {
      std::cout << e.label << ": " << e.result.status;
      if (!e.result.frames.empty())
        std::cout << ", final fracture fraction " << e.result.frames.back().diagnostics.fracture_fraction;
      std::cout << "\n";
      if (e.result.exit_code == geosph::exit_code::io || e.result.exit_code == geosph::exit_code::config)
        code = e.result.exit_code;
    }
    std::cout << "wrote " << cfg.output_dir << "/comparison.md\n";
    return code;
  } catch (const geosph::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return geosph::exit_code::config;
  } catch (const geosph::IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return geosph::exit_code::io;
  }
}
