// esmhd command line driver.
//
// Subcommands:
//   run          march a named problem to t_end, writing snapshots and a
//                diagnostics CSV
//   convergence  smooth Alfven wave error/EOC table (CSV to stdout)
//   entropy-test entropy-conservation error vs fixed time step, with fitted
//                slopes per integrator
//
// Exit codes: 0 success, 1 usage error, 2 unphysical-state abort (the last
// accepted snapshot and a failure record are written first).

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "esmhd/driver.hpp"
#include "esmhd/experiments.hpp"
#include "esmhd/snapshot.hpp"

using namespace esmhd;

namespace {

struct CliOptions {
  std::string problem = "alfven";
  int nx = 0, ny = 0, nz = 0; // 0 = problem default
  std::string flux = "kepes";
  std::string reconstruction = "minmod";
  std::string integrator = "ssprk3";
  double cfl = 0.8;
  double dt = 0.0; // 0 = CFL-controlled
  double tend = -1.0; // <0 = problem default
  std::string out;
  double snapshot_every = 0.0;
  double diag_every = 0.0;
  std::string config_file;
  std::string format = "csv";
};

FluxKind parse_flux(const std::string &s) {
  if (s == "kepec") return FluxKind::Kepec;
  if (s == "kepes") return FluxKind::Kepes;
  if (s == "kepes-naive") return FluxKind::KepesNaive;
  throw CLI::ValidationError("--flux", "unknown flux: " + s);
}

ReconstructionScheme parse_recon(const std::string &s) {
  if (s == "constant") return {ReconKind::Constant, 0.5};
  if (s == "linear") return {ReconKind::Linear, 0.5};
  if (s == "minmod") return {ReconKind::Minmod, 0.5};
  throw CLI::ValidationError("--reconstruction", "unknown scheme: " + s);
}

TimeScheme parse_integrator(const std::string &s) {
  if (s == "euler") return TimeScheme::Euler;
  if (s == "ssprk2") return TimeScheme::SspRk2;
  if (s == "ssprk3") return TimeScheme::SspRk3;
  throw CLI::ValidationError("--integrator", "unknown integrator: " + s);
}

// config file provides defaults; explicitly passed flags win
void apply_config_file(const CLI::App &cmd, CliOptions &o) {
  if (o.config_file.empty()) return;
  const auto kv = parse_config_file(o.config_file);
  auto set_if_default = [&](const char *flag, auto &target) {
    const auto it = kv.find(std::string(flag).substr(2));
    if (it == kv.end()) return;
    if (cmd.count(flag) > 0) return; // flag wins
    std::stringstream ss(it->second);
    ss >> target;
  };
  set_if_default("--problem", o.problem);
  set_if_default("--nx", o.nx);
  set_if_default("--ny", o.ny);
  set_if_default("--nz", o.nz);
  set_if_default("--flux", o.flux);
  set_if_default("--reconstruction", o.reconstruction);
  set_if_default("--integrator", o.integrator);
  set_if_default("--cfl", o.cfl);
  set_if_default("--dt", o.dt);
  set_if_default("--tend", o.tend);
  set_if_default("--snapshot-every", o.snapshot_every);
  set_if_default("--diag-every", o.diag_every);
  set_if_default("--format", o.format);
}

std::map<std::string, std::string> effective_config(const CliOptions &o,
                                                    double tend) {
  std::map<std::string, std::string> kv;
  char buf[64];
  kv["problem"] = o.problem;
  auto put_num = [&](const char *k, double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    kv[k] = buf;
  };
  kv["flux"] = o.flux;
  kv["reconstruction"] = o.reconstruction;
  kv["integrator"] = o.integrator;
  kv["format"] = o.format;
  put_num("nx", o.nx);
  put_num("ny", o.ny);
  put_num("nz", o.nz);
  put_num("cfl", o.cfl);
  put_num("dt", o.dt);
  put_num("tend", tend);
  put_num("snapshot-every", o.snapshot_every);
  put_num("diag-every", o.diag_every);
  return kv;
}

int do_run(const CLI::App &cmd, CliOptions &o) {
  apply_config_file(cmd, o);

  RunConfig cfg;
  cfg.problem = make_problem(o.problem);
  if (o.nx > 0) {
    const Grid &g = cfg.problem.grid;
    cfg.problem.resize_grid(o.nx, o.ny > 0 ? o.ny : (g.ny > 1 ? o.nx : 1),
                            o.nz > 0 ? o.nz : (g.nz > 1 ? o.nx : 1));
  }
  cfg.flux = parse_flux(o.flux);
  cfg.recon = parse_recon(o.reconstruction);
  cfg.integrator.scheme = parse_integrator(o.integrator);
  cfg.integrator.cfl = o.cfl;
  if (o.dt > 0.0) cfg.integrator.dt_fixed = o.dt;
  if (o.tend >= 0.0) cfg.t_end = o.tend;
  if (o.diag_every > 0.0)
    cfg.diag_every = o.diag_every;
  else if (o.snapshot_every > 0.0)
    cfg.diag_every = o.snapshot_every;

  const double t_end = cfg.t_end.value_or(cfg.problem.t_end);
  const SnapshotFormat fmt =
      (o.format == "bin") ? SnapshotFormat::Bin : SnapshotFormat::Csv;
  const char *ext = (fmt == SnapshotFormat::Bin) ? "bin" : "csv";

  std::filesystem::path out_dir;
  const bool writing = !o.out.empty();
  if (writing) {
    out_dir = o.out;
    std::filesystem::create_directories(out_dir);
    write_config_file(effective_config(o, t_end), (out_dir / "config.txt").string());
  }

  int snap_index = 0;
  double next_snap = o.snapshot_every;
  auto snap_path = [&](int idx) {
    char name[64];
    std::snprintf(name, sizeof name, "snapshot_%06d.%s", idx, ext);
    return (out_dir / name).string();
  };

  const GasModel gas = cfg.problem.gas;
  std::function<void(const Field &, double, long)> on_step;
  if (writing && o.snapshot_every > 0.0) {
    on_step = [&](const Field &f, double t, long) {
      if (t + 1e-12 * std::max(t_end, 1.0) >= next_snap) {
        write_snapshot(f, cfg.problem.grid, gas, t, snap_path(++snap_index), fmt);
        while (next_snap <= t + 1e-12) next_snap += o.snapshot_every;
      }
    };
  }

  if (writing) {
    Field f0(cfg.problem.grid);
    initialize(f0, cfg.problem.grid, cfg.problem);
    write_snapshot(f0, cfg.problem.grid, gas, 0.0, snap_path(0), fmt);
  }

  const RunResult res = run_problem(cfg, on_step);

  if (writing) {
    res.diag.write_csv((out_dir / "diagnostics.csv").string());
    char name[64];
    std::snprintf(name, sizeof name, "snapshot_final.%s", ext);
    write_snapshot(res.field, res.grid, res.gas, res.t, (out_dir / name).string(),
                   fmt);
  }

  const auto &last = res.diag.rows.back();
  std::printf("problem=%s steps=%ld t=%.6g\n", o.problem.c_str(), res.steps, res.t);
  std::printf("entropy (mathematical convention): %.17g\n", last.entropy);
  std::printf("entropy (physical convention):     %.17g\n", -last.entropy);

  if (!res.completed) {
    std::fprintf(stderr, "run aborted at step %ld, t=%.6g: %s (cell %d,%d,%d)\n",
                 res.fail_step, res.t, res.fail_reason.c_str(), res.fail_i,
                 res.fail_j, res.fail_k);
    if (writing) {
      std::map<std::string, std::string> rec;
      rec["status"] = "aborted";
      rec["reason"] = res.fail_reason;
      rec["step"] = std::to_string(res.fail_step);
      rec["time"] = std::to_string(res.t);
      rec["cell_i"] = std::to_string(res.fail_i);
      rec["cell_j"] = std::to_string(res.fail_j);
      rec["cell_k"] = std::to_string(res.fail_k);
      write_config_file(rec, (out_dir / "failure.txt").string());
    }
    return 2;
  }
  return 0;
}

int do_convergence(CliOptions &o, int nmax) {
  ConvergenceOptions opt;
  if (o.dt > 0.0) opt.dt = o.dt;
  opt.flux = parse_flux(o.flux);
  opt.integrator = parse_integrator(o.integrator);
  if (nmax > 64) {
    for (int n = 128; n <= nmax; n *= 2) opt.resolutions.push_back(n);
  }

  const auto rows = alfven_convergence(opt);
  std::string csv = "scheme,N,L1,L2,EOC_L1,EOC_L2\n";
  for (const auto &r : rows) {
    char line[160];
    std::snprintf(line, sizeof line, "%s,%d,%.6e,%.6e,%.3f,%.3f\n",
                  r.scheme.c_str(), r.n, r.l1, r.l2, r.eoc_l1, r.eoc_l2);
    csv += line;
  }
  std::fputs(csv.c_str(), stdout);
  if (!o.out.empty()) {
    std::filesystem::create_directories(o.out);
    std::FILE *fp = std::fopen((std::filesystem::path(o.out) / "convergence.csv").string().c_str(), "w");
    if (fp) {
      std::fputs(csv.c_str(), fp);
      std::fclose(fp);
    }
  }
  return 0;
}

int do_entropy_test(CliOptions &o) {
  EntropySweepOptions opt;
  if (!o.problem.empty() && o.problem != "alfven") opt.problem = o.problem;
  if (o.nx > 0) opt.nx = o.nx;
  if (o.tend > 0.0) opt.t_end = o.tend;

  std::string csv = "integrator,dt,entropy_err\n";
  for (TimeScheme s : {TimeScheme::Euler, TimeScheme::SspRk2, TimeScheme::SspRk3}) {
    const EntropySweepResult res = entropy_convergence(s, opt);
    for (const auto &p : res.points) {
      char line[128];
      std::snprintf(line, sizeof line, "%s,%.9e,%.9e\n",
                    integrator_name(s).c_str(), p.dt, p.entropy_err);
      csv += line;
    }
    std::printf("slope %s = %.4f (over %d points; floor %.3e)\n",
                integrator_name(s).c_str(), res.fitted_slope, res.points_in_fit,
                res.floor);
  }
  std::fputs(csv.c_str(), stdout);
  if (!o.out.empty()) {
    std::filesystem::create_directories(o.out);
    std::FILE *fp = std::fopen((std::filesystem::path(o.out) / "entropy_test.csv").string().c_str(), "w");
    if (fp) {
      std::fputs(csv.c_str(), fp);
      std::fclose(fp);
    }
  }
  return 0;
}

void add_common_flags(CLI::App *cmd, CliOptions &o) {
  cmd->add_option("--problem", o.problem, "problem name");
  cmd->add_option("--nx", o.nx, "cells in x (0 = problem default)");
  cmd->add_option("--ny", o.ny, "cells in y");
  cmd->add_option("--nz", o.nz, "cells in z");
  cmd->add_option("--flux", o.flux, "kepec | kepes | kepes-naive");
  cmd->add_option("--reconstruction", o.reconstruction,
                  "constant | linear | minmod");
  cmd->add_option("--integrator", o.integrator, "euler | ssprk2 | ssprk3");
  cmd->add_option("--cfl", o.cfl, "CFL coefficient in (0,1]");
  cmd->add_option("--dt", o.dt, "fixed time step (overrides CFL)");
  cmd->add_option("--tend", o.tend, "end time (problem default if unset)");
  cmd->add_option("--out", o.out, "output directory");
  cmd->add_option("--snapshot-every", o.snapshot_every, "snapshot interval");
  cmd->add_option("--diag-every", o.diag_every, "diagnostics row interval");
  cmd->add_option("--config", o.config_file, "key = value config file");
  cmd->add_option("--format", o.format, "snapshot format: csv | bin");
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"entropy-stable finite volume solver for ideal MHD"};
  app.require_subcommand(1);

  CliOptions o;
  int nmax = 64;

  CLI::App *run_cmd = app.add_subcommand("run", "march a problem to t_end");
  add_common_flags(run_cmd, o);

  CLI::App *conv_cmd =
      app.add_subcommand("convergence", "smooth Alfven wave error/EOC table");
  add_common_flags(conv_cmd, o);
  conv_cmd->add_option("--nmax", nmax, "largest resolution (64, 128 or 256)");

  CLI::App *ent_cmd = app.add_subcommand(
      "entropy-test", "entropy conservation error vs fixed time step");
  add_common_flags(ent_cmd, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 1;
  }

  try {
    if (run_cmd->parsed()) return do_run(*run_cmd, o);
    if (conv_cmd->parsed()) return do_convergence(o, nmax);
    if (ent_cmd->parsed()) return do_entropy_test(o);
  } catch (const CLI::ValidationError &e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 1;
  } catch (const std::invalid_argument &e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 1;
  } catch (const std::exception &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 1;
}
