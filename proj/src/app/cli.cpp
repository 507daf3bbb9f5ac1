#include "qwalk/app/cli.hpp"

#include <CLI11.hpp>
#include <iostream>

#include "qwalk/app/battery.hpp"
#include "qwalk/app/commands.hpp"
#include "qwalk/app/config.hpp"
#include "qwalk/error.hpp"

namespace qwalk::app {

namespace {

struct RawOptions {
  std::string shift;
  int n_sites = 0;
  double omega = 0.0;
  std::string omega_frac;
  double coin_phase = 0.0;
  int start = 1;
  double omega0 = kDefaultOmega0;
  double phi0 = 0.0;
  std::string method;
  long steps = 1000;
  std::string format = "csv";
  std::string out = "-";
  bool snapshot = false;
  bool compare = false;
  std::string roots = "exact";
  CLI::Option* omega_opt = nullptr;
  CLI::Option* frac_opt = nullptr;
};

void add_run_options(CLI::App* cmd, RawOptions& o, Command command) {
  cmd->add_option("--shift", o.shift, "moving | swapping")->required();
  cmd->add_option("--n", o.n_sites, "number of sites N")->required();
  o.omega_opt = cmd->add_option("--omega", o.omega, "coin angle in radians");
  o.frac_opt = cmd->add_option("--omega-frac", o.omega_frac, "coin angle as p/q, meaning pi*p/q");
  o.omega_opt->excludes(o.frac_opt);
  o.frac_opt->excludes(o.omega_opt);
  cmd->add_option("--coin-phase", o.coin_phase, "coin phase (0 for the closed forms)");
  cmd->add_option("--start", o.start, "start site, 1-based");
  cmd->add_option("--omega0", o.omega0, "initial-state angle for interior starts");
  cmd->add_option("--phi0", o.phi0, "initial-state phase for interior starts");
  cmd->add_option("--method", o.method, "time-average | spectral-numeric | spectral-analytic");
  cmd->add_option("--steps", o.steps, "time horizon T (time-average)");
  cmd->add_option("--format", o.format, "csv | json | svg");
  cmd->add_option("--out", o.out, "output path, - for stdout");
  if (command == Command::Simulate) cmd->add_flag("--snapshot", o.snapshot, "write P(i, T) instead of the average");
  if (command == Command::Spectrum) {
    cmd->add_flag("--compare", o.compare, "also report the analytic vs numeric set distance");
    cmd->add_option("--roots", o.roots, "exact | approx (moving shift, analytic)");
  }
}

RunConfig to_config(const RawOptions& o, Command command) {
  RunConfig c;
  const auto shift = parse_shift(o.shift);
  if (!shift) throw InvalidInput("--shift must be moving or swapping, got '" + o.shift + "'");
  c.shift = *shift;
  c.n_sites = o.n_sites;
  if (o.frac_opt->count() > 0) {
    c.omega = parse_omega_frac(o.omega_frac);
  } else if (o.omega_opt->count() > 0) {
    c.omega = o.omega;
  } else {
    throw InvalidInput("one of --omega or --omega-frac is required");
  }
  c.coin_phase = o.coin_phase;
  c.start = o.start;
  c.omega0 = o.omega0;
  c.phi0 = o.phi0;
  if (o.method.empty()) {
    c.method = command == Command::Simulate ? Method::TimeAverage : Method::SpectralNumeric;
  } else {
    const auto m = parse_method(o.method);
    if (!m) throw InvalidInput("unknown --method '" + o.method + "'");
    c.method = *m;
  }
  c.horizon = o.steps;
  const auto f = parse_format(o.format);
  if (!f) throw InvalidInput("--format must be csv, json or svg, got '" + o.format + "'");
  c.format = *f;
  c.out = o.out;
  c.snapshot = o.snapshot;
  c.compare = o.compare;
  if (o.roots == "exact") {
    c.roots = RootMode::ExactRoots;
  } else if (o.roots == "approx") {
    c.roots = RootMode::LargeNApprox;
  } else {
    throw InvalidInput("--roots must be exact or approx, got '" + o.roots + "'");
  }
  return c;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& err) {
  CLI::App app{"Discrete-time quantum walks on a finite chain"};
  app.require_subcommand(1);

  RawOptions sim_opts, spec_opts, lim_opts;
  auto* sim = app.add_subcommand("simulate", "time-averaged or final-step position distribution");
  auto* spec = app.add_subcommand("spectrum", "eigenvalues of the evolution operator");
  auto* lim = app.add_subcommand("limitdist", "long-time averaged position distribution");
  auto* ver = app.add_subcommand("verify", "run the verification battery");
  add_run_options(sim, sim_opts, Command::Simulate);
  add_run_options(spec, spec_opts, Command::Spectrum);
  add_run_options(lim, lim_opts, Command::Limitdist);
  std::string level = "quick";
  std::string verify_out = "-";
  ver->add_option("--level", level, "quick | full");
  ver->add_option("--out", verify_out, "report path, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "qwalk: " << e.what() << "\n";
    return kExitInvalidConfig;
  }

  try {
    if (*ver) {
      const auto lvl = parse_level(level);
      if (!lvl) throw InvalidInput("--level must be quick or full, got '" + level + "'");
      const auto results = run_battery(*lvl);
      std::string report;
      std::string failed;
      for (const auto& r : results) {
        report += format_check(r) + "\n";
        if (!r.pass) failed += (failed.empty() ? "" : ", ") + r.id + " " + r.name;
      }
      write_output(report, verify_out);
      if (!failed.empty()) {
        err << "qwalk verify: failed: " << failed << "\n";
        return kExitCheckFailed;
      }
      return kExitOk;
    }
    if (*sim) {
      const RunConfig c = to_config(sim_opts, Command::Simulate);
      write_output(cmd_simulate(c), c.out);
    } else if (*spec) {
      const RunConfig c = to_config(spec_opts, Command::Spectrum);
      write_output(cmd_spectrum(c), c.out);
    } else {
      const RunConfig c = to_config(lim_opts, Command::Limitdist);
      write_output(cmd_limitdist(c), c.out);
    }
    return kExitOk;
  } catch (const InvalidInput& e) {
    err << "qwalk: invalid configuration: " << e.what() << "\n";
    return kExitInvalidConfig;
  } catch (const NumericalFailure& e) {
    err << "qwalk: numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const IoFailure& e) {
    err << "qwalk: i/o failure: " << e.what() << "\n";
    return kExitIo;
  }
}

}  // namespace qwalk::app
