#pragma once

// Subcommand bodies: compute, then render to CSV / JSON / SVG text.
// Rendering is byte-deterministic for a fixed config.

#include <optional>
#include <string>
#include <vector>

#include "qwalk/app/config.hpp"
#include "qwalk/evolve.hpp"

namespace qwalk::app {

struct SimulateResult {
  PositionDistribution distribution;
};

struct SpectrumResult {
  std::vector<complex> eigenvalues;        // sorted by phase
  std::optional<double> max_set_distance;  // with --compare
};

struct LimitResult {
  PositionDistribution chi;
  std::optional<PositionDistribution> intrinsic;  // swapping, spectral-analytic
  std::optional<PositionDistribution> continuum;
};

SimulateResult run_simulate(const RunConfig& config);
SpectrumResult run_spectrum(const RunConfig& config);
LimitResult run_limitdist(const RunConfig& config);

std::string render_simulate(const RunConfig& config, const SimulateResult& result);
std::string render_spectrum(const RunConfig& config, const SpectrumResult& result);
std::string render_limitdist(const RunConfig& config, const LimitResult& result);

/// validate + run + render.
std::string cmd_simulate(const RunConfig& config);
std::string cmd_spectrum(const RunConfig& config);
std::string cmd_limitdist(const RunConfig& config);

/// Writes to stdout for "-", else to the file; IoFailure on error.
void write_output(const std::string& text, const std::string& path);

/// "%.17g".
std::string format_real(double value);

}  // namespace qwalk::app
