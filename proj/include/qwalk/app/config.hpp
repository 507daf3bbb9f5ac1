#pragma once

// Run configuration shared by the CLI subcommands, and its validation.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qwalk/analytic_moving.hpp"
#include "qwalk/hilbert.hpp"
#include "qwalk/operators.hpp"

namespace qwalk::app {

enum class Method { TimeAverage, SpectralNumeric, SpectralAnalytic };
enum class Format { Csv, Json, Svg };
enum class Command { Simulate, Spectrum, Limitdist };

std::string_view to_string(Method m);
std::string_view to_string(Format f);
std::string_view to_string(Command c);
std::optional<Method> parse_method(std::string_view name);
std::optional<Format> parse_format(std::string_view name);

/// Output could not be written.
class IoFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxSpectralSites = 512;
inline constexpr int kMaxSimulateSites = 1 << 20;

struct RunConfig {
  ShiftKind shift = ShiftKind::Moving;
  int n_sites = 16;
  double omega = std::numbers::pi / 4.0;
  double coin_phase = 0.0;
  int start = 1;
  double omega0 = kDefaultOmega0;
  double phi0 = 0.0;
  Method method = Method::SpectralNumeric;
  long horizon = 1000;
  bool snapshot = false;            // simulate: P(i, T) instead of the average
  bool compare = false;             // spectrum: also report the analytic/numeric distance
  RootMode roots = RootMode::ExactRoots;
  Format format = Format::Csv;
  std::string out = "-";            // "-" is stdout
};

/// pi * p / q from "p/q" (or a bare integer p); InvalidInput on bad syntax or q == 0.
double parse_omega_frac(std::string_view text);

/// Checks every field against the preconditions of `command` before any
/// computation. Throws InvalidInput; analytic-mode exclusions carry the
/// prefix "analytic mode unavailable".
void validate(const RunConfig& config, Command command);

CoinParams coin_of(const RunConfig& config);

}  // namespace qwalk::app
