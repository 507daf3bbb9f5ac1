#include "qwalk/app/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "qwalk/analytic_moving.hpp"
#include "qwalk/analytic_swapping.hpp"
#include "qwalk/spectral.hpp"

namespace qwalk::app {

using nlohmann::ordered_json;

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

namespace {

std::string fixed(double value, int digits) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

ordered_json config_json(const RunConfig& c) {
  ordered_json j;
  j["shift"] = std::string(to_string(c.shift));
  j["n_sites"] = c.n_sites;
  j["omega"] = c.omega;
  j["coin_phase"] = c.coin_phase;
  j["start"] = c.start;
  j["omega0"] = c.omega0;
  j["phi0"] = c.phi0;
  j["method"] = std::string(to_string(c.method));
  if (c.method == Method::TimeAverage) {
    j["steps"] = c.horizon;
    j["snapshot"] = c.snapshot;
  }
  return j;
}

std::vector<double> to_vector(const PositionDistribution& d) { return {d.values().begin(), d.values().end()}; }

// Minimal bar chart: one bar per position, axes, axis labels and the y maximum.
std::string svg_bars(const std::string& title, const PositionDistribution& d) {
  constexpr double width = 640, height = 400, left = 60, right = 20, top = 40, bottom = 50;
  const double plot_w = width - left - right, plot_h = height - top - bottom;
  const auto values = d.values();
  double ymax = 0.0;
  for (double v : values) ymax = std::max(ymax, v);
  if (ymax <= 0.0) ymax = 1.0;
  const double slot = plot_w / static_cast<double>(values.size());

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" viewBox=\"0 0 640 400\">\n";
  s += "<text x=\"320\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">" + title + "</text>\n";
  for (std::size_t k = 0; k < values.size(); ++k) {
    const double h = plot_h * std::max(0.0, values[k]) / ymax;
    s += "<rect x=\"" + fixed(left + slot * k + 0.1 * slot, 3) + "\" y=\"" + fixed(top + plot_h - h, 3) +
         "\" width=\"" + fixed(0.8 * slot, 3) + "\" height=\"" + fixed(h, 3) + "\"/>\n";
  }
  const std::string x0 = fixed(left, 1), y0 = fixed(top + plot_h, 1);
  s += "<line x1=\"" + x0 + "\" y1=\"" + y0 + "\" x2=\"" + fixed(left + plot_w, 1) + "\" y2=\"" + y0 +
       "\" stroke=\"black\"/>\n";
  s += "<line x1=\"" + x0 + "\" y1=\"" + y0 + "\" x2=\"" + x0 + "\" y2=\"" + fixed(top, 1) + "\" stroke=\"black\"/>\n";
  s += "<text x=\"" + fixed(left - 4, 1) + "\" y=\"" + fixed(top + 4, 1) + "\" text-anchor=\"end\" font-size=\"10\">" +
       fixed(ymax, 4) + "</text>\n";
  s += "<text x=\"" + fixed(left - 4, 1) + "\" y=\"" + y0 + "\" text-anchor=\"end\" font-size=\"10\">0</text>\n";
  s += "<text x=\"" + fixed(left + 0.5 * slot, 1) + "\" y=\"" + fixed(top + plot_h + 14, 1) +
       "\" text-anchor=\"middle\" font-size=\"10\">1</text>\n";
  s += "<text x=\"" + fixed(left + plot_w - 0.5 * slot, 1) + "\" y=\"" + fixed(top + plot_h + 14, 1) +
       "\" text-anchor=\"middle\" font-size=\"10\">" + std::to_string(values.size()) + "</text>\n";
  s += "<text x=\"" + fixed(left + 0.5 * plot_w, 1) + "\" y=\"" + fixed(height - 12, 1) +
       "\" text-anchor=\"middle\" font-size=\"12\">position</text>\n";
  s += "<text x=\"16\" y=\"" + fixed(top + 0.5 * plot_h, 1) + "\" text-anchor=\"middle\" font-size=\"12\" "
       "transform=\"rotate(-90 16 " + fixed(top + 0.5 * plot_h, 1) + ")\">probability</text>\n";
  s += "</svg>\n";
  return s;
}

std::string svg_circle(const std::string& title, const std::vector<complex>& values) {
  constexpr double cx = 200, cy = 220, radius = 150;
  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"420\" viewBox=\"0 0 400 420\">\n";
  s += "<text x=\"200\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">" + title + "</text>\n";
  s += "<circle cx=\"200\" cy=\"220\" r=\"150\" fill=\"none\" stroke=\"gray\"/>\n";
  s += "<line x1=\"40\" y1=\"220\" x2=\"360\" y2=\"220\" stroke=\"black\"/>\n";
  s += "<line x1=\"200\" y1=\"60\" x2=\"200\" y2=\"380\" stroke=\"black\"/>\n";
  s += "<text x=\"360\" y=\"236\" text-anchor=\"end\" font-size=\"12\">Re</text>\n";
  s += "<text x=\"206\" y=\"70\" font-size=\"12\">Im</text>\n";
  for (const complex& u : values)
    s += "<circle cx=\"" + fixed(cx + radius * u.real(), 3) + "\" cy=\"" + fixed(cy - radius * u.imag(), 3) +
         "\" r=\"3\"/>\n";
  s += "</svg>\n";
  return s;
}

std::string title_of(const RunConfig& c, std::string_view what) {
  return std::string(what) + " " + std::string(to_string(c.shift)) + " N=" + std::to_string(c.n_sites) +
         " omega=" + fixed(c.omega, 6) + " start=" + std::to_string(c.start);
}

std::string csv_distribution(const PositionDistribution& d, const std::optional<PositionDistribution>& intrinsic,
                             const std::optional<PositionDistribution>& continuum) {
  const bool split = intrinsic && continuum;
  std::string s = split ? "position,probability,intrinsic,continuum\n" : "position,probability\n";
  for (int j = 1; j <= static_cast<int>(d.size()); ++j) {
    s += std::to_string(j) + "," + format_real(d.at(j));
    if (split) s += "," + format_real(intrinsic->at(j)) + "," + format_real(continuum->at(j));
    s += "\n";
  }
  return s;
}

StateVector start_state(const RunConfig& c) {
  return initial_state(ChainGeometry(c.n_sites), c.start, c.omega0, c.phi0);
}

UnitaryOperator operator_of(const RunConfig& c) {
  return evolution_operator(c.shift, ChainGeometry(c.n_sites), coin_of(c));
}

std::vector<complex> analytic_spectrum(const RunConfig& c) {
  const CoinParams coin = coin_of(c);
  return c.shift == ShiftKind::Moving ? moving_eigenvalues(c.n_sites, coin, c.roots)
                                      : swapping_eigenvalues(c.n_sites, coin);
}

}  // namespace

SimulateResult run_simulate(const RunConfig& c) {
  const Propagator propagator(operator_of(c));
  const StateVector psi0 = start_state(c);
  if (c.snapshot) return {probability_distribution(evolve(propagator, psi0, c.horizon))};
  return {time_averaged_distribution(propagator, psi0, c.horizon)};
}

SpectrumResult run_spectrum(const RunConfig& c) {
  SpectrumResult result;
  if (c.method == Method::SpectralAnalytic) {
    result.eigenvalues = sorted_by_phase(analytic_spectrum(c));
    if (c.compare)
      result.max_set_distance = spectrum_set_distance(result.eigenvalues, numerical_spectrum(operator_of(c)).eigenvalues);
  } else {
    result.eigenvalues = sorted_by_phase(numerical_spectrum(operator_of(c)).eigenvalues);
    if (c.compare) result.max_set_distance = spectrum_set_distance(result.eigenvalues, analytic_spectrum(c));
  }
  return result;
}

LimitResult run_limitdist(const RunConfig& c) {
  if (c.method == Method::SpectralNumeric)
    return {limit_distribution_exact(numerical_spectrum(operator_of(c)), start_state(c)), std::nullopt, std::nullopt};
  const CoinParams coin = coin_of(c);
  if (c.shift == ShiftKind::Moving) return {chi_moving_closed_form_profile(c.n_sites, coin), std::nullopt, std::nullopt};
  auto split = chi_swapping_closed_form(c.start, c.n_sites, coin, c.omega0, c.phi0);
  return {std::move(split.total), std::move(split.intrinsic), std::move(split.continuum)};
}

std::string render_simulate(const RunConfig& c, const SimulateResult& r) {
  switch (c.format) {
    case Format::Csv: return csv_distribution(r.distribution, std::nullopt, std::nullopt);
    case Format::Json: {
      ordered_json j;
      j["config"] = config_json(c);
      j["method"] = std::string(to_string(c.method));
      j["values"] = to_vector(r.distribution);
      j["chi"] = j["values"];
      return j.dump(2) + "\n";
    }
    case Format::Svg: return svg_bars(title_of(c, c.snapshot ? "P(t)" : "time average"), r.distribution);
  }
  return {};
}

std::string render_spectrum(const RunConfig& c, const SpectrumResult& r) {
  switch (c.format) {
    case Format::Csv: {
      std::string s = "re,im\n";
      for (const complex& u : r.eigenvalues) s += format_real(u.real()) + "," + format_real(u.imag()) + "\n";
      if (r.max_set_distance) s += "# max_set_distance=" + format_real(*r.max_set_distance) + "\n";
      return s;
    }
    case Format::Json: {
      ordered_json j;
      j["config"] = config_json(c);
      j["method"] = std::string(to_string(c.method));
      ordered_json values = ordered_json::array();
      for (const complex& u : r.eigenvalues) values.push_back({u.real(), u.imag()});
      j["values"] = std::move(values);
      if (r.max_set_distance) j["max_set_distance"] = *r.max_set_distance;
      return j.dump(2) + "\n";
    }
    case Format::Svg: return svg_circle(title_of(c, "spectrum"), r.eigenvalues);
  }
  return {};
}

std::string render_limitdist(const RunConfig& c, const LimitResult& r) {
  switch (c.format) {
    case Format::Csv: return csv_distribution(r.chi, r.intrinsic, r.continuum);
    case Format::Json: {
      ordered_json j;
      j["config"] = config_json(c);
      j["method"] = std::string(to_string(c.method));
      j["values"] = to_vector(r.chi);
      j["chi"] = j["values"];
      if (r.intrinsic) j["intrinsic"] = to_vector(*r.intrinsic);
      if (r.continuum) j["continuum"] = to_vector(*r.continuum);
      return j.dump(2) + "\n";
    }
    case Format::Svg: return svg_bars(title_of(c, "limit distribution"), r.chi);
  }
  return {};
}

std::string cmd_simulate(const RunConfig& c) {
  validate(c, Command::Simulate);
  return render_simulate(c, run_simulate(c));
}

std::string cmd_spectrum(const RunConfig& c) {
  validate(c, Command::Spectrum);
  return render_spectrum(c, run_spectrum(c));
}

std::string cmd_limitdist(const RunConfig& c) {
  validate(c, Command::Limitdist);
  return render_limitdist(c, run_limitdist(c));
}

void write_output(const std::string& text, const std::string& path) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw IoFailure("failed writing to stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoFailure("cannot open '" + path + "' for writing");
  out << text;
  out.close();
  if (!out) throw IoFailure("failed writing '" + path + "'");
}

}  // namespace qwalk::app
