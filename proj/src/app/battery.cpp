#include "qwalk/app/battery.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "qwalk/analytic_moving.hpp"
#include "qwalk/analytic_swapping.hpp"
#include "qwalk/app/commands.hpp"
#include "qwalk/chebyshev.hpp"
#include "qwalk/error.hpp"
#include "qwalk/evolve.hpp"
#include "qwalk/kernels.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/verify.hpp"

namespace qwalk::app {

namespace {

constexpr double kPi = std::numbers::pi;

std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

std::string num(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

struct Outcome {
  bool pass;
  std::string detail;
};

CheckResult timed(std::string id, std::string name, const std::function<Outcome()>& body) {
  CheckResult result{std::move(id), std::move(name), false, {}, 0.0};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    Outcome o = body();
    result.pass = o.pass;
    result.detail = std::move(o.detail);
  } catch (const std::exception& e) {
    result.pass = false;
    result.detail = std::string("exception: ") + e.what();
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int n = lo; n <= hi; ++n) v.push_back(n);
  return v;
}

std::vector<double> omegas(Level level) {
  if (level == Level::Quick) return {kPi / 3.0};
  return {kPi / 6.0, kPi / 4.0, kPi / 3.0};
}

double eigen_residual(const UnitaryOperator& op, const StateVector& v, complex u) {
  Eigen::VectorXcd x(static_cast<Eigen::Index>(v.size()));
  for (std::size_t k = 0; k < v.size(); ++k) x[static_cast<Eigen::Index>(k)] = v[k];
  return (op.matrix() * x - u * x).norm();
}

double max_abs_diff(const PositionDistribution& p, const PositionDistribution& q) {
  double worst = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) worst = std::max(worst, std::abs(p.values()[k] - q.values()[k]));
  return worst;
}

PositionDistribution numeric_limit(ShiftKind shift, int n, double omega, const StateVector& psi0) {
  return limit_distribution_exact(numerical_spectrum(evolution_operator(shift, ChainGeometry(n), CoinParams::from_angle(omega))),
                                  psi0);
}

StateVector end_start(int n) { return initial_state(ChainGeometry(n), 1); }

// ---- criteria -------------------------------------------------------------

Outcome criterion_unitarity(Level level) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<int> sizes{3, 4, 8, 16, 32, 64, 128};
  if (level == Level::Quick) sizes.pop_back();
  double worst = 0.0;
  for (int n : sizes)
    for (double w : {kPi / 6.0, kPi / 4.0, kPi / 3.0})
      for (ShiftKind s : {ShiftKind::Moving, ShiftKind::Swapping})
        worst = std::max(worst, evolution_operator(s, ChainGeometry(n), CoinParams::from_angle(w)).unitarity_defect());
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {worst < 1e-12 && secs < 10.0, "max |U^dag U - I| = " + sci(worst) + " in " + num(secs) + " s"};
}

Outcome criterion_swapping_spectrum(Level level) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto sizes = level == Level::Full ? range(3, 64) : std::vector<int>{3, 4, 8, 16, 32};
  double worst = 0.0;
  for (int n : sizes)
    for (double w : omegas(level)) {
      const CoinParams coin = CoinParams::from_angle(w);
      const auto numeric = numerical_spectrum(evolution_operator(ShiftKind::Swapping, ChainGeometry(n), coin));
      worst = std::max(worst, spectrum_set_distance(swapping_eigenvalues(n, coin), numeric.eigenvalues));
    }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {worst < 1e-10 && secs < 30.0, "max set distance " + sci(worst) + " over N <= " +
                                             std::to_string(sizes.back()) + " in " + num(secs) + " s"};
}

Outcome criterion_moving_spectrum(Level level) {
  const auto sizes = level == Level::Full ? range(4, 64) : std::vector<int>{4, 8, 16, 32};
  double worst = 0.0;
  for (int n : sizes)
    for (double w : omegas(level)) {
      const ChainGeometry g(n);
      const CoinParams coin = CoinParams::from_angle(w);
      const auto op = evolution_operator(ShiftKind::Moving, g, coin);
      for (const auto& pair : moving_eigensystem(g, coin))
        worst = std::max(worst, eigen_residual(op, pair.eigenvector, pair.eigenvalue));
    }
  bool pass = worst < 1e-8;
  std::string detail = "max eigen-residual " + sci(worst);

  // Large-N roots cos(k pi/N) vs exact roots: the mean deviation must at least
  // halve per doubling of N, and N * max deviation must stay bounded.
  const std::vector<int> sweep = level == Level::Full ? std::vector<int>{16, 32, 64, 128}
                                                      : std::vector<int>{16, 32, 64};
  double worst_ratio = 0.0, band = 1.0;
  for (double w : omegas(level)) {
    const CoinParams coin = CoinParams::from_angle(w);
    double prev_mean = 0.0, lo = 1e300, hi = 0.0;
    for (int n : sweep) {
      const auto exact = moving_determinant_roots(n, coin);
      const auto approx = moving_approx_roots(n);
      double sum = 0.0, mx = 0.0;
      for (std::size_t k = 0; k < exact.size(); ++k) {
        const double d = std::abs(exact[k] - approx[k]);
        sum += d;
        mx = std::max(mx, d);
      }
      const double mean = sum / static_cast<double>(exact.size());
      if (prev_mean > 0.0) worst_ratio = std::max(worst_ratio, mean / prev_mean);
      prev_mean = mean;
      lo = std::min(lo, n * mx);
      hi = std::max(hi, n * mx);
    }
    band = std::max(band, hi / lo);
  }
  pass = pass && worst_ratio <= 0.5 && band <= 1.05;
  detail += "; approx roots: worst mean-deviation ratio per doubling " + num(worst_ratio) +
            ", N*max-deviation spread " + num(band);
  return {pass, detail};
}

Outcome criterion_triple_agreement(Level level) {
  const auto t0 = std::chrono::steady_clock::now();
  const int n = 16;
  const long horizon = level == Level::Full ? 100000 : 10000;
  const CoinParams coin = CoinParams::from_angle(kPi / 3.0);
  const ChainGeometry g(n);
  const StateVector psi0 = end_start(n);
  double ta_num = 0.0, ta_ana = 0.0, num_ana = 0.0;
  for (ShiftKind s : {ShiftKind::Moving, ShiftKind::Swapping}) {
    const auto op = evolution_operator(s, g, coin);
    const auto ta = time_averaged_distribution(op, psi0, horizon);
    const auto numeric = limit_distribution_exact(numerical_spectrum(op), psi0);
    const auto analytic = s == ShiftKind::Moving ? chi_moving_closed_form_profile(n, coin)
                                                 : chi_swapping_closed_form(1, n, coin).total;
    ta_num = std::max(ta_num, max_abs_diff(ta, numeric));
    ta_ana = std::max(ta_ana, max_abs_diff(ta, analytic));
    num_ana = std::max(num_ana, max_abs_diff(numeric, analytic));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {ta_num < 1e-2 && ta_ana < 1e-2 && num_ana < 1e-8 && secs < 120.0,
          "T=" + std::to_string(horizon) + ": |ta-num| " + sci(ta_num) + ", |ta-analytic| " + sci(ta_ana) +
              ", |num-analytic| " + sci(num_ana) + " in " + num(secs) + " s"};
}

Outcome criterion_mirror(Level level) {
  const int n = 16;
  double worst = 0.0;
  for (double w : omegas(level)) {
    const auto decomp = numerical_spectrum(evolution_operator(ShiftKind::Moving, ChainGeometry(n), CoinParams::from_angle(w)));
    for (int i = 1; i <= n; ++i) {
      const auto chi = limit_distribution_exact(decomp, initial_state(ChainGeometry(n), i));
      for (int j = 1; j <= n; ++j) worst = std::max(worst, std::abs(chi.at(j) - chi.at(n + 1 - j)));
    }
  }
  return {worst < 1e-9, "max |chi_ij - chi_i,N+1-j| = " + sci(worst) + " over all starts, N=16"};
}

Outcome criterion_inverse_n(Level) {
  const int n = 128;
  const CoinParams coin = CoinParams::from_angle(kPi / 3.0);
  const auto chi = chi_moving_closed_form_profile(n, coin);
  const double target = n * chi_moving_asymptote(n, coin);
  const double scaled = n * chi.at(1);
  const double rel = std::abs(scaled / target - 1.0);
  const double ends = std::abs(chi.at(n) - chi.at(1));
  const auto numeric = numeric_limit(ShiftKind::Moving, n, kPi / 3.0, end_start(n));
  const double cross = max_abs_diff(chi, numeric);
  return {rel <= 0.15 && ends < 1e-10 && cross < 1e-8,
          "N*chi_11 = " + num(scaled) + " vs " + num(target) + " (rel " + sci(rel) + "), |chi_1N - chi_11| = " +
              sci(ends) + ", closed form vs numeric " + sci(cross)};
}

Outcome criterion_power_law(Level) {
  const CoinParams coin = CoinParams::from_angle(kPi / 3.0);
  const double r = coin.r;
  int n = 64;
  const auto chi = numeric_limit(ShiftKind::Swapping, n, kPi / 3.0, end_start(n));
  const double lead = 0.5 * std::pow((1.0 - r) / (1.0 - std::pow(r, n - 1)), 2);
  const double d11 = std::abs(chi.at(1) - lead);

  const auto intr = intrinsic_distribution(1, n, coin);
  double ratio_err = 0.0;
  for (int j = 2; j <= n - 2; ++j) ratio_err = std::max(ratio_err, std::abs(intr.at(j + 1) / intr.at(j) - r));

  const double total = intrinsic_distribution(1, 256, coin).sum();
  const double dtot = std::abs(total - (1.0 - r));
  return {d11 < 0.01 && ratio_err < 1e-10 && dtot < 1e-3,
          "|chi_11 - lead| = " + sci(d11) + " (N=64), ratio error " + sci(ratio_err) + ", |sum - (1-r)| = " +
              sci(dtot) + " (N=256)"};
}

Outcome criterion_intrinsic_projection(Level level) {
  const auto sizes = level == Level::Full ? range(3, 64) : std::vector<int>{3, 4, 8, 16, 32};
  const std::vector<complex> targets{{1.0, 0.0}, {-1.0, 0.0}};
  double worst = 0.0;
  for (int n : sizes)
    for (double w : omegas(level)) {
      const ChainGeometry g(n);
      const CoinParams coin = CoinParams::from_angle(w);
      const auto decomp = numerical_spectrum(evolution_operator(ShiftKind::Swapping, g, coin));
      for (double phi0 : {kPi / 2.0, 0.0})
        for (int i = 1; i <= n; ++i) {
          const auto numeric = eigenspace_contribution(decomp, initial_state(g, i, kDefaultOmega0, phi0), targets);
          worst = std::max(worst, max_abs_diff(intrinsic_distribution(i, n, coin, kDefaultOmega0, phi0), numeric));
        }
    }
  return {worst < 1e-9, "max |intrinsic - projection| = " + sci(worst) + " over N <= " + std::to_string(sizes.back()) +
                            ", all starts"};
}

Outcome criterion_vanishing(Level) {
  const CoinParams coin = CoinParams::from_angle(2.0 * kPi / 3.0);
  std::vector<double> totals;
  for (int n : {32, 64, 128}) totals.push_back(intrinsic_distribution(1, n, coin).sum());
  const bool decreasing = totals[1] < totals[0] && totals[2] < totals[1];
  return {decreasing && totals[2] < 0.02, "totals " + sci(totals[0]) + ", " + sci(totals[1]) + ", " + sci(totals[2]) +
                                              " (r = " + num(coin.r) + ")"};
}

Outcome criterion_chebyshev(Level) {
  using namespace cheb;
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> pick(0, 64);
  std::uniform_real_distribution<double> pick_x(-1.0, 1.0);
  const Identity ids[] = {Identity::A6,  Identity::A7,  Identity::A8,  Identity::A9, Identity::A10,
                          Identity::A11, Identity::A12, Identity::A13, Identity::A14};
  double worst = 0.0;
  std::string worst_tag = "-";
  auto note = [&](double res, std::string_view tag) {
    if (res > worst) {
      worst = res;
      worst_tag = tag;
    }
  };
  for (int s = 0; s < 1000; ++s) {
    const int n = pick(rng), m = pick(rng);
    double x = pick_x(rng);
    if (x == -1.0) x = 0.0;
    for (Identity id : ids) note(identity_residual(id, n, m, x), identity_name(id));
    const complex y(0.0, x);
    // b1: V_0 = 1, V_1 = 2y, V_{n+1} = 2y V_n + V_{n-1}
    double b1 = std::max(std::abs(cheb_v(0, y) - 1.0), std::abs(cheb_v(1, y) - 2.0 * y));
    if (n >= 1) b1 = std::max(b1, std::abs(cheb_v(n + 1, y) - 2.0 * y * cheb_v(n, y) - cheb_v(n - 1, y)));
    note(b1, "b1");
    // b2: V_n(ix) = i^n U_n(x), recurrence side against the real closed form
    complex ipow(1.0, 0.0);
    for (int k = 0; k < n % 4; ++k) ipow *= complex(0.0, 1.0);
    note(std::abs(cheb_v_recurrence(n, y) - ipow * cheb_u_real(n, x)), "b2");
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {worst < 1e-10 && secs < 5.0,
          "max residual " + sci(worst) + " (" + worst_tag + ") over 1000 samples in " + num(secs) + " s"};
}

Outcome criterion_determinants(Level) {
  const CoinParams coin = CoinParams::from_angle(kPi / 3.0);
  double c_res = 0.0, d_res = 0.0, split = 0.0;
  for (const auto& s : random_samples(MappingKind::Moving, 200, 7, 6, 20, coin)) {
    c_res = std::max(c_res, appendix_c_residual(s));
    split = std::max(split, appendix_c_split_residuals(s.x, coin.b, s.n_sites).max());
  }
  for (const auto& s : random_samples(MappingKind::Swapping, 200, 11, 6, 20, coin))
    d_res = std::max(d_res, appendix_d_residual(s));

  // Vanishing at exact roots.
  double c_root = 0.0, d_root = 0.0;
  for (double x : moving_determinant_roots(10, coin))
    for (bool plus : {true, false}) c_root = std::max(c_root, std::abs(appendix_c_determinant(moving_sample(x, plus, 10, coin))));
  for (int n : {6, 10, 20})
    for (int k = 1; k <= n - 2; ++k)
      for (bool plus : {true, false})
        d_root = std::max(d_root, std::abs(appendix_d_lhs(swapping_sample(swapping_continuum_root(k, n), plus, n, coin))));
  for (int n : {6, 10, 20}) d_root = std::max(d_root, std::abs(appendix_d_lhs(swapping_sample(1.0 / coin.b, true, n, coin))));

  return {c_res < 1e-9 && d_res < 1e-9 && split < 1e-12 && c_root < 1e-9 && d_root < 1e-10,
          "C " + sci(c_res) + ", D " + sci(d_res) + ", splits " + sci(split) + ", at roots C " + sci(c_root) + " D " +
              sci(d_root)};
}

std::vector<RunConfig> determinism_configs() {
  std::vector<RunConfig> configs;
  RunConfig sim;
  sim.shift = ShiftKind::Swapping;
  sim.n_sites = 16;
  sim.omega = kPi / 3.0;
  sim.method = Method::TimeAverage;
  sim.horizon = 2000;
  configs.push_back(sim);
  RunConfig lim;
  lim.shift = ShiftKind::Moving;
  lim.n_sites = 16;
  lim.omega = kPi / 3.0;
  configs.push_back(lim);
  lim.shift = ShiftKind::Swapping;
  lim.method = Method::SpectralAnalytic;
  configs.push_back(lim);
  return configs;
}

Outcome criterion_determinism(Level) {
  int runs = 0;
  for (Format f : {Format::Csv, Format::Json, Format::Svg})
    for (RunConfig c : determinism_configs()) {
      c.format = f;
      const bool sim = c.method == Method::TimeAverage;
      const std::string first = sim ? cmd_simulate(c) : cmd_limitdist(c);
      const std::string second = sim ? cmd_simulate(c) : cmd_limitdist(c);
      if (first != second) return {false, "outputs differ for " + std::string(to_string(f))};
      ++runs;
      RunConfig sc = c;
      sc.method = Method::SpectralNumeric;
      sc.compare = true;
      if (cmd_spectrum(sc) != cmd_spectrum(sc)) return {false, "spectrum outputs differ"};
      ++runs;
    }
  return {true, std::to_string(runs) + " config pairs byte-identical"};
}

struct Criterion {
  const char* name;
  Outcome (*body)(Level);
};

constexpr Criterion kCriteria[kCriterionCount] = {
    {"unitarity", criterion_unitarity},
    {"swapping spectrum", criterion_swapping_spectrum},
    {"moving spectrum", criterion_moving_spectrum},
    {"limit distribution triple agreement", criterion_triple_agreement},
    {"moving mirror symmetry", criterion_mirror},
    {"moving 1/N law", criterion_inverse_n},
    {"swapping intrinsic power law", criterion_power_law},
    {"intrinsic = isolated projection", criterion_intrinsic_projection},
    {"vanishing intrinsic for r >= 1", criterion_vanishing},
    {"chebyshev identities", criterion_chebyshev},
    {"determinant residuals", criterion_determinants},
    {"determinism", criterion_determinism},
};

// ---- module checks --------------------------------------------------------

Outcome check_swapping_residual(Level) {
  double cont = 0.0, iso = 0.0;
  for (auto [n, w] : {std::pair{8, kPi / 4.0}, std::pair{16, kPi / 3.0}}) {
    const ChainGeometry g(n);
    const CoinParams coin = CoinParams::from_angle(w);
    const auto op = evolution_operator(ShiftKind::Swapping, g, coin);
    for (const auto& p : swapping_eigensystem(g, coin)) {
      const double res = eigen_residual(op, p.eigenvector, p.eigenvalue);
      double& slot = p.kind == SwappingKind::Continuum ? cont : iso;
      slot = std::max(slot, res);
    }
  }
  return {cont < 1e-9 && iso < 1e-10, "continuum " + sci(cont) + ", isolated " + sci(iso)};
}

Outcome check_moving_residual(Level) {
  const int n = 8;
  const ChainGeometry g(n);
  const CoinParams coin = CoinParams::from_angle(kPi / 3.0);
  const auto op = evolution_operator(ShiftKind::Moving, g, coin);
  const auto pairs = moving_eigensystem(g, coin);
  double res = 0.0, overlap = 0.0;
  for (std::size_t k = 0; k < pairs.size(); k += 2) {
    res = std::max({res, eigen_residual(op, pairs[k].eigenvector, pairs[k].eigenvalue),
                    eigen_residual(op, pairs[k + 1].eigenvector, pairs[k + 1].eigenvalue)});
    overlap = std::max(overlap, std::abs(inner_product(pairs[k].eigenvector, pairs[k + 1].eigenvector)));
  }
  return {res < 1e-8 && overlap < 1e-9, "residual " + sci(res) + ", branch overlap " + sci(overlap)};
}

Outcome check_root_identities(Level level) {
  double worst = 0.0, fmax = 0.0;
  std::vector<int> sizes{8, 16, 64};
  if (level == Level::Full) sizes.push_back(128);
  for (int n : sizes)
    for (double w : omegas(level)) {
      const CoinParams coin = CoinParams::from_angle(w);
      for (double x : moving_determinant_roots(n, coin)) {
        worst = std::max(worst, moving_root_identities(x, n, coin).max());
        fmax = std::max(fmax, std::abs(moving_determinant(x, n, coin)));
      }
    }
  return {worst < 1e-9, "identity residual " + sci(worst) + ", |f(root)| " + sci(fmax)};
}

Outcome check_component_symmetry(Level) {
  using enum Direction;
  double mov = 0.0, swp = 0.0;
  for (int n : {8, 16}) {
    const ChainGeometry g(n);
    const CoinParams coin = CoinParams::from_angle(kPi / 3.0);
    for (const auto& p : moving_eigensystem(g, coin)) {
      const auto& v = p.eigenvector;
      const double e = std::abs(v.amplitude({1, R}));
      for (BasisLabel l : {BasisLabel{2, R}, BasisLabel{n - 1, L}, BasisLabel{n, L}})
        mov = std::max(mov, std::abs(std::abs(v.amplitude(l)) - e));
      for (int i = 2; i <= n; ++i)
        mov = std::max(mov, std::abs(std::abs(v.amplitude({i, L})) - std::abs(v.amplitude({n + 1 - i, R}))));
    }
    for (const auto& p : swapping_eigensystem(g, coin))
      for (int i = 2; i <= n; ++i)
        swp = std::max(swp, std::abs(std::abs(p.eigenvector.amplitude({i, L})) -
                                     std::abs(p.eigenvector.amplitude({i - 1, R}))));
  }
  return {mov < 1e-9 && swp < 1e-9, "moving " + sci(mov) + ", swapping " + sci(swp)};
}

Outcome check_recurrences(Level) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> pick(-1.5, 1.5);
  double worst = 0.0;
  for (int s = 0; s < 200; ++s) {
    const complex x(pick(rng), s % 2 ? pick(rng) : 0.0);
    for (int n : {0, 1, 2, 5, 17, 40}) {
      const complex u = cheb::cheb_u(n, x), ur = cheb::cheb_u_recurrence(n, x);
      const complex t = cheb::cheb_t(n, x), tr = cheb::cheb_t_recurrence(n, x);
      worst = std::max(worst, std::abs(u - ur) / std::max(1.0, std::abs(ur)));
      worst = std::max(worst, std::abs(t - tr) / std::max(1.0, std::abs(tr)));
    }
  }
  return {worst < 1e-10, "max relative gap closed form vs recurrence " + sci(worst)};
}

Outcome check_kernels(Level) {
  const auto& scalar = simd::kernel_table(simd::Isa::Scalar);
  const auto& active = simd::active_kernels();
  const ChainGeometry g(40);
  const auto op = evolution_operator(ShiftKind::Moving, g, CoinParams::from_angle(kPi / 3.0));
  const auto rows = two_term_rows(op);
  std::mt19937_64 rng(5);
  std::normal_distribution<double> nd;
  std::vector<complex> in(g.dimension()), a(g.dimension()), b(g.dimension());
  for (auto& z : in) z = {nd(rng), nd(rng)};
  scalar.apply_two_term(rows, in, a);
  active.apply_two_term(rows, in, b);
  double gap = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) gap = std::max(gap, std::abs(a[k] - b[k]));
  std::vector<double> h1(in.size()), l1(in.size()), h2(in.size()), l2(in.size());
  scalar.accumulate_abs2(in, h1, l1);
  active.accumulate_abs2(in, h2, l2);
  const bool exact = h1 == h2 && l1 == l2;
  return {gap < 1e-14 && exact, std::string(simd::isa_name(active.isa)) + " vs scalar: apply gap " + sci(gap) +
                                    (exact ? ", accumulation bit-exact" : ", accumulation differs")};
}

Outcome check_isolated_equal(Level) {
  double worst = 0.0;
  for (int i : {1, 2, 5, 16}) {
    auto [plus, minus] = intrinsic_parts(i, 16, CoinParams::from_angle(kPi / 3.0), kDefaultOmega0, 0.3);
    worst = std::max(worst, max_abs_diff(plus, minus));
  }
  return {worst < 1e-12, "max |+1 part - (-1) part| = " + sci(worst)};
}

Outcome check_no_mirror(Level) {
  const int n = 16;
  const auto chi = numeric_limit(ShiftKind::Swapping, n, kPi / 3.0, end_start(n));
  double worst = 0.0;
  for (int j = 1; j <= n; ++j) worst = std::max(worst, std::abs(chi.at(j) - chi.at(n + 1 - j)));
  return {worst > 0.01, "max asymmetry " + num(worst)};
}

Outcome check_incoherent(Level level) {
  double worst = 0.0;
  std::vector<int> sizes{4, 8, 16};
  if (level == Level::Full) sizes.push_back(32);
  for (int n : sizes)
    for (ShiftKind s : {ShiftKind::Moving, ShiftKind::Swapping}) {
      const ChainGeometry g(n);
      const auto decomp = numerical_spectrum(evolution_operator(s, g, CoinParams::from_angle(kPi / 3.0)));
      for (int i : {1, n}) {
        const auto psi0 = initial_state(g, i);
        worst = std::max(worst, max_abs_diff(limit_distribution_exact(decomp, psi0),
                                             limit_distribution_incoherent(decomp, psi0)));
      }
    }
  return {worst < 1e-9, "max |exact - incoherent| = " + sci(worst) + " for end starts"};
}

Outcome check_sums(Level) {
  double worst = 0.0;
  for (ShiftKind s : {ShiftKind::Moving, ShiftKind::Swapping})
    for (int i : {1, 5, 12}) {
      const auto chi = numeric_limit(s, 12, kPi / 4.0, initial_state(ChainGeometry(12), i));
      worst = std::max(worst, std::abs(chi.sum() - 1.0));
    }
  return {worst < 1e-10, "max |sum chi - 1| = " + sci(worst)};
}

Outcome check_norm(Level level) {
  const long steps = level == Level::Full ? 100000 : 10000;
  double worst = 0.0;
  for (ShiftKind s : {ShiftKind::Moving, ShiftKind::Swapping}) {
    const Propagator p(evolution_operator(s, ChainGeometry(32), CoinParams::from_angle(kPi / 3.0)));
    worst = std::max(worst, norm_drift(p, initial_state(ChainGeometry(32), 7), steps));
  }
  return {worst < 1e-10, "norm drift after " + std::to_string(steps) + " steps " + sci(worst)};
}

Outcome check_continuum_scaling(Level level) {
  const CoinParams coin = CoinParams::from_angle(kPi / 3.0);
  std::vector<int> sizes{32, 64};
  if (level == Level::Full) sizes.push_back(128);
  std::vector<double> parts;
  for (int n : sizes) parts.push_back(chi_swapping_closed_form(1, n, coin).continuum.at(1));
  bool pass = true;
  std::string detail = "continuum chi_11 ratios";
  for (std::size_t k = 1; k < parts.size(); ++k) {
    const double ratio = parts[k - 1] / parts[k];
    pass = pass && std::abs(ratio - 2.0) <= 0.3;
    detail += " " + num(ratio);
  }
  return {pass, detail};
}

Outcome check_moving_band(Level level) {
  const CoinParams coin = CoinParams::from_angle(kPi / 3.0);
  std::vector<int> sizes{16, 32, 64};
  if (level == Level::Full) sizes.push_back(128);
  double lo = 1e300, hi = 0.0;
  for (int n : sizes) {
    const auto chi = chi_moving_closed_form_profile(n, coin);
    double mx = 0.0;
    for (double v : chi.values()) mx = std::max(mx, v);
    lo = std::min(lo, n * mx);
    hi = std::max(hi, n * mx);
  }
  return {hi / lo <= 4.0, "N * max chi_1j in [" + num(lo) + ", " + num(hi) + "]"};
}

Outcome check_r_condition(Level) {
  int mismatches = 0;
  for (int k = 1; k < 1000; ++k) {
    const double w = kPi * k / 1000.0;
    if (k == 500) continue;
    if ((CoinParams::from_angle(w).r < 1.0) != (w < kPi / 2.0)) ++mismatches;
  }
  return {mismatches == 0, std::to_string(mismatches) + " mismatches over 998 angles"};
}

struct ModuleCheck {
  const char* id;
  const char* name;
  Outcome (*body)(Level);
};

constexpr ModuleCheck kModuleChecks[] = {
    {"M-cheb", "chebyshev closed form vs recurrence", check_recurrences},
    {"M-kern", "kernel variant equivalence", check_kernels},
    {"M-norm", "norm conservation", check_norm},
    {"M-sum", "limit distribution sums to one", check_sums},
    {"M-incoh", "exact vs incoherent limit for end starts", check_incoherent},
    {"M-mres", "moving eigen-residual", check_moving_residual},
    {"M-roots", "moving root identities", check_root_identities},
    {"M-sym", "eigenvector component symmetries", check_component_symmetry},
    {"M-band", "moving 1/N band", check_moving_band},
    {"M-sres", "swapping eigen-residual", check_swapping_residual},
    {"M-pm", "isolated +1/-1 contributions equal", check_isolated_equal},
    {"M-asym", "swapping has no mirror symmetry", check_no_mirror},
    {"M-cont", "continuum chi_11 scales as 1/N", check_continuum_scaling},
    {"M-r", "r < 1 iff omega < pi/2", check_r_condition},
};

}  // namespace

std::optional<Level> parse_level(std::string_view name) {
  if (name == "quick") return Level::Quick;
  if (name == "full") return Level::Full;
  return std::nullopt;
}

CheckResult run_criterion(int number, Level level) {
  if (number < 1 || number > kCriterionCount)
    throw InvalidInput("criterion number must lie in [1, " + std::to_string(kCriterionCount) + "]");
  const Criterion& c = kCriteria[number - 1];
  char id[8];
  std::snprintf(id, sizeof id, "C%02d", number);
  return timed(id, c.name, [&] { return c.body(level); });
}

std::vector<CheckResult> run_module_checks(Level level) {
  std::vector<CheckResult> out;
  for (const auto& m : kModuleChecks) out.push_back(timed(m.id, m.name, [&] { return m.body(level); }));
  return out;
}

std::vector<CheckResult> run_battery(Level level) {
  auto out = run_module_checks(level);
  for (int k = 1; k <= kCriterionCount; ++k) out.push_back(run_criterion(k, level));
  return out;
}

std::string format_check(const CheckResult& r) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
  return std::string(r.pass ? "PASS" : "FAIL") + "  " + r.id + "  " + r.name + "  " + r.detail + "  (" + secs + " s)";
}

}  // namespace qwalk::app
