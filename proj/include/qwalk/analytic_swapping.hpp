#pragma once

// Closed-form eigensystem of the swapping-shift evolution operator.
//
// Two isolated eigenvalues +1 and -1 carry geometric eigenvectors with ratio
// +/-(1-a)/b along the chain. The remaining 2N - 4 follow from
// x_k = cos(k pi / (N-1)), k = 1..N-2, via u = b x +/- i sqrt(1 - b^2 x^2).
// The +/-1 part of the limit distribution (the "intrinsic" probability) keeps a
// power-law profile r^j with r = ((1-a)/b)^2 for every N.
//
// Entry points require N >= 3 and a zero coin phase.

#include <numbers>
#include <utility>
#include <vector>

#include "qwalk/evolve.hpp"
#include "qwalk/hilbert.hpp"

namespace qwalk {

enum class SwappingKind { IsolatedPlus, IsolatedMinus, Continuum };

struct SwappingEigenpair {
  SwappingKind kind;
  double x_value;  // +/-1/b for the isolated pair, cos(k pi/(N-1)) otherwise
  int k;           // 0 for the isolated pair
  bool plus_branch;
  complex eigenvalue;
  StateVector eigenvector;
};

/// {+1, -1} followed by the + and - branch of every continuum root, k ascending.
std::vector<complex> swapping_eigenvalues(int n_sites, const CoinParams& coin);

double swapping_continuum_root(int k, int n_sites);
complex swapping_continuum_eigenvalue(int k, bool plus_branch, int n_sites, const CoinParams& coin);

/// sign = +1 or -1.
StateVector swapping_eigenstate_isolated(int sign, const ChainGeometry& geometry, const CoinParams& coin);
StateVector swapping_eigenstate_continuum(int k, bool plus_branch, const ChainGeometry& geometry,
                                          const CoinParams& coin);

/// Unnormalised continuum components with <2,L|Psi> = 1.
std::vector<complex> swapping_continuum_components(int k, bool plus_branch,
                                                   const ChainGeometry& geometry,
                                                   const CoinParams& coin);

std::vector<SwappingEigenpair> swapping_eigensystem(const ChainGeometry& geometry, const CoinParams& coin);

/// |<2,L|Psi_{+/-1}>|^2 = (1 - r) / (2 (1 - r^{N-1})), and 1/(2(N-1)) at r = 1.
double swapping_isolated_norm(int n_sites, const CoinParams& coin);

/// Approximate continuum normalisation
///   |<2,L|Psi_k>|^2 = ((1-a)/2) sin^2 t / ((N-1)(1 - b^2 cos^2 t)), t = k pi/(N-1).
double swapping_continuum_norm_approx(int k, int n_sites, const CoinParams& coin);

/// f(r, j, N): the j-profile of the intrinsic term.
double intrinsic_profile(double r, int j, int n_sites);
/// I(r, i, N): overlap weight of the start site with the +1 eigenvector,
/// for the start state cos(omega0)|i,L> + i sin(omega0)|i,R>.
double intrinsic_overlap(double r, int i, int n_sites, double omega0);

/// 2 f I for all j. Equals intrinsic_distribution at phi0 = pi/2.
PositionDistribution intrinsic_closed_form(int start, int n_sites, const CoinParams& coin,
                                           double omega0 = kDefaultOmega0);

/// +/-1 eigenspace contribution to chi_{start,.}, summed from both isolated
/// eigenvectors for the start state initial_state(start, omega0, phi0).
/// Not normalised.
PositionDistribution intrinsic_distribution(int start, int n_sites, const CoinParams& coin,
                                            double omega0 = kDefaultOmega0,
                                            double phi0 = std::numbers::pi / 2.0);

/// The two isolated contributions separately (+1 first).
std::pair<PositionDistribution, PositionDistribution> intrinsic_parts(int start, int n_sites,
                                                                      const CoinParams& coin,
                                                                      double omega0, double phi0);

/// N -> infinity limit of sum_j chi^Intri_{i,j}: (1-r) for i = 1,
/// (1-r)(r^{i-2} cos^2 omega0 + r^{i-1} sin^2 omega0) for i > 1, 0 for r >= 1.
double intrinsic_total_limit(int start, const CoinParams& coin, double omega0 = kDefaultOmega0);

struct SwappingChi {
  PositionDistribution intrinsic;
  PositionDistribution continuum;
  PositionDistribution total;
};

/// Limit distribution from the closed-form eigensystem, split into the +/-1
/// part and the continuum part.
SwappingChi chi_swapping_closed_form(int start, int n_sites, const CoinParams& coin,
                                     double omega0 = kDefaultOmega0, double phi0 = 0.0);

/// Single-entry convenience for chi_{i,j}.
double chi_swapping_closed_form(int start, int j, int n_sites, const CoinParams& coin,
                                double omega0 = kDefaultOmega0, double phi0 = 0.0);

/// Leading continuum terms of chi_{1,1} and chi_{1,N}:
/// (a+2)(1-a)^2 / (4(a+1)^2 (N-1)) and (a+2)(1-a) / (4(a+1)(N-1)).
double swapping_chi11_continuum_asymptote(int n_sites, const CoinParams& coin);
double swapping_chi1n_continuum_asymptote(int n_sites, const CoinParams& coin);

void require_swapping_analytic(int n_sites, const CoinParams& coin);

}  // namespace qwalk
