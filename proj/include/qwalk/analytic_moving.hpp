#pragma once

// Closed-form eigensystem of the moving-shift evolution operator.
//
// Eigenvalues follow from the roots x of
//     U_{N-1}(x) + ((b - 1) / (b + 1)) U_{N-3}(x) = 0
// through u = i a x +/- sqrt(1 - a^2 x^2). The N - 1 roots interlace the zeros
// of U_{N-2}, so each interval between consecutive points of
// {1, cos(m pi / (N-1)), -1} holds exactly one root and plain bisection
// suffices. Eigenvectors are assembled component by component with
// <2,L|Psi> as the free scale, then normalised numerically.
//
// Every entry point requires N >= 4, a zero coin phase and cos(omega) != 0.

#include <vector>

#include "qwalk/evolve.hpp"
#include "qwalk/hilbert.hpp"

namespace qwalk {

enum class Branch { Plus, Minus };

enum class RootMode {
  ExactRoots,     // bisection on the determinant equation
  LargeNApprox,   // x_k = cos(k pi / N)
};

/// Left-hand side of the determinant equation at x.
double moving_determinant(double x, int n_sites, const CoinParams& coin);

/// The N - 1 roots in (-1, 1), sorted descending, each bisected to the
/// resolution of double precision.
std::vector<double> moving_determinant_roots(int n_sites, const CoinParams& coin);

/// The large-N approximation cos(k pi / N), k = 1..N-1 (descending).
std::vector<double> moving_approx_roots(int n_sites);

complex moving_eigenvalue(double x, Branch branch, const CoinParams& coin);

/// 2N - 2 eigenvalues: for each root, the + branch then the - branch.
std::vector<complex> moving_eigenvalues(int n_sites, const CoinParams& coin,
                                        RootMode mode = RootMode::ExactRoots);

StateVector moving_eigenstate(double x_root, Branch branch, const ChainGeometry& geometry,
                              const CoinParams& coin);

/// Unnormalised components with <2,L|Psi> = 1.
std::vector<complex> moving_eigenstate_components(double x_root, Branch branch,
                                                  const ChainGeometry& geometry,
                                                  const CoinParams& coin);

struct MovingEigenpair {
  double x_root;
  Branch branch;
  complex eigenvalue;
  StateVector eigenvector;
};

std::vector<MovingEigenpair> moving_eigensystem(const ChainGeometry& geometry,
                                                const CoinParams& coin);

/// Approximate |<2,L|Psi>|^2 at a root:
///   (1 - b + 4b(1+b) cos^2 t) sin^2 t / (N [1 + b^2 + (b^2 - 1) cos 2t]), t = arccos x.
double moving_norm_approx(double x_root, const CoinParams& coin, int n_sites);

/// Residuals of the relations that hold at every root:
/// U_{N-1} = (1-b) x U_{N-2}, U_{N-3} = (1+b) x U_{N-2}, (1 - a^2 x^2) U_{N-2}^2 = 1.
struct RootIdentityResiduals {
  double upper;
  double lower;
  double norm;
  double max() const;
};
RootIdentityResiduals moving_root_identities(double x_root, int n_sites, const CoinParams& coin);

/// chi_{1,j} for the walk started in |1,R>, from the closed-form eigensystem.
/// Only start == 1 is supported (InvalidInput otherwise).
double chi_moving_closed_form(int start, int j, int n_sites, const CoinParams& coin);

/// The full chi_{1,.} profile.
PositionDistribution chi_moving_closed_form_profile(int n_sites, const CoinParams& coin);

/// Large-N estimate of chi_{1,1}: (1/N) (2 + b(b^2 - 3)) / (4 (b - 1)^2).
double chi_moving_asymptote(int n_sites, const CoinParams& coin);

/// Throws InvalidInput naming the violated constraint when the closed forms do
/// not apply.
void require_moving_analytic(int n_sites, const CoinParams& coin);

}  // namespace qwalk
