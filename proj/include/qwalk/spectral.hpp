#pragma once

// Numerical eigendecomposition of a unitary operator and the long-time
// (Cesaro) averaged position distribution built from it.

#include <span>
#include <vector>

#include "qwalk/evolve.hpp"
#include "qwalk/operators.hpp"

namespace qwalk {

inline constexpr double kDefaultClusterTol = 1e-8;

struct SpectralDecomposition {
  ChainGeometry geometry;
  std::vector<complex> eigenvalues;
  /// Column k is the eigenvector for eigenvalues[k]; columns are orthonormal.
  Eigen::MatrixXcd eigenvectors;
  /// Index sets of eigenvalues equal within the clustering tolerance
  /// (transitive closure). Ordered by smallest member index.
  std::vector<std::vector<std::size_t>> groups;

  std::size_t size() const { return eigenvalues.size(); }
  StateVector eigenvector(std::size_t k) const;
};

/// Decomposes `op` via a complex Schur factorisation. For a unitary matrix the
/// Schur vectors are eigenvectors; each degeneracy group is re-orthonormalised
/// afterwards. Throws NumericalFailure if the solver fails to converge or the
/// eigen-residuals exceed 1e-9.
SpectralDecomposition numerical_spectrum(const UnitaryOperator& op,
                                         double cluster_tol = kDefaultClusterTol);

/// Builds a decomposition from externally supplied eigenpairs (for example
/// closed-form ones), grouping them like numerical_spectrum.
SpectralDecomposition make_decomposition(const ChainGeometry& geometry,
                                         std::span<const complex> eigenvalues,
                                         std::span<const StateVector> eigenvectors,
                                         double cluster_tol = kDefaultClusterTol);

/// Transitive clustering of values within `tol`.
std::vector<std::vector<std::size_t>> cluster_eigenvalues(std::span<const complex> values,
                                                          double tol);

/// chi(i) = sum_J sum_groups | sum_{k in g} <i,J|Psi_k><Psi_k|psi0> |^2.
/// Exact Cesaro limit for every initial state.
PositionDistribution limit_distribution_exact(const SpectralDecomposition& decomp,
                                              const StateVector& state0);

/// Same double sum restricted to the groups whose eigenvalue lies within
/// `tol` of one of `targets`.
PositionDistribution eigenspace_contribution(const SpectralDecomposition& decomp,
                                             const StateVector& state0,
                                             std::span<const complex> targets, double tol = 1e-8);

/// Cross-term-free approximation:
///   chi(i) = sum_J sum_k |<i,J|Psi_k>|^2 * sum_m |<Psi_k|m>|^2 |<m|psi0>|^2.
/// Coincides with the exact form when psi0 is a single basis state and the
/// spectrum is non-degenerate; otherwise it drops the interference terms.
PositionDistribution limit_distribution_incoherent(const SpectralDecomposition& decomp,
                                                   const StateVector& state0);

/// Symmetric Hausdorff distance between two finite point sets in C.
double spectrum_set_distance(std::span<const complex> lhs, std::span<const complex> rhs);

/// Sorts eigenvalues by phase angle in (-pi, pi], ties by modulus.
std::vector<complex> sorted_by_phase(std::span<const complex> values);

/// max_k || U v_k - u_k v_k ||_2
double max_eigen_residual(const UnitaryOperator& op, const SpectralDecomposition& decomp);

}  // namespace qwalk
