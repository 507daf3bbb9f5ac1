#include "qwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "qwalk/error.hpp"

namespace qwalk {

StateVector SpectralDecomposition::eigenvector(std::size_t k) const {
  const auto col = eigenvectors.col(static_cast<Eigen::Index>(k));
  return {geometry, std::vector<complex>(col.data(), col.data() + col.size())};
}

std::vector<std::vector<std::size_t>> cluster_eigenvalues(std::span<const complex> values,
                                                          double tol) {
  const std::size_t n = values.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(values[i] - values[j]) < tol) parent[find(j)] = find(i);

  std::vector<std::vector<std::size_t>> groups;
  std::vector<long> slot(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<long>(groups.size());
      groups.emplace_back();
    }
    groups[static_cast<std::size_t>(slot[root])].push_back(i);
  }
  return groups;
}

namespace {

// Modified Gram-Schmidt over the columns listed in `cols`.
void orthonormalize(Eigen::MatrixXcd& vectors, const std::vector<std::size_t>& cols) {
  for (std::size_t a = 0; a < cols.size(); ++a) {
    auto va = vectors.col(static_cast<Eigen::Index>(cols[a]));
    for (std::size_t b = 0; b < a; ++b) {
      const auto vb = vectors.col(static_cast<Eigen::Index>(cols[b]));
      va -= vb * vb.dot(va);
    }
    const double n = va.norm();
    if (!(n > 1e-12)) throw NumericalFailure("degenerate eigenvectors are linearly dependent");
    va /= n;
  }
}

}  // namespace

SpectralDecomposition numerical_spectrum(const UnitaryOperator& op, double cluster_tol) {
  if (!(cluster_tol >= 1e-12 && cluster_tol <= 1e-6))
    throw InvalidInput("cluster tolerance must lie in [1e-12, 1e-6]");

  const Eigen::MatrixXcd m = op.matrix();
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(m);
  if (schur.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "complex Schur factorisation did not converge (dim " << m.rows()
        << ", unitarity defect " << op.unitarity_defect() << ")";
    throw NumericalFailure(msg.str());
  }

  SpectralDecomposition d{op.geometry(), {}, schur.matrixU(), {}};
  const auto& t = schur.matrixT();
  d.eigenvalues.resize(static_cast<std::size_t>(t.rows()));
  for (Eigen::Index k = 0; k < t.rows(); ++k) d.eigenvalues[static_cast<std::size_t>(k)] = t(k, k);

  d.groups = cluster_eigenvalues(d.eigenvalues, cluster_tol);
  for (const auto& g : d.groups)
    if (g.size() > 1) orthonormalize(d.eigenvectors, g);

  const double residual = max_eigen_residual(op, d);
  if (!(residual < 1e-9)) {
    std::ostringstream msg;
    msg << "eigen-residual " << residual << " too large (unitarity defect "
        << op.unitarity_defect() << "); the operator is not normal to working precision";
    throw NumericalFailure(msg.str());
  }
  return d;
}

SpectralDecomposition make_decomposition(const ChainGeometry& geometry,
                                         std::span<const complex> eigenvalues,
                                         std::span<const StateVector> eigenvectors,
                                         double cluster_tol) {
  if (eigenvalues.size() != eigenvectors.size() || eigenvalues.size() != geometry.dimension())
    throw InvalidInput("make_decomposition: need one eigenvector per eigenvalue, dim of them");
  const auto dim = static_cast<Eigen::Index>(geometry.dimension());
  SpectralDecomposition d{geometry, {eigenvalues.begin(), eigenvalues.end()},
                          Eigen::MatrixXcd(dim, dim), {}};
  for (Eigen::Index k = 0; k < dim; ++k) {
    const auto& v = eigenvectors[static_cast<std::size_t>(k)];
    if (!(v.geometry() == geometry)) throw InvalidInput("make_decomposition: geometry mismatch");
    for (Eigen::Index j = 0; j < dim; ++j) d.eigenvectors(j, k) = v[static_cast<std::size_t>(j)];
  }
  d.groups = cluster_eigenvalues(d.eigenvalues, cluster_tol);
  return d;
}

namespace {

Eigen::VectorXcd as_eigen(const StateVector& s) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(s.size()));
  for (std::size_t k = 0; k < s.size(); ++k) v(static_cast<Eigen::Index>(k)) = s[k];
  return v;
}

void check_geometry(const SpectralDecomposition& d, const StateVector& s) {
  if (!(d.geometry == s.geometry()))
    throw InvalidInput("initial state and decomposition live on different chains");
}

template <class Keep>
PositionDistribution grouped_sum(const SpectralDecomposition& d, const StateVector& state0,
                                 Keep&& keep) {
  check_geometry(d, state0);
  const Eigen::VectorXcd psi0 = as_eigen(state0);
  const Eigen::VectorXcd overlaps = d.eigenvectors.adjoint() * psi0;  // <Psi_k|psi0>
  std::vector<double> weights(d.geometry.dimension(), 0.0);
  for (const auto& g : d.groups) {
    if (!keep(g)) continue;
    Eigen::VectorXcd projected = Eigen::VectorXcd::Zero(psi0.size());
    for (auto k : g) {
      const auto kk = static_cast<Eigen::Index>(k);
      projected += d.eigenvectors.col(kk) * overlaps(kk);
    }
    for (Eigen::Index j = 0; j < projected.size(); ++j)
      weights[static_cast<std::size_t>(j)] += std::norm(projected(j));
  }
  return position_marginal(d.geometry, weights);
}

}  // namespace

PositionDistribution limit_distribution_exact(const SpectralDecomposition& decomp,
                                              const StateVector& state0) {
  return grouped_sum(decomp, state0, [](const auto&) { return true; });
}

PositionDistribution eigenspace_contribution(const SpectralDecomposition& decomp,
                                             const StateVector& state0,
                                             std::span<const complex> targets, double tol) {
  return grouped_sum(decomp, state0, [&](const std::vector<std::size_t>& g) {
    const complex u = decomp.eigenvalues[g.front()];
    return std::any_of(targets.begin(), targets.end(),
                       [&](const complex& t) { return std::abs(u - t) < tol; });
  });
}

PositionDistribution limit_distribution_incoherent(const SpectralDecomposition& decomp,
                                                   const StateVector& state0) {
  check_geometry(decomp, state0);
  const auto dim = static_cast<Eigen::Index>(decomp.geometry.dimension());
  std::vector<double> weights(static_cast<std::size_t>(dim), 0.0);
  for (Eigen::Index k = 0; k < dim; ++k) {
    const auto v = decomp.eigenvectors.col(k);
    double overlap = 0.0;
    for (Eigen::Index m = 0; m < dim; ++m)
      overlap += std::norm(v(m)) * std::norm(state0[static_cast<std::size_t>(m)]);
    for (Eigen::Index j = 0; j < dim; ++j)
      weights[static_cast<std::size_t>(j)] += std::norm(v(j)) * overlap;
  }
  return position_marginal(decomp.geometry, weights);
}

double spectrum_set_distance(std::span<const complex> lhs, std::span<const complex> rhs) {
  if (lhs.empty() || rhs.empty()) throw InvalidInput("spectrum_set_distance: empty set");
  auto directed = [](std::span<const complex> from, std::span<const complex> to) {
    double worst = 0.0;
    for (const auto& p : from) {
      double best = std::abs(p - to.front());
      for (const auto& q : to) best = std::min(best, std::abs(p - q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(lhs, rhs), directed(rhs, lhs));
}

std::vector<complex> sorted_by_phase(std::span<const complex> values) {
  std::vector<complex> out(values.begin(), values.end());
  // Angles within rounding of -pi are folded onto +pi so -1 sorts last
  // regardless of the sign of a vanishing imaginary part.
  auto angle = [](const complex& z) {
    const double a = std::arg(z);
    return a <= -std::numbers::pi + 1e-12 ? std::numbers::pi : a;
  };
  std::stable_sort(out.begin(), out.end(), [&](const complex& x, const complex& y) {
    const double ax = angle(x), ay = angle(y);
    if (ax != ay) return ax < ay;
    return std::abs(x) < std::abs(y);
  });
  return out;
}

double max_eigen_residual(const UnitaryOperator& op, const SpectralDecomposition& decomp) {
  const Eigen::MatrixXcd m = op.matrix();
  const Eigen::MatrixXcd applied = m * decomp.eigenvectors;
  double worst = 0.0;
  for (Eigen::Index k = 0; k < applied.cols(); ++k) {
    const double r =
        (applied.col(k) - decomp.eigenvalues[static_cast<std::size_t>(k)] * decomp.eigenvectors.col(k))
            .norm();
    worst = std::max(worst, r);
  }
  return worst;
}

}  // namespace qwalk
