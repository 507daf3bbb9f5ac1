#pragma once

// Time stepping, position read-out and finite-horizon time averages.

#include <span>
#include <vector>

#include "qwalk/kernels.hpp"
#include "qwalk/operators.hpp"

namespace qwalk {

/// Probabilities over positions 1..N (stored 0-based).
class PositionDistribution {
 public:
  PositionDistribution(ChainGeometry geometry, std::vector<double> probabilities);

  const ChainGeometry& geometry() const { return geometry_; }
  std::span<const double> values() const { return probabilities_; }
  std::size_t size() const { return probabilities_.size(); }

  /// 1-based position.
  double at(int position) const;
  double sum() const;

 private:
  ChainGeometry geometry_;
  std::vector<double> probabilities_;
};

/// Folds per-basis-state weights into per-position weights.
PositionDistribution position_marginal(const ChainGeometry& geometry,
                                       std::span<const double> basis_weights);

PositionDistribution probability_distribution(const StateVector& state);

enum class StepPath {
  Structured,  // two non-zeros per row, O(dim)
  Dense,       // full matrix-vector product, O(dim^2)
};

/// Extracts the <= 2 non-zeros per row; throws InvalidInput if a row has more.
simd::TwoTermRows two_term_rows(const UnitaryOperator& op);

/// Applies one operator repeatedly through the selected kernel table.
class Propagator {
 public:
  explicit Propagator(const UnitaryOperator& op, StepPath path = StepPath::Structured,
                      const simd::KernelTable& kernels = simd::active_kernels());

  const ChainGeometry& geometry() const { return geometry_; }
  const simd::KernelTable& kernels() const { return *kernels_; }

  /// out = U in; `out` must not alias `in`.
  void apply(std::span<const complex> in, std::span<complex> out) const;

 private:
  ChainGeometry geometry_;
  StepPath path_;
  const simd::KernelTable* kernels_;
  simd::TwoTermRows rows_;
  std::vector<complex> dense_;  // row-major, only for StepPath::Dense
};

StateVector step(const UnitaryOperator& op, const StateVector& state);
StateVector step(const Propagator& propagator, const StateVector& state);

/// U^steps |state>, by repeated application.
StateVector evolve(const Propagator& propagator, const StateVector& state, long steps);

/// (1 / (T + 1)) sum_{t=0..T} P(i, t), by repeated application of `op`.
PositionDistribution time_averaged_distribution(const UnitaryOperator& op, const StateVector& state0,
                                                long horizon, StepPath path = StepPath::Structured);

PositionDistribution time_averaged_distribution(const Propagator& propagator,
                                                const StateVector& state0, long horizon);

/// | ||U^steps psi|| - 1 | without renormalisation.
double norm_drift(const Propagator& propagator, const StateVector& state0, long steps);

}  // namespace qwalk
