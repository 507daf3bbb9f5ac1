#include "qwalk/evolve.hpp"

#include <cmath>
#include <numeric>

#include "qwalk/error.hpp"

namespace qwalk {

PositionDistribution::PositionDistribution(ChainGeometry geometry, std::vector<double> probabilities)
    : geometry_(geometry), probabilities_(std::move(probabilities)) {
  if (probabilities_.size() != static_cast<std::size_t>(geometry_.n_sites()))
    throw InvalidInput("distribution length does not match the number of sites");
}

double PositionDistribution::at(int position) const {
  if (position < 1 || position > geometry_.n_sites())
    throw InvalidInput("position " + std::to_string(position) + " out of range");
  return probabilities_[static_cast<std::size_t>(position - 1)];
}

double PositionDistribution::sum() const {
  return std::accumulate(probabilities_.begin(), probabilities_.end(), 0.0);
}

PositionDistribution position_marginal(const ChainGeometry& geometry,
                                       std::span<const double> basis_weights) {
  if (basis_weights.size() != geometry.dimension())
    throw InvalidInput("position_marginal: weight vector does not match the geometry");
  std::vector<double> p(static_cast<std::size_t>(geometry.n_sites()), 0.0);
  for (std::size_t k = 0; k < basis_weights.size(); ++k)
    p[static_cast<std::size_t>(geometry.label_of(k).position - 1)] += basis_weights[k];
  return {geometry, std::move(p)};
}

PositionDistribution probability_distribution(const StateVector& state) {
  std::vector<double> weights(state.size());
  for (std::size_t k = 0; k < state.size(); ++k) weights[k] = std::norm(state[k]);
  return position_marginal(state.geometry(), weights);
}

simd::TwoTermRows two_term_rows(const UnitaryOperator& op) {
  const DenseMatrix& m = op.matrix();
  const auto dim = static_cast<std::size_t>(m.rows());
  simd::TwoTermRows rows;
  rows.col0.resize(dim);
  rows.col1.resize(dim);
  rows.w0.resize(dim);
  rows.w1.resize(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    int found = 0;
    for (std::size_t c = 0; c < dim; ++c) {
      const complex v = m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
      if (v == complex(0.0, 0.0)) continue;
      if (found == 0) {
        rows.col0[r] = static_cast<std::uint32_t>(c);
        rows.w0[r] = v;
      } else if (found == 1) {
        rows.col1[r] = static_cast<std::uint32_t>(c);
        rows.w1[r] = v;
      } else {
        throw InvalidInput("operator row " + std::to_string(r) +
                           " has more than two non-zeros; use the dense path");
      }
      ++found;
    }
    if (found == 0) throw InvalidInput("operator row " + std::to_string(r) + " is empty");
    if (found == 1) {
      rows.col1[r] = rows.col0[r];
      rows.w1[r] = 0.0;
    }
  }
  return rows;
}

Propagator::Propagator(const UnitaryOperator& op, StepPath path, const simd::KernelTable& kernels)
    : geometry_(op.geometry()), path_(path), kernels_(&kernels) {
  if (path_ == StepPath::Structured) {
    rows_ = two_term_rows(op);
  } else {
    const DenseMatrix& m = op.matrix();
    dense_.assign(m.data(), m.data() + m.size());
  }
}

void Propagator::apply(std::span<const complex> in, std::span<complex> out) const {
  if (in.size() != geometry_.dimension() || out.size() != geometry_.dimension())
    throw InvalidInput("propagator: vector length does not match the geometry");
  if (path_ == StepPath::Structured)
    kernels_->apply_two_term(rows_, in, out);
  else
    kernels_->apply_dense(dense_, in, out);
}

StateVector step(const Propagator& propagator, const StateVector& state) {
  if (!(state.geometry() == propagator.geometry()))
    throw InvalidInput("step: operator and state live on different chains");
  StateVector out(state.geometry(), std::vector<complex>(state.size()));
  propagator.apply(state.amplitudes(), out.amplitudes());
  return out;
}

StateVector step(const UnitaryOperator& op, const StateVector& state) {
  return step(Propagator(op), state);
}

namespace {

// Ping-pong between two buffers; calls visit(current) for t = 0..steps.
template <class Visit>
std::vector<complex> run(const Propagator& propagator, const StateVector& state0, long steps,
                         Visit&& visit) {
  if (!(state0.geometry() == propagator.geometry()))
    throw InvalidInput("operator and state live on different chains");
  if (steps < 0) throw InvalidInput("step count must be non-negative");
  std::vector<complex> cur(state0.amplitudes().begin(), state0.amplitudes().end());
  std::vector<complex> next(cur.size());
  visit(std::span<const complex>(cur));
  for (long t = 0; t < steps; ++t) {
    propagator.apply(cur, next);
    cur.swap(next);
    visit(std::span<const complex>(cur));
  }
  return cur;
}

}  // namespace

StateVector evolve(const Propagator& propagator, const StateVector& state, long steps) {
  auto amps = run(propagator, state, steps, [](std::span<const complex>) {});
  return {state.geometry(), std::move(amps)};
}

PositionDistribution time_averaged_distribution(const Propagator& propagator,
                                                const StateVector& state0, long horizon) {
  const std::size_t dim = state0.size();
  std::vector<double> hi(dim, 0.0), lo(dim, 0.0);
  const auto& kernels = propagator.kernels();
  run(propagator, state0, horizon,
      [&](std::span<const complex> amps) { kernels.accumulate_abs2(amps, hi, lo); });
  const double count = static_cast<double>(horizon) + 1.0;
  std::vector<double> mean(dim);
  for (std::size_t k = 0; k < dim; ++k) mean[k] = (hi[k] + lo[k]) / count;
  return position_marginal(state0.geometry(), mean);
}

PositionDistribution time_averaged_distribution(const UnitaryOperator& op, const StateVector& state0,
                                                long horizon, StepPath path) {
  return time_averaged_distribution(Propagator(op, path), state0, horizon);
}

double norm_drift(const Propagator& propagator, const StateVector& state0, long steps) {
  const auto final_amps = run(propagator, state0, steps, [](std::span<const complex>) {});
  return std::abs(std::sqrt(propagator.kernels().norm_sq(final_amps)) - 1.0);
}

}  // namespace qwalk
