#include "qwalk/hilbert.hpp"

#include <cmath>

#include "qwalk/error.hpp"

namespace qwalk {

std::string to_string(const BasisLabel& label) {
  return "|" + std::to_string(label.position) + "," +
         (label.direction == Direction::L ? "L" : "R") + ">";
}

ChainGeometry::ChainGeometry(int n_sites) : n_sites_(n_sites) {
  if (n_sites < 3)
    throw InvalidInput("chain needs at least 3 sites, got " + std::to_string(n_sites));
}

bool ChainGeometry::is_valid(const BasisLabel& label) const {
  if (label.direction == Direction::L) return label.position >= 2 && label.position <= n_sites_;
  return label.position >= 1 && label.position <= n_sites_ - 1;
}

std::size_t ChainGeometry::index_of(const BasisLabel& label) const {
  if (!is_valid(label))
    throw InvalidInput("basis state " + to_string(label) + " does not exist on a chain of " +
                       std::to_string(n_sites_) + " sites");
  if (label.direction == Direction::L) return static_cast<std::size_t>(label.position - 2);
  return static_cast<std::size_t>((n_sites_ - 1) + (label.position - 1));
}

BasisLabel ChainGeometry::label_of(std::size_t index) const {
  if (index >= dimension())
    throw InvalidInput("basis index " + std::to_string(index) + " out of range");
  const auto half = static_cast<std::size_t>(n_sites_ - 1);
  if (index < half) return {static_cast<int>(index) + 2, Direction::L};
  return {static_cast<int>(index - half) + 1, Direction::R};
}

CoinParams CoinParams::from_angle(double omega, double phase) {
  if (!(omega > 0.0 && omega < std::numbers::pi))
    throw InvalidInput("coin angle must lie in (0, pi), got " + std::to_string(omega));
  if (!std::isfinite(phase)) throw InvalidInput("coin phase must be finite");
  CoinParams coin;
  coin.omega = omega;
  coin.a = std::cos(omega);
  coin.b = std::sin(omega);
  const double ratio = (1.0 - coin.a) / coin.b;
  coin.r = ratio * ratio;
  coin.phase = phase;
  return coin;
}

StateVector::StateVector(ChainGeometry geometry, std::vector<complex> amplitudes)
    : geometry_(geometry), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != geometry_.dimension())
    throw InvalidInput("state has " + std::to_string(amplitudes_.size()) +
                       " amplitudes, geometry needs " + std::to_string(geometry_.dimension()));
}

StateVector StateVector::normalized(ChainGeometry geometry, std::vector<complex> amplitudes) {
  StateVector state(geometry, std::move(amplitudes));
  const double n = state.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw InvalidInput("cannot normalize a zero or non-finite state");
  for (auto& c : state.amplitudes_) c /= n;
  return state;
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const auto& c : amplitudes_) sum += std::norm(c);
  return std::sqrt(sum);
}

complex inner_product(const StateVector& lhs, const StateVector& rhs) {
  if (!(lhs.geometry() == rhs.geometry())) throw InvalidInput("inner_product: geometry mismatch");
  complex sum = 0.0;
  for (std::size_t k = 0; k < lhs.size(); ++k) sum += std::conj(lhs[k]) * rhs[k];
  return sum;
}

StateVector basis_state(const ChainGeometry& geometry, const BasisLabel& label) {
  std::vector<complex> amps(geometry.dimension(), 0.0);
  amps[geometry.index_of(label)] = 1.0;
  return {geometry, std::move(amps)};
}

StateVector initial_state(const ChainGeometry& geometry, int start, double omega0, double phi0) {
  const int n = geometry.n_sites();
  if (start < 1 || start > n)
    throw InvalidInput("start position " + std::to_string(start) + " outside [1, " +
                       std::to_string(n) + "]");
  if (start == 1) return basis_state(geometry, {1, Direction::R});
  if (start == n) return basis_state(geometry, {n, Direction::L});

  std::vector<complex> amps(geometry.dimension(), 0.0);
  amps[geometry.index_of({start, Direction::L})] = std::cos(omega0);
  amps[geometry.index_of({start, Direction::R})] = std::sin(omega0) * complex(std::cos(phi0), std::sin(phi0));
  return {geometry, std::move(amps)};
}

}  // namespace qwalk
