#pragma once

// Chain geometry and the (position, direction) basis of the walk.
//
// A chain of N sites carries 2N - 2 basis states: |2,L> .. |N,L> followed by
// |1,R> .. |N-1,R>. Positions are 1-based in every public signature.

#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <vector>

namespace qwalk {

using complex = std::complex<double>;

enum class Direction { L, R };

struct BasisLabel {
  int position = 1;
  Direction direction = Direction::R;

  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

std::string to_string(const BasisLabel& label);

class ChainGeometry {
 public:
  explicit ChainGeometry(int n_sites);

  int n_sites() const { return n_sites_; }
  std::size_t dimension() const { return static_cast<std::size_t>(2 * n_sites_ - 2); }

  bool is_valid(const BasisLabel& label) const;
  std::size_t index_of(const BasisLabel& label) const;
  BasisLabel label_of(std::size_t index) const;

  friend bool operator==(const ChainGeometry&, const ChainGeometry&) = default;

 private:
  int n_sites_;
};

/// Coin angle omega and the derived quantities a = cos(omega), b = sin(omega),
/// r = ((1 - a) / b)^2. `phase` is the optional coin phase; the analytic
/// solvers only accept phase == 0.
struct CoinParams {
  double omega = 0.0;
  double a = 0.0;
  double b = 0.0;
  double r = 0.0;
  double phase = 0.0;

  static CoinParams from_angle(double omega, double phase = 0.0);
  bool has_phase() const { return phase != 0.0; }
};

class StateVector {
 public:
  /// Takes amplitudes as given. The size must match the geometry.
  StateVector(ChainGeometry geometry, std::vector<complex> amplitudes);

  /// Rescales to unit norm; rejects the zero vector.
  static StateVector normalized(ChainGeometry geometry, std::vector<complex> amplitudes);

  const ChainGeometry& geometry() const { return geometry_; }
  std::span<const complex> amplitudes() const { return amplitudes_; }
  std::span<complex> amplitudes() { return amplitudes_; }
  std::size_t size() const { return amplitudes_.size(); }

  complex operator[](std::size_t index) const { return amplitudes_[index]; }
  complex& operator[](std::size_t index) { return amplitudes_[index]; }
  complex amplitude(const BasisLabel& label) const {
    return amplitudes_[geometry_.index_of(label)];
  }

  double norm() const;

 private:
  ChainGeometry geometry_;
  std::vector<complex> amplitudes_;
};

/// <lhs|rhs>
complex inner_product(const StateVector& lhs, const StateVector& rhs);

StateVector basis_state(const ChainGeometry& geometry, const BasisLabel& label);

inline constexpr double kDefaultOmega0 = std::numbers::pi / 4.0;

/// |1,R> for start 1, |N,L> for start N, otherwise
/// cos(omega0)|i0,L> + e^{i phi0} sin(omega0)|i0,R>.
StateVector initial_state(const ChainGeometry& geometry, int start,
                          double omega0 = kDefaultOmega0, double phi0 = 0.0);

}  // namespace qwalk
