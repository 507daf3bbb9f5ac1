#pragma once

// Dense matrices for the coin-position operator, the moving and swapping
// shifts, and the one-step evolution operators U = S * C_p.

#include <optional>
#include <string_view>

#include <Eigen/Dense>

#include "qwalk/hilbert.hpp"

namespace qwalk {

using DenseMatrix = Eigen::Matrix<complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

enum class ShiftKind { Moving, Swapping };

std::string_view to_string(ShiftKind kind);
std::optional<ShiftKind> parse_shift(std::string_view name);

enum class OperatorKind {
  CoinPosition,
  MovingShift,
  SwappingShift,
  EvolutionMoving,
  EvolutionSwapping,
};

class UnitaryOperator {
 public:
  UnitaryOperator(ChainGeometry geometry, OperatorKind kind, DenseMatrix matrix);

  const ChainGeometry& geometry() const { return geometry_; }
  OperatorKind kind() const { return kind_; }
  const DenseMatrix& matrix() const { return matrix_; }

  /// <row|op|col>
  complex entry(const BasisLabel& row, const BasisLabel& col) const;

  /// max |(U^dagger U - I)_{jk}|
  double unitarity_defect() const;

  /// True when every row and column holds exactly one entry equal to 1.
  bool is_permutation() const;

 private:
  ChainGeometry geometry_;
  OperatorKind kind_;
  DenseMatrix matrix_;
};

/// I_p (x) C with identity action at the two end sites. A non-zero
/// coin.phase gives the general coin e^{i phase} sin(omega) |L><R| + h.c.
UnitaryOperator coin_position_operator(const ChainGeometry& geometry, const CoinParams& coin);

/// Direction-preserving shift with elastic reflection at both ends.
UnitaryOperator moving_shift(const ChainGeometry& geometry);

/// |i,R> -> |i+1,L>, |i,L> -> |i-1,R>.
UnitaryOperator swapping_shift(const ChainGeometry& geometry);

UnitaryOperator evolution_operator(ShiftKind kind, const ChainGeometry& geometry,
                                   const CoinParams& coin);

}  // namespace qwalk
