#include "qwalk/operators.hpp"

#include <algorithm>
#include <cmath>

#include "qwalk/error.hpp"

namespace qwalk {

std::string_view to_string(ShiftKind kind) {
  return kind == ShiftKind::Moving ? "moving" : "swapping";
}

std::optional<ShiftKind> parse_shift(std::string_view name) {
  if (name == "moving") return ShiftKind::Moving;
  if (name == "swapping") return ShiftKind::Swapping;
  return std::nullopt;
}

UnitaryOperator::UnitaryOperator(ChainGeometry geometry, OperatorKind kind, DenseMatrix matrix)
    : geometry_(geometry), kind_(kind), matrix_(std::move(matrix)) {
  const auto dim = static_cast<Eigen::Index>(geometry_.dimension());
  if (matrix_.rows() != dim || matrix_.cols() != dim)
    throw InvalidInput("operator matrix does not match the chain dimension");
}

complex UnitaryOperator::entry(const BasisLabel& row, const BasisLabel& col) const {
  return matrix_(static_cast<Eigen::Index>(geometry_.index_of(row)),
                 static_cast<Eigen::Index>(geometry_.index_of(col)));
}

double UnitaryOperator::unitarity_defect() const {
  const DenseMatrix gram = matrix_.adjoint() * matrix_;
  return (gram - DenseMatrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

bool UnitaryOperator::is_permutation() const {
  const auto dim = matrix_.rows();
  std::vector<int> col_count(static_cast<std::size_t>(dim), 0);
  for (Eigen::Index i = 0; i < dim; ++i) {
    int row_count = 0;
    for (Eigen::Index j = 0; j < dim; ++j) {
      const complex v = matrix_(i, j);
      if (v == complex(1.0, 0.0)) {
        ++row_count;
        ++col_count[static_cast<std::size_t>(j)];
      } else if (v != complex(0.0, 0.0)) {
        return false;
      }
    }
    if (row_count != 1) return false;
  }
  return std::all_of(col_count.begin(), col_count.end(), [](int c) { return c == 1; });
}

namespace {

Eigen::Index idx(const ChainGeometry& g, int position, Direction dir) {
  return static_cast<Eigen::Index>(g.index_of({position, dir}));
}

DenseMatrix zeros(const ChainGeometry& g) {
  const auto dim = static_cast<Eigen::Index>(g.dimension());
  return DenseMatrix::Zero(dim, dim);
}

}  // namespace

UnitaryOperator coin_position_operator(const ChainGeometry& geometry, const CoinParams& coin) {
  using enum Direction;
  const int n = geometry.n_sites();
  DenseMatrix m = zeros(geometry);
  m(idx(geometry, 1, R), idx(geometry, 1, R)) = 1.0;
  m(idx(geometry, n, L), idx(geometry, n, L)) = 1.0;

  const complex phase(std::cos(coin.phase), std::sin(coin.phase));
  const complex lr = coin.b * phase;
  const complex rl = coin.b * std::conj(phase);
  for (int i = 2; i <= n - 1; ++i) {
    const auto l = idx(geometry, i, L);
    const auto r = idx(geometry, i, R);
    m(l, l) = coin.a;
    m(l, r) = lr;
    m(r, l) = rl;
    m(r, r) = -coin.a;
  }
  return {geometry, OperatorKind::CoinPosition, std::move(m)};
}

UnitaryOperator moving_shift(const ChainGeometry& geometry) {
  using enum Direction;
  const int n = geometry.n_sites();
  DenseMatrix m = zeros(geometry);
  // m(to, from) = 1
  for (int i = 1; i <= n - 2; ++i) m(idx(geometry, i + 1, R), idx(geometry, i, R)) = 1.0;
  m(idx(geometry, n, L), idx(geometry, n - 1, R)) = 1.0;
  for (int i = 3; i <= n; ++i) m(idx(geometry, i - 1, L), idx(geometry, i, L)) = 1.0;
  m(idx(geometry, 1, R), idx(geometry, 2, L)) = 1.0;
  return {geometry, OperatorKind::MovingShift, std::move(m)};
}

UnitaryOperator swapping_shift(const ChainGeometry& geometry) {
  using enum Direction;
  const int n = geometry.n_sites();
  DenseMatrix m = zeros(geometry);
  for (int i = 1; i <= n - 1; ++i) m(idx(geometry, i + 1, L), idx(geometry, i, R)) = 1.0;
  for (int i = 2; i <= n; ++i) m(idx(geometry, i - 1, R), idx(geometry, i, L)) = 1.0;
  return {geometry, OperatorKind::SwappingShift, std::move(m)};
}

UnitaryOperator evolution_operator(ShiftKind kind, const ChainGeometry& geometry,
                                   const CoinParams& coin) {
  const UnitaryOperator shift =
      kind == ShiftKind::Moving ? moving_shift(geometry) : swapping_shift(geometry);
  const UnitaryOperator coin_op = coin_position_operator(geometry, coin);
  DenseMatrix product = shift.matrix() * coin_op.matrix();
  return {geometry,
          kind == ShiftKind::Moving ? OperatorKind::EvolutionMoving : OperatorKind::EvolutionSwapping,
          std::move(product)};
}

}  // namespace qwalk
