#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qwalk/operators.hpp"

using namespace qwalk;
using enum Direction;

namespace {

constexpr double kPi = std::numbers::pi;

// Coin built as a sum of outer products over the labelled basis.
DenseMatrix coin_oracle(const ChainGeometry& g, double omega, double phase) {
  const double a = std::cos(omega), b = std::sin(omega);
  const complex e = std::polar(1.0, phase);
  DenseMatrix m = DenseMatrix::Zero(g.dimension(), g.dimension());
  auto put = [&](BasisLabel row, BasisLabel col, complex v) { m(g.index_of(row), g.index_of(col)) += v; };
  put({1, R}, {1, R}, 1.0);
  put({g.n_sites(), L}, {g.n_sites(), L}, 1.0);
  for (int i = 2; i <= g.n_sites() - 1; ++i) {
    put({i, L}, {i, L}, a);
    put({i, L}, {i, R}, b * e);
    put({i, R}, {i, L}, b * std::conj(e));
    put({i, R}, {i, R}, -a);
  }
  return m;
}

DenseMatrix permutation(const ChainGeometry& g, BasisLabel (*image)(BasisLabel, int)) {
  DenseMatrix m = DenseMatrix::Zero(g.dimension(), g.dimension());
  for (std::size_t k = 0; k < g.dimension(); ++k) {
    const BasisLabel from = g.label_of(k);
    m(g.index_of(image(from, g.n_sites())), k) = 1.0;
  }
  return m;
}

BasisLabel moving_image(BasisLabel s, int n) {
  if (s.direction == R) return s.position == n - 1 ? BasisLabel{n, L} : BasisLabel{s.position + 1, R};
  return s.position == 2 ? BasisLabel{1, R} : BasisLabel{s.position - 1, L};
}

BasisLabel swapping_image(BasisLabel s, int) {
  return s.direction == R ? BasisLabel{s.position + 1, L} : BasisLabel{s.position - 1, R};
}

double max_gap(const DenseMatrix& x, const DenseMatrix& y) { return (x - y).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("coin matches the projector construction") {
  for (int n : {3, 4, 9})
    for (double w : {kPi / 6, kPi / 3, 2.0}) {
      const ChainGeometry g(n);
      CHECK(max_gap(coin_position_operator(g, CoinParams::from_angle(w)).matrix(), coin_oracle(g, w, 0.0)) < 1e-15);
      CHECK(max_gap(coin_position_operator(g, CoinParams::from_angle(w, 0.7)).matrix(), coin_oracle(g, w, 0.7)) < 1e-15);
    }
}

TEST_CASE("shifts are the documented permutations") {
  for (int n : {3, 4, 7, 12}) {
    const ChainGeometry g(n);
    const auto m = moving_shift(g);
    const auto s = swapping_shift(g);
    CHECK(m.is_permutation());
    CHECK(s.is_permutation());
    CHECK(max_gap(m.matrix(), permutation(g, moving_image)) == 0.0);
    CHECK(max_gap(s.matrix(), permutation(g, swapping_image)) == 0.0);
    // swapping is an involution
    CHECK(max_gap(s.matrix() * s.matrix(), DenseMatrix::Identity(g.dimension(), g.dimension())) == 0.0);
  }
}

TEST_CASE("evolution operator is shift times coin") {
  const ChainGeometry g(6);
  const auto coin = CoinParams::from_angle(kPi / 4);
  for (ShiftKind k : {ShiftKind::Moving, ShiftKind::Swapping}) {
    const auto shift = k == ShiftKind::Moving ? moving_shift(g) : swapping_shift(g);
    const auto u = evolution_operator(k, g, coin);
    CHECK(max_gap(u.matrix(), shift.matrix() * coin_oracle(g, kPi / 4, 0.0)) < 1e-15);
    CHECK(u.kind() == (k == ShiftKind::Moving ? OperatorKind::EvolutionMoving : OperatorKind::EvolutionSwapping));
  }
}

TEST_CASE("entries by label") {
  const ChainGeometry g(5);
  const auto u = evolution_operator(ShiftKind::Swapping, g, CoinParams::from_angle(kPi / 3));
  // |2,L> -> a|2,L> + b|2,R> under the coin, then swap: a|1,R> + b|3,L>
  CHECK(std::abs(u.entry({1, R}, {2, L}) - 0.5) < 1e-15);
  CHECK(std::abs(u.entry({3, L}, {2, L}) - std::sqrt(3.0) / 2) < 1e-15);
  CHECK(std::abs(u.entry({2, L}, {1, R}) - 1.0) < 1e-15);
}

TEST_CASE("unitarity across the sweep, at most two non-zeros per row and column") {
  for (int n : {3, 4, 8, 16, 32, 64, 128})
    for (double w : {kPi / 6, kPi / 4, kPi / 3})
      for (ShiftKind k : {ShiftKind::Moving, ShiftKind::Swapping}) {
        const auto u = evolution_operator(k, ChainGeometry(n), CoinParams::from_angle(w));
        CHECK(u.unitarity_defect() < 1e-12);
        const auto nz = (u.matrix().cwiseAbs().array() > 0.0).cast<int>();
        CHECK(nz.rowwise().sum().maxCoeff() <= 2);
        CHECK(nz.colwise().sum().maxCoeff() <= 2);
      }
}

TEST_CASE("defect detects a non-unitary matrix") {
  const ChainGeometry g(3);
  DenseMatrix m = DenseMatrix::Identity(4, 4);
  m(0, 1) = 0.1;
  CHECK(UnitaryOperator(g, OperatorKind::CoinPosition, m).unitarity_defect() > 0.05);
}

TEST_CASE("N = 3, omega = pi/2 swapping walk is a 4-cycle") {
  const auto u = evolution_operator(ShiftKind::Swapping, ChainGeometry(3), CoinParams::from_angle(kPi / 2));
  const DenseMatrix u4 = u.matrix() * u.matrix() * u.matrix() * u.matrix();
  CHECK(max_gap(u4, DenseMatrix::Identity(4, 4)) < 1e-15);
  CHECK(max_gap(u.matrix() * u.matrix(), DenseMatrix::Identity(4, 4)) > 0.5);
}

TEST_CASE("shift names") {
  CHECK(parse_shift("moving") == ShiftKind::Moving);
  CHECK(parse_shift("swapping") == ShiftKind::Swapping);
  CHECK_FALSE(parse_shift("flip").has_value());
  CHECK(to_string(ShiftKind::Swapping) == "swapping");
}
