#include <doctest.h>

#include <numbers>

#include "qwalk/error.hpp"
#include "qwalk/evolve.hpp"

using namespace qwalk;

namespace {

constexpr double kPi = std::numbers::pi;

// Brute-force average with Eigen dense products.
std::vector<double> dense_average(const UnitaryOperator& op, const StateVector& psi0, long horizon) {
  Eigen::VectorXcd psi(static_cast<Eigen::Index>(psi0.size()));
  for (std::size_t k = 0; k < psi0.size(); ++k) psi[static_cast<Eigen::Index>(k)] = psi0[k];
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(psi.size());
  for (long t = 0; t <= horizon; ++t) {
    acc += psi.cwiseAbs2();
    psi = op.matrix() * psi;
  }
  acc /= static_cast<double>(horizon + 1);
  const auto& g = op.geometry();
  std::vector<double> chi(static_cast<std::size_t>(g.n_sites()));
  for (std::size_t k = 0; k < g.dimension(); ++k) chi[g.label_of(k).position - 1] += acc[static_cast<Eigen::Index>(k)];
  return chi;
}

}  // namespace

TEST_CASE("structured and dense paths agree with a brute-force average") {
  for (ShiftKind s : {ShiftKind::Moving, ShiftKind::Swapping}) {
    const auto op = evolution_operator(s, ChainGeometry(11), CoinParams::from_angle(kPi / 3));
    const auto psi0 = initial_state(op.geometry(), 4, 0.6, 0.8);
    const auto want = dense_average(op, psi0, 500);
    const auto a = time_averaged_distribution(op, psi0, 500, StepPath::Structured);
    const auto b = time_averaged_distribution(op, psi0, 500, StepPath::Dense);
    for (int j = 1; j <= 11; ++j) {
      CHECK(std::abs(a.at(j) - want[j - 1]) < 1e-13);
      CHECK(std::abs(b.at(j) - want[j - 1]) < 1e-13);
    }
  }
}

TEST_CASE("zero horizon returns the initial distribution") {
  const auto op = evolution_operator(ShiftKind::Swapping, ChainGeometry(16), CoinParams::from_angle(kPi / 3));
  const auto d = time_averaged_distribution(op, initial_state(op.geometry(), 1), 0);
  CHECK(d.at(1) == 1.0);
  CHECK(d.sum() == 1.0);
  CHECK_THROWS_AS(time_averaged_distribution(op, initial_state(op.geometry(), 1), -1), InvalidInput);
}

TEST_CASE("4-cycle returns after four steps") {
  const auto op = evolution_operator(ShiftKind::Swapping, ChainGeometry(3), CoinParams::from_angle(kPi / 2));
  const Propagator p(op);
  const auto psi0 = initial_state(op.geometry(), 1);
  const auto psi4 = evolve(p, psi0, 4);
  for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(psi4[k] - psi0[k]) < 1e-15);
  const auto psi1 = step(op, psi0);
  CHECK(std::abs(std::abs(psi1.amplitude({2, Direction::L})) - 1.0) < 1e-15);
}

TEST_CASE("norm is conserved without renormalisation") {
  for (ShiftKind s : {ShiftKind::Moving, ShiftKind::Swapping}) {
    const Propagator p(evolution_operator(s, ChainGeometry(64), CoinParams::from_angle(kPi / 6)));
    CHECK(norm_drift(p, initial_state(ChainGeometry(64), 20), 50000) < 1e-10);
  }
}

TEST_CASE("step through operator and propagator agree") {
  const auto op = evolution_operator(ShiftKind::Moving, ChainGeometry(9), CoinParams::from_angle(1.1, 0.4));
  const auto psi0 = initial_state(op.geometry(), 5, 0.3, 0.2);
  const auto a = step(op, psi0);
  const auto b = step(Propagator(op, StepPath::Dense), psi0);
  for (std::size_t k = 0; k < a.size(); ++k) CHECK(std::abs(a[k] - b[k]) < 1e-15);
}

TEST_CASE("two-term extraction rejects dense rows") {
  DenseMatrix m = DenseMatrix::Constant(4, 4, complex(0.5, 0.0));
  const UnitaryOperator op(ChainGeometry(3), OperatorKind::CoinPosition, m);
  CHECK_THROWS_AS(two_term_rows(op), InvalidInput);
  const auto rows = two_term_rows(evolution_operator(ShiftKind::Moving, ChainGeometry(5), CoinParams::from_angle(0.4)));
  CHECK(rows.size() == 8);
}

TEST_CASE("distributions") {
  const ChainGeometry g(4);
  const auto d = probability_distribution(StateVector::normalized(g, {1.0, 1.0, 1.0, 1.0, 0.0, 0.0}));
  CHECK(d.size() == 4);
  CHECK(d.at(1) == doctest::Approx(1.0 / 4));
  CHECK(d.at(2) == doctest::Approx(1.0 / 4));
  CHECK(d.at(4) == doctest::Approx(1.0 / 4));
  CHECK(d.sum() == doctest::Approx(1.0));
  CHECK_THROWS_AS(d.at(0), InvalidInput);
  CHECK_THROWS_AS(d.at(5), InvalidInput);
}
