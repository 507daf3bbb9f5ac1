#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qwalk/error.hpp"
#include "qwalk/hilbert.hpp"

using namespace qwalk;
using enum Direction;

TEST_CASE("basis layout") {
  const ChainGeometry g(5);
  CHECK(g.dimension() == 8);
  CHECK(g.index_of({2, L}) == 0);
  CHECK(g.index_of({5, L}) == 3);
  CHECK(g.index_of({1, R}) == 4);
  CHECK(g.index_of({4, R}) == 7);
  for (std::size_t k = 0; k < g.dimension(); ++k) CHECK(g.index_of(g.label_of(k)) == k);
  CHECK(to_string(BasisLabel{3, L}) == "|3,L>");
}

TEST_CASE("end sites carry a single direction") {
  const ChainGeometry g(4);
  CHECK_FALSE(g.is_valid({1, L}));
  CHECK_FALSE(g.is_valid({4, R}));
  CHECK_FALSE(g.is_valid({0, R}));
  CHECK_FALSE(g.is_valid({5, L}));
  CHECK_THROWS_AS(g.index_of({1, L}), InvalidInput);
  CHECK_THROWS_AS(g.label_of(6), InvalidInput);
  CHECK_THROWS_AS(ChainGeometry(2), InvalidInput);
}

TEST_CASE("coin parameters") {
  const auto c = CoinParams::from_angle(std::numbers::pi / 3.0);
  CHECK(c.a == doctest::Approx(0.5));
  CHECK(c.b == doctest::Approx(std::sqrt(3.0) / 2.0));
  CHECK(c.r == doctest::Approx(1.0 / 3.0));
  CHECK_FALSE(c.has_phase());
  CHECK(CoinParams::from_angle(std::numbers::pi / 2.0).r == doctest::Approx(1.0));
  CHECK(CoinParams::from_angle(0.3, 0.2).has_phase());
  CHECK_THROWS_AS(CoinParams::from_angle(0.0), InvalidInput);
  CHECK_THROWS_AS(CoinParams::from_angle(std::numbers::pi), InvalidInput);
  CHECK_THROWS_AS(CoinParams::from_angle(-1.0), InvalidInput);
}

TEST_CASE("state vectors") {
  const ChainGeometry g(3);
  CHECK_THROWS_AS(StateVector(g, std::vector<complex>(3)), InvalidInput);
  CHECK_THROWS_AS(StateVector::normalized(g, std::vector<complex>(4)), InvalidInput);
  const auto s = StateVector::normalized(g, {3.0, 0.0, complex(0.0, 4.0), 0.0});
  CHECK(s.norm() == doctest::Approx(1.0));
  CHECK(std::abs(s[2] - complex(0.0, 0.8)) < 1e-15);
  const auto e = basis_state(g, {2, R});
  CHECK(std::abs(inner_product(e, e) - 1.0) < 1e-15);
  CHECK(std::abs(inner_product(basis_state(g, {1, R}), e)) == 0.0);
}

TEST_CASE("initial states") {
  const ChainGeometry g(6);
  CHECK(initial_state(g, 1).amplitude({1, R}) == complex(1.0));
  CHECK(initial_state(g, 6).amplitude({6, L}) == complex(1.0));
  const auto s = initial_state(g, 3, std::numbers::pi / 3.0, std::numbers::pi / 2.0);
  CHECK(std::abs(s.amplitude({3, L}) - 0.5) < 1e-15);
  CHECK(std::abs(s.amplitude({3, R}) - complex(0.0, std::sqrt(3.0) / 2.0)) < 1e-15);
  CHECK(s.norm() == doctest::Approx(1.0));
  CHECK_THROWS_AS(initial_state(g, 0), InvalidInput);
  CHECK_THROWS_AS(initial_state(g, 7), InvalidInput);
}
