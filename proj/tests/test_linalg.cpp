#include <doctest.h>

#include <random>

#include "gentle/linalg.hpp"

using namespace gentle;

namespace {

Matrix<Rational> from_rows(std::vector<std::vector<int>> rows) {
  Matrix<Rational> m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("rank and nullspace over Q") {
  auto m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(m) == 2);
  auto n = nullspace(m);
  REQUIRE(n.cols() == 1);
  CHECK(multiply(m, n).is_zero());
}

TEST_CASE("Fp arithmetic") {
  Fp three = Fp::from_int(3);
  CHECK(three * three.inverse() == Fp::from_int(1));
  CHECK(Fp::from_int(-1) + Fp::from_int(1) == Fp());
  Fp half = Fp::from_rational(Rational(1, 2));
  CHECK(half * Fp::from_int(2) == Fp::from_int(1));
  Fp big = Fp::from_int(123456789);
  CHECK(big * big.inverse() == Fp::from_int(1));
}

TEST_CASE("modular rank agrees with exact rank on small integer matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-2, 2), size(1, 7);
  for (int trial = 0; trial < 200; ++trial) {
    int r = size(rng), c = size(rng);
    Matrix<Rational> m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = entry(rng);
    CHECK(rank(m) == rank(convert<Fp>(m)));
  }
}

TEST_CASE("echelon basis membership") {
  EchelonBasis<Rational> b(3);
  CHECK(b.add({1, 1, 0}));
  CHECK(b.add({0, 1, 1}));
  CHECK_FALSE(b.add({1, 2, 1}));
  CHECK(b.contains({2, 0, -2}));
  CHECK_FALSE(b.contains({0, 0, 1}));
  CHECK(b.size() == 2);
}
