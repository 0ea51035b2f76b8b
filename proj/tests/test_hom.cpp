#include <doctest.h>

#include "fixtures.hpp"
#include "gentle/error.hpp"
#include "gentle/hom.hpp"

using namespace gentle;

namespace {

std::vector<Complex> string_complexes(const AlgebraPtr& a, int letters) {
  std::vector<Complex> out;
  for (const auto& w : enumerate_strings(*a, letters)) out.push_back(unfold_string(a, w, 0));
  return out;
}

}  // namespace

TEST_CASE("Hom between projectives counts paths") {
  auto a = fixture("a3_hereditary");
  for (int v = 0; v < 3; ++v)
    for (int w = 0; w < 3; ++w) {
      Complex pv = projective_stalk(a, v, 0), pw = projective_stalk(a, w, 0);
      CHECK(hom_k_dim(pv, pw) == a->paths_count(w, v));
      CHECK(hom_k_dim(pv, shift(pw, 1)) == 0);
    }
}

TEST_CASE("dual numbers: End of the stalk A") {
  auto a = fixture("dual_numbers");
  Complex p = projective_stalk(a, 0, 0);
  GradedHomProfile g = graded_profile(p, p);
  CHECK(g.dims == std::map<int, int>{{0, 2}});
}

TEST_CASE("Kronecker: Hom between the two string complexes") {
  auto k = fixture("kronecker");
  Complex x = unfold_string(k, parse_string(*k, "alpha"), 0);
  Complex y = unfold_string(k, parse_string(*k, "beta"), 0);
  CHECK(graded_profile(x, x).dims == std::map<int, int>{{0, 1}, {1, 1}});
  CHECK(graded_profile(x, y).total() == 0);
  CHECK(chain_map_dim(x, x) == 1);
  CHECK(homotopy_space_dim(x, x) == 0);
  // X -> X[1]: the maps alpha, beta modulo the homotopy coming from the identity
  CHECK(chain_map_dim(x, x, 1) == 2);
  CHECK(homotopy_space_dim(x, x, 1) == 1);
}

TEST_CASE("projective and module-homomorphism routes agree") {
  for (const char* n : {"kronecker", "a2", "a3_relation", "dual_numbers"}) {
    auto a = fixture(n);
    auto cs = string_complexes(a, 2);
    for (const auto& x : cs)
      for (const auto& y : cs)
        for (int s : {-1, 0, 1}) {
          Complex ys = shift(y, s);
          CHECK(hom_k_dim(x, ys) == hom_k_dim_general(x, ys));
        }
  }
}

TEST_CASE("modular and exact ranks agree") {
  auto a = fixture("pent");
  auto cs = string_complexes(a, 2);
  for (size_t i = 0; i < cs.size(); i += 3)
    for (size_t j = 0; j < cs.size(); j += 2)
      CHECK(graded_profile(cs[i], cs[j], Arith::exact).dims == graded_profile(cs[i], cs[j], Arith::modular).dims);
}

TEST_CASE("Serre duality") {
  for (const char* n : {"a2", "kronecker", "a3_relation", "pent"}) {
    auto a = fixture(n);
    auto cs = string_complexes(a, 2);
    for (const auto& x : cs) {
      Complex sx = serre(x);
      for (const auto& y : cs) CHECK(graded_profile(x, y).at(0) == graded_profile(y, sx).at(0));
    }
  }
}

TEST_CASE("shift equivariance") {
  auto a = fixture("a3_relation");
  auto cs = string_complexes(a, 2);
  for (const auto& x : cs)
    for (const auto& y : cs)
      for (int n = -2; n <= 2; ++n)
        for (int t : {-1, 2}) CHECK(hom_k_dim(x, y, n) == hom_k_dim(shift(x, t), shift(y, t), n));
}

TEST_CASE("euler characteristic matches the profile") {
  auto a = fixture("kronecker");
  auto cs = string_complexes(a, 3);
  for (const auto& x : cs)
    for (const auto& y : cs) {
      GradedHomProfile p = graded_profile(x, y);
      int chi = 0;
      for (auto [n, d] : p.dims) chi += (n % 2 == 0 ? d : -d);
      CHECK(euler_characteristic(x, y) == chi);
    }
}

TEST_CASE("isomorphism test") {
  auto k = fixture("kronecker");
  Complex x = unfold_string(k, parse_string(*k, "alpha"), 0);
  Complex b = unfold_band(k, parse_band(*k, "band: beta^-1, alpha"), 0, Rational(2));
  Complex b2 = unfold_band(k, parse_band(*k, "band: beta^-1, alpha"), 0, Rational(3));
  CHECK(iso_indecomposable(x, x));
  CHECK_FALSE(iso_indecomposable(x, shift(x, 1)));
  CHECK(iso_indecomposable(b, b));
  CHECK_FALSE(iso_indecomposable(b, b2));
  CHECK(iso_indecomposable(serre(x), shift(x, 1)));
}

TEST_CASE("null-homotopic maps") {
  auto a = fixture("a2");
  Complex x = unfold_string(a, parse_string(*a, "a"), 0);
  HomComplex h(x, x);
  ChainMapSpace z = chain_map_space(x, x, 0);
  REQUIRE(z.dimension == 1);
  CHECK_FALSE(is_null_homotopic(x, x, 0, z.basis[0]));
  CHECK(is_null_homotopic(x, x, 0, std::vector<Rational>(h.dim(0), Rational(0))));
}

TEST_CASE("complexes over different algebras") {
  auto a = fixture("a2");
  auto b = fixture("kronecker");
  CHECK_THROWS_AS(hom_k_dim(projective_stalk(a, 0, 0), projective_stalk(b, 0, 0)), DomainError);
}
