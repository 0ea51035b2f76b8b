#include <doctest.h>

#include "fixtures.hpp"
#include "gentle/alp.hpp"
#include "gentle/error.hpp"
#include "gentle/hom.hpp"

using namespace gentle;

TEST_CASE("identity of a string complex is a single graph map") {
  auto k = fixture("kronecker");
  Complex x = unfold_string(k, parse_string(*k, "alpha"), 0);
  auto basis = alp_basis(x, x);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0].kind == MapKind::graph);
  CHECK(basis[0].components.size() == 2);
  CHECK(is_chain_map(x, x, basis[0]));
}

TEST_CASE("single maps") {
  auto k = fixture("kronecker");
  // P(1) in degree 0 receives alpha and beta from P(2)
  Complex p1 = unfold_string(k, parse_string(*k, "triv:1:1"), 0);
  Complex p2 = unfold_string(k, parse_string(*k, "triv:2:1"), 0);
  auto s = single_maps(p2, p1);
  CHECK(s.size() == 2);
  CHECK(alp_basis(p2, p1).size() == 2);
  CHECK(alp_basis(p1, p2).empty());
}

TEST_CASE("double maps") {
  auto a = fixture("a3_hereditary");
  Complex x = unfold_string(a, parse_string(*a, "b"), 0);
  Complex y = unfold_string(a, parse_string(*a, "b*a"), 0);
  Complex z = unfold_string(a, parse_string(*a, "a"), 0);
  for (const auto& [v, w] : std::vector<std::pair<Complex, Complex>>{{x, y}, {y, x}, {z, y}, {y, z}, {x, z}, {z, x}}) {
    auto basis = alp_basis(v, w);
    CHECK(static_cast<int>(basis.size()) == chain_map_dim(v, w));
  }
}

TEST_CASE("basis size equals the dimension of chain maps") {
  for (const char* n : {"kronecker", "a2", "a3_hereditary", "a3_relation", "dual_numbers", "pent"}) {
    auto a = fixture(n);
    int letters = std::string(n) == "pent" ? 2 : 3;
    std::vector<Complex> cs;
    for (const auto& w : enumerate_strings(*a, letters))
      for (int s : {-1, 0, 1}) cs.push_back(unfold_string(a, w, s));
    for (const auto& x : cs)
      for (const auto& y : cs) {
        std::vector<CombMap> basis;
        CHECK_NOTHROW(basis = alp_basis(x, y));
        CHECK(static_cast<int>(basis.size()) == chain_map_dim(x, y));
        for (const auto& m : basis) CHECK(is_chain_map(x, y, m));
      }
  }
}

TEST_CASE("bands are rejected") {
  auto k = fixture("kronecker");
  Complex b = unfold_band(k, parse_band(*k, "band: beta^-1, alpha"), 0, Rational(1));
  CHECK_THROWS_AS(alp_basis(b, b), DomainError);
}
