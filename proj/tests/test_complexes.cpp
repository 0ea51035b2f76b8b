#include <doctest.h>

#include "fixtures.hpp"
#include "gentle/complexes.hpp"
#include "gentle/error.hpp"

using namespace gentle;

TEST_CASE("single direct letter over the Kronecker quiver") {
  auto k = fixture("kronecker");
  Complex c = unfold_string(k, parse_string(*k, "alpha"), 0);
  REQUIRE(c.projective());
  CHECK(c.lo() == -1);
  CHECK(c.hi() == 0);
  CHECK(c.layout()->at(-1) == std::vector<int>{1});
  CHECK(c.layout()->at(0) == std::vector<int>{0});
  const AlgebraElement& d = c.layout()->diff[0][0][0];
  CHECK(d == AlgebraElement::path(k->arrow_path(0)));
  CHECK(check_complex(c).empty());
  // P(2) -> P(1) has cokernel of dimension 1 at vertex 2, kernel zero
  auto h = cohomology_dims(c);
  CHECK(h.size() == 1);
  CHECK(h.at(0) == std::vector<int>{1, 1});
}

TEST_CASE("band complex carries the scalar on the last letter") {
  auto k = fixture("kronecker");
  HomotopyBand b = parse_band(*k, "band: beta^-1, alpha");
  Complex c = unfold_band(k, b, 0, Rational(-3));
  CHECK(c.lo() == -1);
  CHECK(c.hi() == 0);
  const AlgebraElement& d = c.layout()->diff[0][0][0];
  CHECK(d.terms.size() == 2);
  CHECK(check_complex(c).empty());
  CHECK_THROWS_AS(unfold_band(k, b, 0, Rational(0)), DomainError);
}

TEST_CASE("shift") {
  auto a = fixture("a3_relation");
  Complex c = unfold_string(a, parse_string(*a, "b, a"), 0);
  Complex s = shift(c, 2);
  CHECK(s.lo() == c.lo() - 2);
  CHECK(s.hi() == c.hi() - 2);
  Complex t = shift(c, 1);
  CHECK(check_complex(t).empty());
  // differential changes sign under an odd shift
  CHECK(t.layout()->diff[0][0][0] == c.layout()->diff[0][0][0].scaled(-1));
  CHECK(unfold_string(a, parse_string(*a, "b, a"), 3).lo() == c.lo() + 3);
}

TEST_CASE("d squared vanishes on every string complex") {
  for (const char* n : {"kronecker", "a2", "a3_hereditary", "a3_relation", "pent", "dual_numbers"}) {
    auto a = fixture(n);
    for (const auto& w : enumerate_strings(*a, 4)) {
      Complex c = unfold_string(a, w, 0);
      CHECK_MESSAGE(check_complex(c).empty(), n, " ", format_string(*a, w));
    }
  }
}

TEST_CASE("perfect replacement preserves cohomology") {
  for (const char* n : {"kronecker", "a2", "a3_relation", "pent", "dual_numbers"}) {
    auto a = fixture(n);
    for (const auto& w : enumerate_strings(*a, 3)) {
      Complex x = nakayama_on_projectives(unfold_string(a, w, 0));
      Complex p = perfect_replacement(x);
      CHECK(p.projective());
      CHECK(check_complex(p).empty());
      CHECK(cohomology_dims(p) == cohomology_dims(x));
    }
  }
}

TEST_CASE("Nakayama functor on a projective stalk") {
  auto a = fixture("a2");
  // ν P(1) = I(1), which has dimension 1
  Complex n = nakayama_on_projectives(projective_stalk(a, 0, 0));
  CHECK(n.term(0).total() == 1);
  Complex s = serre(projective_stalk(a, 0, 0));
  CHECK(s.projective());
  CHECK(cohomology_dims(s) == cohomology_dims(n));
}

TEST_CASE("fingerprint records the top degree") {
  auto a = fixture("pent");
  Complex c = unfold_string(a, parse_string(*a, "b"), 0);
  Fingerprint f = fingerprint(c);
  CHECK(f.top == c.hi());
  Fingerprint g = fingerprint(shift(c, 3));
  CHECK(g.shape == f.shape);
  CHECK(g.top == f.top - 3);
}
