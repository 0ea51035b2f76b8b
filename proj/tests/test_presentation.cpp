#include <doctest.h>

#include "fixtures.hpp"
#include "gentle/error.hpp"

using namespace gentle;

TEST_CASE("fixture dimensions") {
  // basis paths counted by hand
  CHECK(fixture("dual_numbers")->dimension() == 2);
  CHECK(fixture("kronecker")->dimension() == 4);
  CHECK(fixture("a2")->dimension() == 3);
  CHECK(fixture("a3_hereditary")->dimension() == 6);
  CHECK(fixture("a3_relation")->dimension() == 5);
  CHECK(fixture("pent")->dimension() == 13);
}

TEST_CASE("format round trip") {
  for (const char* n : {"dual_numbers", "kronecker", "a2", "a3_hereditary", "a3_relation", "pent"}) {
    Presentation p = load_presentation(fixture_path(n));
    Presentation q = parse_presentation(format_presentation(p));
    CHECK(format_presentation(q) == format_presentation(p));
  }
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_presentation("algebra t\nvertex 1 2\narrow a : 1 -> 3\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 16);
  }
  CHECK_THROWS_AS(parse_presentation("vertex 1\nrelation x x\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("vertex 1 2\narrow a : 1 -> 2\narrow b : 1 -> 2\nrelation b a\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("algebra t\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("vertex 1\nwhatever\n"), ParseError);
}

TEST_CASE("gentle conditions") {
  // three arrows out of one vertex
  CHECK_THROWS_AS(make_algebra_from_text("vertex 1 2 3 4\narrow a : 1 -> 2\narrow b : 1 -> 3\narrow c : 1 -> 4\n"),
                  DomainError);
  // two free continuations of a
  CHECK_THROWS_AS(make_algebra_from_text("vertex 1 2 3 4\narrow a : 1 -> 2\narrow b : 2 -> 3\narrow c : 2 -> 4\n"),
                  DomainError);
  // infinite dimensional
  CHECK_THROWS_AS(make_algebra_from_text("vertex 1\narrow x : 1 -> 1\n"), DomainError);
  // disconnected
  CHECK_THROWS_AS(make_algebra_from_text("vertex 1 2\n"), DomainError);
  CHECK_THROWS_AS(load_presentation(fixture_path("no_such_fixture")), DomainError);
}

TEST_CASE("paths compose right to left") {
  auto a = fixture("a3_hereditary");
  int pa = a->arrow_path(a->presentation().arrow_index("a"));
  int pb = a->arrow_path(a->presentation().arrow_index("b"));
  int ba = a->compose(pb, pa);
  REQUIRE(ba >= 0);
  CHECK(a->path_name(ba) == "b*a");
  CHECK(a->compose(pa, pb) < 0);
  CHECK(a->compose(pb, a->trivial_path(1)) == pb);

  auto r = fixture("a3_relation");
  CHECK(r->compose(r->arrow_path(1), r->arrow_path(0)) < 0);
}

TEST_CASE("sign assignments") {
  for (const char* n : {"dual_numbers", "kronecker", "a2", "a3_hereditary", "a3_relation", "pent"}) {
    auto a = fixture(n);
    auto all = enumerate_sign_assignments(*a);
    REQUIRE_FALSE(all.empty());
    CHECK(check_sign_assignment(*a, a->signs()).empty());
    for (const auto& s : all) CHECK(check_sign_assignment(*a, s).empty());
  }
  auto k = fixture("kronecker");
  // arrows sharing a source get opposite s'
  CHECK(k->signs().s_prime[0] == -k->signs().s_prime[1]);
}
