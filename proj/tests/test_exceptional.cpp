#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "gentle/error.hpp"
#include "gentle/exceptional.hpp"
#include "gentle/random_algebra.hpp"

using namespace gentle;

namespace {

std::vector<int> lengths(const std::vector<ExceptionalCycle>& cs) {
  std::vector<int> out;
  for (const auto& c : cs) out.push_back(c.n());
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::multiset<std::pair<int, int>> orbit_pairs(const AlgebraPtr& a) {
  MouthAnalysis ma(a);
  std::multiset<std::pair<int, int>> out;
  for (const auto& o : ag_invariants(ma)) out.insert({o.n, o.m});
  return out;
}

}  // namespace

TEST_CASE("Serre orbits of mouth objects") {
  CHECK(orbit_pairs(fixture("a2")) == std::multiset<std::pair<int, int>>{{3, 1}});
  CHECK(orbit_pairs(fixture("kronecker")) == std::multiset<std::pair<int, int>>{{1, 1}, {1, 1}});
  CHECK(orbit_pairs(fixture("pent")) == std::multiset<std::pair<int, int>>{{4, 0}});
  CHECK(orbit_pairs(fixture("dual_numbers")) == std::multiset<std::pair<int, int>>{{1, 0}});
}

TEST_CASE("mouth objects skip critical threads") {
  auto p = fixture("pent");
  auto ms = mouth_objects(p);
  CHECK(ms.size() == 4);
  for (const auto& m : ms) CHECK(m.word.trivial());
  MouthAnalysis ma(p);
  for (int i = 0; i < 4; ++i) {
    const SerreTarget& t = ma.serre_target(i);
    CHECK(t.fast_path_agrees);
    CHECK(t.iso_verified);
    CHECK(t.shift == 0);
  }
}

TEST_CASE("classifier on the fixtures") {
  auto a2 = classify_exceptional_cycles(fixture("a2"));
  REQUIRE(a2.size() == 1);
  CHECK(a2[0].n() == 3);
  CHECK(a2[0].shifts == std::vector<int>{1, 1, -1});

  auto k = classify_exceptional_cycles(fixture("kronecker"));
  REQUIRE(k.size() == 2);
  for (const auto& c : k) {
    CHECK(c.n() == 1);
    CHECK(c.calabi_yau == 1);
  }

  auto d = classify_exceptional_cycles(fixture("dual_numbers"));
  REQUIRE(d.size() == 1);
  CHECK(d[0].n() == 1);
  CHECK(d[0].calabi_yau == 0);
  CHECK(std::get<HomotopyString>(d[0].entries[0].word).trivial());

  auto p = classify_exceptional_cycles(fixture("pent"));
  REQUIRE(p.size() == 1);
  CHECK(p[0].n() == 4);
  CHECK(p[0].shifts == std::vector<int>{1, 1, 1, -3});

  for (const char* n : {"a3_hereditary", "a3_relation"})
    CHECK(lengths(classify_exceptional_cycles(fixture(n))) == std::vector<int>{4, 2});
}

TEST_CASE("the field has the cycle (k, k)") {
  auto k = make_algebra_from_text("algebra field\nvertex 1\n");
  auto cs = classify_exceptional_cycles(k);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].n() == 2);
  CHECK(cs[0].certificate.passed());
  CHECK_THROWS_AS(ag_invariants(MouthAnalysis(k)), DomainError);
}

TEST_CASE("verify_cycle rejects non-cycles") {
  auto a = fixture("a2");
  auto s = [&](const char* w) { return CycleEntry{parse_string(*a, w), 0, 1}; };
  ExceptionalCycle c = verify_cycle(a, {s("a"), s("triv:1:-1")});
  CHECK_FALSE(c.certificate.passed());
  ExceptionalCycle one = verify_cycle(a, {s("a")});
  CHECK_FALSE(one.certificate.passed());
}

TEST_CASE("band sphericality") {
  auto k = fixture("kronecker");
  HomotopyBand b = parse_band(*k, "band: beta^-1, alpha");
  for (int mu : {1, 2, -3}) {
    BandVerdict v = check_band_spherical(k, b, mu);
    CHECK(v.spherical);
    CHECK(v.profile.dims == std::map<int, int>{{0, 1}, {1, 1}});
  }
  CHECK_THROWS_AS(check_band_spherical(k, b, 0), DomainError);

  auto p = fixture("pent");
  BandVerdict v = check_band_spherical(p, parse_band(*p, "band: d^-1, e^-1, f^-1, c, b, a"), 1);
  CHECK_FALSE(v.spherical);
  CHECK(v.profile.at(3) >= 1);
}

TEST_CASE("brute force agrees with the classifier") {
  for (const char* n : {"a2", "kronecker", "pent", "dual_numbers"}) {
    auto a = fixture(n);
    auto want = classify_exceptional_cycles(a);
    auto got = brute_force_search(a, default_bounds(*a));
    REQUIRE(got.size() == want.size());
    for (const auto& c : want)
      CHECK(std::any_of(got.begin(), got.end(), [&](const ExceptionalCycle& g) { return cycle_equiv(c, g); }));
  }
  for (const char* n : {"a3_hereditary", "a3_relation"})
    CHECK(lengths(brute_force_search(fixture(n), default_bounds(*fixture(n)))) == std::vector<int>{4, 2});
}

TEST_CASE("cycle equivalence ignores rotation and shifts") {
  auto a = fixture("a2");
  auto c = classify_exceptional_cycles(a)[0];
  ExceptionalCycle r = c;
  std::rotate(r.entries.begin(), r.entries.begin() + 1, r.entries.end());
  for (auto& e : r.entries) e.shift += 5;
  CHECK(cycle_equiv(c, r));
  ExceptionalCycle shorter = c;
  shorter.entries.pop_back();
  CHECK_FALSE(cycle_equiv(c, shorter));
}

TEST_CASE("random algebras") {
  RandomAlgebraOptions opt;
  opt.max_vertices = 4;
  auto corpus = random_corpus(5, 6, opt);
  REQUIRE(corpus.size() == 6);
  CHECK(random_corpus(5, 6, opt)[3]->presentation().arrows.size() == corpus[3]->presentation().arrows.size());
  for (const auto& a : corpus) {
    CHECK(a->vertex_count() <= 4);
    CHECK(a->dimension() <= opt.max_dimension);
    auto walk = aag_cycles(enumerate_threads(*a));
    std::multiset<std::pair<int, int>> want;
    for (const auto& c : walk) want.insert({c.n, c.m});
    CHECK(orbit_pairs(a) == want);
    for (const auto& c : classify_exceptional_cycles(a)) CHECK(c.certificate.passed());
  }
}
