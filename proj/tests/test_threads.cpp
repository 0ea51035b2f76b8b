#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "gentle/threads.hpp"

using namespace gentle;

namespace {

std::multiset<std::pair<int, int>> walk(const std::string& name) {
  std::multiset<std::pair<int, int>> out;
  for (const auto& c : aag_cycles(enumerate_threads(*fixture(name)))) out.insert({c.n, c.m});
  return out;
}

std::set<std::string> names(const GentleAlgebra& a, const std::vector<Thread>& ts) {
  std::set<std::string> out;
  for (const auto& t : ts) out.insert(thread_name(a, t));
  return out;
}

}  // namespace

TEST_CASE("thread tables of the fixtures") {
  auto k = fixture("kronecker");
  ThreadTables t = enumerate_threads(*k);
  CHECK(names(*k, t.permitted) == std::set<std::string>{"alpha", "beta"});
  CHECK(names(*k, t.forbidden) == std::set<std::string>{"alpha", "beta"});

  auto a3 = fixture("a3_hereditary");
  t = enumerate_threads(*a3);
  CHECK(names(*a3, t.permitted) == std::set<std::string>{"b*a", "1_1", "1_2", "1_3"});
  CHECK(names(*a3, t.forbidden) == std::set<std::string>{"a", "b", "1_1", "1_3"});

  auto r = fixture("a3_relation");
  t = enumerate_threads(*r);
  CHECK(names(*r, t.forbidden) == std::set<std::string>{"b*a", "1_1", "1_2", "1_3"});
}

TEST_CASE("walk invariants") {
  CHECK(walk("a2") == std::multiset<std::pair<int, int>>{{3, 1}});
  CHECK(walk("kronecker") == std::multiset<std::pair<int, int>>{{1, 1}, {1, 1}});
  CHECK(walk("pent") == std::multiset<std::pair<int, int>>{{4, 0}});
  CHECK(walk("dual_numbers") == std::multiset<std::pair<int, int>>{{1, 0}});
  CHECK(walk("a3_hereditary") == std::multiset<std::pair<int, int>>{{4, 2}});
  CHECK(walk("a3_relation") == std::multiset<std::pair<int, int>>{{4, 2}});
}

TEST_CASE("critical cycles") {
  auto d = fixture("dual_numbers");
  CHECK(detect_critical_cycles(*d) == std::vector<std::vector<int>>{{0}});
  ThreadTables t = enumerate_threads(*d);
  int critical = static_cast<int>(std::count(t.critical.begin(), t.critical.end(), true));
  CHECK(critical == 1);

  auto p = fixture("pent");
  CHECK(detect_critical_cycles(*p).size() == 2);
  t = enumerate_threads(*p);
  CHECK(std::count(t.critical.begin(), t.critical.end(), true) == 6);
  CHECK(t.permitted.size() == 4);

  CHECK(detect_critical_cycles(*fixture("kronecker")).empty());
}

TEST_CASE("phi maps are bijections onto non-critical threads") {
  for (const char* n : {"dual_numbers", "kronecker", "a2", "a3_hereditary", "a3_relation", "pent"}) {
    auto a = fixture(n);
    ThreadTables t = enumerate_threads(*a);
    std::set<int> img1, img2;
    for (int w : t.phi1) {
      REQUIRE(w >= 0);
      CHECK_FALSE(t.critical[w]);
      img1.insert(w);
    }
    for (size_t w = 0; w < t.phi2.size(); ++w) {
      if (t.critical[w]) {
        CHECK(t.phi2[w] < 0);
        continue;
      }
      // start vertex shared, s' opposite
      const Thread& v = t.permitted[t.phi2[w]];
      CHECK(v.start == t.forbidden[w].start);
      CHECK(v.s_sign == -t.forbidden[w].s_sign);
      img2.insert(t.phi2[w]);
    }
    CHECK(img1.size() == t.permitted.size());
    CHECK(img2.size() == t.permitted.size());
  }
}

TEST_CASE("walk is independent of the sign assignment") {
  for (const char* n : {"kronecker", "a2", "a3_relation", "pent"}) {
    auto a = fixture(n);
    std::multiset<std::pair<int, int>> base = walk(n);
    for (const auto& s : enumerate_sign_assignments(*a)) {
      std::multiset<std::pair<int, int>> got;
      for (const auto& c : aag_cycles(enumerate_threads(a->with_signs(s)))) got.insert({c.n, c.m});
      CHECK(got == base);
    }
  }
}
