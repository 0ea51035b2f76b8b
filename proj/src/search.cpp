#include <algorithm>
#include <map>

#include "gentle/error.hpp"
#include "gentle/exceptional.hpp"

namespace gentle {

SearchBounds default_bounds(const GentleAlgebra& a) {
  ThreadTables t = enumerate_threads(a);
  int longest = 0;
  for (const auto& x : t.permitted) longest = std::max(longest, x.length());
  for (const auto& x : t.forbidden) longest = std::max(longest, x.length());
  SearchBounds b;
  b.max_letters = std::max(1, 2 * a.arrow_count());
  b.shift_window = a.arrow_count() + longest + 2;
  return b;
}

namespace {

struct Candidate {
  HomotopyString word;
  Complex complex;
  GradedHomProfile end;
  bool exceptional = false;  // Hom(X, X) ≅ k
  bool spherical = false;    // Hom(X, X) ≅ k ⊕ k[-d]
  Fingerprint fp;
  int succ = -1;
  int succ_shift = 0;
};

}  // namespace

std::vector<ExceptionalCycle> brute_force_search(const AlgebraPtr& a, SearchBounds bounds, bool parallel,
                                                 SearchStats* stats) {
  if (bounds.max_letters < 1 || bounds.shift_window < 1) throw DomainError("search bounds must be positive");
  std::vector<HomotopyString> words = enumerate_strings(*a, bounds.max_letters);
  int nw = static_cast<int>(words.size());
  std::vector<Candidate> all(nw);
  std::vector<char> keep(nw, 0);
  std::vector<char> euler(nw, 0);
  parallel_for(nw, parallel, [&](int i) {
    Candidate& c = all[i];
    c.word = words[i];
    c.complex = unfold_string(a, c.word, 0);
    // χ(End) = dim Hom^0 - dim Hom^1 + ... must be 1 or 1 ± 1
    int chi = euler_characteristic(c.complex, c.complex);
    if (chi < 0 || chi > 2) return;
    euler[i] = 1;
    GradedHomProfile fast = graded_profile(c.complex, c.complex, Arith::modular);
    if (fast.total() > 2 || fast.at(0) < 1) return;
    c.end = graded_profile(c.complex, c.complex, Arith::exact);
    c.exceptional = c.end.dims == std::map<int, int>{{0, 1}};
    c.spherical = c.end.dims == std::map<int, int>{{0, 2}} || (c.end.dims.size() == 2 && c.end.at(0) == 1 && c.end.total() == 2);
    if (!c.exceptional && !c.spherical) return;
    c.fp = fingerprint(c.complex);
    keep[i] = 1;
  });
  std::vector<Candidate> cands;
  for (int i = 0; i < nw; ++i)
    if (keep[i]) cands.push_back(std::move(all[i]));
  if (stats) {
    stats->strings = nw;
    stats->euler_survivors = static_cast<int>(std::count(euler.begin(), euler.end(), 1));
    stats->exceptional_objects = 0;
    stats->spherical_candidates = 0;
    for (const auto& c : cands) (c.exceptional ? stats->exceptional_objects : stats->spherical_candidates)++;
  }
  std::map<std::vector<std::pair<int, int>>, std::vector<int>> by_shape;
  for (size_t i = 0; i < cands.size(); ++i) by_shape[cands[i].fp.shape].push_back(static_cast<int>(i));
  int nc = static_cast<int>(cands.size());
  parallel_for(nc, parallel, [&](int i) {
    Candidate& c = cands[i];
    Complex s = serre(c.complex);
    Fingerprint fs = fingerprint(s);
    auto it = by_shape.find(fs.shape);
    if (it == by_shape.end()) return;
    for (int j : it->second) {
      if (cands[j].exceptional != c.exceptional) continue;
      int t = cands[j].fp.top - fs.top;
      if (std::abs(t) > bounds.shift_window) continue;
      if (iso_indecomposable(s, shift(cands[j].complex, t))) {
        c.succ = j;
        c.succ_shift = t;
        return;
      }
    }
  });

  std::vector<ExceptionalCycle> out;
  auto keyed = [&](int i) { return canonical_string(cands[i].word); };
  // 1-cycles
  for (int i = 0; i < nc; ++i)
    if (cands[i].spherical && cands[i].succ == i) {
      ExceptionalCycle c = verify_cycle(a, {{cands[i].word, 0, 1}});
      if (c.certificate.passed()) out.push_back(std::move(c));
    }
  // cycles of the successor map among exceptional objects
  std::vector<int> state(nc, 0);  // 0 new, 1 on the current path, 2 done
  for (int i = 0; i < nc; ++i) {
    if (!cands[i].exceptional || state[i]) continue;
    std::vector<int> path;
    int cur = i;
    while (cur >= 0 && state[cur] == 0) {
      state[cur] = 1;
      path.push_back(cur);
      cur = cands[cur].succ;
    }
    if (cur >= 0 && state[cur] == 1) {
      auto start = std::find(path.begin(), path.end(), cur);
      std::vector<int> cyc(start, path.end());
      if (cyc.size() >= 2) {
        auto least = std::min_element(cyc.begin(), cyc.end(), [&](int x, int y) { return keyed(x) < keyed(y); });
        std::rotate(cyc.begin(), least, cyc.end());
        std::vector<CycleEntry> entries;
        for (int k : cyc) entries.push_back({cands[k].word, 0, 1});
        ExceptionalCycle c = verify_cycle(a, std::move(entries));
        if (c.certificate.passed()) out.push_back(std::move(c));
      }
    }
    for (int k : path) state[k] = 2;
  }
  std::sort(out.begin(), out.end(), [](const ExceptionalCycle& x, const ExceptionalCycle& y) {
    if (x.n() != y.n()) return x.n() > y.n();
    return entry_key(x.entries[0]) < entry_key(y.entries[0]);
  });
  return out;
}

}  // namespace gentle
