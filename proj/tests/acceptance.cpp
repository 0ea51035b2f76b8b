// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gentle/alp.hpp"
#include "gentle/error.hpp"
#include "gentle/exceptional.hpp"
#include "gentle/hom.hpp"
#include "gentle/random_algebra.hpp"
#include "gentle/report.hpp"

using namespace gentle;

namespace {

constexpr std::uint64_t kSeed = 20261019;

AlgebraPtr fixture(const std::string& name) {
  return make_algebra(load_presentation(std::string(GENTLE_FIXTURES) + "/" + name + ".gentle"));
}

struct Tally {
  long checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 20) failures.push_back(what);
    if (!ok && failures.size() == 20) failures.push_back("...");
  }
};

using Pairs = std::multiset<std::pair<int, int>>;

Pairs walk_pairs(const GentleAlgebra& a) {
  Pairs p;
  for (const auto& c : aag_cycles(enumerate_threads(a))) p.insert({c.n, c.m});
  return p;
}

std::string pairs_text(const Pairs& p) {
  std::string s = "{";
  for (auto [n, m] : p) s += (s.size() > 1 ? " (" : "(") + std::to_string(n) + "," + std::to_string(m) + ")";
  return s + "}";
}

std::string name_of(const AlgebraPtr& a) { return a->presentation().name; }

// The criteria share one corpus: five fixtures and fifty random algebras.
std::vector<AlgebraPtr> table_corpus() {
  std::vector<AlgebraPtr> out;
  for (const char* n : {"a2", "kronecker", "a3_hereditary", "a3_relation", "pent"}) out.push_back(fixture(n));
  RandomAlgebraOptions opt;
  opt.max_vertices = 6;
  for (auto& a : random_corpus(kSeed, 50, opt)) out.push_back(a);
  return out;
}

// 1. Hom between mouth objects follows the 2/1/0 table.
void hom_table(const std::vector<AlgebraPtr>& corpus, Tally& t) {
  for (const auto& a : corpus) {
    MouthAnalysis ma(a);
    const auto& ms = ma.mouths();
    int n = static_cast<int>(ms.size());
    for (int i = 0; i < n; ++i) {
      auto target = ma.iso_target(i);
      t.expect(target.has_value(), name_of(a) + ": S(M) is not a shifted mouth object");
      if (!target) continue;
      const SerreTarget& st = ma.serre_target(i);
      t.expect(st.mouth == target->first && st.shift == target->second,
               name_of(a) + ": serre_of_mouth disagrees with the isomorphism test");
      for (int j = 0; j < n; ++j) {
        HomComplex h(ms[i].complex, ms[j].complex);
        GradedHomProfile p = graded_profile(ms[i].complex, ms[j].complex);
        bool s_seen = false;
        for (int s = h.window_lo(); s <= h.window_hi(); ++s) {
          // M_j[s] ≅ M_i only for j = i, s = 0: distinct forbidden threads give non-isomorphic complexes
          int is_m = (i == j && s == 0) ? 1 : 0;
          int is_s = (target->first == j && target->second == s) ? 1 : 0;
          s_seen = s_seen || is_s;
          int predicted = is_m + is_s;
          int oracle = p.at(s);
          t.expect(oracle == predicted, name_of(a) + ": Hom(" + format_string(*a, ms[i].word) + ", " +
                                            format_string(*a, ms[j].word) + "[" + std::to_string(s) +
                                            "]) = " + std::to_string(oracle) + ", table " + std::to_string(predicted));
        }
        if (target->first == j) t.expect(s_seen, name_of(a) + ": Serre target outside the Hom window");
      }
    }
  }
}

// 2. Combinatorial basis between thread complexes.
void alp_counts(const std::vector<AlgebraPtr>& corpus, Tally& t) {
  for (const auto& a : corpus) {
    ThreadTables th = enumerate_threads(*a);
    std::vector<Complex> cs;
    std::vector<bool> forbidden;
    for (const auto& x : th.permitted) {
      cs.push_back(unfold_string(a, string_from_thread(*a, x), 0));
      forbidden.push_back(false);
    }
    for (const auto& x : th.forbidden) {
      cs.push_back(unfold_string(a, string_from_thread(*a, x), 0));
      forbidden.push_back(true);
    }
    for (size_t i = 0; i < cs.size(); ++i)
      for (size_t j = 0; j < cs.size(); ++j)
        for (int s = -2; s <= 2; ++s) {
          Complex y = shift(cs[j], s);
          int dim = chain_map_dim(cs[i], y);
          std::vector<CombMap> single = single_maps(cs[i], y), dbl = double_maps(cs[i], y), graph = graph_maps(cs[i], y);
          int count = static_cast<int>(single.size() + dbl.size() + graph.size());
          t.expect(count == dim, name_of(a) + ": " + std::to_string(count) + " combinatorial maps, dimension " +
                                     std::to_string(dim));
          try {
            alp_basis(cs[i], y);
            ++t.checks;
          } catch (const Error& e) {
            t.expect(false, name_of(a) + ": " + e.what());
          }
          if (forbidden[i] && forbidden[j])
            t.expect(graph.size() <= 1, name_of(a) + ": " + std::to_string(graph.size()) +
                                            " graph maps between forbidden threads");
        }
  }
}

// 3. Dual numbers.
void dual_numbers(Tally& t) {
  auto a = fixture("dual_numbers");
  MouthAnalysis ma(a);
  Pairs got;
  for (const auto& o : ag_invariants(ma)) got.insert({o.n, o.m});
  t.expect(got == Pairs{{1, 0}}, "AG invariants " + pairs_text(got));

  auto cycles = classify_exceptional_cycles(a);
  t.expect(cycles.size() == 1, std::to_string(cycles.size()) + " cycles");
  for (const auto& c : cycles) {
    t.expect(c.n() == 1, "cycle of length " + std::to_string(c.n()));
    const auto* w = std::get_if<HomotopyString>(&c.entries[0].word);
    t.expect(w && w->trivial(), "1-cycle is not the stalk A");
    t.expect(c.certificate.passed() && c.calabi_yau == 0, "stalk A is not 0-Calabi-Yau");
  }
  // every shift of A is a 1-cycle, and the search sees nothing else
  for (int s : {-2, 1, 3}) {
    ExceptionalCycle c = verify_cycle(a, {{make_trivial_string(*a, 0, 1), s, 1}});
    t.expect(c.certificate.passed(), "A[" + std::to_string(s) + "] fails the certificate");
  }
  auto found = brute_force_search(a, default_bounds(*a));
  t.expect(found.size() == 1 && found[0].n() == 1, "search finds cycles besides the stalk");

  // f: X_l -> X_l[1] with identity components; signs (-1)^i make it a chain map for our shift convention
  for (int l = 1; l <= 3; ++l) {
    std::string expr;
    for (int k = 0; k < l; ++k) expr += (k ? ", x" : "x");
    Complex x = unfold_string(a, parse_string(*a, expr), 0);
    t.expect(x.lo() == -l && x.hi() == 0, "X_" + std::to_string(l) + " has the wrong degrees");
    HomComplex h(x, x);
    std::vector<std::vector<Matrix<Rational>>> maps;
    for (int i = x.lo(); i <= x.hi(); ++i) {
      int rows = x.dim(i + 1, 0), cols = x.dim(i, 0);
      Matrix<Rational> m(rows, cols);
      if (rows == cols)
        for (int r = 0; r < rows; ++r) m(r, r) = (i % 2 == 0) ? 1 : -1;
      maps.push_back({m});
    }
    std::vector<Rational> f = h.coordinates(1, maps);
    std::vector<Rational> df = mat_vec(h.delta<Rational>(1), f);
    bool cycle = std::all_of(df.begin(), df.end(), [](const Rational& q) { return sgn(q) == 0; });
    t.expect(cycle, "f is not a chain map on X_" + std::to_string(l));
    t.expect(!is_null_homotopic(x, x, 1, f), "f is null-homotopic on X_" + std::to_string(l));
    t.expect(graded_profile(x, x).at(1) >= 1, "Hom(X_l, X_l[1]) vanishes");
  }
}

// 4. Bands at the mouth of homogeneous tubes.
void bands(Tally& t) {
  auto k = fixture("kronecker");
  HomotopyBand w = parse_band(*k, "band: beta^-1, alpha");
  for (int mu : {1, 2, -3}) {
    BandVerdict v = check_band_spherical(k, w, mu);
    t.expect(v.spherical && v.profile.dims == std::map<int, int>{{0, 1}, {1, 1}},
             "Kronecker band with scalar " + std::to_string(mu));
    ExceptionalCycle c = verify_cycle(k, {{w, 0, mu}});
    t.expect(c.certificate.passed() && c.calabi_yau == 1, "Kronecker band certificate, scalar " + std::to_string(mu));
  }
  auto p = fixture("pent");
  BandVerdict v = check_band_spherical(p, parse_band(*p, "band: d^-1, e^-1, f^-1, c, b, a"), 1);
  t.expect(!v.spherical, "pent band certified spherical");
  t.expect(v.profile.at(3) >= 1, "pent band has no self-maps in degree 3");
}

bool same_classes(const std::vector<ExceptionalCycle>& x, const std::vector<ExceptionalCycle>& y) {
  if (x.size() != y.size()) return false;
  std::vector<char> used(y.size(), 0);
  for (const auto& c : x) {
    bool found = false;
    for (size_t j = 0; j < y.size() && !found; ++j)
      if (!used[j] && cycle_equiv(c, y[j])) found = used[j] = 1;
    if (!found) return false;
  }
  return true;
}

// 5. Classifier against brute force.
void brute_force(Tally& t) {
  std::vector<AlgebraPtr> corpus{fixture("pent")};
  RandomAlgebraOptions opt;
  opt.max_vertices = 5;
  opt.exclude_a3 = true;
  for (auto& a : random_corpus(kSeed, 10, opt)) corpus.push_back(a);
  for (const auto& a : corpus) {
    auto want = classify_exceptional_cycles(a);
    auto got = brute_force_search(a, default_bounds(*a));
    t.expect(same_classes(want, got), name_of(a) + ": classifier " + std::to_string(want.size()) + " classes, search " +
                                          std::to_string(got.size()));
  }
  for (const char* n : {"a3_relation", "a3_hereditary"}) {
    auto a = fixture(n);
    auto got = brute_force_search(a, default_bounds(*a));
    std::vector<int> lens;
    for (const auto& c : got) lens.push_back(c.n());
    std::sort(lens.rbegin(), lens.rend());
    t.expect(lens == std::vector<int>{4, 2}, std::string(n) + ": search finds lengths other than 4 and 2");
  }
}

// 6. Serre orbits against the thread walk.
void aag(const std::vector<AlgebraPtr>& corpus, Tally& t) {
  std::vector<AlgebraPtr> all = corpus;
  all.push_back(fixture("dual_numbers"));
  RandomAlgebraOptions opt;
  opt.max_vertices = 5;
  opt.exclude_a3 = true;
  for (auto& a : random_corpus(kSeed, 10, opt)) all.push_back(a);
  std::map<std::string, Pairs> scanned;
  for (const auto& a : all) {
    MouthAnalysis ma(a);
    Pairs got;
    for (const auto& o : ag_invariants(ma)) got.insert({o.n, o.m});
    Pairs want = walk_pairs(*a);
    t.expect(got == want, name_of(a) + ": orbits " + pairs_text(got) + ", walk " + pairs_text(want));
    scanned[name_of(a)] = got;
  }
  t.expect(scanned["a2"] == Pairs{{3, 1}}, "a2 " + pairs_text(scanned["a2"]));
  t.expect(scanned["kronecker"] == Pairs{{1, 1}, {1, 1}}, "kronecker " + pairs_text(scanned["kronecker"]));
  t.expect(scanned["pent"] == Pairs{{4, 0}}, "pent " + pairs_text(scanned["pent"]));
}

// 7. Mouth objects in different orbits are Hom-orthogonal in every degree.
void orthogonality(const std::vector<AlgebraPtr>& corpus, Tally& t) {
  for (const auto& a : corpus) {
    MouthAnalysis ma(a);
    auto orbits = ag_invariants(ma);
    std::map<int, int> orbit_of;
    for (size_t k = 0; k < orbits.size(); ++k)
      for (int i : orbits[k].members) orbit_of[i] = static_cast<int>(k);
    int n = static_cast<int>(ma.mouths().size());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (orbit_of.at(i) == orbit_of.at(j)) continue;
        GradedHomProfile p = graded_profile(ma.mouths()[i].complex, ma.mouths()[j].complex);
        t.expect(p.total() == 0, name_of(a) + ": mouth objects in different orbits are not orthogonal");
      }
  }
}

// 8. Robustness.
void robustness(const std::vector<AlgebraPtr>& corpus, Tally& t) {
  std::vector<AlgebraPtr> small(corpus.begin(), corpus.begin() + 15);
  small.push_back(fixture("dual_numbers"));
  for (const auto& a : small) {
    // sign-assignment independence
    auto threads_of = [](const GentleAlgebra& x) {
      ThreadTables th = enumerate_threads(x);
      std::multiset<std::string> s;
      for (const auto& p : th.permitted) s.insert("p " + thread_name(x, p));
      for (size_t w = 0; w < th.forbidden.size(); ++w)
        s.insert((th.critical[w] ? "c " : "f ") + thread_name(x, th.forbidden[w]));
      return s;
    };
    auto base_threads = threads_of(*a);
    auto base_walk = walk_pairs(*a);
    auto base_cycles = classify_exceptional_cycles(a);
    auto assignments = enumerate_sign_assignments(*a);
    for (size_t k = 1; k < assignments.size() && k < 8; ++k) {
      auto b = std::make_shared<const GentleAlgebra>(a->with_signs(assignments[k]));
      t.expect(threads_of(*b) == base_threads, name_of(a) + ": threads depend on the sign assignment");
      t.expect(walk_pairs(*b) == base_walk, name_of(a) + ": walk depends on the sign assignment");
      if (!a->is_field()) {
        MouthAnalysis ma(b);
        Pairs got;
        for (const auto& o : ag_invariants(ma)) got.insert({o.n, o.m});
        t.expect(got == base_walk, name_of(a) + ": AG invariants depend on the sign assignment");
      }
      t.expect(same_classes(classify_exceptional_cycles(b), base_cycles),
               name_of(a) + ": cycles depend on the sign assignment");
    }

    auto words = enumerate_strings(*a, 3);
    std::vector<Complex> cs;
    for (const auto& w : words) cs.push_back(unfold_string(a, w, 0));
    for (size_t i = 0; i < cs.size(); ++i) {
      // d² = 0 for the complexes built along the way
      t.expect(check_complex(cs[i]).empty(), name_of(a) + ": d^2 != 0 on " + format_string(*a, words[i]));
      t.expect(check_complex(shift(cs[i], 3)).empty(), name_of(a) + ": d^2 != 0 after shifting");
      Complex nu = nakayama_on_projectives(cs[i]);
      Complex rep = perfect_replacement(nu);
      t.expect(check_complex(nu).empty() && check_complex(rep).empty(), name_of(a) + ": d^2 != 0 under Nakayama");
      t.expect(cohomology_dims(rep) == cohomology_dims(nu),
               name_of(a) + ": replacement changes cohomology of " + format_string(*a, words[i]));
      t.expect(check_complex(minimize(rep)).empty(), name_of(a) + ": d^2 != 0 after minimizing");
    }
    // shift equivariance of Hom
    for (size_t i = 0; i < cs.size(); i += 2)
      for (size_t j = 0; j < cs.size(); j += 3)
        for (int n = -1; n <= 1; ++n) {
          int base = hom_k_dim(cs[i], cs[j], n);
          for (int s : {-2, 1})
            t.expect(hom_k_dim(shift(cs[i], s), shift(cs[j], s), n) == base,
                     name_of(a) + ": Hom is not shift-equivariant");
          t.expect(hom_k_dim(cs[i], shift(cs[j], n), 0) == base, name_of(a) + ": Hom(X, Y[n]) differs from degree n");
        }
  }
  // byte-identical reruns, sequential and parallel
  for (const char* n : {"a2", "kronecker", "a3_relation", "pent", "dual_numbers"}) {
    auto a = fixture(n);
    report::Options seq{true, false}, par{true, true};
    std::vector<std::function<std::string(const report::Options&)>> runs{
        [&](const report::Options& o) { return report::threads(a, o); },
        [&](const report::Options& o) { return report::cycles(a, true, o); },
        [&](const report::Options& o) { return report::search(a, std::nullopt, std::nullopt, o); },
    };
    if (!a->is_field()) runs.push_back([&](const report::Options& o) { return report::ag(a, o, false); });
    for (const auto& run : runs) {
      std::string first = run(seq);
      t.expect(run(seq) == first && run(par) == first, std::string(n) + ": output differs between runs");
    }
  }
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  auto corpus = table_corpus();
  struct Criterion {
    int id;
    const char* title;
    std::function<void(Tally&)> run;
  };
  std::vector<Criterion> criteria{
      {1, "Hom table between mouth objects", [&](Tally& t) { hom_table(corpus, t); }},
      {2, "combinatorial basis of chain maps", [&](Tally& t) { alp_counts(corpus, t); }},
      {3, "dual numbers", [&](Tally& t) { dual_numbers(t); }},
      {4, "band complexes at the mouth", [&](Tally& t) { bands(t); }},
      {5, "classifier against brute force", [&](Tally& t) { brute_force(t); }},
      {6, "Serre orbits against the thread walk", [&](Tally& t) { aag(corpus, t); }},
      {7, "orthogonality of different orbits", [&](Tally& t) { orthogonality(corpus, t); }},
      {8, "robustness invariants", [&](Tally& t) { robustness(corpus, t); }},
  };
  int failed = 0;
  auto start = clock::now();
  for (const auto& c : criteria) {
    Tally t;
    auto t0 = clock::now();
    try {
      c.run(t);
    } catch (const std::exception& e) {
      t.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(clock::now() - t0).count();
    bool ok = t.failures.empty();
    failed += !ok;
    std::printf("criterion %d %s  %s (%ld checks, %.1f s)\n", c.id, ok ? "PASS" : "FAIL", c.title, t.checks, secs);
    for (const auto& f : t.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed in %.1f s\n", static_cast<int>(criteria.size()) - failed, criteria.size(),
              std::chrono::duration<double>(clock::now() - start).count());
  return failed ? 1 : 0;
}
