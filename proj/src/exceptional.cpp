#include "gentle/exceptional.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "gentle/error.hpp"

namespace gentle {

void parallel_for(int n, bool parallel, const std::function<void(int)>& f) {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (!parallel || n < 2 || hw < 2) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  auto work = [&] {
    for (int i = next++; i < n; i = next++) {
      try {
        f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < std::min<unsigned>(hw, static_cast<unsigned>(n)); ++k) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::string word_text(const GentleAlgebra& a, const Word& w) {
  if (const auto* s = std::get_if<HomotopyString>(&w)) return format_string(a, *s);
  return format_band(a, std::get<HomotopyBand>(w));
}

// ---------------------------------------------------------------- mouth objects

std::vector<MouthObject> mouth_objects(const AlgebraPtr& a) {
  std::vector<MouthObject> out;
  if (a->is_field()) return out;
  ThreadTables t = enumerate_threads(*a);
  for (size_t f = 0; f < t.forbidden.size(); ++f) {
    if (t.critical[f]) continue;
    MouthObject m;
    m.thread = static_cast<int>(f);
    m.word = string_from_thread(*a, t.forbidden[f]);
    m.complex = unfold_string(a, m.word, 0);
    out.push_back(std::move(m));
  }
  return out;
}

MouthAnalysis::MouthAnalysis(AlgebraPtr a, bool parallel) : alg_(std::move(a)), threads_(enumerate_threads(*alg_)) {
  mouths_ = mouth_objects(alg_);
  int n = static_cast<int>(mouths_.size());
  profiles_.assign(n, std::vector<GradedHomProfile>(n));
  parallel_for(n * n, parallel, [&](int k) {
    int i = k / n, j = k % n;
    profiles_[i][j] = graded_profile(mouths_[i].complex, mouths_[j].complex, Arith::exact);
  });
  // Hom pattern screen: nonzero targets (j, t) are M itself and S(M) only.
  for (int i = 0; i < n; ++i) {
    int targets = 0, self = profiles_[i][i].at(0);
    std::string bad;
    for (int j = 0; j < n; ++j)
      for (auto [t, d] : profiles_[i][j].dims) {
        ++targets;
        if (d > 2 || (d == 2 && !(j == i && t == 0)))
          bad = "dim Hom(M, M'[" + std::to_string(t) + "]) = " + std::to_string(d);
      }
    if (self < 1 || self > 2) bad = "dim End = " + std::to_string(self);
    if (targets > 2 || (self == 2 && targets != 1)) bad = std::to_string(targets) + " nonzero Hom targets";
    if (targets == 1 && self == 1) bad = "no Hom target besides M itself";
    if (!bad.empty()) {
      mouths_[i].flagged = true;
      mouths_[i].flag = bad;
    }
  }
  targets_.resize(n);
  iso_targets_.resize(n);
  parallel_for(n, parallel, [&](int i) {
    const Complex s = serre(mouths_[i].complex);
    Fingerprint fs = fingerprint(s);
    for (int j = 0; j < n; ++j) {
      Fingerprint fj = fingerprint(mouths_[j].complex);
      if (fj.shape != fs.shape) continue;
      int t = fj.top - fs.top;
      if (iso_indecomposable(s, shift(mouths_[j].complex, t))) {
        iso_targets_[i] = std::make_pair(j, t);
        break;
      }
    }
  });
  for (int i = 0; i < n; ++i)
    if (!mouths_[i].flagged) targets_[i] = serre_of_mouth(*this, i);
}

std::optional<std::pair<int, int>> MouthAnalysis::iso_target(int i) const { return iso_targets_[i]; }

const SerreTarget& MouthAnalysis::serre_target(int i) const {
  if (!targets_[i]) throw DomainError("mouth object " + std::to_string(i) + " is flagged: " + mouths_[i].flag);
  return *targets_[i];
}

SerreTarget serre_of_mouth(const MouthAnalysis& ma, int i) {
  const auto& ms = ma.mouths();
  if (ms[i].flagged) throw DomainError("Hom pattern violated for mouth object: " + ms[i].flag);
  SerreTarget st;
  if (ma.profile(i, i).at(0) == 2) {
    st.mouth = i;
    st.shift = 0;
    st.self = true;
  } else {
    int found = 0;
    for (size_t j = 0; j < ms.size(); ++j)
      for (auto [t, d] : ma.profile(i, static_cast<int>(j)).dims) {
        if (static_cast<int>(j) == i && t == 0) continue;
        st.mouth = static_cast<int>(j);
        st.shift = t;
        ++found;
      }
    if (found != 1) throw DomainError("Hom pattern violated: " + std::to_string(found) + " candidate Serre targets");
  }
  // combinatorial prediction: the forbidden thread preceding this one in the walk
  const ThreadTables& t = ma.threads();
  int h = -1;
  for (size_t p = 0; p < t.phi1.size(); ++p)
    if (t.phi1[p] == ms[i].thread) h = static_cast<int>(p);
  int c = -1;
  if (h >= 0)
    for (size_t f = 0; f < t.phi2.size(); ++f)
      if (t.phi2[f] == h) c = static_cast<int>(f);
  st.fast_path_agrees = c >= 0 && ms[st.mouth].thread == c;
  auto it = ma.iso_target(i);
  st.iso_verified = it && it->first == st.mouth && it->second == st.shift;
  return st;
}

std::vector<SerreOrbit> ag_invariants(const MouthAnalysis& ma) {
  if (ma.algebra()->is_field()) throw DomainError("AG invariants are not defined for A = k");
  const auto& ms = ma.mouths();
  int n = static_cast<int>(ms.size());
  std::vector<char> seen(n, 0);
  std::vector<SerreOrbit> out;
  std::vector<AagCycle> walk = aag_cycles(ma.threads());
  for (int i = 0; i < n; ++i) {
    if (seen[i] || ms[i].flagged) continue;
    SerreOrbit o;
    int cur = i, acc = 0;
    o.members.push_back(i);
    o.shifts.push_back(0);
    seen[i] = 1;
    for (int step = 0;; ++step) {
      if (step > n) throw InternalError("Serre orbit does not close");
      const SerreTarget& st = ma.serre_target(cur);
      if (!st.iso_verified) throw InternalError("Serre target of " + format_string(*ma.algebra(), ms[cur].word) +
                                                " is not confirmed by the isomorphism test");
      acc += st.shift;
      cur = st.mouth;
      if (cur == i) break;
      if (seen[cur]) throw InternalError("Serre orbits overlap");
      seen[cur] = 1;
      o.members.push_back(cur);
      o.shifts.push_back(acc);
    }
    o.n = static_cast<int>(o.members.size());
    o.m = acc;
    std::set<int> threads;
    for (int k : o.members) threads.insert(ms[k].thread);
    bool matched = false;
    for (const auto& c : walk) {
      if (std::set<int>(c.forbidden.begin(), c.forbidden.end()) != threads) continue;
      if (c.n != o.n || c.m != o.m)
        throw InternalError("orbit invariant (" + std::to_string(o.n) + "," + std::to_string(o.m) +
                            ") differs from the thread walk (" + std::to_string(c.n) + "," + std::to_string(c.m) + ")");
      matched = true;
    }
    if (!matched) throw InternalError("Serre orbit does not correspond to a cycle of the thread walk");
    out.push_back(std::move(o));
  }
  return out;
}

// ---------------------------------------------------------------- cycles

Complex entry_complex(const AlgebraPtr& a, const CycleEntry& e) {
  Complex c;
  if (const auto* s = std::get_if<HomotopyString>(&e.word))
    c = unfold_string(a, *s, 0);
  else
    c = unfold_band(a, std::get<HomotopyBand>(e.word), 0, e.scalar);
  return shift(c, e.shift);
}

std::optional<int> serre_link(const Complex& x, const Complex& y) {
  Complex s = serre(x);
  if (s.empty() || y.empty()) return std::nullopt;
  Fingerprint fs = fingerprint(s), fy = fingerprint(y);
  if (fs.shape != fy.shape) return std::nullopt;
  int t = fy.top - fs.top;
  if (!iso_indecomposable(s, shift(y, t))) return std::nullopt;
  return t;
}

namespace {

std::string profile_text(const GradedHomProfile& p) {
  std::string s = "{";
  for (auto [k, v] : p.dims) {
    if (s.size() > 1) s += ", ";
    s += std::to_string(k) + ":" + std::to_string(v);
  }
  return s + "}";
}

}  // namespace

ExceptionalCycle verify_cycle(const AlgebraPtr& a, std::vector<CycleEntry> entries) {
  ExceptionalCycle c;
  c.entries = std::move(entries);
  int n = c.n();
  if (n == 0) throw DomainError("empty cycle");
  std::vector<Complex> e;
  for (const auto& x : c.entries) e.push_back(entry_complex(a, x));
  Certificate& cert = c.certificate;
  GradedHomProfile end = graded_profile(e[0], e[0]);
  if (n >= 2) {
    cert.e1 = end.dims == std::map<int, int>{{0, 1}};
    if (!cert.e1) cert.notes.push_back("Hom(E1, E1) profile " + profile_text(end));
    cert.e2 = true;
    for (int i = 0; i < n; ++i) {
      auto t = serre_link(e[i], e[(i + 1) % n]);
      if (!t) {
        cert.e2 = false;
        cert.notes.push_back("S(E" + std::to_string(i + 1) + ") is not a shift of E" + std::to_string((i + 1) % n + 1));
        c.shifts.push_back(0);
      } else {
        c.shifts.push_back(*t);
      }
    }
    cert.e3 = true;
    for (int j = 2; j < n; ++j) {
      GradedHomProfile p = graded_profile(e[0], e[j]);
      if (p.total() != 0) {
        cert.e3 = false;
        cert.notes.push_back("Hom(E1, E" + std::to_string(j + 1) + ") profile " + profile_text(p));
      }
    }
    return c;
  }
  // n = 1: Hom(E, E) ≅ k ⊕ k[-d] and S(E) ≅ E[d]
  std::optional<int> d;
  if (end.dims == std::map<int, int>{{0, 2}})
    d = 0;
  else if (end.dims.size() == 2 && end.at(0) == 1) {
    for (auto [k, v] : end.dims)
      if (k != 0 && v == 1) d = k;
  }
  cert.e1 = d.has_value();
  if (!cert.e1) cert.notes.push_back("Hom(E, E) profile " + profile_text(end));
  auto t = serre_link(e[0], e[0]);
  c.shifts.push_back(t ? *t : 0);
  cert.e2 = t.has_value() && (!d || *t == *d);
  if (!cert.e2) cert.notes.push_back(t ? "S(E) ≅ E[" + std::to_string(*t) + "]" : "S(E) is not a shift of E");
  cert.e3 = true;
  if (cert.passed()) c.calabi_yau = d;
  return c;
}

WordKey entry_key(const CycleEntry& e) {
  if (const auto* s = std::get_if<HomotopyString>(&e.word)) return canonical_string(*s);
  WordKey k{-2};
  for (int x : canonical_band(std::get<HomotopyBand>(e.word))) k.push_back(x);
  k.push_back(static_cast<int>(e.scalar.get_num().get_si()));
  k.push_back(static_cast<int>(e.scalar.get_den().get_si()));
  return k;
}

bool cycle_equiv(const ExceptionalCycle& c1, const ExceptionalCycle& c2) {
  int n = c1.n();
  if (n != c2.n()) return false;
  std::vector<WordKey> k1, k2;
  for (const auto& e : c1.entries) k1.push_back(entry_key(e));
  for (const auto& e : c2.entries) k2.push_back(entry_key(e));
  for (int s = 0; s < n; ++s) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = k1[(i + s) % n] == k2[i];
    if (ok) return true;
  }
  return false;
}

std::vector<ExceptionalCycle> classify_exceptional_cycles(const AlgebraPtr& a, bool parallel) {
  std::vector<ExceptionalCycle> out;
  if (a->is_field()) {
    CycleEntry e{make_trivial_string(*a, 0, 1), 0, 1};
    out.push_back(verify_cycle(a, {e, e}));
  } else if (a->underlying_graph_is_a3()) {
    return brute_force_search(a, default_bounds(*a), parallel);
  } else {
    MouthAnalysis ma(a, parallel);
    for (const SerreOrbit& o : ag_invariants(ma)) {
      std::vector<CycleEntry> entries;
      // τ^k X = S^k(X)[-k]
      for (int k = 0; k < o.n; ++k)
        entries.push_back({ma.mouths()[o.members[k]].word, o.shifts[k] - k, 1});
      out.push_back(verify_cycle(a, std::move(entries)));
      const ExceptionalCycle& c = out.back();
      if (o.n >= 2) {
        std::vector<int> expect(o.n, 1);
        expect.back() = o.m - o.n + 1;
        if (c.certificate.e2 && c.shifts != expect) throw InternalError("cycle shifts differ from the orbit invariant");
      } else if (c.calabi_yau && *c.calabi_yau != o.m) {
        throw InternalError("Calabi-Yau dimension differs from the orbit invariant");
      }
      if (!c.certificate.passed()) {
        std::string why;
        for (const auto& s : c.certificate.notes) why += "; " + s;
        throw InternalError("exceptional cycle certificate failed" + why);
      }
    }
  }
  return out;
}

BandVerdict check_band_spherical(const AlgebraPtr& a, const HomotopyBand& w, const Rational& mu) {
  if (sgn(mu) == 0) throw DomainError("band scalar must be nonzero");
  Complex e = unfold_band(a, w, 0, mu);
  BandVerdict v;
  v.profile = graded_profile(e, e);
  v.spherical = v.profile.dims == std::map<int, int>{{0, 1}, {1, 1}};
  return v;
}

}  // namespace gentle
