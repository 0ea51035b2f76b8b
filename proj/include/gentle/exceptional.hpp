#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gentle/complexes.hpp"
#include "gentle/hom.hpp"
#include "gentle/threads.hpp"

namespace gentle {

struct MouthObject {
  int thread = 0;  // index into ThreadTables::forbidden
  HomotopyString word;
  Complex complex;  // base shift 0
  bool flagged = false;
  std::string flag;
};

struct SerreTarget {
  int mouth = 0;  // index into the mouth list
  int shift = 0;  // S(M) ≅ target[shift]
  bool self = false;  // dim End(M) = 2 and S(M) ≅ M
  bool fast_path_agrees = false;
  bool iso_verified = false;
};

struct SerreOrbit {
  std::vector<int> members;  // mouth indices, M, S(M), S^2(M), ...
  std::vector<int> shifts;   // accumulated: S^k(M) ≅ member_k[shifts[k]]
  int n = 0;
  int m = 0;
};

// Mouth objects, their pairwise graded Hom profiles and Serre targets, computed once.
class MouthAnalysis {
 public:
  explicit MouthAnalysis(AlgebraPtr a, bool parallel = false);

  const AlgebraPtr& algebra() const { return alg_; }
  const ThreadTables& threads() const { return threads_; }
  const std::vector<MouthObject>& mouths() const { return mouths_; }
  const GradedHomProfile& profile(int i, int j) const { return profiles_[i][j]; }
  // Throws DomainError for flagged objects.
  const SerreTarget& serre_target(int i) const;
  // Target found by testing S(M) for isomorphism against shifted mouth objects only.
  std::optional<std::pair<int, int>> iso_target(int i) const;

 private:
  AlgebraPtr alg_;
  ThreadTables threads_;
  std::vector<MouthObject> mouths_;
  std::vector<std::vector<GradedHomProfile>> profiles_;
  std::vector<std::optional<SerreTarget>> targets_;
  std::vector<std::optional<std::pair<int, int>>> iso_targets_;
};

std::vector<MouthObject> mouth_objects(const AlgebraPtr& a);
SerreTarget serre_of_mouth(const MouthAnalysis& m, int mouth);
// Serre orbits of unflagged mouth objects; each (n, m) is checked against the walk on threads.
std::vector<SerreOrbit> ag_invariants(const MouthAnalysis& m);

struct CycleEntry {
  Word word;
  int shift = 0;
  Rational scalar = 1;  // bands only
};

struct Certificate {
  bool e1 = false;
  bool e2 = false;
  bool e3 = false;
  std::vector<std::string> notes;
  bool passed() const { return e1 && e2 && e3; }
};

struct ExceptionalCycle {
  std::vector<CycleEntry> entries;
  std::vector<int> shifts;  // m_i with S(E_i) ≅ E_{i+1}[m_i]
  Certificate certificate;
  std::optional<int> calabi_yau;
  int n() const { return static_cast<int>(entries.size()); }
};

Complex entry_complex(const AlgebraPtr& a, const CycleEntry& e);
// Fills shifts, certificate and calabi_yau.
ExceptionalCycle verify_cycle(const AlgebraPtr& a, std::vector<CycleEntry> entries);
// S(X) ≅ Y[t] for some t; returns t.
std::optional<int> serre_link(const Complex& x, const Complex& y);

std::vector<ExceptionalCycle> classify_exceptional_cycles(const AlgebraPtr& a, bool parallel = false);

struct BandVerdict {
  bool spherical = false;
  GradedHomProfile profile;
};
BandVerdict check_band_spherical(const AlgebraPtr& a, const HomotopyBand& w, const Rational& mu);

struct SearchBounds {
  int max_letters = 0;
  int shift_window = 0;
};
SearchBounds default_bounds(const GentleAlgebra& a);

struct SearchStats {
  int strings = 0;
  int euler_survivors = 0;
  int exceptional_objects = 0;
  int spherical_candidates = 0;
};

std::vector<ExceptionalCycle> brute_force_search(const AlgebraPtr& a, SearchBounds bounds, bool parallel = false,
                                                 SearchStats* stats = nullptr);

bool cycle_equiv(const ExceptionalCycle& c1, const ExceptionalCycle& c2);
WordKey entry_key(const CycleEntry& e);

std::string word_text(const GentleAlgebra& a, const Word& w);

// Runs f(i) for i in [0, n), on several threads when parallel is set.
void parallel_for(int n, bool parallel, const std::function<void(int)>& f);

}  // namespace gentle
