#pragma once

#include <string>
#include <vector>

#include "gentle/presentation.hpp"

namespace gentle {

enum class ThreadKind { permitted, forbidden };

struct Thread {
  ThreadKind kind = ThreadKind::permitted;
  std::vector<int> arrows;  // application order, empty when trivial
  int vertex = -1;          // trivial threads only
  int start = 0;
  int end = 0;
  int s_sign = 1;
  int e_sign = 1;

  bool trivial() const { return arrows.empty(); }
  int length() const { return static_cast<int>(arrows.size()); }
  friend bool operator==(const Thread& a, const Thread& b) {
    return a.kind == b.kind && a.arrows == b.arrows && a.vertex == b.vertex;
  }
};

struct ThreadTables {
  std::vector<Thread> permitted;
  std::vector<Thread> forbidden;
  std::vector<int> phi1;  // permitted index -> forbidden index, -1 if undefined
  std::vector<int> phi2;  // forbidden index -> permitted index, -1 if undefined
  std::vector<bool> critical;  // per forbidden thread
};

struct AagCycle {
  int n = 0;
  int m = 0;
  std::vector<int> permitted;  // H_0, H_1, ... in walk order
  std::vector<int> forbidden;  // Phi1(H_i)
};

ThreadTables enumerate_threads(const GentleAlgebra& a);

// Cycles of arrows with every cyclically consecutive pair in I, in application order,
// each rotated to start at its least arrow index.
std::vector<std::vector<int>> detect_critical_cycles(const GentleAlgebra& a);

std::vector<AagCycle> aag_cycles(const ThreadTables& t);

std::string thread_name(const GentleAlgebra& a, const Thread& t);
// The thread as a word in the word syntax (a single letter for permitted threads).
std::string thread_word(const GentleAlgebra& a, const Thread& t);

}  // namespace gentle
