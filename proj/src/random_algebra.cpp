#include "gentle/random_algebra.hpp"

#include <string>

#include "gentle/error.hpp"

namespace gentle {

namespace {

int pick(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Presentation draw(std::mt19937_64& rng, const RandomAlgebraOptions& opt, int serial) {
  Presentation p;
  p.name = "random_" + std::to_string(serial);
  int n = pick(rng, opt.min_vertices, opt.max_vertices);
  for (int v = 0; v < n; ++v) p.vertices.push_back(std::to_string(v));
  std::vector<int> in(n, 0), out(n, 0);
  int want = pick(rng, n - 1, n + 2);
  for (int tries = 0; static_cast<int>(p.arrows.size()) < want && tries < 200; ++tries) {
    int s = pick(rng, 0, n - 1), t = pick(rng, 0, n - 1);
    if (s == t && pick(rng, 0, 3) != 0) continue;
    if (out[s] >= 2 || in[t] >= 2) continue;
    ++out[s];
    ++in[t];
    p.arrows.push_back({"a" + std::to_string(p.arrows.size()), s, t});
  }
  // relations vertex by vertex, so that every arrow has at most one continuation of each kind
  for (int v = 0; v < n; ++v) {
    std::vector<int> ins, outs;
    for (int a = 0; a < static_cast<int>(p.arrows.size()); ++a) {
      if (p.arrows[a].target == v) ins.push_back(a);
      if (p.arrows[a].source == v) outs.push_back(a);
    }
    if (ins.size() == 2 && outs.size() == 2) {
      int k = pick(rng, 0, 1);
      p.relations.push_back({outs[0], ins[k]});
      p.relations.push_back({outs[1], ins[1 - k]});
    } else if (ins.size() == 1 && outs.size() == 2) {
      p.relations.push_back({outs[pick(rng, 0, 1)], ins[0]});
    } else if (ins.size() == 2 && outs.size() == 1) {
      p.relations.push_back({outs[0], ins[pick(rng, 0, 1)]});
    } else if (ins.size() == 1 && outs.size() == 1 && pick(rng, 0, 1) == 1) {
      p.relations.push_back({outs[0], ins[0]});
    }
  }
  return p;
}

}  // namespace

AlgebraPtr random_gentle_algebra(std::mt19937_64& rng, const RandomAlgebraOptions& opt) {
  if (opt.min_vertices < 1 || opt.max_vertices < opt.min_vertices) throw DomainError("bad vertex range");
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Presentation p = draw(rng, opt, attempt);
    try {
      AlgebraPtr a = make_algebra(p);
      if (a->dimension() > opt.max_dimension) continue;
      if (opt.exclude_a3 && a->underlying_graph_is_a3()) continue;
      return a;
    } catch (const DomainError&) {
      // disconnected or infinite-dimensional draw
    }
  }
  throw InternalError("could not draw a gentle algebra");
}

std::vector<AlgebraPtr> random_corpus(std::uint64_t seed, int count, const RandomAlgebraOptions& opt) {
  std::mt19937_64 rng(seed);
  std::vector<AlgebraPtr> out;
  for (int k = 0; k < count; ++k) {
    AlgebraPtr a = random_gentle_algebra(rng, opt);
    Presentation p = a->presentation();
    p.name = "random_" + std::to_string(seed) + "_" + std::to_string(k);
    out.push_back(make_algebra(p));
  }
  return out;
}

}  // namespace gentle
