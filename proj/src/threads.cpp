#include "gentle/threads.hpp"

#include <algorithm>
#include <set>

#include "gentle/error.hpp"

namespace gentle {

namespace {

// The arrow b with b∘a in I, or -1.
int relation_successor(const GentleAlgebra& a, int al) {
  for (int b : a.out_arrows(a.presentation().arrows[al].target))
    if (a.in_relation(b, al)) return b;
  return -1;
}

int relation_predecessor(const GentleAlgebra& a, int al) {
  for (int g : a.in_arrows(a.presentation().arrows[al].source))
    if (a.in_relation(al, g)) return g;
  return -1;
}

Thread nontrivial(const GentleAlgebra& a, ThreadKind kind, std::vector<int> arrows) {
  const auto& pr = a.presentation();
  Thread t;
  t.kind = kind;
  t.start = pr.arrows[arrows.front()].source;
  t.end = pr.arrows[arrows.back()].target;
  t.s_sign = a.signs().s_prime[arrows.front()];
  t.e_sign = a.signs().e_prime[arrows.back()];
  t.arrows = std::move(arrows);
  return t;
}

}  // namespace

std::vector<std::vector<int>> detect_critical_cycles(const GentleAlgebra& a) {
  int m = a.arrow_count();
  std::vector<char> seen(m, 0);
  std::vector<std::vector<int>> cycles;
  for (int start = 0; start < m; ++start) {
    if (seen[start]) continue;
    std::vector<int> walk;
    int cur = start;
    while (cur >= 0 && !seen[cur]) {
      seen[cur] = 1;
      walk.push_back(cur);
      cur = relation_successor(a, cur);
    }
    if (cur < 0) continue;
    auto it = std::find(walk.begin(), walk.end(), cur);
    if (it == walk.end()) continue;  // ran into a previously explored chain
    std::vector<int> cyc(it, walk.end());
    std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
    cycles.push_back(cyc);
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

ThreadTables enumerate_threads(const GentleAlgebra& a) {
  const auto& sg = a.signs();
  ThreadTables t;
  int n = a.vertex_count();
  int m = a.arrow_count();

  // permitted: maximal paths outside I
  for (int p = n; p < a.dimension(); ++p) {
    bool maximal = true;
    for (int al = 0; al < m && maximal; ++al) {
      int ap = a.arrow_path(al);
      if (a.compose(ap, p) >= 0 || a.compose(p, ap) >= 0) maximal = false;
    }
    if (maximal) t.permitted.push_back(nontrivial(a, ThreadKind::permitted, a.path(p).arrows));
  }
  std::sort(t.permitted.begin(), t.permitted.end(), [](const Thread& x, const Thread& y) { return x.arrows < y.arrows; });

  // forbidden: maximal relation chains, plus full rotations of critical cycles
  std::vector<Thread> noncrit, crit;
  for (int al = 0; al < m; ++al) {
    if (relation_predecessor(a, al) >= 0) continue;
    std::vector<int> chain{al};
    for (int nx = relation_successor(a, al); nx >= 0; nx = relation_successor(a, nx)) chain.push_back(nx);
    noncrit.push_back(nontrivial(a, ThreadKind::forbidden, chain));
  }
  for (const auto& cyc : detect_critical_cycles(a))
    for (size_t r = 0; r < cyc.size(); ++r) {
      std::vector<int> rot(cyc.begin() + r, cyc.end());
      rot.insert(rot.end(), cyc.begin(), cyc.begin() + r);
      crit.push_back(nontrivial(a, ThreadKind::forbidden, rot));
    }
  std::sort(noncrit.begin(), noncrit.end(), [](const Thread& x, const Thread& y) { return x.arrows < y.arrows; });
  std::sort(crit.begin(), crit.end(), [](const Thread& x, const Thread& y) { return x.arrows < y.arrows; });

  // trivial threads
  std::vector<Thread> triv_perm, triv_forb;
  for (int v = 0; v < n; ++v) {
    const auto& outs = a.out_arrows(v);
    const auto& ins = a.in_arrows(v);
    if (outs.size() > 1 || ins.size() > 1) continue;
    bool both = !outs.empty() && !ins.empty();
    bool related = both && a.in_relation(outs[0], ins[0]);
    Thread tp;
    tp.kind = ThreadKind::permitted;
    tp.vertex = tp.start = tp.end = v;
    Thread tf = tp;
    tf.kind = ThreadKind::forbidden;
    if (!outs.empty()) {
      int g = outs[0];
      tp.s_sign = -sg.s_prime[g];
      tp.e_sign = sg.s_prime[g];
      tf.s_sign = tf.e_sign = -sg.s_prime[g];
    } else if (!ins.empty()) {
      int b = ins[0];
      tp.s_sign = sg.e_prime[b];
      tp.e_sign = -sg.e_prime[b];
      tf.s_sign = tf.e_sign = -sg.e_prime[b];
    } else {
      // the algebra k: no arrow fixes the signs
      tp.s_sign = 1;
      tp.e_sign = -1;
      tf.s_sign = tf.e_sign = 1;
    }
    if (!related) triv_perm.push_back(tp);
    if (!both || related) triv_forb.push_back(tf);
  }
  t.permitted.insert(t.permitted.end(), triv_perm.begin(), triv_perm.end());
  t.forbidden = noncrit;
  t.forbidden.insert(t.forbidden.end(), crit.begin(), crit.end());
  t.forbidden.insert(t.forbidden.end(), triv_forb.begin(), triv_forb.end());
  t.critical.assign(t.forbidden.size(), false);
  for (size_t i = noncrit.size(); i < noncrit.size() + crit.size(); ++i) t.critical[i] = true;

  t.phi1.assign(t.permitted.size(), -1);
  t.phi2.assign(t.forbidden.size(), -1);
  if (a.is_field()) return t;

  for (size_t v = 0; v < t.permitted.size(); ++v)
    for (size_t w = 0; w < t.forbidden.size(); ++w) {
      if (t.critical[w]) continue;
      if (t.forbidden[w].end == t.permitted[v].end && t.forbidden[w].e_sign == -t.permitted[v].e_sign) {
        if (t.phi1[v] >= 0)
          throw InternalError("ambiguous phi1 target for permitted thread " + thread_name(a, t.permitted[v]));
        t.phi1[v] = static_cast<int>(w);
      }
    }
  for (size_t w = 0; w < t.forbidden.size(); ++w) {
    if (t.critical[w]) continue;
    for (size_t v = 0; v < t.permitted.size(); ++v)
      if (t.forbidden[w].start == t.permitted[v].start && t.forbidden[w].s_sign == -t.permitted[v].s_sign) {
        if (t.phi2[w] >= 0)
          throw InternalError("ambiguous phi2 target for forbidden thread " + thread_name(a, t.forbidden[w]));
        t.phi2[w] = static_cast<int>(v);
      }
  }
  // both maps must be bijections between permitted and non-critical forbidden threads
  size_t noncritical_count = std::count(t.critical.begin(), t.critical.end(), false);
  if (noncritical_count != t.permitted.size())
    throw InternalError("thread count mismatch: " + std::to_string(t.permitted.size()) + " permitted vs " +
                        std::to_string(noncritical_count) + " non-critical forbidden");
  std::set<int> img1, img2;
  for (size_t v = 0; v < t.permitted.size(); ++v) {
    if (t.phi1[v] < 0) throw InternalError("phi1 undefined on " + thread_name(a, t.permitted[v]));
    img1.insert(t.phi1[v]);
  }
  for (size_t w = 0; w < t.forbidden.size(); ++w) {
    if (t.critical[w]) continue;
    if (t.phi2[w] < 0) throw InternalError("phi2 undefined on " + thread_name(a, t.forbidden[w]));
    img2.insert(t.phi2[w]);
  }
  if (img1.size() != t.permitted.size() || img2.size() != t.permitted.size())
    throw InternalError("phi maps are not injective");
  return t;
}

std::vector<AagCycle> aag_cycles(const ThreadTables& t) {
  std::vector<AagCycle> out;
  std::vector<char> seen(t.permitted.size(), 0);
  for (size_t h0 = 0; h0 < t.permitted.size(); ++h0) {
    if (seen[h0]) continue;
    AagCycle c;
    int h = static_cast<int>(h0);
    while (!seen[h]) {
      seen[h] = 1;
      int w = t.phi1[h];
      if (w < 0) throw InternalError("phi1 undefined during the walk");
      int next = t.phi2[w];
      if (next < 0) throw InternalError("phi2 undefined during the walk");
      c.permitted.push_back(h);
      c.forbidden.push_back(w);
      c.m += t.forbidden[w].length();
      h = next;
    }
    if (h != static_cast<int>(h0)) throw InternalError("walk did not return to its starting thread");
    c.n = static_cast<int>(c.permitted.size());
    out.push_back(c);
  }
  return out;
}

std::string thread_name(const GentleAlgebra& a, const Thread& t) {
  if (t.trivial()) return "1_" + a.vertex_name(t.vertex);
  std::string s;
  for (auto it = t.arrows.rbegin(); it != t.arrows.rend(); ++it) {
    if (!s.empty()) s += '*';
    s += a.arrow_name(*it);
  }
  return s;
}

std::string thread_word(const GentleAlgebra& a, const Thread& t) {
  if (t.trivial()) return "triv:" + a.vertex_name(t.vertex) + ":" + (t.s_sign > 0 ? "+1" : "-1");
  if (t.kind == ThreadKind::permitted) return thread_name(a, t);
  std::string s;
  for (auto it = t.arrows.rbegin(); it != t.arrows.rend(); ++it) {
    if (!s.empty()) s += ", ";
    s += a.arrow_name(*it);
  }
  return s;
}

}  // namespace gentle
