#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "gentle/error.hpp"
#include "gentle/presentation.hpp"

namespace gentle {

namespace {

// Union-find over sign variables with parity to the root.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(int n) : parent_(n), parity_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::pair<int, int> find(int x) {
    int p = 0;
    int r = x;
    while (parent_[r] != r) {
      p ^= parity_[r];
      r = parent_[r];
    }
    // path compression
    int cur = x;
    int cp = p;
    while (parent_[cur] != cur) {
      int next = parent_[cur];
      int np = cp ^ parity_[cur];
      parent_[cur] = r;
      parity_[cur] = cp;
      cur = next;
      cp = np;
    }
    return {r, p};
  }

  // Imposes value(x) * value(y) = (odd ? -1 : +1); false on contradiction.
  bool unite(int x, int y, int odd) {
    auto [rx, px] = find(x);
    auto [ry, py] = find(y);
    if (rx == ry) return (px ^ py) == odd;
    parent_[rx] = ry;
    parity_[rx] = px ^ py ^ odd;
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> parity_;
};

std::string var_name(const Presentation& p, int var) {
  return std::string(var % 2 == 0 ? "s'(" : "e'(") + p.arrows[var / 2].name + ")";
}

struct SignSystem {
  std::vector<int> parity;  // parity relative to component root
  std::vector<int> component;
  int component_count = 0;
};

SignSystem solve_signs(const Presentation& p, const std::function<bool(int, int)>& related) {
  int m = static_cast<int>(p.arrows.size());
  ParityUnionFind uf(2 * m);
  auto impose = [&](int x, int y, int odd, const std::string& why) {
    if (!uf.unite(x, y, odd))
      throw InternalError("sign system infeasible at constraint " + why + " between " + var_name(p, x) + " and " +
                          var_name(p, y));
  };
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      if (p.arrows[a].source == p.arrows[b].source) impose(2 * a, 2 * b, 1, "(i)");
      if (p.arrows[a].target == p.arrows[b].target) impose(2 * a + 1, 2 * b + 1, 1, "(ii)");
    }
  for (int beta = 0; beta < m; ++beta)
    for (int alpha = 0; alpha < m; ++alpha) {
      if (p.arrows[alpha].target != p.arrows[beta].source) continue;
      if (related(beta, alpha))
        impose(2 * beta, 2 * alpha + 1, 0, "(iv)");
      else
        impose(2 * beta, 2 * alpha + 1, 1, "(iii)");
    }
  SignSystem sys;
  sys.parity.resize(2 * m);
  sys.component.assign(2 * m, -1);
  std::map<int, int> root_component;
  std::map<int, int> root_parity_of_least;
  for (int v = 0; v < 2 * m; ++v) {
    auto [r, par] = uf.find(v);
    auto it = root_component.find(r);
    if (it == root_component.end()) {
      root_component[r] = sys.component_count++;
      root_parity_of_least[r] = par;
    }
    sys.component[v] = root_component[r];
    // parity relative to the least variable of the component
    sys.parity[v] = par ^ root_parity_of_least[r];
  }
  return sys;
}

SignAssignment assignment_from(const SignSystem& sys, int m, unsigned long long flips) {
  SignAssignment s;
  s.s_prime.resize(m);
  s.e_prime.resize(m);
  s.component = sys.component;
  s.component_count = sys.component_count;
  for (int v = 0; v < 2 * m; ++v) {
    int sign = sys.parity[v] ? -1 : 1;
    if ((flips >> sys.component[v]) & 1ULL) sign = -sign;
    (v % 2 == 0 ? s.s_prime : s.e_prime)[v / 2] = sign;
  }
  return s;
}

}  // namespace

bool GentleAlgebra::in_relation(int outer, int inner) const {
  return relation_table_[static_cast<size_t>(outer) * arrow_count() + inner] != 0;
}

GentleAlgebra GentleAlgebra::validate(Presentation p) {
  GentleAlgebra a;
  a.pres_ = std::move(p);
  const Presentation& pr = a.pres_;
  int n = static_cast<int>(pr.vertices.size());
  int m = static_cast<int>(pr.arrows.size());
  a.out_.assign(n, {});
  a.in_.assign(n, {});
  for (int i = 0; i < m; ++i) {
    a.out_[pr.arrows[i].source].push_back(i);
    a.in_[pr.arrows[i].target].push_back(i);
  }
  a.relation_table_.assign(static_cast<size_t>(m) * m, 0);
  for (auto [o, i] : pr.relations) a.relation_table_[static_cast<size_t>(o) * m + i] = 1;

  auto names = [&](const std::vector<int>& arrows) {
    std::string s;
    for (size_t k = 0; k < arrows.size(); ++k) s += (k ? ", " : "") + pr.arrows[arrows[k]].name;
    return s;
  };
  // (G1)
  for (int v = 0; v < n; ++v) {
    if (a.out_[v].size() > 2)
      throw DomainError("G1 violated at vertex " + pr.vertices[v] + ": more than two outgoing arrows (" +
                        names(a.out_[v]) + ")");
    if (a.in_[v].size() > 2)
      throw DomainError("G1 violated at vertex " + pr.vertices[v] + ": more than two incoming arrows (" +
                        names(a.in_[v]) + ")");
  }
  // (G2), (G3)
  for (int al = 0; al < m; ++al) {
    std::vector<int> free_after, rel_after, free_before, rel_before;
    for (int b : a.out_[pr.arrows[al].target]) (a.in_relation(b, al) ? rel_after : free_after).push_back(b);
    for (int g : a.in_[pr.arrows[al].source]) (a.in_relation(al, g) ? rel_before : free_before).push_back(g);
    const std::string& nm = pr.arrows[al].name;
    if (free_after.size() > 1)
      throw DomainError("G2 violated for arrow " + nm + ": arrows " + names(free_after) + " all continue it outside I");
    if (free_before.size() > 1)
      throw DomainError("G2 violated for arrow " + nm + ": arrows " + names(free_before) +
                        " all precede it outside I");
    if (rel_after.size() > 1)
      throw DomainError("G3 violated for arrow " + nm + ": arrows " + names(rel_after) + " all continue it inside I");
    if (rel_before.size() > 1)
      throw DomainError("G3 violated for arrow " + nm + ": arrows " + names(rel_before) + " all precede it inside I");
  }
  // connectivity
  {
    std::vector<int> comp(n);
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
    for (const auto& ar : pr.arrows) comp[find(ar.source)] = find(ar.target);
    for (int v = 1; v < n; ++v)
      if (find(v) != find(0))
        throw DomainError("disconnected quiver: vertex " + pr.vertices[v] + " is not connected to " + pr.vertices[0]);
  }
  a.build_paths();
  auto sys = solve_signs(pr, [&](int o, int i) { return a.in_relation(o, i); });
  a.signs_ = assignment_from(sys, m, 0);
  return a;
}

void GentleAlgebra::build_paths() {
  int n = vertex_count();
  int m = arrow_count();
  paths_.clear();
  for (int v = 0; v < n; ++v) paths_.push_back({v, v, {}});
  // breadth first by length, lexicographic within a length
  std::vector<PathData> layer;
  for (int al = 0; al < m; ++al) layer.push_back({pres_.arrows[al].source, pres_.arrows[al].target, {al}});
  int length = 1;
  while (!layer.empty()) {
    if (length > m) {
      const auto& p = layer.front();
      std::string s;
      for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) s += (s.empty() ? "" : "*") + pres_.arrows[*it].name;
      throw DomainError("infinite-dimensional: the path " + s + " can be extended forever without meeting I");
    }
    std::sort(layer.begin(), layer.end(), [](const PathData& x, const PathData& y) { return x.arrows < y.arrows; });
    std::vector<PathData> next;
    for (const auto& p : layer) {
      paths_.push_back(p);
      int last = p.arrows.back();
      for (int g : out_[p.target]) {
        if (in_relation(g, last)) continue;
        PathData q = p;
        q.arrows.push_back(g);
        q.target = pres_.arrows[g].target;
        next.push_back(std::move(q));
      }
    }
    layer = std::move(next);
    ++length;
  }
  int d = static_cast<int>(paths_.size());
  std::map<std::vector<int>, int> index;
  for (int i = n; i < d; ++i) index[paths_[i].arrows] = i;
  arrow_path_.assign(m, -1);
  for (int al = 0; al < m; ++al) arrow_path_[al] = index.at({al});
  mult_.assign(static_cast<size_t>(d) * d, -1);
  for (int o = 0; o < d; ++o)
    for (int i = 0; i < d; ++i) {
      const auto& po = paths_[o];
      const auto& pi = paths_[i];
      if (pi.target != po.source) continue;
      int r;
      if (po.trivial())
        r = i;
      else if (pi.trivial())
        r = o;
      else if (in_relation(po.arrows.front(), pi.arrows.back()))
        r = -1;
      else {
        std::vector<int> cat = pi.arrows;
        cat.insert(cat.end(), po.arrows.begin(), po.arrows.end());
        auto it = index.find(cat);
        r = it == index.end() ? -1 : it->second;
      }
      mult_[static_cast<size_t>(o) * d + i] = r;
    }
  between_.assign(static_cast<size_t>(n) * n, {});
  pos_in_between_.assign(d, 0);
  for (int i = 0; i < d; ++i) {
    auto& list = between_[paths_[i].source * n + paths_[i].target];
    pos_in_between_[i] = static_cast<int>(list.size());
    list.push_back(i);
  }
}

int GentleAlgebra::find_path(const std::vector<int>& arrows) const {
  for (size_t i = vertex_count(); i < paths_.size(); ++i)
    if (paths_[i].arrows == arrows) return static_cast<int>(i);
  return -1;
}

GentleAlgebra GentleAlgebra::with_signs(const SignAssignment& s) const {
  std::string err = check_sign_assignment(*this, s);
  if (!err.empty()) throw DomainError("invalid sign assignment: " + err);
  GentleAlgebra a = *this;
  a.signs_ = s;
  return a;
}

int GentleAlgebra::s_sign(int p) const {
  if (paths_[p].trivial()) throw InternalError("s' of a trivial path");
  return signs_.s_prime[paths_[p].arrows.front()];
}

int GentleAlgebra::e_sign(int p) const {
  if (paths_[p].trivial()) throw InternalError("e' of a trivial path");
  return signs_.e_prime[paths_[p].arrows.back()];
}

std::string GentleAlgebra::path_name(int p) const {
  const auto& pd = paths_[p];
  if (pd.trivial()) return "e_" + pres_.vertices[pd.source];
  std::string s;
  for (auto it = pd.arrows.rbegin(); it != pd.arrows.rend(); ++it) {
    if (!s.empty()) s += '*';
    s += pres_.arrows[*it].name;
  }
  return s;
}

bool GentleAlgebra::underlying_graph_is_a3() const {
  if (vertex_count() != 3 || arrow_count() != 2) return false;
  const auto& a0 = pres_.arrows[0];
  const auto& a1 = pres_.arrows[1];
  if (a0.source == a0.target || a1.source == a1.target) return false;
  auto edge = [](const Arrow& x) { return std::minmax(x.source, x.target); };
  return edge(a0) != edge(a1);
}

int GentleAlgebra::longest_path_length() const {
  int best = 0;
  for (const auto& p : paths_) best = std::max(best, static_cast<int>(p.arrows.size()));
  return best;
}

AlgebraPtr make_algebra(Presentation p) { return std::make_shared<const GentleAlgebra>(GentleAlgebra::validate(std::move(p))); }

AlgebraPtr make_algebra_from_text(std::string_view text) { return make_algebra(parse_presentation(text)); }

std::vector<SignAssignment> enumerate_sign_assignments(const GentleAlgebra& a) {
  const auto& pr = a.presentation();
  auto sys = solve_signs(pr, [&](int o, int i) { return a.in_relation(o, i); });
  if (sys.component_count > 20) throw DomainError("too many sign components to enumerate");
  std::vector<SignAssignment> out;
  for (unsigned long long f = 0; f < (1ULL << sys.component_count); ++f)
    out.push_back(assignment_from(sys, a.arrow_count(), f));
  return out;
}

std::string check_sign_assignment(const GentleAlgebra& a, const SignAssignment& s) {
  const auto& pr = a.presentation();
  int m = a.arrow_count();
  if (static_cast<int>(s.s_prime.size()) != m || static_cast<int>(s.e_prime.size()) != m) return "wrong arity";
  for (int x = 0; x < m; ++x)
    if (std::abs(s.s_prime[x]) != 1 || std::abs(s.e_prime[x]) != 1) return "signs must be +1 or -1";
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y) {
      if (pr.arrows[x].source == pr.arrows[y].source && s.s_prime[x] != -s.s_prime[y])
        return "(i) fails for " + pr.arrows[x].name + ", " + pr.arrows[y].name;
      if (pr.arrows[x].target == pr.arrows[y].target && s.e_prime[x] != -s.e_prime[y])
        return "(ii) fails for " + pr.arrows[x].name + ", " + pr.arrows[y].name;
    }
  for (int b = 0; b < m; ++b)
    for (int al = 0; al < m; ++al) {
      if (pr.arrows[al].target != pr.arrows[b].source) continue;
      bool rel = a.in_relation(b, al);
      if (rel && s.s_prime[b] != s.e_prime[al]) return "(iv) fails for " + pr.arrows[b].name + pr.arrows[al].name;
      if (!rel && s.s_prime[b] != -s.e_prime[al]) return "(iii) fails for " + pr.arrows[b].name + pr.arrows[al].name;
    }
  return "";
}

}  // namespace gentle
