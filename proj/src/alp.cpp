#include "gentle/alp.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gentle/error.hpp"
#include "gentle/hom.hpp"

namespace gentle {

std::string kind_name(MapKind k) {
  switch (k) {
    case MapKind::single: return "single";
    case MapKind::double_: return "double";
    case MapKind::graph: return "graph";
  }
  return "?";
}

namespace {

const Provenance& string_data(const Complex& c) {
  if (!c.provenance() || c.provenance()->is_band)
    throw DomainError("combinatorial maps need string complexes with unfolding data");
  return *c.provenance();
}

// Link joining two consecutive positions of a string unfolding, or -1.
int link_between(const Provenance& p, int i, int j) {
  for (size_t k = 0; k < p.links.size(); ++k) {
    const Link& l = p.links[k];
    if ((l.from == i && l.to == j) || (l.from == j && l.to == i)) return static_cast<int>(k);
  }
  return -1;
}

std::vector<int> links_at(const Provenance& p, int i) {
  std::vector<int> out;
  for (size_t k = 0; k < p.links.size(); ++k)
    if (p.links[k].from == i || p.links[k].to == i) out.push_back(static_cast<int>(k));
  return out;
}

int other_end(const Link& l, int i) { return l.from == i ? l.to : l.from; }

void normalize(CombMap& m) {
  std::sort(m.components.begin(), m.components.end(), [](const MapComponent& a, const MapComponent& b) {
    return std::tie(a.x_pos, a.y_pos) < std::tie(b.x_pos, b.y_pos);
  });
}

}  // namespace

bool is_chain_map(const Complex& v, const Complex& w, const CombMap& f) {
  const GentleAlgebra& a = *v.algebra();
  const Provenance& pv = string_data(v);
  const Provenance& pw = string_data(w);
  // (source position, target position one degree up) -> d_w F - F d_v
  std::map<std::pair<int, int>, AlgebraElement> defect;
  for (const auto& c : f.components) {
    for (const Link& l : pw.links)
      if (l.from == c.y_pos) {
        int p = a.compose(c.path, l.path);
        if (p >= 0) defect[{c.x_pos, l.to}].add(AlgebraElement::path(p, c.coeff * l.coeff));
      }
    for (const Link& l : pv.links)
      if (l.to == c.x_pos) {
        int p = a.compose(l.path, c.path);
        if (p >= 0) defect[{l.from, c.y_pos}].add(AlgebraElement::path(p, -c.coeff * l.coeff));
      }
  }
  for (const auto& [k, e] : defect)
    if (!e.is_zero()) return false;
  return true;
}

std::vector<Rational> to_chain_map(const Complex& v, const Complex& w, const CombMap& f) {
  const GentleAlgebra& a = *v.algebra();
  const Provenance& pv = string_data(v);
  const Provenance& pw = string_data(w);
  HomComplex h(v, w);
  std::vector<Rational> out(h.dim(0), Rational(0));
  if (out.empty()) return out;
  // block offsets, ordered by degree then summand of the source
  const auto& lv = *v.layout();
  std::map<std::pair<int, int>, int> block;
  int off = 0;
  for (int d = v.lo(); d <= v.hi(); ++d) {
    const auto& sm = lv.at(d);
    for (size_t s = 0; s < sm.size(); ++s) {
      block[{d, static_cast<int>(s)}] = off;
      off += w.dim(d, sm[s]);
    }
  }
  for (const auto& c : f.components) {
    const Position& x = pv.positions[c.x_pos];
    const Position& y = pw.positions[c.y_pos];
    if (x.degree != y.degree) throw InternalError("map component changes degree");
    auto offs = summand_offsets(a, w.layout()->at(y.degree));
    int idx = block.at({x.degree, x.summand}) + offs[y.summand][x.vertex] + a.position_in_between(c.path);
    out[idx] += c.coeff;
  }
  return out;
}

std::vector<CombMap> single_maps(const Complex& v, const Complex& w) {
  const GentleAlgebra& a = *v.algebra();
  const Provenance& pv = string_data(v);
  const Provenance& pw = string_data(w);
  std::vector<CombMap> out;
  for (size_t i = 0; i < pv.positions.size(); ++i)
    for (size_t j = 0; j < pw.positions.size(); ++j) {
      const Position& x = pv.positions[i];
      const Position& y = pw.positions[j];
      if (x.degree != y.degree) continue;
      for (int p : a.paths_between(y.vertex, x.vertex)) {
        if (a.path(p).arrows.empty()) continue;
        CombMap m;
        m.kind = MapKind::single;
        m.components.push_back({static_cast<int>(i), static_cast<int>(j), p, Rational(1)});
        if (is_chain_map(v, w, m)) out.push_back(std::move(m));
      }
    }
  return out;
}

std::vector<CombMap> double_maps(const Complex& v, const Complex& w) {
  const GentleAlgebra& a = *v.algebra();
  const Provenance& pv = string_data(v);
  const Provenance& pw = string_data(w);
  std::vector<CombMap> out;
  for (const Link& lv : pv.links)
    for (const Link& lw : pw.links) {
      const Position& xa = pv.positions[lv.from];
      const Position& xb = pv.positions[lv.to];
      const Position& ya = pw.positions[lw.from];
      const Position& yb = pw.positions[lw.to];
      if (xa.degree != ya.degree) continue;
      for (int fa : a.paths_between(ya.vertex, xa.vertex)) {
        if (a.path(fa).arrows.empty()) continue;
        int lhs = a.compose(fa, lw.path);
        if (lhs < 0) continue;
        for (int fb : a.paths_between(yb.vertex, xb.vertex)) {
          if (a.path(fb).arrows.empty() || a.compose(lv.path, fb) != lhs) continue;
          CombMap m;
          m.kind = MapKind::double_;
          m.components.push_back({lv.from, lw.from, fa, Rational(1)});
          m.components.push_back({lv.to, lw.to, fb, lw.coeff / lv.coeff});
          normalize(m);
          if (is_chain_map(v, w, m)) out.push_back(std::move(m));
        }
      }
    }
  return out;
}

namespace {

// Nontrivial component at the neighbours across lv (from ev) and lw (from ew) making the
// square with the identity component c_e at (ev, ew) commute.
bool end_component(const GentleAlgebra& a, const Provenance& pv, const Provenance& pw, int lvi, int lwi, int ev,
                   int ew, const Rational& ce, MapComponent& out) {
  const Link& lv = pv.links[lvi];
  const Link& lw = pw.links[lwi];
  bool up_v = lv.from == ev, up_w = lw.from == ew;
  if (up_v != up_w) return false;
  int nv = other_end(lv, ev), nw = other_end(lw, ew);
  for (int f : a.paths_between(pw.positions[nw].vertex, pv.positions[nv].vertex)) {
    if (a.path(f).arrows.empty()) continue;
    if (up_v && a.compose(lv.path, f) == lw.path) {
      out = {nv, nw, f, ce * lw.coeff / lv.coeff};
      return true;
    }
    if (!up_v && a.compose(f, lw.path) == lv.path) {
      out = {nv, nw, f, ce * lv.coeff / lw.coeff};
      return true;
    }
  }
  return false;
}

bool same_letter(const Link& lv, int iv, const Link& lw, int iw) {
  return lv.path == lw.path && (lv.from == iv) == (lw.from == iw);
}

}  // namespace

std::vector<CombMap> graph_maps(const Complex& v, const Complex& w) {
  const GentleAlgebra& a = *v.algebra();
  const Provenance& pv = string_data(v);
  const Provenance& pw = string_data(w);
  int nv = static_cast<int>(pv.positions.size()), nw = static_cast<int>(pw.positions.size());
  std::vector<CombMap> out;
  std::set<std::vector<std::pair<int, int>>> seen;
  auto extends = [&](int i, int j, int di, int dj) {
    int i2 = i + di, j2 = j + dj;
    if (i2 < 0 || i2 >= nv || j2 < 0 || j2 >= nw) return false;
    int lv = link_between(pv, i, i2), lw = link_between(pw, j, j2);
    return lv >= 0 && lw >= 0 && same_letter(pv.links[lv], i, pw.links[lw], j);
  };
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nw; ++j) {
      if (pv.positions[i].vertex != pw.positions[j].vertex || pv.positions[i].degree != pw.positions[j].degree) continue;
      for (int sigma : {1, -1}) {
        if (extends(i, j, -1, -sigma)) continue;  // not the left end of a maximal overlap
        std::vector<std::pair<int, int>> pairs{{i, j}};
        while (extends(pairs.back().first, pairs.back().second, 1, sigma))
          pairs.push_back({pairs.back().first + 1, pairs.back().second + sigma});
        if (pairs.size() == 1 && (extends(i, j, -1, sigma) || extends(i, j, 1, -sigma))) continue;
        auto key = pairs;
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) continue;
        CombMap m;
        m.kind = MapKind::graph;
        Rational c = 1;
        for (size_t k = 0; k < pairs.size(); ++k) {
          if (k > 0) {
            const Link& lv = pv.links[link_between(pv, pairs[k - 1].first, pairs[k].first)];
            const Link& lw = pw.links[link_between(pw, pairs[k - 1].second, pairs[k].second)];
            // c_to = c_from * cw / cv along the shared letter
            c = (lv.to == pairs[k].first) ? c * lw.coeff / lv.coeff : c * lv.coeff / lw.coeff;
          }
          m.components.push_back({pairs[k].first, pairs[k].second, a.trivial_path(pv.positions[pairs[k].first].vertex), c});
        }
        // components forced at the ends of the overlap
        std::set<std::pair<int, int>> inside(pairs.begin(), pairs.end());
        std::set<int> used_w;
        for (size_t k = 0; k < pairs.size(); k += std::max<size_t>(1, pairs.size() - 1)) {
          auto [ev, ew] = pairs[k];
          Rational ce = m.components[k].coeff;
          for (int lvi : links_at(pv, ev)) {
            int n1 = other_end(pv.links[lvi], ev);
            bool in_overlap = false;
            for (auto& pr : pairs)
              if (pr.first == n1) in_overlap = true;
            if (in_overlap) continue;
            for (int lwi : links_at(pw, ew)) {
              int n2 = other_end(pw.links[lwi], ew);
              if (used_w.count(n2)) continue;
              bool w_in = false;
              for (auto& pr : pairs)
                if (pr.second == n2) w_in = true;
              if (w_in) continue;
              MapComponent mc;
              if (end_component(a, pv, pw, lvi, lwi, ev, ew, ce, mc)) {
                m.components.push_back(mc);
                used_w.insert(n2);
                break;
              }
            }
          }
          if (pairs.size() == 1) break;
        }
        normalize(m);
        if (is_chain_map(v, w, m)) out.push_back(std::move(m));
      }
    }
  return out;
}

std::vector<CombMap> alp_basis(const Complex& v, const Complex& w) {
  std::vector<CombMap> out = single_maps(v, w);
  for (auto& m : double_maps(v, w)) out.push_back(std::move(m));
  for (auto& m : graph_maps(v, w)) out.push_back(std::move(m));
  HomComplex h(v, w);
  int dim = chain_map_dim(v, w, 0);
  EchelonBasis<Rational> span(h.dim(0));
  for (const auto& m : out)
    if (!span.add(to_chain_map(v, w, m))) throw InternalError("combinatorial maps are linearly dependent");
  if (static_cast<int>(out.size()) != dim)
    throw InternalError("combinatorial basis has " + std::to_string(out.size()) + " maps, chain maps form a space of dimension " +
                        std::to_string(dim));
  return out;
}

}  // namespace gentle
