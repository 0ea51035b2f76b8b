#include "gentle/complexes.hpp"

#include <algorithm>
#include <sstream>

#include "gentle/error.hpp"

namespace gentle {

// ---------------------------------------------------------------- elements

AlgebraElement AlgebraElement::path(int p, const Rational& c) {
  AlgebraElement e;
  if (sgn(c) != 0) e.terms.push_back({p, c});
  return e;
}

Rational AlgebraElement::coefficient(int p) const {
  for (const auto& [q, c] : terms)
    if (q == p) return c;
  return 0;
}

AlgebraElement& AlgebraElement::add(const AlgebraElement& o, const Rational& scale) {
  if (sgn(scale) == 0 || o.terms.empty()) return *this;
  std::vector<std::pair<int, Rational>> out;
  out.reserve(terms.size() + o.terms.size());
  size_t i = 0, j = 0;
  while (i < terms.size() || j < o.terms.size()) {
    if (j == o.terms.size() || (i < terms.size() && terms[i].first < o.terms[j].first)) {
      out.push_back(terms[i++]);
    } else if (i == terms.size() || o.terms[j].first < terms[i].first) {
      out.push_back({o.terms[j].first, o.terms[j].second * scale});
      ++j;
    } else {
      Rational c = terms[i].second + o.terms[j].second * scale;
      if (sgn(c) != 0) out.push_back({terms[i].first, c});
      ++i;
      ++j;
    }
  }
  terms = std::move(out);
  return *this;
}

AlgebraElement AlgebraElement::scaled(const Rational& c) const {
  AlgebraElement e;
  if (sgn(c) == 0) return e;
  e.terms = terms;
  for (auto& t : e.terms) t.second *= c;
  return e;
}

AlgebraElement follow(const GentleAlgebra& a, const AlgebraElement& first, const AlgebraElement& second) {
  std::map<int, Rational> acc;
  for (const auto& [p, c] : first.terms)
    for (const auto& [q, d] : second.terms) {
      int r = a.compose(p, q);
      if (r >= 0) acc[r] += c * d;
    }
  AlgebraElement e;
  for (auto& [p, c] : acc)
    if (sgn(c) != 0) e.terms.push_back({p, c});
  return e;
}

AlgebraElement invert(const GentleAlgebra& a, int v, const AlgebraElement& x) {
  Rational lambda = x.coefficient(a.trivial_path(v));
  if (sgn(lambda) == 0) throw InternalError("element is not invertible");
  Rational inv = Rational(1) / lambda;
  AlgebraElement r = x;
  r.add(AlgebraElement::path(a.trivial_path(v), lambda), -1);
  AlgebraElement u = r.scaled(-inv);  // x = lambda (e - u)
  AlgebraElement sum = AlgebraElement::path(a.trivial_path(v));
  AlgebraElement power = sum;
  for (int k = 0; k <= a.dimension(); ++k) {
    power = follow(a, power, u);
    if (power.is_zero()) break;
    sum.add(power);
  }
  if (!power.is_zero()) throw InternalError("radical element is not nilpotent");
  return sum.scaled(inv);
}

std::string element_text(const GentleAlgebra& a, const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : x.terms) {
    std::string name = a.path(p).trivial() ? "1" : a.path_name(p);
    if (c == 1) {
      os << (first ? "" : " + ") << name;
    } else if (c == -1) {
      os << (first ? "-" : " - ") << name;
    } else if (sgn(c) < 0) {
      os << (first ? "-" : " - ") << Rational(-c).get_str() << name;
    } else {
      os << (first ? "" : " + ") << c.get_str() << name;
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- representations

Representation Representation::zero(const GentleAlgebra& a) {
  Representation r;
  r.dims.assign(a.vertex_count(), 0);
  for (int al = 0; al < a.arrow_count(); ++al) r.action.emplace_back(0, 0);
  return r;
}

int Representation::total() const {
  int t = 0;
  for (int d : dims) t += d;
  return t;
}

std::vector<std::vector<int>> summand_offsets(const GentleAlgebra& a, const std::vector<int>& summands) {
  int n = a.vertex_count();
  std::vector<std::vector<int>> off(summands.size(), std::vector<int>(n, 0));
  std::vector<int> run(n, 0);
  for (size_t s = 0; s < summands.size(); ++s)
    for (int x = 0; x < n; ++x) {
      off[s][x] = run[x];
      run[x] += a.paths_count(summands[s], x);
    }
  return off;
}

Representation projective_sum(const GentleAlgebra& a, const std::vector<int>& summands) {
  int n = a.vertex_count();
  const auto& pr = a.presentation();
  Representation r;
  r.dims.assign(n, 0);
  for (int v : summands)
    for (int x = 0; x < n; ++x) r.dims[x] += a.paths_count(v, x);
  auto off = summand_offsets(a, summands);
  for (int al = 0; al < a.arrow_count(); ++al) {
    int x = pr.arrows[al].source, y = pr.arrows[al].target;
    Matrix<Rational> m(r.dims[y], r.dims[x]);
    int ap = a.arrow_path(al);
    for (size_t s = 0; s < summands.size(); ++s) {
      const auto& src = a.paths_between(summands[s], x);
      for (size_t k = 0; k < src.size(); ++k) {
        int q = a.compose(ap, src[k]);
        if (q < 0) continue;
        m(off[s][y] + a.position_in_between(q), off[s][x] + static_cast<int>(k)) = 1;
      }
    }
    r.action.push_back(std::move(m));
  }
  return r;
}

Representation projective(const GentleAlgebra& a, int v) { return projective_sum(a, {v}); }

Representation injective(const GentleAlgebra& a, int v) {
  int n = a.vertex_count();
  const auto& pr = a.presentation();
  Representation r;
  r.dims.assign(n, 0);
  for (int x = 0; x < n; ++x) r.dims[x] = a.paths_count(x, v);
  for (int al = 0; al < a.arrow_count(); ++al) {
    int x = pr.arrows[al].source, y = pr.arrows[al].target;
    Matrix<Rational> m(r.dims[y], r.dims[x]);
    int ap = a.arrow_path(al);
    const auto& qs = a.paths_between(y, v);
    for (size_t j = 0; j < qs.size(); ++j) {
      int p = a.compose(qs[j], ap);
      if (p < 0) continue;
      m(static_cast<int>(j), a.position_in_between(p)) = 1;
    }
    r.action.push_back(std::move(m));
  }
  return r;
}

Representation simple(const GentleAlgebra& a, int v) {
  Representation r = Representation::zero(a);
  r.dims[v] = 1;
  const auto& pr = a.presentation();
  for (int al = 0; al < a.arrow_count(); ++al)
    r.action[al] = Matrix<Rational>(r.dims[pr.arrows[al].target], r.dims[pr.arrows[al].source]);
  return r;
}

Matrix<Rational> path_action(const GentleAlgebra& a, const Representation& r, int path) {
  const auto& pd = a.path(path);
  Matrix<Rational> m = Matrix<Rational>::identity(r.dims[pd.source]);
  for (int al : pd.arrows) m = multiply(r.action[al], m);
  return m;
}

bool relations_vanish(const GentleAlgebra& a, const Representation& r) {
  for (auto [o, i] : a.presentation().relations)
    if (!multiply(r.action[o], r.action[i]).is_zero()) return false;
  return true;
}

Matrix<Rational> layout_map_at(const GentleAlgebra& a, const std::vector<int>& src, const std::vector<int>& dst,
                               const ElementMatrix& m, int x) {
  auto so = summand_offsets(a, src);
  auto to = summand_offsets(a, dst);
  int rows = 0, cols = 0;
  for (int v : dst) rows += a.paths_count(v, x);
  for (int v : src) cols += a.paths_count(v, x);
  Matrix<Rational> out(rows, cols);
  for (size_t t = 0; t < dst.size(); ++t)
    for (size_t s = 0; s < src.size(); ++s) {
      const AlgebraElement& e = m[t][s];
      if (e.is_zero()) continue;
      const auto& basis = a.paths_between(src[s], x);
      for (size_t k = 0; k < basis.size(); ++k)
        for (const auto& [q, c] : e.terms) {
          int r = a.compose(basis[k], q);
          if (r < 0) continue;
          out(to[t][x] + a.position_in_between(r), so[s][x] + static_cast<int>(k)) += c;
        }
    }
  return out;
}

// ---------------------------------------------------------------- complexes

const std::vector<int>& ProjectiveLayout::at(int d) const {
  static const std::vector<int> none;
  if (d < lo || d > hi()) return none;
  return summands[d - lo];
}

Complex::Complex(AlgebraPtr a) : alg_(std::move(a)) { zero_rep_ = Representation::zero(*alg_); }

const Representation& Complex::term(int d) const {
  if (d < lo_ || d > hi_) return zero_rep_;
  return terms_[d - lo_];
}

const Matrix<Rational>& Complex::d(int deg, int v) const {
  static const Matrix<Rational> empty;
  if (deg < lo_ - 1 || deg > hi_) return empty;
  return diff_[deg - lo_ + 1][v];
}

Complex Complex::from_terms(AlgebraPtr a, int lo, std::vector<Representation> terms,
                            std::vector<std::vector<Matrix<Rational>>> diff) {
  Complex c(a);
  c.lo_ = lo;
  c.hi_ = lo + static_cast<int>(terms.size()) - 1;
  c.terms_ = std::move(terms);
  // diff given for degrees lo..hi-1 (extra entries ignored)
  int n = a->vertex_count();
  c.diff_.clear();
  for (int deg = c.lo_ - 1; deg <= c.hi_; ++deg) {
    std::vector<Matrix<Rational>> per(n);
    for (int v = 0; v < n; ++v) {
      int rows = c.term(deg + 1).dims[v], cols = c.term(deg).dims[v];
      int k = deg - c.lo_;
      if (k >= 0 && k < static_cast<int>(diff.size()) && deg < c.hi_) {
        per[v] = diff[k][v];
        if (per[v].rows() != rows || per[v].cols() != cols) throw InternalError("differential has the wrong size");
      } else {
        per[v] = Matrix<Rational>(rows, cols);
      }
    }
    c.diff_.push_back(std::move(per));
  }
  c.trim();
  return c;
}

void Complex::trim() {
  while (lo_ <= hi_ && terms_.front().is_zero()) {
    terms_.erase(terms_.begin());
    diff_.erase(diff_.begin());
    ++lo_;
    if (layout_) {
      layout_->summands.erase(layout_->summands.begin());
      layout_->diff.erase(layout_->diff.begin());
      ++layout_->lo;
    }
  }
  while (lo_ <= hi_ && terms_.back().is_zero()) {
    terms_.pop_back();
    diff_.pop_back();
    --hi_;
    if (layout_) {
      layout_->summands.pop_back();
      layout_->diff.pop_back();
    }
  }
  if (lo_ > hi_) {
    lo_ = 0;
    hi_ = -1;
    terms_.clear();
    diff_.clear();
    if (layout_) *layout_ = ProjectiveLayout{};
    int n = alg_->vertex_count();
    diff_.assign(1, std::vector<Matrix<Rational>>(n));
    return;
  }
  // boundary maps into and out of the support
  int n = alg_->vertex_count();
  for (int v = 0; v < n; ++v) {
    diff_.front()[v] = Matrix<Rational>(terms_.front().dims[v], 0);
    diff_.back()[v] = Matrix<Rational>(0, terms_.back().dims[v]);
  }
}

Complex Complex::from_layout(AlgebraPtr a, ProjectiveLayout layout) {
  const GentleAlgebra& alg = *a;
  int count = static_cast<int>(layout.summands.size());
  if (static_cast<int>(layout.diff.size()) < count) layout.diff.resize(count);
  std::vector<Representation> terms;
  std::vector<std::vector<Matrix<Rational>>> diff;
  for (int k = 0; k < count; ++k) {
    terms.push_back(projective_sum(alg, layout.summands[k]));
    const auto& src = layout.summands[k];
    static const std::vector<int> none;
    const auto& dst = k + 1 < count ? layout.summands[k + 1] : none;
    auto& em = layout.diff[k];
    em.resize(dst.size());
    for (auto& row : em) row.resize(src.size());
    std::vector<Matrix<Rational>> per;
    for (int x = 0; x < alg.vertex_count(); ++x) per.push_back(layout_map_at(alg, src, dst, em, x));
    diff.push_back(std::move(per));
  }
  Complex c(a);
  c.lo_ = layout.lo;
  c.hi_ = layout.lo + count - 1;
  c.terms_ = std::move(terms);
  int n = alg.vertex_count();
  c.diff_.clear();
  c.diff_.push_back(std::vector<Matrix<Rational>>(n));
  for (auto& per : diff) c.diff_.push_back(std::move(per));
  c.layout_ = std::move(layout);
  c.trim();
  return c;
}

Complex stalk(AlgebraPtr a, const Representation& r, int degree) { return Complex::from_terms(a, degree, {r}, {}); }

Complex projective_stalk(AlgebraPtr a, int v, int degree) {
  ProjectiveLayout l;
  l.lo = degree;
  l.summands = {{v}};
  l.diff = {ElementMatrix{}};
  return Complex::from_layout(a, l);
}

namespace {

struct Unfolding {
  std::vector<Position> positions;
  std::vector<Link> links;
};

Complex build_from_positions(AlgebraPtr a, Unfolding u, Provenance prov) {
  int lo = 0, hi = 0;
  bool first = true;
  for (const auto& p : u.positions) {
    if (first || p.degree < lo) lo = p.degree;
    if (first || p.degree > hi) hi = p.degree;
    first = false;
  }
  ProjectiveLayout l;
  l.lo = lo;
  l.summands.assign(hi - lo + 1, {});
  for (auto& p : u.positions) {
    auto& list = l.summands[p.degree - lo];
    p.summand = static_cast<int>(list.size());
    list.push_back(p.vertex);
  }
  l.diff.assign(hi - lo + 1, {});
  for (int k = 0; k <= hi - lo; ++k) {
    size_t rows = k + 1 <= hi - lo ? l.summands[k + 1].size() : 0;
    l.diff[k].assign(rows, std::vector<AlgebraElement>(l.summands[k].size()));
  }
  for (const auto& lk : u.links) {
    const auto& f = u.positions[lk.from];
    const auto& t = u.positions[lk.to];
    if (t.degree != f.degree + 1) throw InternalError("link does not raise degree by one");
    l.diff[f.degree - lo][t.summand][f.summand].add(AlgebraElement::path(lk.path, lk.coeff));
  }
  prov.positions = u.positions;
  prov.links = u.links;
  Complex c = Complex::from_layout(a, std::move(l));
  c.set_provenance(std::move(prov));
  return c;
}

Unfolding unfold_letters(const GentleAlgebra& a, const std::vector<Letter>& ls, int start_vertex, bool cyclic,
                         const Rational& mu) {
  int n = static_cast<int>(ls.size());
  std::vector<int> r{0};
  for (auto l : ls) r.push_back(r.back() + (l.inverse ? -1 : 1));
  int count = cyclic ? n : n + 1;
  int min_r = *std::min_element(r.begin(), r.begin() + count);
  Unfolding u;
  for (int j = 0; j < count; ++j) {
    Position p;
    p.vertex = j == 0 ? start_vertex : letter_end(a, ls[j - 1]);
    p.degree = min_r - r[j];
    u.positions.push_back(p);
  }
  for (int j = 1; j <= n; ++j) {
    int lower = j - 1;
    int upper = (cyclic && j == n) ? 0 : j;
    Link lk;
    lk.path = ls[j - 1].path;
    lk.coeff = (cyclic && j == n) ? mu : Rational(1);
    if (ls[j - 1].inverse) {
      lk.from = lower;
      lk.to = upper;
    } else {
      lk.from = upper;
      lk.to = lower;
    }
    u.links.push_back(lk);
  }
  return u;
}

}  // namespace

Complex unfold_string(AlgebraPtr a, const HomotopyString& w, int m) {
  Provenance prov;
  prov.string = w;
  Unfolding u;
  if (w.trivial()) {
    u.positions.push_back({w.vertex, 0, 0});
  } else {
    u = unfold_letters(*a, w.letters, string_start(*a, w), false, 1);
  }
  Complex c = build_from_positions(a, std::move(u), std::move(prov));
  return shift(c, -m);
}

Complex unfold_band(AlgebraPtr a, const HomotopyBand& w, int m, const Rational& mu) {
  if (sgn(mu) == 0) throw DomainError("band scalar must be nonzero");
  Provenance prov;
  prov.is_band = true;
  prov.band = w;
  prov.scalar = mu;
  Unfolding u = unfold_letters(*a, w.letters, letter_start(*a, w.letters.front()), true, mu);
  Complex c = build_from_positions(a, std::move(u), std::move(prov));
  return shift(c, -m);
}

Complex shift(const Complex& c, int t) {
  if (t == 0) return c;
  Rational sign = (t % 2 == 0) ? 1 : -1;
  const AlgebraPtr& a = c.algebra();
  Complex out;
  if (c.projective()) {
    ProjectiveLayout l = *c.layout();
    l.lo -= t;
    for (auto& em : l.diff)
      for (auto& row : em)
        for (auto& e : row) e = e.scaled(sign);
    out = Complex::from_layout(a, std::move(l));
  } else {
    std::vector<Representation> terms;
    std::vector<std::vector<Matrix<Rational>>> diff;
    for (int d = c.lo(); d <= c.hi(); ++d) {
      terms.push_back(c.term(d));
      std::vector<Matrix<Rational>> per;
      for (int v = 0; v < a->vertex_count(); ++v) {
        Matrix<Rational> m = c.d(d, v);
        for (int i = 0; i < m.rows(); ++i)
          for (int j = 0; j < m.cols(); ++j) m(i, j) *= sign;
        per.push_back(std::move(m));
      }
      diff.push_back(std::move(per));
    }
    out = Complex::from_terms(a, c.lo() - t, std::move(terms), std::move(diff));
  }
  if (c.provenance()) {
    Provenance p = *c.provenance();
    p.base_shift -= t;
    for (auto& pos : p.positions) pos.degree -= t;
    for (auto& lk : p.links) lk.coeff *= sign;
    out.set_provenance(std::move(p));
  }
  return out;
}

Complex nakayama_on_projectives(const Complex& c) {
  if (!c.projective()) throw DomainError("nakayama_on_projectives needs a complex of projectives");
  const AlgebraPtr& ap = c.algebra();
  const GentleAlgebra& a = *ap;
  const ProjectiveLayout& l = *c.layout();
  int n = a.vertex_count();
  if (c.empty()) return c;
  std::vector<Representation> terms;
  std::vector<std::vector<Matrix<Rational>>> diff;
  for (int d = c.lo(); d <= c.hi(); ++d) {
    const auto& src = l.at(d);
    Representation r;
    r.dims.assign(n, 0);
    std::vector<Representation> parts;
    for (int v : src) parts.push_back(injective(a, v));
    for (const auto& p : parts)
      for (int x = 0; x < n; ++x) r.dims[x] += p.dims[x];
    for (int al = 0; al < a.arrow_count(); ++al) {
      int x = a.presentation().arrows[al].source, y = a.presentation().arrows[al].target;
      Matrix<Rational> m(r.dims[y], r.dims[x]);
      int ro = 0, co = 0;
      for (const auto& p : parts) {
        for (int i = 0; i < p.dims[y]; ++i)
          for (int j = 0; j < p.dims[x]; ++j) m(ro + i, co + j) = p.action[al](i, j);
        ro += p.dims[y];
        co += p.dims[x];
      }
      r.action.push_back(std::move(m));
    }
    terms.push_back(std::move(r));
    // differential d -> d+1: component s -> t with element q gives I(v_s) -> I(v_t)
    const auto& dst = l.at(d + 1);
    std::vector<Matrix<Rational>> per;
    for (int x = 0; x < n; ++x) {
      int rows = 0, cols = 0;
      std::vector<int> roff, coff;
      for (int v : dst) {
        roff.push_back(rows);
        rows += a.paths_count(x, v);
      }
      for (int v : src) {
        coff.push_back(cols);
        cols += a.paths_count(x, v);
      }
      Matrix<Rational> m(rows, cols);
      if (d < c.hi())
        for (size_t t = 0; t < dst.size(); ++t)
          for (size_t s = 0; s < src.size(); ++s) {
            const AlgebraElement& e = l.diff[d - l.lo][t][s];
            if (e.is_zero()) continue;
            const auto& ys = a.paths_between(x, dst[t]);
            for (const auto& [q, coeff] : e.terms)
              for (size_t k = 0; k < ys.size(); ++k) {
                int p = a.compose(q, ys[k]);
                if (p < 0) continue;
                m(roff[t] + static_cast<int>(k), coff[s] + a.position_in_between(p)) += coeff;
              }
          }
      per.push_back(std::move(m));
    }
    diff.push_back(std::move(per));
  }
  return Complex::from_terms(ap, c.lo(), std::move(terms), std::move(diff));
}

// ---------------------------------------------------------------- checks

std::string check_complex(const Complex& c) {
  if (c.empty()) return "";
  const GentleAlgebra& a = *c.algebra();
  const auto& pr = a.presentation();
  for (int d = c.lo(); d <= c.hi(); ++d) {
    if (!relations_vanish(a, c.term(d))) return "relations act nontrivially in degree " + std::to_string(d);
    for (int v = 0; v < a.vertex_count(); ++v)
      if (!multiply(c.d(d + 1, v), c.d(d, v)).is_zero())
        return "d∘d != 0 at degree " + std::to_string(d) + ", vertex " + a.vertex_name(v);
    for (int al = 0; al < a.arrow_count(); ++al) {
      int x = pr.arrows[al].source, y = pr.arrows[al].target;
      if (!(multiply(c.d(d, y), c.term(d).action[al]) == multiply(c.term(d + 1).action[al], c.d(d, x))))
        return "differential in degree " + std::to_string(d) + " does not commute with arrow " + pr.arrows[al].name;
    }
  }
  return "";
}

std::map<int, std::vector<int>> cohomology_dims(const Complex& c) {
  std::map<int, std::vector<int>> out;
  if (c.empty()) return out;
  int n = c.algebra()->vertex_count();
  for (int d = c.lo(); d <= c.hi(); ++d) {
    std::vector<int> dims(n);
    bool nonzero = false;
    for (int v = 0; v < n; ++v) {
      int ker = c.dim(d, v) - rank(c.d(d, v));
      int im = rank(c.d(d - 1, v));
      dims[v] = ker - im;
      nonzero = nonzero || dims[v] != 0;
    }
    if (nonzero) out[d] = dims;
  }
  return out;
}

Fingerprint fingerprint(const Complex& c) {
  if (!c.projective()) throw DomainError("fingerprint needs a complex of projectives");
  Fingerprint f;
  if (c.empty()) return f;
  f.top = c.hi();
  const auto& l = *c.layout();
  for (int d = c.lo(); d <= c.hi(); ++d)
    for (int v : l.at(d)) f.shape.push_back({d - f.top, v});
  std::sort(f.shape.begin(), f.shape.end());
  return f;
}

}  // namespace gentle
