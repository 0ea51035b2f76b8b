#include "gentle/hom.hpp"

#include <algorithm>

#include "gentle/error.hpp"

namespace gentle {

namespace {

struct Block {
  int deg = 0;      // degree i of X
  int summand = 0;  // projective route only
  int vertex = 0;
  int offset = 0;
  int size = 0;
};

// Basis of Hom_A(M, N), each element flattened vertex by vertex (row-major).
struct HomBasis {
  std::vector<int> rows, cols, offsets;
  int flat = 0;
  std::vector<std::vector<Rational>> basis;
  CoordinateMap<Rational> coords;
};

HomBasis module_homs(const GentleAlgebra& a, const Representation& m, const Representation& n) {
  HomBasis h;
  int nv = a.vertex_count();
  for (int x = 0; x < nv; ++x) {
    h.rows.push_back(n.dims[x]);
    h.cols.push_back(m.dims[x]);
    h.offsets.push_back(h.flat);
    h.flat += n.dims[x] * m.dims[x];
  }
  if (h.flat == 0) return h;
  const auto& pr = a.presentation();
  int eqs = 0;
  for (const auto& ar : pr.arrows) eqs += n.dims[ar.target] * m.dims[ar.source];
  Matrix<Rational> cons(eqs, h.flat);
  int row = 0;
  for (int al = 0; al < a.arrow_count(); ++al) {
    int x = pr.arrows[al].source, y = pr.arrows[al].target;
    const auto& na = n.action[al];
    const auto& ma = m.action[al];
    // (N_al F_x - F_y M_al)(r, c)
    for (int r = 0; r < n.dims[y]; ++r)
      for (int c = 0; c < m.dims[x]; ++c) {
        for (int k = 0; k < n.dims[x]; ++k)
          if (sgn(na(r, k)) != 0) cons(row, h.offsets[x] + k * m.dims[x] + c) += na(r, k);
        for (int k = 0; k < m.dims[y]; ++k)
          if (sgn(ma(k, c)) != 0) cons(row, h.offsets[y] + r * m.dims[y] + k) -= ma(k, c);
        ++row;
      }
  }
  Matrix<Rational> ns = nullspace(cons);
  for (int k = 0; k < ns.cols(); ++k) h.basis.push_back(ns.column(k));
  h.coords = CoordinateMap<Rational>(ns);
  return h;
}

std::vector<Matrix<Rational>> unflatten(const HomBasis& h, const std::vector<Rational>& v) {
  std::vector<Matrix<Rational>> out;
  for (size_t x = 0; x < h.rows.size(); ++x) {
    Matrix<Rational> m(h.rows[x], h.cols[x]);
    for (int r = 0; r < h.rows[x]; ++r)
      for (int c = 0; c < h.cols[x]; ++c) m(r, c) = v[h.offsets[x] + r * h.cols[x] + c];
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Rational> flatten(const HomBasis& h, const std::vector<Matrix<Rational>>& ms) {
  std::vector<Rational> v(h.flat, Rational(0));
  for (size_t x = 0; x < h.rows.size(); ++x)
    for (int r = 0; r < h.rows[x]; ++r)
      for (int c = 0; c < h.cols[x]; ++c) v[h.offsets[x] + r * h.cols[x] + c] = ms[x](r, c);
  return v;
}

}  // namespace

struct HomComplex::General {
  std::map<std::pair<int, int>, HomBasis> cache;
  std::map<int, std::vector<Block>> blocks;
  // (degree of Y, path) -> nonzero (row, col) of the action on a projective Y; all entries are 1
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> units;
};

HomComplex::HomComplex(const Complex& x, const Complex& y) : x_(x), y_(y) {
  if (x.algebra() != y.algebra() && x.algebra() && y.algebra() &&
      x.algebra()->presentation().name != y.algebra()->presentation().name)
    throw DomainError("complexes over different algebras");
  if (!x.empty() && !y.empty()) {
    wlo_ = y.lo() - x.hi();
    whi_ = y.hi() - x.lo();
  }
  general_ = std::make_unique<General>();
}

HomComplex::~HomComplex() = default;

const Matrix<Rational>& HomComplex::y_action(int deg, int path) const {
  auto key = std::make_pair(deg, path);
  auto it = action_cache_.find(key);
  if (it != action_cache_.end()) return it->second;
  return action_cache_[key] = path_action(*y_.algebra(), y_.term(deg), path);
}

namespace {

std::vector<Block> projective_blocks(const Complex& x, const Complex& y, int n) {
  std::vector<Block> out;
  if (x.empty()) return out;
  const auto& l = *x.layout();
  int off = 0;
  for (int i = x.lo(); i <= x.hi(); ++i) {
    const auto& sm = l.at(i);
    for (size_t s = 0; s < sm.size(); ++s) {
      Block b;
      b.deg = i;
      b.summand = static_cast<int>(s);
      b.vertex = sm[s];
      b.offset = off;
      b.size = y.dim(i + n, sm[s]);
      off += b.size;
      out.push_back(b);
    }
  }
  return out;
}

int blocks_total(const std::vector<Block>& bs) {
  int t = 0;
  for (const auto& b : bs) t += b.size;
  return t;
}

const HomBasis& general_basis(std::map<std::pair<int, int>, HomBasis>& cache, const Complex& x, const Complex& y,
                              int i, int j) {
  auto key = std::make_pair(i, j);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  return cache[key] = module_homs(*x.algebra(), x.term(i), y.term(j));
}

const std::vector<Block>& hom_blocks(std::map<int, std::vector<Block>>& cache, const Complex& x, const Complex& y,
                                      int n) {
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  return cache[n] = projective_blocks(x, y, n);
}

// Action of a path on a projective term, as the list of its unit entries.
const std::vector<std::pair<int, int>>& unit_action(std::map<std::pair<int, int>, std::vector<std::pair<int, int>>>& cache,
                                                    const Complex& y, int deg, int q) {
  auto key = std::make_pair(deg, q);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const GentleAlgebra& a = *y.algebra();
  const auto& sm = y.layout()->at(deg);
  auto off = summand_offsets(a, sm);
  int from = a.path(q).source, to = a.path(q).target;
  std::vector<std::pair<int, int>> out;
  for (size_t t = 0; t < sm.size(); ++t) {
    const auto& ps = a.paths_between(sm[t], from);
    for (size_t k = 0; k < ps.size(); ++k) {
      int r = a.compose(q, ps[k]);
      if (r >= 0) out.push_back({off[t][to] + a.position_in_between(r), off[t][from] + static_cast<int>(k)});
    }
  }
  return cache[key] = std::move(out);
}

}  // namespace

int HomComplex::dim(int n) const {
  if (x_.empty() || y_.empty() || n < wlo_ || n > whi_) return 0;
  if (x_.projective()) return blocks_total(hom_blocks(general_->blocks, x_, y_, n));
  int t = 0;
  for (int i = x_.lo(); i <= x_.hi(); ++i)
    t += static_cast<int>(general_basis(general_->cache, x_, y_, i, i + n).basis.size());
  return t;
}

template <class F>
Matrix<F> HomComplex::delta(int n) const {
  int cols = dim(n), rows = dim(n + 1);
  Matrix<F> out(rows, cols);
  if (rows == 0 || cols == 0) return out;
  const GentleAlgebra& a = *x_.algebra();
  Rational sign = (n % 2 == 0) ? -1 : 1;  // −(−1)^n
  if (x_.projective()) {
    const auto& src = hom_blocks(general_->blocks, x_, y_, n);
    const auto& dst = hom_blocks(general_->blocks, x_, y_, n + 1);
    const auto& l = *x_.layout();
    // blocks are ordered by (degree, summand), so both lists share indices
    std::vector<int> first(x_.hi() - x_.lo() + 2, 0);
    for (int i = x_.lo(); i <= x_.hi(); ++i) first[i - x_.lo() + 1] = first[i - x_.lo()] + static_cast<int>(l.at(i).size());
    for (size_t bi = 0; bi < src.size(); ++bi) {
      const Block& b = src[bi];
      const Block& r = dst[bi];
      const Matrix<Rational>& dy = y_.d(b.deg + n, b.vertex);
      for (int i = 0; i < dy.rows(); ++i)
        for (int j = 0; j < dy.cols(); ++j)
          if (sgn(dy(i, j)) != 0) out(r.offset + i, b.offset + j) += FieldOps<F>::from(dy(i, j));
    }
    for (int i = x_.lo(); i < x_.hi(); ++i) {
      const auto& from = l.at(i);
      const auto& to = l.at(i + 1);
      for (size_t t = 0; t < from.size(); ++t)
        for (size_t s = 0; s < to.size(); ++s) {
          const AlgebraElement& e = l.diff[i - l.lo][s][t];
          if (e.is_zero()) continue;
          const Block& rb = dst[first[i - x_.lo()] + t];
          const Block& cb = src[first[i + 1 - x_.lo()] + s];
          if (rb.size == 0 || cb.size == 0) continue;
          for (const auto& [q, c] : e.terms) {
            Rational k = c * sign;
            if (y_.projective()) {
              F kf = FieldOps<F>::from(k);
              for (auto [r, cc] : unit_action(general_->units, y_, i + 1 + n, q)) out(rb.offset + r, cb.offset + cc) += kf;
              continue;
            }
            const Matrix<Rational>& act = y_action(i + 1 + n, q);
            for (int r = 0; r < act.rows(); ++r)
              for (int cc = 0; cc < act.cols(); ++cc)
                if (sgn(act(r, cc)) != 0) out(rb.offset + r, cb.offset + cc) += FieldOps<F>::from(act(r, cc) * k);
          }
        }
    }
    return out;
  }
  // general route
  auto& cache = general_->cache;
  std::map<int, int> src_off, dst_off;
  int o = 0;
  for (int i = x_.lo(); i <= x_.hi(); ++i) {
    src_off[i] = o;
    o += static_cast<int>(general_basis(cache, x_, y_, i, i + n).basis.size());
  }
  o = 0;
  for (int i = x_.lo(); i <= x_.hi(); ++i) {
    dst_off[i] = o;
    o += static_cast<int>(general_basis(cache, x_, y_, i, i + n + 1).basis.size());
  }
  int nv = a.vertex_count();
  for (int i = x_.lo(); i <= x_.hi(); ++i) {
    const HomBasis& hb = general_basis(cache, x_, y_, i, i + n);
    for (size_t k = 0; k < hb.basis.size(); ++k) {
      auto phi = unflatten(hb, hb.basis[k]);
      // d_Y φ
      {
        const HomBasis& tb = general_basis(cache, x_, y_, i, i + n + 1);
        if (!tb.basis.empty()) {
          std::vector<Matrix<Rational>> comp;
          for (int v = 0; v < nv; ++v) comp.push_back(multiply(y_.d(i + n, v), phi[v]));
          auto coords = tb.coords.coordinates(flatten(tb, comp));
          for (size_t r = 0; r < coords.size(); ++r)
            if (sgn(coords[r]) != 0) out(dst_off[i] + static_cast<int>(r), src_off[i] + static_cast<int>(k)) += FieldOps<F>::from(coords[r]);
        }
      }
      // −(−1)^n φ d_X, landing in Hom(X^{i-1}, Y^{i+n})
      if (i - 1 >= x_.lo()) {
        const HomBasis& tb = general_basis(cache, x_, y_, i - 1, i + n);
        if (!tb.basis.empty()) {
          std::vector<Matrix<Rational>> comp;
          for (int v = 0; v < nv; ++v) comp.push_back(multiply(phi[v], x_.d(i - 1, v)));
          auto coords = tb.coords.coordinates(flatten(tb, comp));
          for (size_t r = 0; r < coords.size(); ++r)
            if (sgn(coords[r]) != 0)
              out(dst_off[i - 1] + static_cast<int>(r), src_off[i] + static_cast<int>(k)) +=
                  FieldOps<F>::from(coords[r] * sign);
        }
      }
    }
  }
  return out;
}

template Matrix<Rational> HomComplex::delta<Rational>(int n) const;
template Matrix<Fp> HomComplex::delta<Fp>(int n) const;

std::vector<std::vector<Matrix<Rational>>> HomComplex::morphism(int n, const std::vector<Rational>& c) const {
  std::vector<std::vector<Matrix<Rational>>> out;
  if (x_.empty()) return out;
  const GentleAlgebra& a = *x_.algebra();
  int nv = a.vertex_count();
  if (x_.projective()) {
    auto blocks = projective_blocks(x_, y_, n);
    const auto& l = *x_.layout();
    size_t bi = 0;
    for (int i = x_.lo(); i <= x_.hi(); ++i) {
      const auto& sm = l.at(i);
      auto off = summand_offsets(a, sm);
      std::vector<Matrix<Rational>> per;
      for (int x = 0; x < nv; ++x) per.emplace_back(y_.dim(i + n, x), x_.dim(i, x));
      for (size_t s = 0; s < sm.size(); ++s, ++bi) {
        const Block& b = blocks[bi];
        std::vector<Rational> ys(c.begin() + b.offset, c.begin() + b.offset + b.size);
        for (int x = 0; x < nv; ++x) {
          const auto& ps = a.paths_between(sm[s], x);
          for (size_t k = 0; k < ps.size(); ++k) {
            auto img = mat_vec(y_action(i + n, ps[k]), ys);
            for (size_t r = 0; r < img.size(); ++r) per[x](static_cast<int>(r), off[s][x] + static_cast<int>(k)) = img[r];
          }
        }
      }
      out.push_back(std::move(per));
    }
    return out;
  }
  int o = 0;
  for (int i = x_.lo(); i <= x_.hi(); ++i) {
    const HomBasis& hb = general_basis(general_->cache, x_, y_, i, i + n);
    std::vector<Rational> flat(hb.flat, Rational(0));
    for (size_t k = 0; k < hb.basis.size(); ++k)
      for (int j = 0; j < hb.flat; ++j) flat[j] += c[o + k] * hb.basis[k][j];
    o += static_cast<int>(hb.basis.size());
    out.push_back(unflatten(hb, flat));
  }
  return out;
}

std::vector<Rational> HomComplex::coordinates(int n, const std::vector<std::vector<Matrix<Rational>>>& maps) const {
  std::vector<Rational> out(dim(n), Rational(0));
  if (x_.empty() || out.empty()) return out;
  const GentleAlgebra& a = *x_.algebra();
  if (x_.projective()) {
    const auto& l = *x_.layout();
    for (const auto& b : projective_blocks(x_, y_, n)) {
      auto off = summand_offsets(a, l.at(b.deg));
      const Matrix<Rational>& m = maps[b.deg - x_.lo()][b.vertex];
      int col = off[b.summand][b.vertex] + a.position_in_between(a.trivial_path(b.vertex));
      for (int r = 0; r < b.size; ++r) out[b.offset + r] = m(r, col);
    }
    return out;
  }
  int o = 0;
  for (int i = x_.lo(); i <= x_.hi(); ++i) {
    const HomBasis& hb = general_basis(general_->cache, x_, y_, i, i + n);
    if (!hb.basis.empty()) {
      auto cs = hb.coords.coordinates(flatten(hb, maps[i - x_.lo()]));
      for (size_t k = 0; k < cs.size(); ++k) out[o + k] = cs[k];
    }
    o += static_cast<int>(hb.basis.size());
  }
  return out;
}

int GradedHomProfile::total() const {
  int t = 0;
  for (auto& [k, v] : dims) t += v;
  return t;
}

namespace {

template <class F>
int hom_dim_impl(const HomComplex& h, int n) {
  int c = h.dim(n);
  if (c == 0) return 0;
  return c - rank(h.template delta<F>(n)) - rank(h.template delta<F>(n - 1));
}

template <class F>
GradedHomProfile profile_impl(const HomComplex& h) {
  GradedHomProfile p;
  p.lo = h.window_lo();
  p.hi = h.window_hi();
  if (p.hi < p.lo) return p;
  std::map<int, int> ranks;
  for (int n = p.lo - 1; n <= p.hi; ++n) ranks[n] = (h.dim(n) && h.dim(n + 1)) ? rank(h.template delta<F>(n)) : 0;
  for (int n = p.lo; n <= p.hi; ++n) {
    int d = h.dim(n) - ranks[n] - ranks[n - 1];
    if (d) p.dims[n] = d;
  }
  return p;
}

}  // namespace

int hom_k_dim(const Complex& x, const Complex& y, int n, Arith arith) {
  HomComplex h(x, y);
  return arith == Arith::exact ? hom_dim_impl<Rational>(h, n) : hom_dim_impl<Fp>(h, n);
}

GradedHomProfile graded_profile(const Complex& x, const Complex& y, Arith arith) {
  HomComplex h(x, y);
  return arith == Arith::exact ? profile_impl<Rational>(h) : profile_impl<Fp>(h);
}

int hom_k_dim_general(const Complex& x, const Complex& y, int n) {
  // strip the projective layout so the module-homomorphism route is used
  std::vector<Representation> terms;
  std::vector<std::vector<Matrix<Rational>>> diff;
  for (int d = x.lo(); d <= x.hi(); ++d) {
    terms.push_back(x.term(d));
    std::vector<Matrix<Rational>> per;
    for (int v = 0; v < x.algebra()->vertex_count(); ++v) per.push_back(x.d(d, v));
    diff.push_back(std::move(per));
  }
  Complex plain = x.empty() ? Complex::from_terms(x.algebra(), 0, {}, {})
                            : Complex::from_terms(x.algebra(), x.lo(), std::move(terms), std::move(diff));
  HomComplex h(plain, y);
  return hom_dim_impl<Rational>(h, n);
}

ChainMapSpace chain_map_space(const Complex& x, const Complex& y, int n) {
  HomComplex h(x, y);
  ChainMapSpace s;
  s.shift = n;
  int c = h.dim(n);
  if (c == 0) return s;
  Matrix<Rational> ns = nullspace(h.delta<Rational>(n));
  s.dimension = ns.cols();
  for (int k = 0; k < ns.cols(); ++k) s.basis.push_back(ns.column(k));
  return s;
}

int chain_map_dim(const Complex& x, const Complex& y, int n, Arith arith) {
  HomComplex h(x, y);
  int c = h.dim(n);
  if (c == 0) return 0;
  return c - (arith == Arith::exact ? rank(h.delta<Rational>(n)) : rank(h.delta<Fp>(n)));
}

int homotopy_space_dim(const Complex& x, const Complex& y, int n, Arith arith) {
  HomComplex h(x, y);
  if (h.dim(n) == 0 || h.dim(n - 1) == 0) return 0;
  return arith == Arith::exact ? rank(h.delta<Rational>(n - 1)) : rank(h.delta<Fp>(n - 1));
}

bool is_null_homotopic(const Complex& x, const Complex& y, int n, const std::vector<Rational>& coords) {
  HomComplex h(x, y);
  if (h.dim(n - 1) == 0) {
    for (const auto& c : coords)
      if (sgn(c) != 0) return false;
    return true;
  }
  Matrix<Rational> b = h.delta<Rational>(n - 1);
  EchelonBasis<Rational> span(b.rows());
  for (int k = 0; k < b.cols(); ++k) span.add(b.column(k));
  return span.contains(coords);
}

int euler_characteristic(const Complex& x, const Complex& y) {
  HomComplex h(x, y);
  int chi = 0;
  for (int n = h.window_lo(); n <= h.window_hi(); ++n) chi += (n % 2 == 0 ? 1 : -1) * h.dim(n);
  return chi;
}

// ---------------------------------------------------------------- isomorphism test

namespace {

template <class F>
std::vector<F> to_field(const std::vector<Rational>& v) {
  std::vector<F> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(FieldOps<F>::from(x));
  return out;
}

// Degree-0 composition g∘f in Yoneda coordinates, for projective X and Y.
template <class F>
class Composer {
 public:
  Composer(const Complex& x, const Complex& y, const Complex& z) : x_(x), y_(y), z_(z) {}

  std::vector<F> compose(const std::vector<F>& f, const std::vector<F>& gv) const {
    const GentleAlgebra& a = *x_.algebra();
    auto fb = projective_blocks(x_, y_, 0);
    auto gb = projective_blocks(y_, z_, 0);
    auto ob = projective_blocks(x_, z_, 0);
    std::vector<F> out(blocks_total(ob), zero<F>());
    std::map<std::pair<int, int>, const Block*> gidx;
    for (const auto& b : gb) gidx[{b.deg, b.summand}] = &b;
    const auto& ly = *y_.layout();
    for (size_t k = 0; k < fb.size(); ++k) {
      const Block& b = fb[k];
      const Block& o = ob[k];
      // f(e_s) ∈ Y^i_{v}, decomposed over the summands t of Y^i and paths v_t -> v
      const auto& ysum = ly.at(b.deg);
      auto off = summand_offsets(a, ysum);
      for (size_t t = 0; t < ysum.size(); ++t) {
        const auto& ps = a.paths_between(ysum[t], b.vertex);
        const Block& g = *gidx.at({b.deg, static_cast<int>(t)});
        for (size_t q = 0; q < ps.size(); ++q) {
          F coeff = f[b.offset + off[t][b.vertex] + q];
          if (FieldOps<F>::is_zero(coeff)) continue;
          const Matrix<F>& act = action(b.deg, ps[q]);
          for (int r = 0; r < act.rows(); ++r) {
            F acc = zero<F>();
            for (int c = 0; c < act.cols(); ++c)
              if (!FieldOps<F>::is_zero(act(r, c))) acc += act(r, c) * gv[g.offset + c];
            out[o.offset + r] += coeff * acc;
          }
        }
      }
    }
    return out;
  }

 private:
  const Matrix<F>& action(int deg, int path) const {
    auto key = std::make_pair(deg, path);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_[key] = convert<F>(path_action(*z_.algebra(), z_.term(deg), path));
  }
  const Complex& x_;
  const Complex& y_;
  const Complex& z_;
  mutable std::map<std::pair<int, int>, Matrix<F>> cache_;
};

template <class F>
struct HomData {
  std::vector<std::vector<F>> reps;  // representatives of a basis of H^0
  EchelonBasis<F> boundaries{0};
  int dim = 0;
};

template <class F>
HomData<F> hom_data(const Complex& x, const Complex& y) {
  HomComplex h(x, y);
  HomData<F> d;
  int c = h.dim(0);
  d.boundaries = EchelonBasis<F>(c);
  if (c == 0) return d;
  if (h.dim(-1)) {
    Matrix<F> b = h.template delta<F>(-1);
    for (int k = 0; k < b.cols(); ++k) d.boundaries.add(b.column(k));
  }
  Matrix<F> z = nullspace(h.template delta<F>(0));
  EchelonBasis<F> span = d.boundaries;
  for (int k = 0; k < z.cols(); ++k) {
    auto v = z.column(k);
    if (span.add(v)) d.reps.push_back(v);
  }
  d.dim = static_cast<int>(d.reps.size());
  return d;
}

template <class F>
bool iso_impl(const Complex& x, const Complex& y) {
  if (x.empty() || y.empty()) return x.empty() && y.empty();
  if (!x.projective() || !y.projective()) throw DomainError("iso_indecomposable needs complexes of projectives");
  auto hxy = hom_data<F>(x, y);
  if (hxy.dim == 0) return false;
  auto hyx = hom_data<F>(y, x);
  if (hyx.dim == 0) return false;
  auto hxx = hom_data<F>(x, x);
  int power = std::max(1, hxx.dim);
  Composer<F> via_y(x, y, x);
  Composer<F> on_x(x, x, x);
  for (const auto& f : hxy.reps)
    for (const auto& g : hyx.reps) {
      std::vector<F> u = via_y.compose(f, g);
      std::vector<F> p = u;
      for (int k = 1; k < power; ++k) p = on_x.compose(p, u);
      if (!hxx.boundaries.contains(p)) return true;
    }
  return false;
}

}  // namespace

bool iso_indecomposable(const Complex& x, const Complex& y, Arith arith) {
  if (!x.empty() && !y.empty()) {
    if (x.lo() > y.hi() || y.lo() > x.hi()) return false;
    if (x.projective() && y.projective() && fingerprint(x).shape == fingerprint(y).shape &&
        fingerprint(x).top != fingerprint(y).top)
      return false;
  }
  return arith == Arith::exact ? iso_impl<Rational>(x, y) : iso_impl<Fp>(x, y);
}

}  // namespace gentle
