#include <algorithm>

#include "gentle/complexes.hpp"
#include "gentle/error.hpp"

namespace gentle {

namespace {

// Block matrix helper: place m at (r0, c0).
void place(Matrix<Rational>& dst, const Matrix<Rational>& m, int r0, int c0, const Rational& scale = 1) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0) dst(r0 + i, c0 + j) = m(i, j) * scale;
}

struct Stage {
  std::vector<int> summands;           // vertices of P^i
  std::vector<std::vector<Rational>> phi;  // generator images in C^i
  ElementMatrix diff;                  // P^i -> P^{i+1}: rows summands(i+1)
};

// Rep-level matrix at x of the map P^i -> C^i determined by generator images.
Matrix<Rational> phi_at(const GentleAlgebra& a, const Stage& st, const Complex& c, int deg, int x) {
  const Representation& ci = c.term(deg);
  int rows = ci.dims[x];
  int cols = 0;
  for (int v : st.summands) cols += a.paths_count(v, x);
  Matrix<Rational> out(rows, cols);
  int col = 0;
  for (size_t s = 0; s < st.summands.size(); ++s) {
    int v = st.summands[s];
    for (int p : a.paths_between(v, x)) {
      Matrix<Rational> act = path_action(a, ci, p);
      std::vector<Rational> img = mat_vec(act, st.phi[s]);
      for (int r = 0; r < rows; ++r) out(r, col) = img[r];
      ++col;
    }
  }
  return out;
}

}  // namespace

Complex perfect_replacement(const Complex& c) {
  const AlgebraPtr& ap = c.algebra();
  if (c.empty()) return Complex::from_layout(ap, ProjectiveLayout{});
  const GentleAlgebra& a = *ap;
  int n = a.vertex_count();
  const auto& pr = a.presentation();
  int bound = c.lo() - (2 * a.dimension() + 4);

  std::vector<Stage> stages;  // stages[k] is degree hi - k
  Stage above;                // P^{i+1}; empty at the start
  Stage above2;               // P^{i+2}
  for (int i = c.hi();; --i) {
    if (i < bound) throw InternalError("projective resolution did not terminate within the configured bound");
    if (i < c.lo() && above.summands.empty()) break;
    Representation pa = projective_sum(a, above.summands);
    const Representation& ci = c.term(i);
    Stage st;
    // kernel of d_Z at every vertex
    std::vector<Matrix<Rational>> kernel(n);
    std::vector<int> zp(n), zc(n);
    for (int x = 0; x < n; ++x) {
      zp[x] = pa.dims[x];
      zc[x] = ci.dims[x];
      Matrix<Rational> dp = layout_map_at(a, above.summands, above2.summands, above.diff, x);
      Matrix<Rational> phi1 = phi_at(a, above, c, i + 1, x);
      const Matrix<Rational>& dc = c.d(i, x);
      int rows = dp.rows() + c.dim(i + 1, x);
      Matrix<Rational> dz(rows, zp[x] + zc[x]);
      place(dz, dp, 0, 0, -1);
      place(dz, phi1, dp.rows(), 0);
      if (dc.rows() && dc.cols()) place(dz, dc, dp.rows(), zp[x]);
      kernel[x] = nullspace(dz);
    }
    for (int x = 0; x < n; ++x) {
      int dimz = zp[x] + zc[x];
      if (kernel[x].cols() == 0) continue;
      EchelonBasis<Rational> span(dimz);
      const Matrix<Rational>& dc_prev = c.d(i - 1, x);
      for (int j = 0; j < dc_prev.cols(); ++j) {
        std::vector<Rational> v(dimz, Rational(0));
        for (int r = 0; r < dc_prev.rows(); ++r) v[zp[x] + r] = dc_prev(r, j);
        span.add(v);
      }
      for (int al : a.in_arrows(x)) {
        int y = pr.arrows[al].source;
        for (int k = 0; k < kernel[y].cols(); ++k) {
          std::vector<Rational> ky = kernel[y].column(k);
          std::vector<Rational> v(dimz, Rational(0));
          std::vector<Rational> kp(ky.begin(), ky.begin() + zp[y]);
          std::vector<Rational> kc(ky.begin() + zp[y], ky.end());
          auto ip = mat_vec(pa.action[al], kp);
          auto ic = mat_vec(ci.action[al], kc);
          std::copy(ip.begin(), ip.end(), v.begin());
          std::copy(ic.begin(), ic.end(), v.begin() + zp[x]);
          span.add(v);
        }
      }
      for (int k = 0; k < kernel[x].cols(); ++k) {
        std::vector<Rational> g = kernel[x].column(k);
        if (!span.add(g)) continue;
        st.summands.push_back(x);
        st.phi.emplace_back(g.begin() + zp[x], g.end());
        // components towards P^{i+1}: minus the P-part of the generator
        auto off = summand_offsets(a, above.summands);
        std::vector<AlgebraElement> col(above.summands.size());
        for (size_t t = 0; t < above.summands.size(); ++t) {
          const auto& ps = a.paths_between(above.summands[t], x);
          for (size_t q = 0; q < ps.size(); ++q) {
            const Rational& coeff = g[off[t][x] + q];
            if (sgn(coeff) != 0) col[t].add(AlgebraElement::path(ps[q], -coeff));
          }
        }
        // store column-wise, transposed into rows below
        if (st.diff.empty()) st.diff.assign(above.summands.size(), {});
        for (size_t t = 0; t < above.summands.size(); ++t) st.diff[t].push_back(col[t]);
      }
    }
    if (st.diff.empty()) st.diff.assign(above.summands.size(), std::vector<AlgebraElement>(st.summands.size()));
    stages.push_back(st);
    above2 = std::move(above);
    above = std::move(st);
  }
  // assemble: stages[k] holds degree hi - k
  ProjectiveLayout l;
  int count = static_cast<int>(stages.size());
  l.lo = c.hi() - count + 1;
  for (int k = count - 1; k >= 0; --k) {
    l.summands.push_back(stages[k].summands);
    l.diff.push_back(stages[k].diff);
  }
  Complex out = Complex::from_layout(ap, std::move(l));
  std::string err = check_complex(out);
  if (!err.empty()) throw InternalError("perfect replacement is not a complex: " + err);
  if (cohomology_dims(out) != cohomology_dims(c))
    throw InternalError("perfect replacement changed cohomology dimension vectors");
  return out;
}

Complex minimize(const Complex& c) {
  if (!c.projective()) throw DomainError("minimize needs a complex of projectives");
  const AlgebraPtr& ap = c.algebra();
  const GentleAlgebra& a = *ap;
  ProjectiveLayout l = *c.layout();
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t k = 0; k + 1 < l.summands.size() && !changed; ++k) {
      auto& src = l.summands[k];
      auto& dst = l.summands[k + 1];
      for (size_t t = 0; t < dst.size() && !changed; ++t)
        for (size_t s = 0; s < src.size() && !changed; ++s) {
          if (src[s] != dst[t]) continue;
          const AlgebraElement& phi = l.diff[k][t][s];
          if (sgn(phi.coefficient(a.trivial_path(src[s]))) == 0) continue;
          AlgebraElement psi = invert(a, src[s], phi);
          ElementMatrix& D = l.diff[k];
          ElementMatrix nd;
          for (size_t b = 0; b < dst.size(); ++b) {
            if (b == t) continue;
            std::vector<AlgebraElement> row;
            for (size_t aa = 0; aa < src.size(); ++aa) {
              if (aa == s) continue;
              AlgebraElement e = D[b][aa];
              if (!D[t][aa].is_zero() && !D[b][s].is_zero())
                e.add(follow(a, follow(a, D[t][aa], psi), D[b][s]), -1);
              row.push_back(std::move(e));
            }
            nd.push_back(std::move(row));
          }
          D = std::move(nd);
          if (k > 0) l.diff[k - 1].erase(l.diff[k - 1].begin() + s);
          if (k + 1 < l.diff.size())
            for (auto& row : l.diff[k + 1]) row.erase(row.begin() + t);
          src.erase(src.begin() + s);
          dst.erase(dst.begin() + t);
          changed = true;
        }
    }
  }
  Complex out = Complex::from_layout(ap, std::move(l));
  if (c.provenance() && out.lo() == c.lo() && out.hi() == c.hi() && fingerprint(out).shape == fingerprint(c).shape)
    out.set_provenance(*c.provenance());
  return out;
}

Complex serre(const Complex& c) { return minimize(perfect_replacement(nakayama_on_projectives(c))); }

}  // namespace gentle
