#pragma once

#include <map>
#include <memory>
#include <vector>

#include "gentle/complexes.hpp"
#include "gentle/linalg.hpp"

namespace gentle {

enum class Arith { exact, modular };

// The complex C^n = ∏_i Hom_A(X^i, Y^{i+n}) with δφ = d_Y φ − (−1)^n φ d_X.
// A projective source uses coordinates φ(e_s) ∈ (Y^{i+n})_{v_s} per summand s of X^i;
// any other source uses bases of module homomorphisms.
class HomComplex {
 public:
  HomComplex(const Complex& x, const Complex& y);
  ~HomComplex();
  HomComplex(const HomComplex&) = delete;
  HomComplex& operator=(const HomComplex&) = delete;

  int window_lo() const { return wlo_; }
  int window_hi() const { return whi_; }
  bool projective_source() const { return x_.projective(); }
  int dim(int n) const;
  template <class F>
  Matrix<F> delta(int n) const;

  // Per-degree, per-vertex matrices of the map with coordinates c in C^n.
  std::vector<std::vector<Matrix<Rational>>> morphism(int n, const std::vector<Rational>& c) const;
  // Coordinates in C^n of a family of module maps X^i -> Y^{i+n} (indexed by i - X.lo()).
  std::vector<Rational> coordinates(int n, const std::vector<std::vector<Matrix<Rational>>>& maps) const;

  const Complex& source() const { return x_; }
  const Complex& target() const { return y_; }

 private:
  struct General;
  const Complex& x_;
  const Complex& y_;
  int wlo_ = 0;
  int whi_ = -1;
  std::unique_ptr<General> general_;
  mutable std::map<std::pair<int, int>, Matrix<Rational>> action_cache_;
  const Matrix<Rational>& y_action(int deg, int path) const;
};

struct GradedHomProfile {
  int lo = 0;
  int hi = -1;
  std::map<int, int> dims;  // nonzero entries only
  int at(int n) const {
    auto it = dims.find(n);
    return it == dims.end() ? 0 : it->second;
  }
  int total() const;
};

struct ChainMapSpace {
  int shift = 0;
  int dimension = 0;
  std::vector<std::vector<Rational>> basis;  // coordinates in HomComplex(X, Y) at degree shift
};

// dim Hom_K(X, Y[n])
int hom_k_dim(const Complex& x, const Complex& y, int n = 0, Arith arith = Arith::exact);
GradedHomProfile graded_profile(const Complex& x, const Complex& y, Arith arith = Arith::exact);
// dim Hom_K(X, Y[n]) for n = 0 only, computed via the general (module homomorphism) route.
int hom_k_dim_general(const Complex& x, const Complex& y, int n = 0);
ChainMapSpace chain_map_space(const Complex& x, const Complex& y, int n = 0);
int chain_map_dim(const Complex& x, const Complex& y, int n = 0, Arith arith = Arith::exact);
int homotopy_space_dim(const Complex& x, const Complex& y, int n = 0, Arith arith = Arith::exact);
bool is_null_homotopic(const Complex& x, const Complex& y, int n, const std::vector<Rational>& coords);
bool iso_indecomposable(const Complex& x, const Complex& y, Arith arith = Arith::exact);
// Sum over n of (-1)^n dim C^n; needs no ranks.
int euler_characteristic(const Complex& x, const Complex& y);

}  // namespace gentle
