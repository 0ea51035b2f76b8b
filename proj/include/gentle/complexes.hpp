#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gentle/linalg.hpp"
#include "gentle/presentation.hpp"
#include "gentle/words.hpp"

namespace gentle {

// A linear combination of basis paths; terms sorted by path index, no zero coefficients.
struct AlgebraElement {
  std::vector<std::pair<int, Rational>> terms;

  static AlgebraElement path(int p, const Rational& c = 1);
  bool is_zero() const { return terms.empty(); }
  Rational coefficient(int p) const;
  AlgebraElement& add(const AlgebraElement& o, const Rational& scale = 1);
  AlgebraElement scaled(const Rational& c) const;
  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) { return x.terms == y.terms; }
};

// The element of the map "r_first, then r_second", that is first∘second as paths.
AlgebraElement follow(const GentleAlgebra& a, const AlgebraElement& first, const AlgebraElement& second);
// Inverse of an element of e_v A e_v with nonzero e_v coefficient.
AlgebraElement invert(const GentleAlgebra& a, int v, const AlgebraElement& x);
std::string element_text(const GentleAlgebra& a, const AlgebraElement& x);

using ElementMatrix = std::vector<std::vector<AlgebraElement>>;  // [target summand][source summand]

struct Representation {
  std::vector<int> dims;
  std::vector<Matrix<Rational>> action;  // per arrow: dims[target] x dims[source]

  static Representation zero(const GentleAlgebra& a);
  int total() const;
  bool is_zero() const { return total() == 0; }
};

Representation projective(const GentleAlgebra& a, int v);
Representation injective(const GentleAlgebra& a, int v);
Representation simple(const GentleAlgebra& a, int v);
// Matrix of a path acting on a representation.
Matrix<Rational> path_action(const GentleAlgebra& a, const Representation& r, int path);
bool relations_vanish(const GentleAlgebra& a, const Representation& r);

// A complex of projectives in the standard basis: summand vertices per degree and
// differential components, each a combination of paths q acting as right multiplication.
struct ProjectiveLayout {
  int lo = 0;
  std::vector<std::vector<int>> summands;  // index d - lo
  std::vector<ElementMatrix> diff;          // index d - lo: summands(d+1) x summands(d)

  int hi() const { return lo + static_cast<int>(summands.size()) - 1; }
  const std::vector<int>& at(int d) const;
};

struct Position {
  int vertex = 0;
  int degree = 0;
  int summand = 0;
};

// A differential component from one position to another.
struct Link {
  int from = 0;
  int to = 0;
  int path = 0;
  Rational coeff = 1;
};

struct Provenance {
  bool is_band = false;
  HomotopyString string;
  HomotopyBand band;
  int base_shift = 0;
  Rational scalar = 1;
  std::vector<Position> positions;
  std::vector<Link> links;
};

class Complex {
 public:
  Complex() = default;
  explicit Complex(AlgebraPtr a);

  const AlgebraPtr& algebra() const { return alg_; }
  bool empty() const { return hi_ < lo_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  const Representation& term(int d) const;
  int dim(int d, int v) const { return term(d).dims[v]; }
  // differential d -> d+1 at vertex v
  const Matrix<Rational>& d(int deg, int v) const;

  const std::optional<ProjectiveLayout>& layout() const { return layout_; }
  const std::optional<Provenance>& provenance() const { return provenance_; }
  bool projective() const { return layout_.has_value(); }

  // Builders; degrees outside [lo, lo + terms.size()) are zero.
  static Complex from_terms(AlgebraPtr a, int lo, std::vector<Representation> terms,
                            std::vector<std::vector<Matrix<Rational>>> diff);
  static Complex from_layout(AlgebraPtr a, ProjectiveLayout layout);
  void set_provenance(Provenance p) { provenance_ = std::move(p); }

 private:
  void trim();
  AlgebraPtr alg_;
  int lo_ = 0;
  int hi_ = -1;
  std::vector<Representation> terms_;
  std::vector<std::vector<Matrix<Rational>>> diff_;
  std::optional<ProjectiveLayout> layout_;
  std::optional<Provenance> provenance_;
  Representation zero_rep_;
  mutable std::map<std::pair<int, int>, Matrix<Rational>> zero_maps_;
};

// Offsets of each summand inside (⊕ P(v_s))_x.
std::vector<std::vector<int>> summand_offsets(const GentleAlgebra& a, const std::vector<int>& summands);
Representation projective_sum(const GentleAlgebra& a, const std::vector<int>& summands);
// Rep-level matrix at vertex x of the map ⊕P(src) -> ⊕P(dst) given by an element matrix.
Matrix<Rational> layout_map_at(const GentleAlgebra& a, const std::vector<int>& src, const std::vector<int>& dst,
                               const ElementMatrix& m, int x);

Complex stalk(AlgebraPtr a, const Representation& r, int degree);
Complex projective_stalk(AlgebraPtr a, int v, int degree);
Complex unfold_string(AlgebraPtr a, const HomotopyString& w, int m = 0);
Complex unfold_band(AlgebraPtr a, const HomotopyBand& w, int m, const Rational& mu);
Complex shift(const Complex& c, int t);
Complex nakayama_on_projectives(const Complex& c);
Complex perfect_replacement(const Complex& c);
Complex minimize(const Complex& c);
// minimize(perfect_replacement(nakayama_on_projectives(c)))
Complex serre(const Complex& c);

// Empty string when d∘d = 0 and every differential is a module map.
std::string check_complex(const Complex& c);
std::map<int, std::vector<int>> cohomology_dims(const Complex& c);

// Sorted (degree - top degree, vertex) pairs of a projective complex; top degree returned separately.
struct Fingerprint {
  std::vector<std::pair<int, int>> shape;
  int top = 0;
};
Fingerprint fingerprint(const Complex& c);

}  // namespace gentle
