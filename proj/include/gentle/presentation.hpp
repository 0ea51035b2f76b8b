#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gentle {

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;
};

// A bound quiver as written in a .gentle file.
struct Presentation {
  std::string name;
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  // (outer, inner): the path outer∘inner lies in I
  std::vector<std::pair<int, int>> relations;

  int vertex_index(std::string_view id) const;  // -1 if absent
  int arrow_index(std::string_view id) const;   // -1 if absent
};

Presentation parse_presentation(std::string_view text);
Presentation load_presentation(const std::filesystem::path& path);
std::string format_presentation(const Presentation& p);

struct SignAssignment {
  std::vector<int> s_prime;  // per arrow, +1 or -1
  std::vector<int> e_prime;
  // component of each sign variable; variable 2a is s'(a), 2a+1 is e'(a)
  std::vector<int> component;
  int component_count = 0;
};

// A path written right to left: arrows[0] is applied first.
struct PathData {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;
  bool trivial() const { return arrows.empty(); }
};

class GentleAlgebra;
using AlgebraPtr = std::shared_ptr<const GentleAlgebra>;

class GentleAlgebra {
 public:
  // Validates (G1)-(G4), connectivity, finite dimension and the sign system.
  static GentleAlgebra validate(Presentation p);

  const Presentation& presentation() const { return pres_; }
  const SignAssignment& signs() const { return signs_; }
  GentleAlgebra with_signs(const SignAssignment& s) const;

  int vertex_count() const { return static_cast<int>(pres_.vertices.size()); }
  int arrow_count() const { return static_cast<int>(pres_.arrows.size()); }
  int dimension() const { return static_cast<int>(paths_.size()); }

  const std::vector<PathData>& paths() const { return paths_; }
  const PathData& path(int i) const { return paths_[i]; }
  int trivial_path(int v) const { return v; }
  int arrow_path(int a) const { return arrow_path_[a]; }
  int find_path(const std::vector<int>& arrows) const;  // -1 if not a basis path
  // outer∘inner, with inner applied first; -1 when not composable or zero
  int compose(int outer, int inner) const { return mult_[static_cast<size_t>(outer) * paths_.size() + inner]; }
  // basis paths with the given source and target, in basis order
  const std::vector<int>& paths_between(int from, int to) const { return between_[from * vertex_count() + to]; }
  int position_in_between(int p) const { return pos_in_between_[p]; }
  // dim e_to A e_from, that is, number of basis paths from -> to
  int paths_count(int from, int to) const { return static_cast<int>(paths_between(from, to).size()); }

  bool in_relation(int outer, int inner) const;
  const std::vector<int>& out_arrows(int v) const { return out_[v]; }
  const std::vector<int>& in_arrows(int v) const { return in_[v]; }

  int s_sign(int path) const;  // non-trivial paths only
  int e_sign(int path) const;

  std::string path_name(int p) const;  // "b*a", or "e_v" for trivial
  std::string vertex_name(int v) const { return pres_.vertices[v]; }
  std::string arrow_name(int a) const { return pres_.arrows[a].name; }

  bool is_field() const { return vertex_count() == 1 && arrow_count() == 0; }
  bool underlying_graph_is_a3() const;
  int longest_path_length() const;

 private:
  GentleAlgebra() = default;
  void build_paths();

  Presentation pres_;
  SignAssignment signs_;
  std::vector<PathData> paths_;
  std::vector<int> arrow_path_;
  std::vector<int> mult_;
  std::vector<std::vector<int>> between_;
  std::vector<int> pos_in_between_;
  std::vector<std::vector<int>> out_, in_;
  std::vector<char> relation_table_;
};

AlgebraPtr make_algebra(Presentation p);
AlgebraPtr make_algebra_from_text(std::string_view text);

// All valid sign assignments, canonical one first.
std::vector<SignAssignment> enumerate_sign_assignments(const GentleAlgebra& a);

// Re-checks (i)-(iv) for an assignment; returns an empty string when valid.
std::string check_sign_assignment(const GentleAlgebra& a, const SignAssignment& s);

}  // namespace gentle
