#pragma once

#include <string>
#include <vector>

#include "gentle/complexes.hpp"

namespace gentle {

enum class MapKind { single, double_, graph };

struct MapComponent {
  int x_pos = 0;  // position in the source unfolding
  int y_pos = 0;  // position in the target unfolding
  int path = 0;   // a path y-vertex -> x-vertex, acting by right multiplication
  Rational coeff = 1;
};

struct CombMap {
  MapKind kind = MapKind::single;
  std::vector<MapComponent> components;  // sorted by (x_pos, y_pos)
};

std::string kind_name(MapKind k);

// Both arguments must be string complexes (with unfolding data).
std::vector<CombMap> single_maps(const Complex& v, const Complex& w);
std::vector<CombMap> double_maps(const Complex& v, const Complex& w);
std::vector<CombMap> graph_maps(const Complex& v, const Complex& w);
// Union of the three lists. Throws InternalError unless it is an independent family of
// chain maps whose size is the dimension of the space of degree-0 chain maps.
std::vector<CombMap> alp_basis(const Complex& v, const Complex& w);

bool is_chain_map(const Complex& v, const Complex& w, const CombMap& f);
// Coordinates in HomComplex(v, w) at degree 0.
std::vector<Rational> to_chain_map(const Complex& v, const Complex& w, const CombMap& f);

}  // namespace gentle
