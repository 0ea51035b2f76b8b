#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gentle/presentation.hpp"

namespace gentle {

struct RandomAlgebraOptions {
  int min_vertices = 2;
  int max_vertices = 6;
  int max_dimension = 40;
  bool exclude_a3 = false;
};

// Random connected finite-dimensional gentle algebra; rejected draws are resampled.
AlgebraPtr random_gentle_algebra(std::mt19937_64& rng, const RandomAlgebraOptions& opt);
std::vector<AlgebraPtr> random_corpus(std::uint64_t seed, int count, const RandomAlgebraOptions& opt);

}  // namespace gentle
