#pragma once

#include <string>

#include "gentle/presentation.hpp"

inline std::string fixture_path(const std::string& name) { return std::string(GENTLE_FIXTURES) + "/" + name + ".gentle"; }

inline gentle::AlgebraPtr fixture(const std::string& name) {
  return gentle::make_algebra(gentle::load_presentation(fixture_path(name)));
}
