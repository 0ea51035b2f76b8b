#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gentle/complexes.hpp"
#include "gentle/presentation.hpp"

// Text and JSON renderings of each front-end command. Every function returns the
// complete standard-output payload; JSON payloads are one document ending in a newline.
namespace gentle::report {

struct Options {
  bool json = false;
  bool parallel = false;
};

// "expr" or "expr@shift"; bands use the scalar.
Complex parse_object(const AlgebraPtr& a, const std::string& text, const Rational& scalar);
Rational parse_scalar(const std::string& text);

std::string validate(const AlgebraPtr& a, const Options& o);
std::string threads(const AlgebraPtr& a, const Options& o);
std::string ag(const AlgebraPtr& a, const Options& o, bool dot);
std::string hom(const AlgebraPtr& a, const std::string& from, const std::string& to, const Rational& scalar,
                bool profile, const Options& o);
std::string alp(const AlgebraPtr& a, const std::string& from, const std::string& to, const Options& o);
std::string cycles(const AlgebraPtr& a, bool verify, const Options& o);
std::string band(const AlgebraPtr& a, const std::string& word, const Rational& scalar, const Options& o);
std::string search(const AlgebraPtr& a, std::optional<int> max_letters, std::optional<int> shift_window,
                   const Options& o);

struct SelftestResult {
  std::string output;
  bool passed = false;
};
SelftestResult selftest(std::uint64_t seed, const Options& o);

}  // namespace gentle::report
