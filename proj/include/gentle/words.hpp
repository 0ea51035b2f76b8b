#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gentle/presentation.hpp"
#include "gentle/threads.hpp"

namespace gentle {

struct Letter {
  int path = 0;  // non-trivial basis path
  bool inverse = false;
  friend bool operator==(const Letter& a, const Letter& b) { return a.path == b.path && a.inverse == b.inverse; }
};

int letter_start(const GentleAlgebra& a, Letter l);
int letter_end(const GentleAlgebra& a, Letter l);
int letter_s_sign(const GentleAlgebra& a, Letter l);
int letter_e_sign(const GentleAlgebra& a, Letter l);
std::string letter_text(const GentleAlgebra& a, Letter l);

// Why the composite outer∘inner is not defined, or nullopt when it is.
std::optional<std::string> composition_failure(const GentleAlgebra& a, Letter outer, Letter inner);

// letters[0] is w_1, the letter applied first; the text form lists w_n first.
struct HomotopyString {
  std::vector<Letter> letters;
  int vertex = -1;  // trivial strings
  int epsilon = 1;

  bool trivial() const { return letters.empty(); }
  int size() const { return static_cast<int>(letters.size()); }
  int degree() const;
  std::vector<int> degree_profile() const;  // running degree at positions 0..n
  friend bool operator==(const HomotopyString& a, const HomotopyString& b) {
    return a.letters == b.letters && a.vertex == b.vertex && (a.trivial() ? a.epsilon == b.epsilon : true);
  }
};

struct HomotopyBand {
  std::vector<Letter> letters;
  int size() const { return static_cast<int>(letters.size()); }
};

using Word = std::variant<HomotopyString, HomotopyBand>;
using WordKey = std::vector<int>;

HomotopyString make_string(const GentleAlgebra& a, std::vector<Letter> letters);
HomotopyString make_trivial_string(const GentleAlgebra& a, int vertex, int epsilon);
HomotopyBand make_band(const GentleAlgebra& a, std::vector<Letter> letters);

int string_start(const GentleAlgebra& a, const HomotopyString& w);
int string_end(const GentleAlgebra& a, const HomotopyString& w);

HomotopyString inverse(const HomotopyString& w);
HomotopyBand inverse(const HomotopyBand& w);

Word parse_word(const GentleAlgebra& a, std::string_view expr);
HomotopyString parse_string(const GentleAlgebra& a, std::string_view expr);
HomotopyBand parse_band(const GentleAlgebra& a, std::string_view expr);
std::string format_string(const GentleAlgebra& a, const HomotopyString& w);
std::string format_band(const GentleAlgebra& a, const HomotopyBand& w);

WordKey encode(const HomotopyString& w);
WordKey canonical_string(const HomotopyString& w);
WordKey canonical_band(const HomotopyBand& w);
// The representative of {w, w^-1} whose encoding is the canonical key.
HomotopyString canonical_representative(const HomotopyString& w);

HomotopyString string_from_thread(const GentleAlgebra& a, const Thread& t);

// One representative per inversion class of strings with at most max_letters letters,
// trivial strings included, ordered by length then key.
std::vector<HomotopyString> enumerate_strings(const GentleAlgebra& a, int max_letters);

}  // namespace gentle
