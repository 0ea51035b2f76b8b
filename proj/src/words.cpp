#include "gentle/words.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "gentle/error.hpp"

namespace gentle {

int letter_start(const GentleAlgebra& a, Letter l) {
  return l.inverse ? a.path(l.path).target : a.path(l.path).source;
}
int letter_end(const GentleAlgebra& a, Letter l) { return l.inverse ? a.path(l.path).source : a.path(l.path).target; }
int letter_s_sign(const GentleAlgebra& a, Letter l) { return l.inverse ? a.e_sign(l.path) : a.s_sign(l.path); }
int letter_e_sign(const GentleAlgebra& a, Letter l) { return l.inverse ? a.s_sign(l.path) : a.e_sign(l.path); }

std::string letter_text(const GentleAlgebra& a, Letter l) { return a.path_name(l.path) + (l.inverse ? "^-1" : ""); }

std::optional<std::string> composition_failure(const GentleAlgebra& a, Letter outer, Letter inner) {
  if (letter_end(a, inner) != letter_start(a, outer))
    return "end of " + letter_text(a, inner) + " is not the start of " + letter_text(a, outer);
  bool same = outer.inverse == inner.inverse;
  int lhs = letter_e_sign(a, inner);
  int rhs = letter_s_sign(a, outer);
  if (same && lhs != rhs)
    return "rule (i) fails: e'(" + letter_text(a, inner) + ") != s'(" + letter_text(a, outer) + ")";
  if (!same && lhs != -rhs)
    return "rule (ii) fails: e'(" + letter_text(a, inner) + ") != -s'(" + letter_text(a, outer) + ")";
  return std::nullopt;
}

int HomotopyString::degree() const {
  int d = 0;
  for (auto l : letters) d += l.inverse ? -1 : 1;
  return d;
}

std::vector<int> HomotopyString::degree_profile() const {
  std::vector<int> r{0};
  for (auto l : letters) r.push_back(r.back() + (l.inverse ? -1 : 1));
  return r;
}

namespace {

void check_letters(const GentleAlgebra& a, const std::vector<Letter>& letters) {
  for (auto l : letters)
    if (l.path < a.vertex_count() || l.path >= a.dimension()) throw DomainError("letter is not a permitted path");
  for (size_t k = 0; k + 1 < letters.size(); ++k)
    if (auto why = composition_failure(a, letters[k + 1], letters[k]))
      throw DomainError("letters " + std::to_string(k + 1) + " and " + std::to_string(k + 2) +
                        " (counted from the right) are not composable: " + *why);
}

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

Letter parse_letter(const GentleAlgebra& a, std::string tok) {
  Letter l;
  const std::string inv = "^-1";
  if (tok.size() > inv.size() && tok.compare(tok.size() - inv.size(), inv.size(), inv) == 0) {
    l.inverse = true;
    tok = trim(tok.substr(0, tok.size() - inv.size()));
  }
  if (tok.empty()) throw DomainError("empty letter");
  auto names = split(tok, '*');
  std::vector<int> arrows;
  for (auto it = names.rbegin(); it != names.rend(); ++it) {
    int idx = a.presentation().arrow_index(*it);
    if (idx < 0) throw DomainError("unknown arrow '" + *it + "' in letter " + tok);
    arrows.push_back(idx);
  }
  const auto& pr = a.presentation();
  for (size_t k = 0; k + 1 < arrows.size(); ++k) {
    if (pr.arrows[arrows[k]].target != pr.arrows[arrows[k + 1]].source)
      throw DomainError("letter " + tok + " is not a path: arrows do not compose");
    if (a.in_relation(arrows[k + 1], arrows[k]))
      throw DomainError("letter " + tok + " hits I at " + pr.arrows[arrows[k + 1]].name + "*" +
                        pr.arrows[arrows[k]].name);
  }
  l.path = a.find_path(arrows);
  if (l.path < 0) throw DomainError("letter " + tok + " is not a permitted path");
  return l;
}

std::vector<Letter> parse_letters(const GentleAlgebra& a, std::string_view body) {
  auto toks = split(body, ',');
  std::vector<Letter> letters;
  for (auto it = toks.rbegin(); it != toks.rend(); ++it) letters.push_back(parse_letter(a, *it));
  return letters;
}

bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

WordKey encode_letters(const std::vector<Letter>& ls) {
  WordKey k;
  k.reserve(ls.size());
  for (auto l : ls) k.push_back(2 * l.path + (l.inverse ? 1 : 0));
  return k;
}

std::vector<Letter> inverse_letters(const std::vector<Letter>& ls) {
  std::vector<Letter> out(ls.rbegin(), ls.rend());
  for (auto& l : out) l.inverse = !l.inverse;
  return out;
}

}  // namespace

HomotopyString make_string(const GentleAlgebra& a, std::vector<Letter> letters) {
  if (letters.empty()) throw DomainError("a non-trivial string needs at least one letter");
  check_letters(a, letters);
  HomotopyString w;
  w.letters = std::move(letters);
  return w;
}

HomotopyString make_trivial_string(const GentleAlgebra& a, int vertex, int epsilon) {
  if (vertex < 0 || vertex >= a.vertex_count()) throw DomainError("unknown vertex in trivial string");
  if (epsilon != 1 && epsilon != -1) throw DomainError("trivial string sign must be +1 or -1");
  HomotopyString w;
  w.vertex = vertex;
  w.epsilon = epsilon;
  return w;
}

HomotopyBand make_band(const GentleAlgebra& a, std::vector<Letter> letters) {
  if (letters.empty()) throw DomainError("a band needs at least one letter");
  check_letters(a, letters);
  HomotopyString as_string;
  as_string.letters = letters;
  if (as_string.degree() != 0) throw DomainError("band condition fails: degree is not 0");
  if (letter_start(a, letters.front()) != letter_end(a, letters.back()))
    throw DomainError("band condition fails: start and end vertices differ");
  if (auto why = composition_failure(a, letters.front(), letters.back()))
    throw DomainError("band condition fails at the wrap: " + *why);
  if (letters.front().inverse == letters.back().inverse)
    throw DomainError("band condition fails: first and last letters have the same direction");
  int n = static_cast<int>(letters.size());
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    bool periodic = true;
    for (int i = d; i < n && periodic; ++i) periodic = letters[i] == letters[i - d];
    if (periodic) throw DomainError("band condition fails: proper power of a shorter string");
  }
  HomotopyBand b;
  b.letters = std::move(letters);
  return b;
}

int string_start(const GentleAlgebra& a, const HomotopyString& w) {
  return w.trivial() ? w.vertex : letter_start(a, w.letters.front());
}
int string_end(const GentleAlgebra& a, const HomotopyString& w) {
  return w.trivial() ? w.vertex : letter_end(a, w.letters.back());
}

HomotopyString inverse(const HomotopyString& w) {
  HomotopyString r = w;
  if (w.trivial())
    r.epsilon = -w.epsilon;
  else
    r.letters = inverse_letters(w.letters);
  return r;
}

HomotopyBand inverse(const HomotopyBand& w) {
  HomotopyBand r;
  r.letters = inverse_letters(w.letters);
  return r;
}

Word parse_word(const GentleAlgebra& a, std::string_view expr) {
  std::string e = trim(expr);
  if (starts_with(e, "band:")) return parse_band(a, e);
  return parse_string(a, e);
}

HomotopyString parse_string(const GentleAlgebra& a, std::string_view expr) {
  std::string e = trim(expr);
  if (e.empty()) throw DomainError("empty word");
  if (starts_with(e, "band:")) throw DomainError("expected a string, got a band");
  if (starts_with(e, "triv:")) {
    auto parts = split(std::string_view(e).substr(5), ':');
    if (parts.size() != 2) throw DomainError("trivial string syntax is triv:<vertex>:<+1|-1>");
    int v = a.presentation().vertex_index(parts[0]);
    if (v < 0) throw DomainError("unknown vertex '" + parts[0] + "'");
    int eps;
    if (parts[1] == "+1" || parts[1] == "1")
      eps = 1;
    else if (parts[1] == "-1")
      eps = -1;
    else
      throw DomainError("trivial string sign must be +1 or -1");
    return make_trivial_string(a, v, eps);
  }
  return make_string(a, parse_letters(a, e));
}

HomotopyBand parse_band(const GentleAlgebra& a, std::string_view expr) {
  std::string e = trim(expr);
  if (!starts_with(e, "band:")) throw DomainError("band expressions start with 'band:'");
  return make_band(a, parse_letters(a, std::string_view(e).substr(5)));
}

std::string format_string(const GentleAlgebra& a, const HomotopyString& w) {
  if (w.trivial()) return "triv:" + a.vertex_name(w.vertex) + ":" + (w.epsilon > 0 ? "+1" : "-1");
  std::string s;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    if (!s.empty()) s += ", ";
    s += letter_text(a, *it);
  }
  return s;
}

std::string format_band(const GentleAlgebra& a, const HomotopyBand& w) {
  HomotopyString s;
  s.letters = w.letters;
  return "band: " + format_string(a, s);
}

WordKey encode(const HomotopyString& w) {
  if (w.trivial()) return {-1, w.vertex};
  return encode_letters(w.letters);
}

WordKey canonical_string(const HomotopyString& w) {
  if (w.trivial()) return {-1, w.vertex};
  return std::min(encode_letters(w.letters), encode_letters(inverse_letters(w.letters)));
}

HomotopyString canonical_representative(const HomotopyString& w) {
  if (w.trivial()) return w;
  HomotopyString inv = inverse(w);
  return encode(inv) < encode(w) ? inv : w;
}

WordKey canonical_band(const HomotopyBand& w) {
  WordKey best;
  bool have = false;
  for (const auto& ls : {w.letters, inverse_letters(w.letters)}) {
    int n = static_cast<int>(ls.size());
    for (int r = 0; r < n; ++r) {
      if (ls[r].inverse == ls[(r + n - 1) % n].inverse) continue;
      std::vector<Letter> rot(ls.begin() + r, ls.end());
      rot.insert(rot.end(), ls.begin(), ls.begin() + r);
      WordKey k = encode_letters(rot);
      if (!have || k < best) {
        best = k;
        have = true;
      }
    }
  }
  return best;
}

HomotopyString string_from_thread(const GentleAlgebra& a, const Thread& t) {
  if (t.trivial()) return make_trivial_string(a, t.vertex, t.s_sign);
  if (t.kind == ThreadKind::permitted) return make_string(a, {Letter{a.find_path(t.arrows), false}});
  std::vector<Letter> ls;
  for (int al : t.arrows) ls.push_back({a.arrow_path(al), false});
  return make_string(a, ls);
}

std::vector<HomotopyString> enumerate_strings(const GentleAlgebra& a, int max_letters) {
  std::vector<Letter> all;
  for (int p = a.vertex_count(); p < a.dimension(); ++p) {
    all.push_back({p, false});
    all.push_back({p, true});
  }
  std::vector<std::vector<int>> next(all.size());
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = 0; j < all.size(); ++j)
      if (!composition_failure(a, all[j], all[i])) next[i].push_back(static_cast<int>(j));

  std::vector<HomotopyString> out;
  for (int v = 0; v < a.vertex_count(); ++v) out.push_back(make_trivial_string(a, v, 1));
  std::vector<int> stack;
  std::vector<Letter> cur;
  std::function<void(int)> grow = [&](int last) {
    HomotopyString w;
    w.letters = cur;
    if (encode_letters(cur) <= encode_letters(inverse_letters(cur))) out.push_back(std::move(w));
    if (static_cast<int>(cur.size()) >= max_letters) return;
    for (int j : next[last]) {
      cur.push_back(all[j]);
      grow(j);
      cur.pop_back();
    }
  };
  if (max_letters >= 1)
    for (size_t i = 0; i < all.size(); ++i) {
      cur.assign(1, all[i]);
      grow(static_cast<int>(i));
    }
  std::stable_sort(out.begin(), out.end(), [](const HomotopyString& x, const HomotopyString& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return encode(x) < encode(y);
  });
  return out;
}

}  // namespace gentle
