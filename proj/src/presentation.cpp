#include "gentle/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "gentle/error.hpp"

namespace gentle {

int Presentation::vertex_index(std::string_view id) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == id) return static_cast<int>(i);
  return -1;
}

int Presentation::arrow_index(std::string_view id) const {
  for (size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == id) return static_cast<int>(i);
  return -1;
}

namespace {

struct Token {
  std::string text;
  int column;
};

bool ident_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}

std::vector<Token> tokenize(const std::string& line, int line_no) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    int col = static_cast<int>(i) + 1;
    if (ident_char(c)) {
      size_t j = i;
      while (j < line.size() && ident_char(line[j])) ++j;
      out.push_back({line.substr(i, j - i), col});
      i = j;
    } else if (c == ':') {
      out.push_back({":", col});
      ++i;
    } else if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({"->", col});
      i += 2;
    } else {
      throw ParseError(line_no, col, std::string("unexpected character '") + c + "'");
    }
  }
  return out;
}

bool is_ident(const Token& t) { return !t.text.empty() && ident_char(t.text[0]); }

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  bool named = false;
  std::set<std::pair<int, int>> seen_relations;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = tokenize(line, line_no);
    if (toks.empty()) continue;
    const std::string& kw = toks[0].text;
    auto expect_ident = [&](size_t k, const char* what) -> const Token& {
      if (k >= toks.size())
        throw ParseError(line_no, static_cast<int>(line.size()) + 1, std::string("expected ") + what);
      if (!is_ident(toks[k])) throw ParseError(line_no, toks[k].column, std::string("expected ") + what);
      return toks[k];
    };
    auto expect_end = [&](size_t k) {
      if (k < toks.size()) throw ParseError(line_no, toks[k].column, "unexpected token '" + toks[k].text + "'");
    };
    if (kw == "algebra") {
      const Token& id = expect_ident(1, "algebra name");
      expect_end(2);
      if (named) throw ParseError(line_no, toks[0].column, "duplicate algebra declaration");
      p.name = id.text;
      named = true;
    } else if (kw == "vertex") {
      expect_ident(1, "vertex name");
      for (size_t k = 1; k < toks.size(); ++k) {
        const Token& id = expect_ident(k, "vertex name");
        if (p.vertex_index(id.text) >= 0) throw ParseError(line_no, id.column, "duplicate name '" + id.text + "'");
        p.vertices.push_back(id.text);
      }
    } else if (kw == "arrow") {
      const Token& id = expect_ident(1, "arrow name");
      if (toks.size() < 3 || toks[2].text != ":")
        throw ParseError(line_no, toks.size() > 2 ? toks[2].column : static_cast<int>(line.size()) + 1,
                         "expected ':'");
      const Token& src = expect_ident(3, "source vertex");
      if (toks.size() < 5 || toks[4].text != "->")
        throw ParseError(line_no, toks.size() > 4 ? toks[4].column : static_cast<int>(line.size()) + 1,
                         "expected '->'");
      const Token& dst = expect_ident(5, "target vertex");
      expect_end(6);
      if (p.arrow_index(id.text) >= 0) throw ParseError(line_no, id.column, "duplicate name '" + id.text + "'");
      int s = p.vertex_index(src.text);
      if (s < 0) throw ParseError(line_no, src.column, "unknown vertex '" + src.text + "'");
      int t = p.vertex_index(dst.text);
      if (t < 0) throw ParseError(line_no, dst.column, "unknown vertex '" + dst.text + "'");
      p.arrows.push_back({id.text, s, t});
    } else if (kw == "relation") {
      const Token& outer = expect_ident(1, "arrow name");
      const Token& inner = expect_ident(2, "arrow name");
      if (toks.size() > 3) throw ParseError(line_no, toks[3].column, "relations must have length 2");
      int o = p.arrow_index(outer.text);
      if (o < 0) throw ParseError(line_no, outer.column, "unknown arrow '" + outer.text + "'");
      int i = p.arrow_index(inner.text);
      if (i < 0) throw ParseError(line_no, inner.column, "unknown arrow '" + inner.text + "'");
      if (p.arrows[i].target != p.arrows[o].source)
        throw ParseError(line_no, outer.column,
                         "non-composable relation " + outer.text + " " + inner.text + ": target of " + inner.text +
                             " is not the source of " + outer.text);
      if (!seen_relations.insert({o, i}).second)
        throw ParseError(line_no, outer.column, "duplicate relation " + outer.text + " " + inner.text);
      p.relations.push_back({o, i});
    } else {
      throw ParseError(line_no, toks[0].column, "unknown statement '" + kw + "'");
    }
  }
  if (p.vertices.empty()) throw ParseError(line_no + 1, 1, "no vertices declared");
  if (!named) p.name = "unnamed";
  return p;
}

Presentation load_presentation(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw DomainError("file not found: " + path.string());
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_presentation(ss.str());
}

std::string format_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "algebra " << p.name << "\n";
  os << "vertex";
  for (const auto& v : p.vertices) os << ' ' << v;
  os << "\n";
  for (const auto& a : p.arrows) os << "arrow " << a.name << " : " << p.vertices[a.source] << " -> " << p.vertices[a.target] << "\n";
  for (auto [o, i] : p.relations) os << "relation " << p.arrows[o].name << ' ' << p.arrows[i].name << "\n";
  return os.str();
}

}  // namespace gentle
