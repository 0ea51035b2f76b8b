#include "gentle/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

#include "gentle/alp.hpp"
#include "gentle/error.hpp"
#include "gentle/exceptional.hpp"
#include "gentle/hom.hpp"
#include "gentle/random_algebra.hpp"
#include "gentle/threads.hpp"

namespace gentle::report {

using nlohmann::ordered_json;

namespace {

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string rational_text(const Rational& q) { return q.get_str(); }

ordered_json rational_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

std::string profile_text(const GradedHomProfile& p) {
  std::string s = "{";
  for (auto [k, v] : p.dims) {
    if (s.size() > 1) s += ", ";
    s += std::to_string(k) + ":" + std::to_string(v);
  }
  return s + "}";
}

ordered_json profile_json(const GradedHomProfile& p) {
  ordered_json j = ordered_json::object();
  for (auto [k, v] : p.dims) j[std::to_string(k)] = v;
  return j;
}

ordered_json thread_json(const GentleAlgebra& a, const Thread& t) {
  ordered_json j;
  j["name"] = thread_name(a, t);
  j["word"] = thread_word(a, t);
  j["start"] = a.vertex_name(t.start);
  j["end"] = a.vertex_name(t.end);
  j["length"] = t.length();
  j["s"] = t.s_sign;
  j["e"] = t.e_sign;
  return j;
}

ordered_json cycle_json(const AlgebraPtr& a, const ExceptionalCycle& c, bool notes) {
  ordered_json j;
  j["n"] = c.n();
  ordered_json es = ordered_json::array();
  for (const auto& e : c.entries) {
    ordered_json x;
    x["word"] = word_text(*a, e.word);
    x["shift"] = e.shift;
    if (std::holds_alternative<HomotopyBand>(e.word)) x["scalar"] = rational_json(e.scalar);
    es.push_back(x);
  }
  j["entries"] = es;
  j["shifts"] = c.shifts;
  j["certificate"] = {{"E1", c.certificate.e1}, {"E2", c.certificate.e2}, {"E3", c.certificate.e3}};
  j["calabi_yau"] = c.calabi_yau ? ordered_json(*c.calabi_yau) : ordered_json(nullptr);
  if (notes) j["notes"] = c.certificate.notes;
  return j;
}

std::string cycle_text(const AlgebraPtr& a, const ExceptionalCycle& c) {
  std::ostringstream os;
  os << "cycle n=" << c.n();
  if (c.calabi_yau) os << " calabi-yau " << *c.calabi_yau;
  os << " certificate E1=" << c.certificate.e1 << " E2=" << c.certificate.e2 << " E3=" << c.certificate.e3 << "\n";
  for (int i = 0; i < c.n(); ++i) {
    const auto& e = c.entries[i];
    os << "  E" << i + 1 << " = " << word_text(*a, e.word);
    if (std::holds_alternative<HomotopyBand>(e.word)) os << " (scalar " << rational_text(e.scalar) << ")";
    os << " [" << e.shift << "]   S(E" << i + 1 << ") = E" << (i + 1) % c.n() + 1 << "[" << c.shifts[i] << "]\n";
  }
  for (const auto& s : c.certificate.notes) os << "  note: " << s << "\n";
  return os.str();
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

Rational parse_scalar(const std::string& text) {
  Rational q;
  std::string t = text;
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  if (t.empty() || q.set_str(t, 10) != 0) throw DomainError("bad scalar '" + text + "', expected p or p/q");
  if (sgn(q.get_den()) == 0) throw DomainError("bad scalar '" + text + "': zero denominator");
  q.canonicalize();
  return q;
}

Complex parse_object(const AlgebraPtr& a, const std::string& text, const Rational& scalar) {
  std::string expr = text;
  int t = 0;
  auto at = text.rfind('@');
  if (at != std::string::npos) {
    expr = text.substr(0, at);
    std::string num = text.substr(at + 1);
    try {
      size_t used = 0;
      t = std::stoi(num, &used);
      if (used != num.size()) throw std::invalid_argument(num);
    } catch (const std::exception&) {
      throw DomainError("bad shift '" + num + "' in " + text);
    }
  }
  Word w = parse_word(*a, expr);
  if (const auto* s = std::get_if<HomotopyString>(&w)) return shift(unfold_string(a, *s, 0), t);
  if (sgn(scalar) == 0) throw DomainError("band scalar must be nonzero");
  return shift(unfold_band(a, std::get<HomotopyBand>(w), 0, scalar), t);
}

std::string validate(const AlgebraPtr& a, const Options& o) {
  const auto& p = a->presentation();
  if (o.json) {
    ordered_json j;
    j["algebra"] = p.name;
    j["gentle"] = true;
    j["vertices"] = a->vertex_count();
    j["arrows"] = a->arrow_count();
    j["relations"] = p.relations.size();
    j["dimension"] = a->dimension();
    ordered_json basis = ordered_json::array();
    for (int i = 0; i < a->dimension(); ++i) basis.push_back(a->path_name(i));
    j["basis"] = basis;
    return dump(j);
  }
  std::ostringstream os;
  os << p.name << ": gentle, " << a->vertex_count() << " vertices, " << a->arrow_count() << " arrows, "
     << p.relations.size() << " relations\n";
  os << "dim A = " << a->dimension() << "\n";
  return os.str();
}

std::string threads(const AlgebraPtr& a, const Options& o) {
  ThreadTables t = enumerate_threads(*a);
  auto cycles = aag_cycles(t);
  if (o.json) {
    ordered_json j;
    j["permitted"] = ordered_json::array();
    for (const auto& x : t.permitted) j["permitted"].push_back(thread_json(*a, x));
    j["forbidden"] = ordered_json::array();
    for (const auto& x : t.forbidden) j["forbidden"].push_back(thread_json(*a, x));
    ordered_json p1 = ordered_json::object(), p2 = ordered_json::object();
    for (size_t v = 0; v < t.phi1.size(); ++v)
      if (t.phi1[v] >= 0) p1[thread_name(*a, t.permitted[v])] = thread_name(*a, t.forbidden[t.phi1[v]]);
    for (size_t w = 0; w < t.phi2.size(); ++w)
      if (t.phi2[w] >= 0) p2[thread_name(*a, t.forbidden[w])] = thread_name(*a, t.permitted[t.phi2[w]]);
    j["phi1"] = p1;
    j["phi2"] = p2;
    j["critical"] = ordered_json::array();
    for (size_t w = 0; w < t.forbidden.size(); ++w)
      if (t.critical[w]) j["critical"].push_back(thread_name(*a, t.forbidden[w]));
    j["aag_cycles"] = ordered_json::array();
    for (const auto& c : cycles) {
      ordered_json x;
      x["n"] = c.n;
      x["m"] = c.m;
      ordered_json th = ordered_json::array();
      for (int h : c.permitted) th.push_back(thread_name(*a, t.permitted[h]));
      x["threads"] = th;
      j["aag_cycles"].push_back(x);
    }
    return dump(j);
  }
  std::ostringstream os;
  os << "permitted threads\n";
  for (size_t v = 0; v < t.permitted.size(); ++v)
    os << "  " << thread_name(*a, t.permitted[v]) << "  s=" << t.permitted[v].s_sign << " e=" << t.permitted[v].e_sign
       << "  phi1 -> " << (t.phi1[v] >= 0 ? thread_name(*a, t.forbidden[t.phi1[v]]) : "-") << "\n";
  os << "forbidden threads\n";
  for (size_t w = 0; w < t.forbidden.size(); ++w) {
    os << "  " << thread_name(*a, t.forbidden[w]) << "  s=" << t.forbidden[w].s_sign << " e=" << t.forbidden[w].e_sign;
    if (t.critical[w])
      os << "  critical";
    else
      os << "  phi2 -> " << (t.phi2[w] >= 0 ? thread_name(*a, t.permitted[t.phi2[w]]) : "-");
    os << "\n";
  }
  os << "aag cycles\n";
  for (const auto& c : cycles) {
    os << "  (" << c.n << "," << c.m << ")";
    for (int h : c.permitted) os << " " << thread_name(*a, t.permitted[h]);
    os << "\n";
  }
  return os.str();
}

std::string ag(const AlgebraPtr& a, const Options& o, bool dot) {
  if (a->is_field()) throw DomainError("AG invariants are not defined for A = k");
  MouthAnalysis ma(a, o.parallel);
  auto orbits = ag_invariants(ma);
  const auto& ms = ma.mouths();
  auto name = [&](int i) { return format_string(*a, ms[i].word); };
  if (dot) {
    std::ostringstream os;
    os << "digraph serre_orbits {\n";
    for (size_t k = 0; k < orbits.size(); ++k) {
      os << "  subgraph cluster_" << k << " {\n    label=" << dot_quote("(" + std::to_string(orbits[k].n) + "," +
                                                                      std::to_string(orbits[k].m) + ")")
         << ";\n";
      for (int i : orbits[k].members) os << "    m" << i << " [label=" << dot_quote(name(i)) << "];\n";
      os << "  }\n";
    }
    for (size_t i = 0; i < ms.size(); ++i) {
      if (ms[i].flagged) {
        os << "  m" << i << " [label=" << dot_quote(name(static_cast<int>(i))) << ", color=red];\n";
        continue;
      }
      const SerreTarget& st = ma.serre_target(static_cast<int>(i));
      os << "  m" << i << " -> m" << st.mouth << " [label=\"[" << st.shift << "]\"];\n";
    }
    os << "}\n";
    return os.str();
  }
  if (o.json) {
    ordered_json j;
    j["orbits"] = ordered_json::array();
    for (const auto& orb : orbits) {
      ordered_json x;
      x["n"] = orb.n;
      x["m"] = orb.m;
      ordered_json mem = ordered_json::array();
      for (int k = 0; k < orb.n; ++k) {
        int i = orb.members[k];
        const SerreTarget& st = ma.serre_target(i);
        mem.push_back({{"word", name(i)},
                       {"thread", thread_name(*a, ma.threads().forbidden[ms[i].thread])},
                       {"shift", orb.shifts[k]},
                       {"serre_shift", st.shift}});
      }
      x["mouths"] = mem;
      j["orbits"].push_back(x);
    }
    j["flagged"] = ordered_json::array();
    for (const auto& m : ms)
      if (m.flagged) j["flagged"].push_back({{"word", format_string(*a, m.word)}, {"reason", m.flag}});
    return dump(j);
  }
  std::ostringstream os;
  for (const auto& orb : orbits) {
    os << "(" << orb.n << "," << orb.m << ")";
    for (int k = 0; k < orb.n; ++k) os << "  " << name(orb.members[k]) << " [" << orb.shifts[k] << "]";
    os << "\n";
  }
  for (const auto& m : ms)
    if (m.flagged) os << "flagged: " << format_string(*a, m.word) << ": " << m.flag << "\n";
  return os.str();
}

std::string hom(const AlgebraPtr& a, const std::string& from, const std::string& to, const Rational& scalar,
                bool profile, const Options& o) {
  Complex x = parse_object(a, from, scalar);
  Complex y = parse_object(a, to, scalar);
  if (profile) {
    GradedHomProfile p = graded_profile(x, y);
    if (o.json) return dump({{"from", from}, {"to", to}, {"window", {p.lo, p.hi}}, {"profile", profile_json(p)}});
    return "Hom(X, Y[n]) " + profile_text(p) + "\n";
  }
  int d = hom_k_dim(x, y, 0);
  if (o.json) return dump({{"from", from}, {"to", to}, {"dim", d}});
  return "dim Hom(X, Y) = " + std::to_string(d) + "\n";
}

std::string alp(const AlgebraPtr& a, const std::string& from, const std::string& to, const Options& o) {
  Complex x = parse_object(a, from, 1);
  Complex y = parse_object(a, to, 1);
  auto maps = alp_basis(x, y);
  const Provenance& px = *x.provenance();
  if (o.json) {
    ordered_json j;
    j["from"] = from;
    j["to"] = to;
    j["dimension"] = maps.size();
    j["maps"] = ordered_json::array();
    for (const auto& m : maps) {
      ordered_json cs = ordered_json::array();
      for (const auto& c : m.components)
        cs.push_back({{"from", c.x_pos},
                      {"to", c.y_pos},
                      {"degree", px.positions[c.x_pos].degree},
                      {"path", a->path_name(c.path)},
                      {"coeff", rational_json(c.coeff)}});
      j["maps"].push_back({{"kind", kind_name(m.kind)}, {"components", cs}});
    }
    return dump(j);
  }
  std::ostringstream os;
  os << "dim = " << maps.size() << "\n";
  for (MapKind k : {MapKind::single, MapKind::double_, MapKind::graph}) {
    for (const auto& m : maps) {
      if (m.kind != k) continue;
      os << kind_name(k) << ":";
      for (const auto& c : m.components) {
        os << "  " << c.x_pos << "->" << c.y_pos << " " << a->path_name(c.path);
        if (c.coeff != 1) os << "*" << rational_text(c.coeff);
      }
      os << "\n";
    }
  }
  return os.str();
}

std::string cycles(const AlgebraPtr& a, bool verify, const Options& o) {
  auto cs = classify_exceptional_cycles(a, o.parallel);
  if (verify)
    for (auto& c : cs) {
      ExceptionalCycle again = verify_cycle(a, c.entries);
      if (again.certificate.e1 != c.certificate.e1 || again.certificate.e2 != c.certificate.e2 ||
          again.certificate.e3 != c.certificate.e3 || again.shifts != c.shifts)
        throw InternalError("independent re-verification disagrees with the classifier");
    }
  if (o.json) {
    ordered_json j;
    j["cycles"] = ordered_json::array();
    for (const auto& c : cs) j["cycles"].push_back(cycle_json(a, c, verify));
    return dump(j);
  }
  std::string s;
  for (const auto& c : cs) s += cycle_text(a, c);
  if (verify) s += "all certificates re-verified\n";
  return s;
}

std::string band(const AlgebraPtr& a, const std::string& word, const Rational& scalar, const Options& o) {
  std::string expr = word.rfind("band:", 0) == 0 ? word : "band:" + word;
  HomotopyBand w = parse_band(*a, expr);
  BandVerdict v = check_band_spherical(a, w, scalar);
  if (o.json)
    return dump({{"band", format_band(*a, w)},
                 {"scalar", rational_json(scalar)},
                 {"profile", profile_json(v.profile)},
                 {"exceptional_1_cycle", v.spherical}});
  return format_band(*a, w) + " scalar " + rational_text(scalar) + ": self-Hom " + profile_text(v.profile) + ", " +
         (v.spherical ? "an exceptional 1-cycle (1-Calabi-Yau)" : "not an exceptional 1-cycle") + "\n";
}

std::string search(const AlgebraPtr& a, std::optional<int> max_letters, std::optional<int> shift_window,
                   const Options& o) {
  SearchBounds b = default_bounds(*a);
  if (max_letters) b.max_letters = *max_letters;
  if (shift_window) b.shift_window = *shift_window;
  SearchStats st;
  auto cs = brute_force_search(a, b, o.parallel, &st);
  if (o.json) {
    ordered_json j;
    j["bounds"] = {{"max_letters", b.max_letters}, {"shift_window", b.shift_window}};
    j["stats"] = {{"strings", st.strings},
                  {"euler_survivors", st.euler_survivors},
                  {"exceptional_objects", st.exceptional_objects},
                  {"spherical_candidates", st.spherical_candidates}};
    j["cycles"] = ordered_json::array();
    for (const auto& c : cs) j["cycles"].push_back(cycle_json(a, c, false));
    return dump(j);
  }
  std::ostringstream os;
  os << "bounds: max letters " << b.max_letters << ", shift window " << b.shift_window << "\n";
  os << "strings " << st.strings << ", euler survivors " << st.euler_survivors << ", exceptional "
     << st.exceptional_objects << ", spherical candidates " << st.spherical_candidates << "\n";
  for (const auto& c : cs) os << cycle_text(a, c);
  return os.str();
}

// ---------------------------------------------------------------- selftest

namespace {

struct Suite {
  std::string name;
  int checks = 0;
  std::vector<std::string> failures;
};

template <class F>
void guarded(Suite& s, const std::string& where, F&& f) {
  ++s.checks;
  try {
    std::string why = f();
    if (!why.empty()) s.failures.push_back(where + ": " + why);
  } catch (const std::exception& e) {
    s.failures.push_back(where + ": " + e.what());
  }
}

std::multiset<std::pair<int, int>> aag_pairs(const GentleAlgebra& a) {
  std::multiset<std::pair<int, int>> out;
  for (const auto& c : aag_cycles(enumerate_threads(a))) out.insert({c.n, c.m});
  return out;
}

}  // namespace

SelftestResult selftest(std::uint64_t seed, const Options& o) {
  RandomAlgebraOptions opt;
  opt.max_vertices = 5;
  opt.max_dimension = 24;
  auto corpus = random_corpus(seed, 8, opt);
  std::vector<Suite> suites;
  for (const char* n : {"sign assignments", "threads and walk", "serre orbits", "d squared", "replacement", "alp basis",
                        "cycle certificates"})
    suites.push_back(Suite{n, 0, {}});
  for (const auto& a : corpus) {
    const std::string& nm = a->presentation().name;
    guarded(suites[0], nm, [&]() -> std::string {
      auto base = aag_pairs(*a);
      for (const auto& s : enumerate_sign_assignments(*a)) {
        std::string why = check_sign_assignment(*a, s);
        if (!why.empty()) return why;
        if (aag_pairs(a->with_signs(s)) != base) return "walk invariants depend on the sign assignment";
      }
      return "";
    });
    guarded(suites[1], nm, [&]() -> std::string {
      ThreadTables t = enumerate_threads(*a);
      size_t total = 0;
      for (const auto& c : aag_cycles(t)) total += c.permitted.size();
      return total == t.permitted.size() ? "" : "walk does not cover every permitted thread";
    });
    guarded(suites[2], nm, [&]() -> std::string {
      MouthAnalysis ma(a, o.parallel);
      std::multiset<std::pair<int, int>> got;
      for (const auto& orb : ag_invariants(ma)) got.insert({orb.n, orb.m});
      return got == aag_pairs(*a) ? "" : "orbit invariants differ from the walk";
    });
    auto words = enumerate_strings(*a, 3);
    guarded(suites[3], nm, [&]() -> std::string {
      for (const auto& w : words)
        for (int m : {-1, 0, 2}) {
          std::string why = check_complex(unfold_string(a, w, m));
          if (!why.empty()) return format_string(*a, w) + ": " + why;
        }
      return "";
    });
    guarded(suites[4], nm, [&]() -> std::string {
      for (const auto& w : words) {
        if (w.size() > 2) continue;
        Complex n = nakayama_on_projectives(unfold_string(a, w, 0));
        if (cohomology_dims(perfect_replacement(n)) != cohomology_dims(n)) return format_string(*a, w);
      }
      return "";
    });
    guarded(suites[5], nm, [&]() -> std::string {
      ThreadTables t = enumerate_threads(*a);
      std::vector<Complex> cs;
      for (const auto& th : t.permitted) cs.push_back(unfold_string(a, string_from_thread(*a, th), 0));
      for (const auto& th : t.forbidden) cs.push_back(unfold_string(a, string_from_thread(*a, th), 0));
      for (const auto& x : cs)
        for (const auto& y : cs)
          for (int s : {-1, 0, 1}) alp_basis(x, shift(y, s));
      return "";
    });
    guarded(suites[6], nm, [&]() -> std::string {
      for (const auto& c : classify_exceptional_cycles(a, o.parallel))
        if (!c.certificate.passed()) return "certificate failed";
      return "";
    });
  }
  SelftestResult r;
  r.passed = true;
  for (const auto& s : suites) r.passed = r.passed && s.failures.empty();
  if (o.json) {
    ordered_json j;
    j["seed"] = seed;
    j["algebras"] = corpus.size();
    j["suites"] = ordered_json::array();
    for (const auto& s : suites)
      j["suites"].push_back({{"name", s.name}, {"checks", s.checks}, {"passed", s.failures.empty()}, {"failures", s.failures}});
    j["passed"] = r.passed;
    r.output = dump(j);
    return r;
  }
  std::ostringstream os;
  os << "seed " << seed << ", " << corpus.size() << " random algebras\n";
  for (const auto& s : suites) {
    os << (s.failures.empty() ? "PASS " : "FAIL ") << s.name << " (" << s.checks << " checks)\n";
    for (const auto& f : s.failures) os << "  " << f << "\n";
  }
  r.output = os.str();
  return r;
}

}  // namespace gentle::report
