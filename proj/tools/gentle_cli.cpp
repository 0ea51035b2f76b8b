#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "gentle_c.h"

namespace {

struct AlgebraHandle {
  gentle_algebra* a = nullptr;
  ~AlgebraHandle() { gentle_algebra_free(a); }
};

int report(gentle_status s) {
  if (s != GENTLE_OK) std::cerr << "gentle: " << gentle_last_error() << "\n";
  return static_cast<int>(s);
}

// Prints a rendered payload, or the error.
int emit(gentle_status s, char*& out) {
  if (s == GENTLE_OK && out) std::fputs(out, stdout);
  gentle_string_free(out);
  out = nullptr;
  return report(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Derived-category computations for gentle algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false, parallel = false;
  std::uint64_t seed = 20261019;
  app.add_flag("--json", json, "machine-readable output");
  app.add_flag("--parallel", parallel, "evaluate independent Hom queries on several threads");
  app.add_option("--seed", seed, "seed of the random-algebra generator (selftest)");

  std::string file, from, to, band_expr, scalar;
  bool dot = false, verify = false, profile = false;
  int max_letters = 0, shift_window = 0;

  auto with_file = [&](CLI::App* c) { c->add_option("file", file, "algebra presentation")->required(); };
  auto* validate = app.add_subcommand("validate", "check that a presentation defines a gentle algebra");
  with_file(validate);
  auto* threads = app.add_subcommand("threads", "permitted and forbidden threads, the maps phi1, phi2 and the walk");
  with_file(threads);
  auto* ag = app.add_subcommand("ag", "AG invariants from Serre orbits of mouth objects");
  with_file(ag);
  ag->add_flag("--dot", dot, "emit the orbit graph in DOT format");
  auto* hom = app.add_subcommand("hom", "dimension of Hom(X, Y) in the homotopy category");
  with_file(hom);
  hom->add_option("--from", from, "source object, word[@shift]")->required();
  hom->add_option("--to", to, "target object, word[@shift]")->required();
  hom->add_option("--scalar", scalar, "band scalar p or p/q");
  hom->add_flag("--profile", profile, "all n with Hom(X, Y[n]) nonzero");
  auto* alp = app.add_subcommand("alp", "combinatorial basis of chain maps between string complexes");
  with_file(alp);
  alp->add_option("--from", from, "source string, word[@shift]")->required();
  alp->add_option("--to", to, "target string, word[@shift]")->required();
  auto* cycles = app.add_subcommand("cycles", "exceptional cycles with certificates");
  with_file(cycles);
  cycles->add_flag("--verify", verify, "re-run every certificate independently");
  auto* band = app.add_subcommand("band", "is a band complex an exceptional 1-cycle");
  with_file(band);
  band->add_option("--band", band_expr, "band word")->required();
  band->add_option("--scalar", scalar, "scalar p or p/q")->required();
  auto* search = app.add_subcommand("search", "brute-force search for exceptional cycles among string complexes");
  with_file(search);
  search->add_option("--max-letters", max_letters, "longest string tried")->check(CLI::PositiveNumber);
  search->add_option("--shift-window", shift_window, "largest shift tried")->check(CLI::PositiveNumber);
  auto* selftest = app.add_subcommand("selftest", "property suites on random gentle algebras");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  unsigned flags = (json ? GENTLE_JSON : 0) | (parallel ? GENTLE_PARALLEL : 0) | (dot ? GENTLE_DOT : 0) |
                   (verify ? GENTLE_VERIFY : 0) | (profile ? GENTLE_PROFILE : 0);
  char* out = nullptr;

  if (selftest->parsed()) {
    int passed = 0;
    gentle_status s = gentle_selftest(seed, flags, &out, &passed);
    int rc = emit(s, out);
    if (rc == 0 && !passed) return 3;
    return rc;
  }

  AlgebraHandle h;
  if (int rc = report(gentle_algebra_load(file.c_str(), &h.a))) return rc;
  const char* sc = scalar.empty() ? nullptr : scalar.c_str();
  if (validate->parsed()) return emit(gentle_validate(h.a, flags, &out), out);
  if (threads->parsed()) return emit(gentle_threads(h.a, flags, &out), out);
  if (ag->parsed()) return emit(gentle_ag(h.a, flags, &out), out);
  if (hom->parsed()) return emit(gentle_hom(h.a, from.c_str(), to.c_str(), sc, flags, &out), out);
  if (alp->parsed()) return emit(gentle_alp(h.a, from.c_str(), to.c_str(), flags, &out), out);
  if (cycles->parsed()) return emit(gentle_cycles(h.a, flags, &out), out);
  if (band->parsed()) return emit(gentle_band(h.a, band_expr.c_str(), sc, flags, &out), out);
  if (search->parsed()) return emit(gentle_search(h.a, max_letters, shift_window, flags, &out), out);
  return 2;
}
