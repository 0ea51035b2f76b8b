// Plain C-style checks against the shared library; no test framework.
#include <cstdio>
#include <cstring>
#include <string>

#include "gentle_c.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      std::fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static std::string fixture(const char* name) { return std::string(GENTLE_FIXTURES) + "/" + name + ".gentle"; }

static bool contains(const char* s, const char* needle) { return s && std::strstr(s, needle) != nullptr; }

int main() {
  gentle_algebra* a = nullptr;
  EXPECT(gentle_algebra_load(fixture("dual_numbers").c_str(), &a) == GENTLE_OK);
  int dim = 0;
  EXPECT(gentle_algebra_dimension(a, &dim) == GENTLE_OK);
  EXPECT(dim == 2);

  char* out = nullptr;
  EXPECT(gentle_validate(a, 0, &out) == GENTLE_OK);
  EXPECT(contains(out, "dim A = 2"));
  gentle_string_free(out);

  EXPECT(gentle_cycles(a, GENTLE_JSON, &out) == GENTLE_OK);
  EXPECT(contains(out, "\"calabi_yau\": 0"));
  gentle_string_free(out);

  int d = -1;
  EXPECT(gentle_hom_dim(a, "triv:1:1", "triv:1:1", nullptr, 0, &d) == GENTLE_OK);
  EXPECT(d == 2);
  EXPECT(gentle_hom_dim(a, "y", "x@1", nullptr, 0, &d) == GENTLE_DOMAIN_ERROR);
  EXPECT(contains(gentle_last_error(), "letter"));
  EXPECT(gentle_hom_dim(a, "triv:1:1", "triv:1:1@bad", nullptr, 0, &d) == GENTLE_DOMAIN_ERROR);
  gentle_algebra_free(a);

  EXPECT(gentle_algebra_load(fixture("kronecker").c_str(), &a) == GENTLE_OK);
  EXPECT(gentle_band(a, "beta^-1, alpha", "-3", GENTLE_JSON, &out) == GENTLE_OK);
  EXPECT(contains(out, "\"exceptional_1_cycle\": true"));
  gentle_string_free(out);
  EXPECT(gentle_band(a, "beta^-1, alpha", "0", 0, &out) == GENTLE_DOMAIN_ERROR);
  EXPECT(out == nullptr);
  EXPECT(gentle_band(a, "beta^-1, alpha", "1/x", 0, &out) == GENTLE_DOMAIN_ERROR);
  EXPECT(gentle_hom_dim(a, "alpha", "alpha@1", nullptr, 0, &d) == GENTLE_OK);
  EXPECT(d == 1);
  EXPECT(gentle_ag(a, GENTLE_JSON, &out) == GENTLE_OK);
  EXPECT(contains(out, "\"orbits\""));
  gentle_string_free(out);
  EXPECT(gentle_ag(a, GENTLE_DOT, &out) == GENTLE_OK);
  EXPECT(contains(out, "digraph"));
  gentle_string_free(out);
  gentle_algebra_free(a);

  EXPECT(gentle_algebra_load("/nonexistent/file.gentle", &a) == GENTLE_DOMAIN_ERROR);
  EXPECT(a == nullptr);
  EXPECT(contains(gentle_last_error(), "file not found"));
  EXPECT(gentle_algebra_parse("vertex 1\narrow x : 1 -> 1\n", &a) == GENTLE_DOMAIN_ERROR);
  EXPECT(gentle_algebra_parse("vertex 1 2\narrow a : 1 -> 3\n", &a) == GENTLE_DOMAIN_ERROR);
  EXPECT(contains(gentle_last_error(), "line 2"));
  EXPECT(gentle_algebra_parse(nullptr, &a) == GENTLE_USAGE_ERROR);
  EXPECT(gentle_validate(nullptr, 0, &out) == GENTLE_USAGE_ERROR);

  EXPECT(gentle_algebra_parse("algebra t\nvertex 1 2\narrow a : 1 -> 2\n", &a) == GENTLE_OK);
  EXPECT(gentle_algebra_dimension(a, &dim) == GENTLE_OK);
  EXPECT(dim == 3);
  char* first = nullptr;
  char* second = nullptr;
  EXPECT(gentle_threads(a, GENTLE_JSON, &first) == GENTLE_OK);
  EXPECT(gentle_threads(a, GENTLE_JSON, &second) == GENTLE_OK);
  EXPECT(first && second && std::strcmp(first, second) == 0);
  gentle_string_free(first);
  gentle_string_free(second);
  gentle_algebra_free(a);

  if (failures) std::fprintf(stderr, "%d failures\n", failures);
  return failures ? 1 : 0;
}
