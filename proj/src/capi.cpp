#include "gentle_c.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "gentle/error.hpp"
#include "gentle/hom.hpp"
#include "gentle/report.hpp"

struct gentle_algebra {
  gentle::AlgebraPtr ptr;
};

namespace {

thread_local std::string last_error;

gentle_status fail(gentle_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
gentle_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const gentle::InternalError& e) {
    return fail(GENTLE_INTERNAL_ERROR, std::string("internal error: ") + e.what());
  } catch (const gentle::Error& e) {
    return fail(GENTLE_DOMAIN_ERROR, e.what());
  } catch (const std::bad_alloc&) {
    return fail(GENTLE_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(GENTLE_INTERNAL_ERROR, std::string("internal error: ") + e.what());
  }
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

gentle::report::Options options(unsigned flags) {
  gentle::report::Options o;
  o.json = flags & GENTLE_JSON;
  o.parallel = flags & GENTLE_PARALLEL;
  return o;
}

gentle::Rational scalar_or_one(const char* s) { return s ? gentle::report::parse_scalar(s) : gentle::Rational(1); }

// Runs a renderer that needs an algebra and writes its output.
template <class F>
gentle_status render(const gentle_algebra* a, char** out, F&& f) {
  if (!a || !out) return fail(GENTLE_USAGE_ERROR, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = copy_out(f(a->ptr));
    return GENTLE_OK;
  });
}

}  // namespace

extern "C" {

const char* gentle_last_error(void) { return last_error.c_str(); }

void gentle_string_free(char* s) { std::free(s); }

gentle_status gentle_algebra_load(const char* path, gentle_algebra** out) {
  if (!path || !out) return fail(GENTLE_USAGE_ERROR, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new gentle_algebra{gentle::make_algebra(gentle::load_presentation(path))};
    return GENTLE_OK;
  });
}

gentle_status gentle_algebra_parse(const char* text, gentle_algebra** out) {
  if (!text || !out) return fail(GENTLE_USAGE_ERROR, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new gentle_algebra{gentle::make_algebra_from_text(text)};
    return GENTLE_OK;
  });
}

void gentle_algebra_free(gentle_algebra* a) { delete a; }

gentle_status gentle_algebra_dimension(const gentle_algebra* a, int* out) {
  if (!a || !out) return fail(GENTLE_USAGE_ERROR, "null argument");
  last_error.clear();
  *out = a->ptr->dimension();
  return GENTLE_OK;
}

gentle_status gentle_hom_dim(const gentle_algebra* a, const char* from, const char* to, const char* scalar, int n,
                             int* out) {
  if (!a || !from || !to || !out) return fail(GENTLE_USAGE_ERROR, "null argument");
  return guarded([&] {
    gentle::Rational mu = scalar_or_one(scalar);
    gentle::Complex x = gentle::report::parse_object(a->ptr, from, mu);
    gentle::Complex y = gentle::report::parse_object(a->ptr, to, mu);
    *out = gentle::hom_k_dim(x, y, n);
    return GENTLE_OK;
  });
}

gentle_status gentle_validate(const gentle_algebra* a, unsigned flags, char** out) {
  return render(a, out, [&](const gentle::AlgebraPtr& p) { return gentle::report::validate(p, options(flags)); });
}

gentle_status gentle_threads(const gentle_algebra* a, unsigned flags, char** out) {
  return render(a, out, [&](const gentle::AlgebraPtr& p) { return gentle::report::threads(p, options(flags)); });
}

gentle_status gentle_ag(const gentle_algebra* a, unsigned flags, char** out) {
  return render(a, out,
                [&](const gentle::AlgebraPtr& p) { return gentle::report::ag(p, options(flags), flags & GENTLE_DOT); });
}

gentle_status gentle_hom(const gentle_algebra* a, const char* from, const char* to, const char* scalar, unsigned flags,
                         char** out) {
  if (!from || !to) return fail(GENTLE_USAGE_ERROR, "null argument");
  return render(a, out, [&](const gentle::AlgebraPtr& p) {
    return gentle::report::hom(p, from, to, scalar_or_one(scalar), flags & GENTLE_PROFILE, options(flags));
  });
}

gentle_status gentle_alp(const gentle_algebra* a, const char* from, const char* to, unsigned flags, char** out) {
  if (!from || !to) return fail(GENTLE_USAGE_ERROR, "null argument");
  return render(a, out, [&](const gentle::AlgebraPtr& p) { return gentle::report::alp(p, from, to, options(flags)); });
}

gentle_status gentle_cycles(const gentle_algebra* a, unsigned flags, char** out) {
  return render(a, out, [&](const gentle::AlgebraPtr& p) {
    return gentle::report::cycles(p, flags & GENTLE_VERIFY, options(flags));
  });
}

gentle_status gentle_band(const gentle_algebra* a, const char* band, const char* scalar, unsigned flags, char** out) {
  if (!band) return fail(GENTLE_USAGE_ERROR, "null argument");
  return render(a, out, [&](const gentle::AlgebraPtr& p) {
    return gentle::report::band(p, band, scalar_or_one(scalar), options(flags));
  });
}

gentle_status gentle_search(const gentle_algebra* a, int max_letters, int shift_window, unsigned flags, char** out) {
  return render(a, out, [&](const gentle::AlgebraPtr& p) {
    std::optional<int> l, w;
    if (max_letters > 0) l = max_letters;
    if (shift_window > 0) w = shift_window;
    return gentle::report::search(p, l, w, options(flags));
  });
}

gentle_status gentle_selftest(uint64_t seed, unsigned flags, char** out, int* passed) {
  if (!out || !passed) return fail(GENTLE_USAGE_ERROR, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto r = gentle::report::selftest(seed, options(flags));
    *out = copy_out(r.output);
    *passed = r.passed ? 1 : 0;
    return GENTLE_OK;
  });
}

}  // extern "C"
