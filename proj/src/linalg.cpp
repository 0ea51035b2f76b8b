#include "gentle/linalg.hpp"

#include "gentle/error.hpp"

namespace gentle {

namespace {

Fp from_mpz(const mpz_class& z) {
  if (z.fits_slong_p()) return Fp::from_int(z.get_si());
  mpz_class r = z % mpz_class(static_cast<unsigned long>(Fp::modulus));
  if (r < 0) r += static_cast<unsigned long>(Fp::modulus);
  return Fp::from_int(static_cast<long long>(r.get_ui()));
}

}  // namespace

Fp Fp::from_rational(const Rational& q) {
  Fp num = from_mpz(q.get_num());
  if (q.get_den() == 1) return num;
  Fp den = from_mpz(q.get_den());
  if (den.is_zero()) throw InternalError("rational denominator vanishes modulo the working prime");
  return num * den.inverse();
}

Fp Fp::inverse() const {
  if (v_ == 0) throw InternalError("inverse of zero in prime field");
  // extended Euclid on (modulus, v)
  __int128 r0 = modulus, r1 = v_, t0 = 0, t1 = 1;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    __int128 t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t0 < 0) t0 += modulus;
  Fp f;
  f.v_ = static_cast<std::uint64_t>(t0);
  return f;
}

}  // namespace gentle
