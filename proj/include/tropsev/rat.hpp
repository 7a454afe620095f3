#ifndef TROPSEV_RAT_HPP
#define TROPSEV_RAT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace tropsev {

/// Exact rational number. All geometry in this library is done over Q so
/// that wall and midpoint conditions are decided by equality, not tolerance.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p/q" or "p". Throws on malformed input or q = 0.
inline Rat rat_from_string(const std::string& s) {
  mpq_class r;
  if (s.empty() || r.set_str(s, 10) != 0)
    throw std::invalid_argument("rat_from_string: bad rational '" + s + "'");
  if (r.get_den() == 0)
    throw std::invalid_argument("rat_from_string: zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

/// Canonical "p/q" form; integers print without the "/q" part.
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline Int rat_floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

inline Int rat_ceil(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline long to_long(const Int& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("to_long: out of range");
  return z.get_si();
}

}  // namespace tropsev

#endif
