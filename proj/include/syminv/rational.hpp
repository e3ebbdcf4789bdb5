#pragma once

#include <gmpxx.h>

#include <string>

#include "syminv/error.hpp"

namespace syminv {

// Exact rational scalar. All library arithmetic is over this field except
// the float-mode finite-difference path in verify.
using Rat = mpq_class;

// Parses "p/q" or "p" (base 10). Throws ParseError on malformed input or
// zero denominator. The result is canonical: gcd(p,q)=1, q>0.
inline Rat rat_from_string(const std::string& s) {
  mpq_class r;
  if (s.empty() || r.set_str(s, 10) != 0)
    throw ParseError("invalid rational literal: '" + s + "'");
  if (r.get_den() == 0)
    throw ParseError("zero denominator in rational literal: '" + s + "'");
  r.canonicalize();
  return r;
}

// Canonical form: "p/q" with q>0, or just "p" when q=1.
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

// mpq_class(num, den) does not reduce; this does. den must be nonzero.
inline Rat make_rat(long num, long den) {
  if (den == 0) throw ParseError("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline double rat_to_double(const Rat& r) { return r.get_d(); }

}  // namespace syminv
