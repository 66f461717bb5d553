#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "gkm/errors.hpp"

namespace gkm {

// All arithmetic in the library is exact; there is no floating point anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline Integer floor_int(const Rational& r) {
  Integer q = numerator(r) / denominator(r);
  if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

inline Integer ceil_int(const Rational& r) { return -floor_int(-r); }

inline long long to_long(const Integer& n) {
  if (n > std::numeric_limits<long long>::max() || n < std::numeric_limits<long long>::min())
    throw InternalError("integer out of machine range");
  return static_cast<long long>(n);
}

inline long long to_long(const Rational& r) {
  if (!is_integer(r)) throw InternalError("expected an integer, got " + r.str());
  return to_long(numerator(r));
}

/// "p" for integers, "p/q" otherwise; q always positive, fraction reduced.
inline std::string rational_to_string(const Rational& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den <= 0) throw InputError("rational with nonpositive denominator: " + s);
    return Rational(num, den);
  } catch (const std::exception&) {
    throw InputError("cannot parse rational: '" + s + "'");
  }
}

}  // namespace gkm
