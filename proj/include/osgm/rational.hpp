#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "osgm/error.hpp"

namespace osgm {

/// Exact arbitrary-precision fraction, always canonical (lowest terms, q > 0).
using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// "p/q", or "p" when q == 1.
inline std::string to_string(const Rational& x) { return x.get_str(); }

/// Parses "p", "p/q", "-p/q" (surrounding blanks allowed). A zero
/// denominator or any stray character is a ValidationError.
inline Rational parse_rational(std::string_view text) {
  auto first = text.find_first_not_of(" \t");
  auto last = text.find_last_not_of(" \t");
  if (first == std::string_view::npos) {
    throw ValidationError("empty rational");
  }
  std::string s(text.substr(first, last - first + 1));
  auto slash = s.find('/');
  auto digits_ok = [](std::string_view d, bool allow_sign) {
    if (allow_sign && !d.empty() && (d[0] == '-' || d[0] == '+')) d.remove_prefix(1);
    if (d.empty()) return false;
    for (char c : d) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false)) {
    throw ValidationError("invalid rational '" + s + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  mpz_class p(num, 10);
  mpz_class q(den, 10);
  if (q == 0) {
    throw ValidationError("zero denominator in rational '" + s + "'");
  }
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// p/q in lowest terms.
inline Rational ratio(long p, long q) {
  if (q == 0) throw ValidationError("zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// True for 0, 1, 2, ...
inline bool is_nonnegative_integer(const Rational& x) {
  return x.get_den() == 1 && sgn(x) >= 0;
}

}  // namespace osgm
