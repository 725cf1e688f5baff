#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace nh {

// Exact arbitrary-precision rational coefficients. All arithmetic in the
// library is exact; there is no floating point anywhere.
using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Parses "p", "-p", or "p/q" (reduced on return). Returns nullopt on syntax
// errors or a zero denominator.
inline std::optional<Rational> parse_rational(const std::string& s) {
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) return std::nullopt;
  if (q.get_den() == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

}  // namespace nh
