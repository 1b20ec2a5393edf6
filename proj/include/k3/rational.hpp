#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace k3 {

// Exact rationals. mpq_class keeps values canonical (reduced, positive
// denominator) through arithmetic; parsing goes through rat_parse so that
// string input is canonicalized too.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rat_parse(const std::string& s);

// Canonical "p/q" form, plain "p" when q = 1.
std::string rat_str(const Rational& q);

bool is_integer(const Rational& q);

// Exact square root when q is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& q);

// Exact k-th root (k >= 1), negative q allowed for odd k.
std::optional<Rational> rational_root(const Rational& q, unsigned k);

}  // namespace k3
