#include "k3/rational.hpp"

#include <stdexcept>

namespace k3 {

Rational rat_parse(const std::string& s) {
  std::string t;
  t.reserve(s.size());
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw std::invalid_argument("empty rational literal");
  Rational q;
  if (q.set_str(t, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::optional<Rational> rational_sqrt(const Rational& q) {
  return rational_root(q, 2);
}

std::optional<Rational> rational_root(const Rational& q, unsigned k) {
  if (k == 0) throw std::invalid_argument("rational_root: k = 0");
  if (k == 1) return q;
  if (sgn(q) < 0 && k % 2 == 0) return std::nullopt;
  Integer num = abs(q.get_num()), den = q.get_den();
  Integer rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k) == 0) return std::nullopt;
  Rational r(sgn(q) < 0 ? -rn : rn, rd);
  r.canonicalize();
  return r;
}

}  // namespace k3
