#pragma once

#include <string>
#include <utility>
#include <vector>

#include "k3/rational.hpp"

namespace k3 {

// Dense univariate polynomial over the rationals. Coefficients are stored
// lowest degree first; the representation is kept normalized (no trailing
// zero coefficients), so degree() is always the true degree and the zero
// polynomial has an empty coefficient vector.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::string var) : var_(std::move(var)) {}
  UPoly(std::vector<Rational> coeffs, std::string var = "t");

  static UPoly zero(std::string var = "t") { return UPoly(std::move(var)); }
  static UPoly constant(const Rational& c, std::string var = "t");
  static UPoly monomial(const Rational& c, int deg, std::string var = "t");
  // The variable itself.
  static UPoly x(std::string var = "t") {
    return monomial(1, 1, std::move(var));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::string& var() const { return var_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  const Rational& lc() const;

  UPoly operator-() const;
  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator*(const Rational& s) const;
  UPoly operator/(const Rational& s) const;
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  UPoly pow(unsigned n) const;
  UPoly derivative() const;
  Rational eval(const Rational& x) const;
  UPoly compose(const UPoly& inner) const;
  // p(x) -> x^deg * p(1/x); used for the place at infinity.
  UPoly reversed(int deg) const;
  UPoly monic() const;

  // Quotient and remainder; exact_div throws if the remainder is nonzero.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  UPoly exact_div(const UPoly& d) const;
  bool divisible_by(const UPoly& d) const;

  std::string str() const;

 private:
  void normalize();
  std::vector<Rational> c_;
  std::string var_ = "t";
};

inline UPoly operator*(const Rational& s, const UPoly& p) { return p * s; }

// Monic gcd.
UPoly upoly_gcd(UPoly a, UPoly b);

struct SquarefreeFactorization {
  Rational scalar;  // p = scalar * prod factor^mult, factors monic
  std::vector<std::pair<UPoly, int>> factors;
};

// Yun's algorithm; factors are monic, squarefree and pairwise coprime.
SquarefreeFactorization squarefree_factor(const UPoly& p);
UPoly squarefree_part(const UPoly& p);

// Sylvester convention: res(p, q) = lc(p)^deg(q) * prod q(alpha_i).
Rational resultant(const UPoly& p, const UPoly& q);

// (-1)^(n(n-1)/2) res(p, p') / lc(p), n = deg p.
Rational discriminant(const UPoly& p);

// All rational roots, with multiplicity.
std::vector<std::pair<Rational, int>> rational_roots(const UPoly& p);

// Multiplicity of the monic factor `place` in p (p nonzero).
int valuation(const UPoly& p, const UPoly& place);

}  // namespace k3
