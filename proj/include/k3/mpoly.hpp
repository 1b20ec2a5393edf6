#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "k3/rational.hpp"
#include "k3/upoly.hpp"

namespace k3 {

// Sparse multivariate polynomial over the rationals, keyed by exponent
// vectors of fixed arity. Zero coefficients are never stored.
class MPoly {
 public:
  using Exponents = std::vector<int>;

  MPoly() = default;
  explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MPoly zero(std::vector<std::string> vars);
  static MPoly constant(const Rational& c, std::vector<std::string> vars);
  static MPoly var(const std::string& name, std::vector<std::string> vars);
  static MPoly from_upoly(const UPoly& p, std::vector<std::string> vars);

  int arity() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Exponents, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;
  int total_degree() const;
  int degree_in(int var_index) const;
  size_t term_count() const { return t_.size(); }

  void add_term(const Exponents& e, const Rational& c);
  Rational coeff(const Exponents& e) const;

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator*(const Rational& s) const;
  MPoly operator/(const Rational& s) const;
  bool operator==(const MPoly& o) const {
    return vars_ == o.vars_ && t_ == o.t_;
  }
  MPoly pow(unsigned n) const;

  MPoly partial(int var_index) const;
  Rational eval(const std::vector<Rational>& point) const;
  // Substitute polynomials for every variable; result lives in the target's
  // variable set (all bindings must share it).
  MPoly substitute(const std::vector<MPoly>& bindings) const;

  // Collect as a univariate polynomial in one variable, coefficients MPoly
  // in the full variable set (the extracted variable appearing with
  // exponent zero).
  std::vector<MPoly> collect(int var_index) const;
  UPoly to_upoly(const std::string& var_name = "") const;

  std::string str() const;

 private:
  void check_compatible(const MPoly& o) const;
  std::vector<std::string> vars_;
  std::map<Exponents, Rational> t_;
};

inline MPoly operator*(const Rational& s, const MPoly& p) { return p * s; }

// A rational function as a numerator/denominator pair, common content
// cleared lazily by the operations that produce them.
struct RationalFunction {
  MPoly num, den;
};

// Substitute rational functions for variables; returns num/den with the
// obvious common-denominator clearing.
RationalFunction substitute_rational(const MPoly& target,
                                     const std::vector<RationalFunction>& b);

// Exact square root of a polynomial that is a perfect square; nullopt
// otherwise. Works by leading-term matching in the monomial order.
std::optional<MPoly> mpoly_sqrt(const MPoly& p);

}  // namespace k3
