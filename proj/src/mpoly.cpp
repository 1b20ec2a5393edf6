#include "k3/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace k3 {

MPoly MPoly::zero(std::vector<std::string> vars) {
  return MPoly(std::move(vars));
}

MPoly MPoly::constant(const Rational& c, std::vector<std::string> vars) {
  MPoly p(std::move(vars));
  if (sgn(c) != 0) p.t_[Exponents(p.arity(), 0)] = c;
  return p;
}

MPoly MPoly::var(const std::string& name, std::vector<std::string> vars) {
  MPoly p(std::move(vars));
  auto it = std::find(p.vars_.begin(), p.vars_.end(), name);
  if (it == p.vars_.end())
    throw std::invalid_argument("MPoly::var: unknown variable " + name);
  Exponents e(p.arity(), 0);
  e[it - p.vars_.begin()] = 1;
  p.t_[e] = 1;
  return p;
}

MPoly MPoly::from_upoly(const UPoly& p, std::vector<std::string> vars) {
  MPoly out(std::move(vars));
  auto it = std::find(out.vars_.begin(), out.vars_.end(), p.var());
  if (it == out.vars_.end())
    throw std::invalid_argument("from_upoly: variable not in target set");
  int idx = static_cast<int>(it - out.vars_.begin());
  for (int i = 0; i <= p.degree(); ++i) {
    if (sgn(p.coeff(i)) == 0) continue;
    Exponents e(out.arity(), 0);
    e[idx] = i;
    out.t_[e] = p.coeff(i);
  }
  return out;
}

bool MPoly::is_constant() const {
  return t_.empty() ||
         (t_.size() == 1 && t_.begin()->first == Exponents(arity(), 0));
}

Rational MPoly::constant_value() const {
  if (t_.empty()) return Rational(0);
  if (!is_constant()) throw std::logic_error("constant_value: not constant");
  return t_.begin()->second;
}

int MPoly::total_degree() const {
  int d = -1;
  for (auto& [e, c] : t_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

int MPoly::degree_in(int var_index) const {
  int d = 0;
  for (auto& [e, c] : t_) d = std::max(d, e[var_index]);
  return d;
}

void MPoly::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != arity())
    throw std::invalid_argument("add_term: arity mismatch");
  auto it = t_.find(e);
  if (it == t_.end()) {
    if (sgn(c) != 0) t_[e] = c;
  } else {
    it->second += c;
    if (sgn(it->second) == 0) t_.erase(it);
  }
}

Rational MPoly::coeff(const Exponents& e) const {
  auto it = t_.find(e);
  return it == t_.end() ? Rational(0) : it->second;
}

void MPoly::check_compatible(const MPoly& o) const {
  if (vars_ != o.vars_)
    throw std::invalid_argument("MPoly: variable set mismatch");
}

MPoly MPoly::operator-() const {
  MPoly r(vars_);
  for (auto& [e, c] : t_) r.t_[e] = -c;
  return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
  check_compatible(o);
  MPoly r = *this;
  for (auto& [e, c] : o.t_) r.add_term(e, c);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
  check_compatible(o);
  MPoly r(vars_);
  for (auto& [e1, c1] : t_)
    for (auto& [e2, c2] : o.t_) {
      Exponents e(e1);
      for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

MPoly MPoly::operator*(const Rational& s) const {
  MPoly r(vars_);
  if (sgn(s) == 0) return r;
  for (auto& [e, c] : t_) r.t_[e] = c * s;
  return r;
}

MPoly MPoly::operator/(const Rational& s) const {
  if (sgn(s) == 0) throw std::invalid_argument("division by zero scalar");
  return *this * (Rational(1) / s);
}

MPoly MPoly::pow(unsigned n) const {
  MPoly r = constant(1, vars_);
  MPoly b = *this;
  while (n) {
    if (n & 1u) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

MPoly MPoly::partial(int var_index) const {
  MPoly r(vars_);
  for (auto& [e, c] : t_) {
    if (e[var_index] == 0) continue;
    Exponents d(e);
    --d[var_index];
    r.add_term(d, c * Rational(e[var_index]));
  }
  return r;
}

Rational MPoly::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != arity())
    throw std::invalid_argument("eval: arity mismatch");
  Rational acc(0);
  for (auto& [e, c] : t_) {
    Rational term = c;
    for (size_t i = 0; i < point.size(); ++i)
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    acc += term;
  }
  return acc;
}

MPoly MPoly::substitute(const std::vector<MPoly>& bindings) const {
  if (static_cast<int>(bindings.size()) != arity())
    throw std::invalid_argument("substitute: arity mismatch");
  for (auto& b : bindings)
    if (b.vars() != bindings.front().vars())
      throw std::invalid_argument("substitute: inconsistent binding sets");
  MPoly acc = MPoly::zero(bindings.front().vars());
  for (auto& [e, c] : t_) {
    MPoly term = MPoly::constant(c, acc.vars());
    for (size_t i = 0; i < bindings.size(); ++i)
      if (e[i] > 0) term = term * bindings[i].pow(e[i]);
    acc = acc + term;
  }
  return acc;
}

std::vector<MPoly> MPoly::collect(int var_index) const {
  std::vector<MPoly> out(degree_in(var_index) + 1, MPoly::zero(vars_));
  for (auto& [e, c] : t_) {
    Exponents r(e);
    int k = r[var_index];
    r[var_index] = 0;
    out[k].add_term(r, c);
  }
  return out;
}

UPoly MPoly::to_upoly(const std::string& var_name) const {
  int idx = -1;
  for (auto& [e, c] : t_)
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) {
        if (idx >= 0 && idx != static_cast<int>(i))
          throw std::logic_error("to_upoly: polynomial is not univariate");
        idx = static_cast<int>(i);
      }
  if (idx < 0) idx = 0;
  std::vector<Rational> coeffs(degree_in(idx) + 1, Rational(0));
  for (auto& [e, c] : t_) coeffs[e[idx]] = c;
  return UPoly(std::move(coeffs),
               var_name.empty() ? vars_[idx] : var_name);
}

std::string MPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const Rational& c = it->second;
    if (!first) os << (sgn(c) > 0 ? " + " : " - ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    Rational m = abs(c);
    bool any = false;
    std::ostringstream mono;
    for (size_t i = 0; i < vars_.size(); ++i)
      if (it->first[i] > 0) {
        if (any) mono << "*";
        mono << vars_[i];
        if (it->first[i] > 1) mono << "^" << it->first[i];
        any = true;
      }
    if (!any || m != 1) {
      os << rat_str(m);
      if (any) os << "*";
    }
    os << mono.str();
  }
  return os.str();
}

RationalFunction substitute_rational(const MPoly& target,
                                     const std::vector<RationalFunction>& b) {
  if (static_cast<int>(b.size()) != target.arity())
    throw std::invalid_argument("substitute_rational: arity mismatch");
  auto vars = b.front().num.vars();
  // Common denominator: product of den_i^deg_i(target).
  std::vector<int> degs(b.size());
  for (size_t i = 0; i < b.size(); ++i)
    degs[i] = target.degree_in(static_cast<int>(i));
  MPoly num = MPoly::zero(vars);
  for (auto& [e, c] : target.terms()) {
    MPoly term = MPoly::constant(c, vars);
    for (size_t i = 0; i < b.size(); ++i) {
      if (e[i] > 0) term = term * b[i].num.pow(e[i]);
      if (degs[i] - e[i] > 0) term = term * b[i].den.pow(degs[i] - e[i]);
    }
    num = num + term;
  }
  MPoly den = MPoly::constant(1, vars);
  for (size_t i = 0; i < b.size(); ++i)
    if (degs[i] > 0) den = den * b[i].den.pow(degs[i]);
  return {num, den};
}

std::optional<MPoly> mpoly_sqrt(const MPoly& p) {
  if (p.is_zero()) return MPoly::zero(p.vars());
  // Leading term (in the map's reverse order) must be a square.
  auto lead = p.terms().rbegin();
  MPoly::Exponents le = lead->first;
  for (int& e : le) {
    if (e % 2 != 0) return std::nullopt;
    e /= 2;
  }
  auto lc = rational_sqrt(lead->second);
  if (!lc) return std::nullopt;
  MPoly root(p.vars());
  root.add_term(le, *lc);
  MPoly twice_lead(p.vars());
  twice_lead.add_term(le, 2 * *lc);
  MPoly rem = p - root * root;
  // Peel terms: next leading term of the residual must be divisible by
  // 2 * lead(root).
  int guard = 0;
  while (!rem.is_zero()) {
    if (++guard > 1000) return std::nullopt;
    auto t = rem.terms().rbegin();
    MPoly::Exponents e = t->first;
    for (size_t i = 0; i < e.size(); ++i) {
      e[i] -= le[i];
      if (e[i] < 0) return std::nullopt;
    }
    MPoly add(p.vars());
    add.add_term(e, t->second / (2 * *lc));
    root = root + add;
    rem = p - root * root;
  }
  return root;
}

}  // namespace k3
