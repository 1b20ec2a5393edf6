#include "k3/upoly.hpp"

#include <sstream>
#include <stdexcept>

namespace k3 {

UPoly::UPoly(std::vector<Rational> coeffs, std::string var)
    : c_(std::move(coeffs)), var_(std::move(var)) {
  normalize();
}

void UPoly::normalize() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UPoly UPoly::constant(const Rational& c, std::string var) {
  return UPoly({c}, std::move(var));
}

UPoly UPoly::monomial(const Rational& c, int deg, std::string var) {
  std::vector<Rational> v(deg + 1, Rational(0));
  v[deg] = c;
  return UPoly(std::move(v), std::move(var));
}

Rational UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[i];
}

const Rational& UPoly::lc() const {
  if (c_.empty()) throw std::logic_error("lc of zero polynomial");
  return c_.back();
}

UPoly UPoly::operator-() const {
  UPoly r(var_);
  r.c_.reserve(c_.size());
  for (auto& x : c_) r.c_.push_back(-x);
  return r;
}

UPoly UPoly::operator+(const UPoly& o) const {
  UPoly r(var_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
  r.normalize();
  return r;
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly(var_);
  UPoly r(var_);
  r.c_.assign(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  r.normalize();
  return r;
}

UPoly UPoly::operator*(const Rational& s) const {
  UPoly r(var_);
  if (sgn(s) == 0) return r;
  r.c_.reserve(c_.size());
  for (auto& x : c_) r.c_.push_back(x * s);
  return r;
}

UPoly UPoly::operator/(const Rational& s) const {
  if (sgn(s) == 0) throw std::invalid_argument("division by zero scalar");
  return *this * (Rational(1) / s);
}

UPoly UPoly::pow(unsigned n) const {
  UPoly r = constant(1, var_);
  UPoly b = *this;
  while (n) {
    if (n & 1u) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

UPoly UPoly::derivative() const {
  UPoly r(var_);
  for (size_t i = 1; i < c_.size(); ++i)
    r.c_.push_back(c_[i] * Rational(static_cast<long>(i)));
  r.normalize();
  return r;
}

Rational UPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::compose(const UPoly& inner) const {
  UPoly acc(inner.var());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * inner + constant(*it, inner.var());
  return acc;
}

UPoly UPoly::reversed(int deg) const {
  if (degree() > deg)
    throw std::invalid_argument("reversed: degree bound too small");
  std::vector<Rational> v(deg + 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) v[deg - i] = c_[i];
  return UPoly(std::move(v), var_);
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return *this / lc();
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
  UPoly q(var_), r = *this;
  if (r.degree() >= d.degree())
    q.c_.assign(r.degree() - d.degree() + 1, Rational(0));
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int k = r.degree() - d.degree();
    Rational f = r.lc() / d.lc();
    q.c_[k] = f;
    for (size_t i = 0; i < d.c_.size(); ++i) r.c_[k + i] -= f * d.c_[i];
    r.normalize();
  }
  q.normalize();
  return {q, r};
}

UPoly UPoly::exact_div(const UPoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw std::invalid_argument("exact_div: nonzero remainder");
  return q;
}

bool UPoly::divisible_by(const UPoly& d) const {
  return divmod(d).second.is_zero();
}

std::string UPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (sgn(c_[i]) == 0) continue;
    Rational a = c_[i];
    if (!first) os << (sgn(a) > 0 ? " + " : " - ");
    else if (sgn(a) < 0) os << "-";
    first = false;
    Rational m = abs(a);
    if (i == 0 || m != 1) os << rat_str(m) << (i > 0 ? "*" : "");
    if (i > 0) {
      os << var_;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

UPoly upoly_gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

SquarefreeFactorization squarefree_factor(const UPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("zero input");
  SquarefreeFactorization out;
  out.scalar = p.lc();
  if (p.degree() == 0) return out;
  UPoly f = p.monic();
  // Yun's algorithm (characteristic zero).
  UPoly g = upoly_gcd(f, f.derivative());
  UPoly w = f.exact_div(g);
  UPoly y = f.derivative().exact_div(g);
  int mult = 1;
  while (w.degree() > 0) {
    UPoly z = y - w.derivative();
    UPoly a = upoly_gcd(w, z);
    if (a.degree() > 0) out.factors.emplace_back(a, mult);
    w = w.exact_div(a);
    y = z.exact_div(a);
    ++mult;
  }
  return out;
}

UPoly squarefree_part(const UPoly& p) {
  UPoly r = UPoly::constant(1, p.var());
  for (auto& [f, m] : squarefree_factor(p).factors) r = r * f;
  return r;
}

Rational resultant(const UPoly& p, const UPoly& q) {
  if (p.is_zero() || q.is_zero())
    throw std::invalid_argument("resultant: zero input");
  if (p.var() != q.var())
    throw std::invalid_argument("resultant: variable mismatch");
  // Euclidean recursion on res(a, b) with deg a >= deg b, tracking the sign
  // and leading-coefficient factors of the Sylvester convention.
  UPoly a = p, b = q;
  Rational acc(1);
  bool swapped = false;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    swapped = true;
  }
  if (swapped && (p.degree() * q.degree()) % 2 != 0) acc = -acc;
  while (true) {
    if (b.degree() == 0) {
      Rational pw(1);
      for (int i = 0; i < a.degree(); ++i) pw *= b.lc();
      return acc * pw;
    }
    UPoly rem = a.divmod(b).second;
    if (rem.is_zero()) return Rational(0);
    int da = a.degree(), db = b.degree(), dr = rem.degree();
    // res(a,b) = (-1)^(da db) lc(b)^(da - dr) res(b, rem)
    if ((da * db) % 2 != 0) acc = -acc;
    Rational pw(1);
    for (int i = 0; i < da - dr; ++i) pw *= b.lc();
    acc *= pw;
    a = std::move(b);
    b = std::move(rem);
  }
}

Rational discriminant(const UPoly& p) {
  if (p.degree() < 2) throw std::invalid_argument("discriminant: degree < 2");
  UPoly d = p.derivative();
  Rational r = d.is_zero() ? Rational(0) : resultant(p, d);
  int n = p.degree();
  Rational out = r / p.lc();
  if ((n * (n - 1) / 2) % 2 != 0) out = -out;
  return out;
}

int valuation(const UPoly& p, const UPoly& place) {
  if (p.is_zero()) throw std::invalid_argument("valuation of zero");
  if (place.degree() < 1) throw std::invalid_argument("bad place");
  int v = 0;
  UPoly r = p;
  while (true) {
    auto [q, rem] = r.divmod(place);
    if (!rem.is_zero()) return v;
    ++v;
    r = std::move(q);
    if (r.is_zero()) return v;
  }
}

}  // namespace k3
