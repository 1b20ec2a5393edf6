#include "k3/elliptic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "k3/mpoly.hpp"

namespace k3 {

namespace {
constexpr int kInf = 1 << 20;  // valuation of the zero polynomial
}

const std::string& WeierstrassSurface::base_var() const {
  if (!a2.is_zero()) return a2.var();
  if (!a4.is_zero()) return a4.var();
  return a6.var();
}

UPoly surface_c4(const WeierstrassSurface& s) {
  return s.a2 * s.a2 * Rational(16) - s.a4 * Rational(48);
}

UPoly surface_c6(const WeierstrassSurface& s) {
  return s.a2 * s.a2 * s.a2 * Rational(-64) + s.a2 * s.a4 * Rational(288) -
         s.a6 * Rational(864);
}

UPoly surface_discriminant(const WeierstrassSurface& s) {
  const UPoly &a2 = s.a2, &a4 = s.a4, &a6 = s.a6;
  UPoly d = (a2 * a2 * a2 * a6 * Rational(-4) + a2 * a2 * a4 * a4 +
             a2 * a4 * a6 * Rational(18) - a4 * a4 * a4 * Rational(4) -
             a6 * a6 * Rational(27)) *
            Rational(16);
  if (d.is_zero()) throw std::invalid_argument("non-reduced fibration");
  return d;
}

namespace {

struct Shape {
  std::string type;
  int n, m, m1, euler;
  std::string lattice;
};

Shape classify_valuations(int vc4, int vc6, int vd) {
  // Local minimalization: (c4, c6, Delta) scale by (u^4, u^6, u^12).
  int k = std::min({vc4 / 4, vc6 / 6, vd / 12});
  if (vc4 < kInf) vc4 -= 4 * k;
  if (vc6 < kInf) vc6 -= 6 * k;
  vd -= 12 * k;
  if (vd == 0) return {"I0", 0, 1, 1, 0, "-"};
  if (vc4 == 0) {
    int n = vd;
    std::ostringstream os, lat;
    os << "I" << n;
    if (n >= 2) lat << "A" << n - 1;
    return {os.str(), n, n, n, n, n >= 2 ? lat.str() : "-"};
  }
  if (vc6 == 1) return {"II", 0, 1, 1, 2, "-"};
  if (vc4 == 1) return {"III", 0, 2, 2, 3, "A1"};
  if (vc6 == 2) return {"IV", 0, 3, 3, 4, "A2"};
  if (vd == 6) return {"I0*", 0, 5, 4, 6, "D4"};
  if (vc4 == 2 && vc6 == 3) {
    int n = vd - 6;
    std::ostringstream os, lat;
    os << "I" << n << "*";
    lat << "D" << n + 4;
    return {os.str(), n, n + 5, 4, n + 6, lat.str()};
  }
  if (vc6 == 4) return {"IV*", 0, 7, 3, 8, "E6"};
  if (vc4 == 3) return {"III*", 0, 8, 2, 9, "E7"};
  if (vc6 == 5) return {"II*", 0, 9, 1, 10, "E8"};
  throw std::logic_error("valuation triple outside the Kodaira table");
}

int val_or_inf(const UPoly& p, const UPoly& place) {
  if (p.is_zero()) return kInf;
  return valuation(p, place);
}

KodairaFiber make_fiber(std::optional<UPoly> place, int degree, int vc4,
                        int vc6, int vd) {
  Shape sh = classify_valuations(vc4, vc6, vd);
  KodairaFiber f;
  f.place = std::move(place);
  f.point_count = degree;
  f.type = sh.type;
  f.n = sh.n;
  f.m = sh.m;
  f.m1 = sh.m1;
  f.euler = sh.euler;
  f.lattice = sh.lattice;
  return f;
}

}  // namespace

KodairaFiber kodaira_type_at(const WeierstrassSurface& s, const UPoly& place) {
  if (place.degree() < 1)
    throw std::invalid_argument("place must be nonconstant");
  UPoly d = surface_discriminant(s);
  int vd = valuation(d, place);
  if (vd == 0)
    return make_fiber(place.monic(), place.degree(), 0, 0, 0);
  int vc4 = val_or_inf(surface_c4(s), place);
  int vc6 = val_or_inf(surface_c6(s), place);
  return make_fiber(place.monic(), place.degree(), vc4, vc6, vd);
}

KodairaFiber kodaira_type_at_infinity(const WeierstrassSurface& s) {
  const std::string& v = s.base_var();
  const UPoly* as[3] = {&s.a2, &s.a4, &s.a6};
  UPoly ta[3];
  for (int i = 0; i < 3; ++i) {
    int bound = s.chi * 2 * (i + 1);
    if (as[i]->degree() > bound)
      throw std::invalid_argument("degree exceeds chi bound");
    ta[i] = as[i]->reversed(bound);
  }
  WeierstrassSurface flipped{ta[0], ta[1], ta[2], s.chi};
  UPoly place = UPoly::x(v);
  UPoly d = surface_discriminant(flipped);
  int vd = valuation(d, place);
  int vc4 = val_or_inf(surface_c4(flipped), place);
  int vc6 = val_or_inf(surface_c6(flipped), place);
  KodairaFiber f = make_fiber(std::nullopt, 1, vc4, vc6, vd);
  return f;
}

namespace {

// Split q into coprime pieces whose irreducible factors share a single
// valuation of p.
std::vector<UPoly> refine_against(const UPoly& q, const UPoly& p) {
  if (p.is_zero() || q.degree() < 1) return {q};
  std::vector<UPoly> out;
  UPoly rest = q;
  for (auto& [factor, mult] : squarefree_factor(p).factors) {
    UPoly g = upoly_gcd(rest, factor);
    if (g.degree() > 0) {
      out.push_back(g);
      rest = rest.exact_div(g);
    }
  }
  if (rest.degree() > 0) out.push_back(rest);
  return out;
}

}  // namespace

std::vector<KodairaFiber> classify_all_fibers(const WeierstrassSurface& s) {
  const std::string& v = s.base_var();
  std::vector<KodairaFiber> out;
  out.push_back(kodaira_type_at_infinity(s));

  UPoly d = surface_discriminant(s);
  UPoly c4 = surface_c4(s), c6 = surface_c6(s);
  for (auto& [factor, mult] : squarefree_factor(d).factors) {
    std::vector<UPoly> pieces;
    for (auto& p1 : refine_against(factor, c4))
      for (auto& p2 : refine_against(p1, c6)) pieces.push_back(p2);
    std::vector<std::pair<Rational, UPoly>> rational_places;
    std::vector<UPoly> residuals;
    for (auto& piece : pieces) {
      UPoly rest = piece.monic();
      for (auto& [root, rm] : rational_roots(piece)) {
        UPoly lin = UPoly::x(v) - UPoly::constant(root, v);
        rest = rest.exact_div(lin);
        rational_places.push_back({root, lin});
      }
      if (rest.degree() > 0) residuals.push_back(rest);
    }
    std::sort(rational_places.begin(), rational_places.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [root, place] : rational_places)
      out.push_back(kodaira_type_at(s, place));
    for (auto& place : residuals) out.push_back(kodaira_type_at(s, place));
  }
  return out;
}

int euler_total(const std::vector<KodairaFiber>& fibers) {
  int e = 0;
  for (auto& f : fibers) e += f.point_count * f.euler;
  return e;
}

WeierstrassSurface two_isogeny(const WeierstrassSurface& s) {
  if (!s.a6.is_zero())
    throw std::invalid_argument("no rational 2-torsion at origin");
  return {s.a2 * Rational(-2), s.a2 * s.a2 - s.a4 * Rational(4),
          UPoly::zero(s.base_var()), s.chi};
}

std::optional<E8E7Parameters> e8e7_parameters(const WeierstrassSurface& s) {
  if (!s.a2.is_zero()) return std::nullopt;
  // a4 = t^3 (a t + a'), a6 = t^5 (b'' t^2 + b t + b').
  if (s.a4.degree() > 4 || s.a6.degree() > 7) return std::nullopt;
  for (int i = 0; i < 3; ++i)
    if (sgn(s.a4.coeff(i)) != 0) return std::nullopt;
  for (int i = 0; i < 5; ++i)
    if (sgn(s.a6.coeff(i)) != 0) return std::nullopt;
  E8E7Parameters p;
  p.a = s.a4.coeff(4);
  p.ap = s.a4.coeff(3);
  p.bpp = s.a6.coeff(7);
  p.b = s.a6.coeff(6);
  p.bp = s.a6.coeff(5);
  if (sgn(p.bpp) == 0) return std::nullopt;
  return p;
}

WeierstrassSurface refiber_E8E7(const WeierstrassSurface& s) {
  auto p = e8e7_parameters(s);
  if (!p)
    throw std::invalid_argument(
        "surface is not in the E8+E7 shape with nonzero leading a6 term");

  // New fibration over the x-line, with t as the fiber coordinate:
  // y^2 = t^3 + (x^3 + a x + b) t^2 + b''(a' x + b') t.
  UPoly x = UPoly::x("x");
  WeierstrassSurface out;
  out.a2 = x * x * x + x * p->a + UPoly::constant(p->b, "x");
  out.a4 = (x * p->ap + UPoly::constant(p->bp, "x")) * p->bpp;
  out.a6 = UPoly::zero("x");
  out.chi = s.chi;

  // Exact check of the change of variables
  // (x, y, t) = (X T^2 / b''^2, Y T^2 / b''^3, T / b''):
  // b''^6 / T^4 * (y^2 - x^3 - a4(t) x - a6(t)) must equal
  // Y^2 - T^3 - (X^3 + a X + b) T^2 - b''(a' X + b') T.
  std::vector<std::string> vars = {"X", "Y", "T"};
  MPoly X = MPoly::var("X", vars);
  MPoly Y = MPoly::var("Y", vars);
  MPoly T = MPoly::var("T", vars);
  Rational b2 = p->bpp * p->bpp, b3 = b2 * p->bpp;
  MPoly xs = X * T * T / b2;
  MPoly ys = Y * T * T / b3;
  MPoly ts = T / p->bpp;
  MPoly a4s = MPoly::zero(vars), a6s = MPoly::zero(vars);
  for (int i = s.a4.degree(); i >= 0; --i)
    a4s = a4s * ts + MPoly::constant(s.a4.coeff(i), vars);
  for (int i = s.a6.degree(); i >= 0; --i)
    a6s = a6s * ts + MPoly::constant(s.a6.coeff(i), vars);
  MPoly lhs = ys * ys - xs.pow(3) - a4s * xs - a6s;
  MPoly rhs = Y * Y - T.pow(3) -
              (X.pow(3) + X * p->a + MPoly::constant(p->b, vars)) * T * T -
              (X * p->ap + MPoly::constant(p->bp, vars)) * (p->bpp * T);
  MPoly residual = lhs * (b2 * b2 * b2) - rhs * T.pow(4);
  if (!residual.is_zero())
    throw std::logic_error("refibration identity failed");
  return out;
}

std::pair<int, Integer> shioda_tate(const std::vector<KodairaFiber>& fibers,
                                    int mw_rank) {
  int rho = mw_rank + 2;
  Integer disc(1);
  for (auto& f : fibers) {
    rho += f.point_count * (f.m - 1);
    for (int k = 0; k < f.point_count; ++k) disc *= f.m1;
  }
  return {rho, disc};
}

}  // namespace k3
