#include "k3/bigcomplex.hpp"

#include <sstream>

namespace k3 {

PrecisionGuard::PrecisionGuard(unsigned digits, unsigned guard) {
  saved_ = BigFloat::default_precision();
  BigFloat::default_precision(digits + guard);
}

PrecisionGuard::~PrecisionGuard() { BigFloat::default_precision(saved_); }

BigComplex BigComplex::operator/(const BigComplex& o) const {
  BigFloat d = o.norm2();
  return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
}

BigFloat BigComplex::abs() const { return sqrt(norm2()); }

std::string BigComplex::str(unsigned digits) const {
  std::ostringstream os;
  BigFloat ia = boost::multiprecision::abs(im);
  os << re.str(digits) << (im < 0 ? " - " : " + ") << ia.str(digits) << "i";
  return os.str();
}

BigComplex complex_sqrt(const BigComplex& z) {
  BigFloat r = z.abs();
  if (r == 0) return BigComplex();
  BigFloat re = sqrt((r + z.re) / 2);
  BigFloat im = sqrt((r - z.re) / 2);
  if (z.im < 0) im = -im;
  return {re, im};
}

BigComplex eval_complex(const UPoly& p, const BigComplex& z) {
  BigComplex acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * z + BigComplex(*it);
  return acc;
}

namespace {

std::vector<BigComplex> aberth(const UPoly& f, unsigned digits) {
  int n = f.degree();
  UPoly df = f.derivative();
  // Root radius bound: 1 + max |a_i / a_n|.
  BigFloat radius(1);
  for (int i = 0; i < n; ++i) {
    BigFloat m = boost::multiprecision::abs(BigFloat(f.coeff(i).get_mpq_t()) /
                                            BigFloat(f.lc().get_mpq_t()));
    if (m > radius) radius = m;
  }
  radius += 1;
  std::vector<BigComplex> z(n);
  // Spread initial guesses on a circle with an irrational-angle twist so
  // that conjugate symmetry cannot lock the iteration.
  BigFloat pi = 4 * atan(BigFloat(1));
  for (int i = 0; i < n; ++i) {
    BigFloat ang = (2 * pi * i) / n + BigFloat("0.41964337");
    z[i] = {radius * cos(ang) * BigFloat("0.7"), radius * sin(ang)};
  }
  BigFloat target = pow(BigFloat(10), -static_cast<int>(digits));
  BigFloat lc_abs = boost::multiprecision::abs(BigFloat(f.lc().get_mpq_t()));
  const int cap = 200;
  for (int iter = 0; iter < cap; ++iter) {
    BigFloat worst(0);
    for (int i = 0; i < n; ++i) {
      BigComplex fv = eval_complex(f, z[i]);
      BigFloat res = fv.abs() / lc_abs;
      if (res > worst) worst = res;
      BigComplex dv = eval_complex(df, z[i]);
      if (dv.abs() == 0) {
        z[i] += BigComplex(target, target);
        continue;
      }
      BigComplex newton = fv / dv;
      BigComplex sum;
      for (int j = 0; j < n; ++j)
        if (j != i) sum += BigComplex(BigFloat(1), BigFloat(0)) / (z[i] - z[j]);
      BigComplex denom = BigComplex(BigFloat(1), BigFloat(0)) - newton * sum;
      z[i] = z[i] - newton / denom;
    }
    if (worst < target) return z;
  }
  throw RootFindingError("aberth iteration did not converge", z);
}

}  // namespace

std::vector<BigComplex> complex_roots(const UPoly& p, unsigned digits) {
  if (p.is_zero() || p.degree() < 1)
    throw std::invalid_argument("complex_roots: need degree >= 1");
  PrecisionGuard guard(digits, 15);
  std::vector<BigComplex> out;
  for (auto& [factor, mult] : squarefree_factor(p).factors) {
    std::vector<BigComplex> roots;
    if (factor.degree() == 1) {
      Rational r = -factor.coeff(0) / factor.coeff(1);
      roots.push_back(BigComplex(r));
    } else {
      try {
        roots = aberth(factor, digits);
      } catch (const RootFindingError&) {
        // One retry at doubled working precision before giving up.
        PrecisionGuard retry(2 * digits, 15);
        roots = aberth(factor, digits);
      }
    }
    for (auto& r : roots)
      for (int k = 0; k < mult; ++k) out.push_back(r);
  }
  return out;
}

std::vector<std::pair<Rational, int>> rational_roots(const UPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots: zero input");
  std::vector<std::pair<Rational, int>> out;
  if (p.degree() == 0) return out;
  PrecisionGuard guard(80, 15);
  for (auto& [factor, mult] : squarefree_factor(p).factors) {
    if (factor.degree() == 1) {
      out.emplace_back(-factor.coeff(0) / factor.coeff(1), mult);
      continue;
    }
    std::vector<BigComplex> roots = complex_roots(factor, 70);
    BigFloat tol = pow(BigFloat(10), -45);
    for (auto& z : roots) {
      if (boost::multiprecision::abs(z.im) > tol) continue;
      // Continued-fraction rationalization of the real part, verified
      // exactly against the factor.
      BigFloat x = z.re;
      Integer p0(0), q0(1), p1(1), q1(0);
      BigFloat cur = x;
      for (int step = 0; step < 60; ++step) {
        BigFloat fl = floor(cur);
        Integer a;
        mpfr_get_z(a.get_mpz_t(), fl.backend().data(), MPFR_RNDN);
        Integer p2 = a * p1 + p0, q2 = a * q1 + q0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        Rational cand(p1, q1);
        cand.canonicalize();
        BigFloat approx = BigFloat(cand.get_mpq_t());
        if (boost::multiprecision::abs(approx - x) < tol) {
          if (sgn(factor.eval(cand)) == 0) {
            bool seen = false;
            for (auto& [r0, m0] : out)
              if (r0 == cand) seen = true;
            if (!seen) out.emplace_back(cand, mult);
          }
          break;
        }
        BigFloat frac = cur - fl;
        if (frac == 0) break;
        cur = 1 / frac;
      }
    }
  }
  return out;
}

}  // namespace k3
