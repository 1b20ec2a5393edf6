#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <vector>

#include "k3/rational.hpp"
#include "k3/upoly.hpp"

namespace k3 {

using BigFloat = boost::multiprecision::mpfr_float;

// Scoped working-precision control, in decimal digits. The requested
// precision plus a guard margin is applied to new BigFloat values.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits, unsigned guard = 10);
  ~PrecisionGuard();

 private:
  unsigned saved_;
};

struct BigComplex {
  BigFloat re, im;

  BigComplex() : re(0), im(0) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  explicit BigComplex(const Rational& q) : re(q.get_mpq_t()), im(0) {}
  static BigComplex from_parts(double r, double i) {
    return BigComplex(BigFloat(r), BigFloat(i));
  }

  BigComplex operator-() const { return {-re, -im}; }
  BigComplex operator+(const BigComplex& o) const {
    return {re + o.re, im + o.im};
  }
  BigComplex operator-(const BigComplex& o) const {
    return {re - o.re, im - o.im};
  }
  BigComplex operator*(const BigComplex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  BigComplex operator/(const BigComplex& o) const;
  BigComplex& operator+=(const BigComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }

  BigFloat norm2() const { return re * re + im * im; }
  BigFloat abs() const;
  std::string str(unsigned digits = 20) const;
};

BigComplex complex_sqrt(const BigComplex& z);

// Evaluate p at a complex point.
BigComplex eval_complex(const UPoly& p, const BigComplex& z);

// Aberth–Ehrlich simultaneous iteration on the squarefree part, with
// multiplicities restored from the squarefree structure. Roots satisfy
// max |p(root)| / |lc(p)| < 10^-digits (guard margin included in the
// working precision). Throws RootFindingError on non-convergence.
std::vector<BigComplex> complex_roots(const UPoly& p, unsigned digits);

class RootFindingError : public std::runtime_error {
 public:
  RootFindingError(const std::string& what, std::vector<BigComplex> partial)
      : std::runtime_error(what), partial_roots(std::move(partial)) {}
  std::vector<BigComplex> partial_roots;
};

}  // namespace k3
