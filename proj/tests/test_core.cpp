#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "k3/bigcomplex.hpp"
#include "k3/linalg.hpp"
#include "k3/mpoly.hpp"
#include "k3/upoly.hpp"

using namespace k3;

namespace {

UPoly random_poly(std::mt19937_64& rng, int deg) {
  std::uniform_int_distribution<int> c(-9, 9);
  std::vector<Rational> v(deg + 1);
  for (auto& x : v) x = c(rng);
  if (v[deg] == 0) v[deg] = 1;
  return UPoly(v);
}

// Resultant as the determinant of the Sylvester matrix, an independent
// oracle for the Euclidean implementation.
Rational sylvester_resultant(const UPoly& p, const UPoly& q) {
  int m = p.degree(), n = q.degree();
  int size = m + n;
  QMat s(size, QVec(size, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = p.coeff(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = q.coeff(n - j);
  return q_det(s);
}

}  // namespace

TEST_CASE("resultant agrees with the Sylvester determinant") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    UPoly p = random_poly(rng, 2 + trial % 4);
    UPoly q = random_poly(rng, 1 + trial % 5);
    CHECK(resultant(p, q) == sylvester_resultant(p, q));
  }
}

TEST_CASE("discriminant values") {
  // x^2 + bx + c has discriminant b^2 - 4c.
  CHECK(discriminant(UPoly({Rational(3), Rational(1), Rational(1)})) ==
        Rational(-11));
  UPoly x6p1({Rational(1), 0, 0, 0, 0, 0, Rational(1)});
  CHECK(discriminant(x6p1) == Rational(-46656));
  // Repeated roots kill it.
  UPoly sq = UPoly({Rational(0), Rational(1)});
  CHECK(discriminant(sq * sq * UPoly({Rational(1), Rational(1)})) ==
        Rational(0));
}

TEST_CASE("squarefree factorization against a gcd-chain oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    UPoly a = random_poly(rng, 2);
    UPoly b = random_poly(rng, 1);
    UPoly p = a * b * b * b;
    auto sf = squarefree_factor(p);
    // Reassemble and compare.
    UPoly back = UPoly::constant(sf.scalar);
    for (auto& [f, m] : sf.factors) back = back * f.pow(m);
    CHECK(back == p);
    // Squarefree part equals p / gcd(p, p').
    UPoly g = upoly_gcd(p, p.derivative());
    CHECK(squarefree_part(p) == p.exact_div(g).monic());
    for (auto& [f, m] : sf.factors)
      CHECK(upoly_gcd(f, f.derivative()).degree() == 0);
  }
}

TEST_CASE("rational roots with multiplicity") {
  UPoly x({Rational(0), Rational(1)});
  UPoly p = x * x * UPoly({Rational(-1), Rational(2)}) *
            UPoly({Rational(1), 0, Rational(1)});
  auto roots = rational_roots(p);
  REQUIRE(roots.size() == 2);
  bool zero2 = false, half1 = false;
  for (auto& [r, m] : roots) {
    if (r == 0 && m == 2) zero2 = true;
    if (r == Rational(1, 2) && m == 1) half1 = true;
  }
  CHECK(zero2);
  CHECK(half1);
}

TEST_CASE("valuation and composition") {
  UPoly t({Rational(0), Rational(1)});
  UPoly place({Rational(-2), Rational(1)});
  UPoly p = place * place * place * UPoly({Rational(1), Rational(1)});
  CHECK(valuation(p, place) == 3);
  CHECK(p.compose(t + UPoly::constant(2)).coeff(0) == 0);
  CHECK(p.reversed(p.degree()).coeff(p.degree()) == p.coeff(0));
}

TEST_CASE("linear algebra basics") {
  QMat a = {{Rational(2), Rational(1)}, {Rational(4), Rational(2)}};
  CHECK(q_rank(a) == 1);
  CHECK(q_det(a) == 0);
  auto ns = q_nullspace(a);
  REQUIRE(ns.size() == 1);
  CHECK(ns[0][0] * 2 + ns[0][1] == 0);

  QMat g = {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
  auto [p, n, z] = symmetric_signature(g);
  CHECK(p == 1);
  CHECK(n == 1);
  CHECK(z == 0);
}

TEST_CASE("hermite normal form preserves the row lattice determinant") {
  ZMat m = {{Integer(4), Integer(2)}, {Integer(2), Integer(4)}};
  ZMat h = hnf_row_basis(m);
  REQUIRE(h.size() == 2);
  CHECK(abs(z_det(h)) == abs(z_det(m)));
  // Pivots positive, echelon shape.
  CHECK(h[0][0] > 0);
}

TEST_CASE("multivariate square root") {
  std::vector<std::string> v = {"x", "y"};
  MPoly x = MPoly::var("x", v), y = MPoly::var("y", v);
  MPoly s = x + y * Rational(3);
  auto r = mpoly_sqrt(s * s);
  REQUIRE(r.has_value());
  CHECK((*r == s || *r == -s));
  CHECK(!mpoly_sqrt(x * y).has_value());
}

TEST_CASE("complex roots reach the requested precision") {
  PrecisionGuard guard(60, 10);
  UPoly p({Rational(1), 0, Rational(1)});  // x^2 + 1
  auto roots = complex_roots(p, 50);
  REQUIRE(roots.size() == 2);
  BigFloat tol = pow(BigFloat(10), -45);
  for (auto& z : roots) {
    BigFloat re = boost::multiprecision::abs(z.re);
    BigFloat im1 = boost::multiprecision::abs(z.im) - 1;
    CHECK(re < tol);
    CHECK(boost::multiprecision::abs(im1) < tol);
  }
}
