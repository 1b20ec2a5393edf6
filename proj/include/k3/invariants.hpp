#pragma once

#include <array>
#include <optional>
#include <vector>

#include "k3/rational.hpp"
#include "k3/upoly.hpp"

namespace k3 {

// y^2 = f(x) with deg f in {5, 6}. A degree-5 model is treated as a sextic
// with one Weierstrass point at infinity. When the six finite roots are
// rational they can be carried along for the nodal Kummer construction.
struct GenusTwoCurve {
  UPoly f;
  std::optional<std::vector<Rational>> roots;  // six finite roots, deg 6 only

  static GenusTwoCurve from_sextic(UPoly f);
  static GenusTwoCurve from_roots(const Rational& f6,
                                  std::vector<Rational> roots);
};

// Weights (2, 4, 6, 10); compare with ic_weighted_equal only.
struct IgusaClebsch {
  Rational I2, I4, I6, I10;
};

// Classical symmetric sums over root differences, with the f6^d
// normalization; I10 equals discriminant(f).
IgusaClebsch ic_from_roots(const Rational& f6,
                           const std::array<Rational, 6>& roots);

// Evaluation of the (internally interpolated and cached) weighted
// homogeneous coefficient polynomials; agrees exactly with ic_from_roots.
IgusaClebsch ic_from_coeffs(const UPoly& f);

// True iff there is r in Q* with b_d = r^d a_d for d in {2,4,6,10};
// zero entries must match componentwise.
bool ic_weighted_equal(const IgusaClebsch& a, const IgusaClebsch& b);

}  // namespace k3
