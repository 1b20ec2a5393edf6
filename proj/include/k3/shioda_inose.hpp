#pragma once

#include <string>
#include <vector>

#include "k3/elliptic.hpp"
#include "k3/invariants.hpp"
#include "k3/report.hpp"

namespace k3 {

// X: y^2 = x^3 - t^3(I4 t/12 + 1)x + t^5(I10 t^2/4 + (I2 I4 - 3 I6)t/108
//                                         + I2/24), E8 + E7 fibers.
// Y: y^2 = x^3 - 2q(t)x^2 + (q(t)^2 + I10(t - I2/24))x with
//    q(t) = t^3 - I4 t/12 + (I2 I4 - 3 I6)/108, the I5* model.
struct SurfacePair {
  WeierstrassSurface X, Y;
  IgusaClebsch source;
  E8E7Parameters params;  // (a, a', b, b', b'')
};

// Throws "singular curve: I10 vanishes" when I10 = 0.
SurfacePair surfaces_from_ic(const IgusaClebsch& ic);

// Refibration over the x-line followed by the 2-isogeny reproduces Y
// coefficient for coefficient; throws with the difference polynomials on
// mismatch.
bool verify_quotient_identity(const SurfacePair& pair);

// The same chain with indeterminate invariants: the general change of
// variables identity plus the coefficientwise match of the quotient
// against the I5* model, as exact polynomial identities.
std::vector<CheckResult> quotient_identity_symbolic();

// (a) sigma composed with itself is the identity on (x, y, t), verified
// symbolically; (b) sigma preserves the defining equation, verified
// symbolically and at sampled numeric points on the given surface.
std::vector<CheckResult> nikulin_involution_check(const SurfacePair& pair,
                                                  int sample_points = 100,
                                                  unsigned digits = 60,
                                                  unsigned long seed = 1);

// g(x) = (x^3 - I4 x/12 + (I2 I4 - 3 I6)/108)^2 + I10 (x - I2/24); the
// monic sextic whose roots are the I2 fiber locations of Y.
UPoly sextic_correspondence(const IgusaClebsch& ic);

struct KummerSideReport {
  std::vector<CheckResult> checks;
  Rational lambda_x, lambda_y2;  // x, y scalings (y enters squared)
  Rational alpha, beta;          // t = alpha * s/s1 + beta
  int pencil_dimension = 0;
  std::string max_residual;

  bool ok() const { return all_passed(checks); }
};

// The full double-plane reconstruction of the I5* fibration on the Kummer
// quartic: the plane curves e1..e5, the conic q1 with s1 = q1 T1 T2 T6,
// the two-dimensional quintic pencil giving t, and the sampled check that
// x = e1 e2 e3 e4 e5 T5 / (s1^3 T4) and
// y = e1 e2 e3 e4 e5 (K2 z4 + K1/2) / (T1^5 T2^3 T4^2 T6^4 q1^2), suitably
// scaled, satisfy the I5* Weierstrass equation. Requires six distinct
// rational roots.
KummerSideReport kummer_side_verification(const GenusTwoCurve& curve,
                                          int heldout_samples = 50,
                                          unsigned digits = 80,
                                          unsigned long seed = 2);

}  // namespace k3
