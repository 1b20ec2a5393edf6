#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "k3/invariants.hpp"
#include "k3/mpoly.hpp"
#include "k3/report.hpp"

namespace k3 {

// Singular Kummer quartic K = K2 z4^2 + K1 z4 + K0 in P^3, with K2, K1, K0
// polynomials in z1, z2, z3 of degrees 2, 3, 4. All polynomials live in the
// four-variable ring z1..z4; z4 does not occur in the three pieces.
struct KummerQuartic {
  GenusTwoCurve curve;
  MPoly K2, K1, K0;

  MPoly full() const;  // K2 z4^2 + K1 z4 + K0
  static const std::vector<std::string>& zvars();
};

// The three pieces with the coefficients f0..f6 supplied as ring elements;
// z1, z2, z3 must live in the same ring. Lets tests run the construction
// with fully symbolic coefficients.
std::array<MPoly, 3> kummer_polynomials(const MPoly& z1, const MPoly& z2,
                                        const MPoly& z3,
                                        const std::array<MPoly, 7>& f);

KummerQuartic build_kummer(const GenusTwoCurve& curve);

// Node p0 or p_ij; indices are 1-based, (0,0) for p0.
struct Node {
  std::array<Rational, 4> coords;
  int i = 0, j = 0;
  std::string label;
};

// Trope plane T_i (subset {i}) or T_1jk (subset {1,j,k}).
struct Trope {
  MPoly form;
  std::vector<int> subset;
  std::string label;
};

// The 16 nodes (p0 first, then p_ij lexicographic) and 16 tropes (T1..T6,
// then T_1jk lexicographic). Requires six distinct rational roots.
std::pair<std::vector<Node>, std::vector<Trope>> nodes_and_tropes(
    const GenusTwoCurve& curve);

struct KummerReport {
  std::vector<CheckResult> checks;
  std::vector<std::vector<int>> incidence;  // nodes x tropes, 16 x 16
  Rational trope_product_scalar;            // c in K1^2/4 - K0 K2 = c prod T_i

  bool ok() const;
};

// (a) nodes are singular points; (b) trope restrictions are perfect
// squares; (c) incidence has all row/column sums 6 and matches the (16,6)
// pattern, symmetric under node-trope duality; (d) K1^2/4 - K0 K2 is a
// scalar multiple of the product of the six T_i; (e) completing the square
// reproduces K2 * K.
KummerReport verify_configuration(const KummerQuartic& q,
                                  const std::vector<Node>& nodes,
                                  const std::vector<Trope>& tropes);

// Sheet exchange of the double cover given by projecting away z4:
// z4 -> -z4 - K1/K2. The point must satisfy K = 0 with K2 nonzero there.
std::array<Rational, 4> projection_involution(
    const KummerQuartic& q, const std::array<Rational, 4>& point);

}  // namespace k3
