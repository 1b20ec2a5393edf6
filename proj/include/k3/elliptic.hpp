#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3/rational.hpp"
#include "k3/upoly.hpp"

namespace k3 {

// y^2 = x^3 + a2(t) x^2 + a4(t) x + a6(t) over the t-line, with
// deg a_i <= chi * i (chi = 2 for K3).
struct WeierstrassSurface {
  UPoly a2, a4, a6;
  int chi = 2;

  const std::string& base_var() const;
};

UPoly surface_c4(const WeierstrassSurface& s);
UPoly surface_c6(const WeierstrassSurface& s);
// 16(-4 a2^3 a6 + a2^2 a4^2 + 18 a2 a4 a6 - 4 a4^3 - 27 a6^2); throws on
// a non-reduced fibration (identically zero discriminant).
UPoly surface_discriminant(const WeierstrassSurface& s);

struct KodairaFiber {
  std::optional<UPoly> place;  // monic; nullopt for t = infinity
  int point_count = 1;         // degree of the place
  std::string type;            // "I0", "I1", "I5*", "II", "III*", ...
  int n = 0;                   // index for I_n / I_n*
  int m = 1;                   // components per point
  int m1 = 1;                  // multiplicity-one components per point
  int euler = 0;               // Euler contribution per point
  std::string lattice;         // "A1", "D9", "E8", or "-"
};

// Kodaira type from the valuations of c4, c6, Delta at the place, after
// local minimalization. The place must be monic with all its irreducible
// factors sharing the same valuation triple (always true for irreducible
// places; classify_all_fibers arranges it in general).
KodairaFiber kodaira_type_at(const WeierstrassSurface& s, const UPoly& place);
KodairaFiber kodaira_type_at_infinity(const WeierstrassSurface& s);

// Fibers at infinity plus every singular finite place, rational places
// split off individually and the rest grouped into coprime pieces with
// uniform valuation data.
std::vector<KodairaFiber> classify_all_fibers(const WeierstrassSurface& s);

// Sum of Euler contributions weighted by place degree (24 for a K3).
int euler_total(const std::vector<KodairaFiber>& fibers);

// Quotient by translation by the 2-torsion section (0, 0); requires
// a6 = 0. Returns (-2 a2, a2^2 - 4 a4, 0).
WeierstrassSurface two_isogeny(const WeierstrassSurface& s);

// Parameters of the shape y^2 = x^3 + t^3(a t + a')x + t^5(b'' t^2 + b t + b').
struct E8E7Parameters {
  Rational a, ap, b, bp, bpp;
};

std::optional<E8E7Parameters> e8e7_parameters(const WeierstrassSurface& s);

// The alternate fibration y^2 = t^3 + (x^3 + a x + b) t^2 + b''(a' x + b') t
// over the x-line; the defining change of variables is verified exactly as
// a polynomial identity before returning.
WeierstrassSurface refiber_E8E7(const WeierstrassSurface& s);

// rho = r + 2 + sum (m_v - 1), and the trivial-lattice discriminant
// prod m1_v (no torsion correction applied here).
std::pair<int, Integer> shioda_tate(const std::vector<KodairaFiber>& fibers,
                                    int mw_rank);

}  // namespace k3
