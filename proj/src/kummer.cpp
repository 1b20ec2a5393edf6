#include "k3/kummer.hpp"

#include <sstream>
#include <stdexcept>

namespace k3 {

const std::vector<std::string>& KummerQuartic::zvars() {
  static const std::vector<std::string> v = {"z1", "z2", "z3", "z4"};
  return v;
}

MPoly KummerQuartic::full() const {
  MPoly z4 = MPoly::var("z4", zvars());
  return K2 * z4 * z4 + K1 * z4 + K0;
}

std::array<MPoly, 3> kummer_polynomials(const MPoly& z1, const MPoly& z2,
                                        const MPoly& z3,
                                        const std::array<MPoly, 7>& f) {
  Rational m2(-2), m4(-4);
  MPoly k2 = z2 * z2 - Rational(4) * z1 * z3;
  MPoly k1 = m4 * z1.pow(3) * f[0] + m2 * z1 * z1 * z2 * f[1] +
             m4 * z1 * z1 * z3 * f[2] + m2 * z1 * z2 * z3 * f[3] +
             m4 * z1 * z3 * z3 * f[4] + m2 * z2 * z3 * z3 * f[5] +
             m4 * z3.pow(3) * f[6];
  MPoly k0 = m4 * z1.pow(4) * f[0] * f[2] + z1.pow(4) * f[1] * f[1] +
             m4 * z1.pow(3) * z2 * f[0] * f[3] +
             m2 * z1.pow(3) * z3 * f[1] * f[3] +
             m4 * z1 * z1 * z2 * z2 * f[0] * f[4] +
             Rational(4) * z1 * z1 * z2 * z3 * f[0] * f[5] +
             m4 * z1 * z1 * z2 * z3 * f[1] * f[4] +
             m4 * z1 * z1 * z3 * z3 * f[0] * f[6] +
             Rational(2) * z1 * z1 * z3 * z3 * f[1] * f[5] +
             m4 * z1 * z1 * z3 * z3 * f[2] * f[4] +
             z1 * z1 * z3 * z3 * f[3] * f[3] +
             m4 * z1 * z2.pow(3) * f[0] * f[5] +
             Rational(8) * z1 * z2 * z2 * z3 * f[0] * f[6] +
             m4 * z1 * z2 * z2 * z3 * f[1] * f[5] +
             Rational(4) * z1 * z2 * z3 * z3 * f[1] * f[6] +
             m4 * z1 * z2 * z3 * z3 * f[2] * f[5] +
             m2 * z1 * z3.pow(3) * f[3] * f[5] +
             m4 * z2.pow(4) * f[0] * f[6] +
             m4 * z2.pow(3) * z3 * f[1] * f[6] +
             m4 * z2 * z2 * z3 * z3 * f[2] * f[6] +
             m4 * z2 * z3.pow(3) * f[3] * f[6] +
             m4 * z3.pow(4) * f[4] * f[6] + z3.pow(4) * f[5] * f[5];
  return {k2, k1, k0};
}

KummerQuartic build_kummer(const GenusTwoCurve& curve) {
  const auto& vars = KummerQuartic::zvars();
  MPoly z1 = MPoly::var("z1", vars);
  MPoly z2 = MPoly::var("z2", vars);
  MPoly z3 = MPoly::var("z3", vars);
  std::array<MPoly, 7> f;
  for (int i = 0; i < 7; ++i)
    f[i] = MPoly::constant(curve.f.coeff(i), vars);
  auto [k2, k1, k0] = kummer_polynomials(z1, z2, z3, f);
  return {curve, k2, k1, k0};
}

namespace {

std::string pair_label(int i, int j) {
  std::ostringstream os;
  os << "p" << i << j;
  return os.str();
}

}  // namespace

std::pair<std::vector<Node>, std::vector<Trope>> nodes_and_tropes(
    const GenusTwoCurve& curve) {
  if (!curve.roots || curve.roots->size() != 6)
    throw std::invalid_argument(
        "nodal model requires six rational Weierstrass points");
  const auto& th = *curve.roots;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (th[i] == th[j])
        throw std::invalid_argument(
            "nodal model requires distinct Weierstrass points");

  std::vector<Node> nodes;
  nodes.push_back({{Rational(0), Rational(0), Rational(0), Rational(1)},
                   0,
                   0,
                   "p0"});
  const std::string xv = curve.f.var();
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      UPoly pair_poly = (UPoly::x(xv) - UPoly::constant(th[i], xv)) *
                        (UPoly::x(xv) - UPoly::constant(th[j], xv));
      UPoly h = curve.f.exact_div(pair_poly);
      Rational prod = th[i] * th[j];
      Rational beta0 = -h.coeff(0) - h.coeff(2) * prod -
                       h.coeff(4) * prod * prod;
      nodes.push_back(
          {{Rational(1), th[i] + th[j], prod, beta0}, i + 1, j + 1,
           pair_label(i + 1, j + 1)});
    }

  const auto& vars = KummerQuartic::zvars();
  MPoly z1 = MPoly::var("z1", vars);
  MPoly z2 = MPoly::var("z2", vars);
  MPoly z3 = MPoly::var("z3", vars);
  MPoly z4 = MPoly::var("z4", vars);
  std::vector<Trope> tropes;
  for (int i = 0; i < 6; ++i) {
    MPoly form = th[i] * th[i] * z1 - th[i] * z2 + z3;
    std::ostringstream os;
    os << "T" << i + 1;
    tropes.push_back({form, {i + 1}, os.str()});
  }
  Rational f6 = curve.f.coeff(6);
  for (int j = 1; j < 6; ++j)
    for (int k = j + 1; k < 6; ++k) {
      UPoly g = (UPoly::x(xv) - UPoly::constant(th[0], xv)) *
                (UPoly::x(xv) - UPoly::constant(th[j], xv)) *
                (UPoly::x(xv) - UPoly::constant(th[k], xv));
      UPoly h = UPoly::constant(Rational(1), xv);
      for (int l = 1; l < 6; ++l)
        if (l != j && l != k)
          h = h * (UPoly::x(xv) - UPoly::constant(th[l], xv));
      MPoly form =
          f6 * (g.coeff(2) * h.coeff(0) + g.coeff(0) * h.coeff(2)) * z1 +
          f6 * (g.coeff(0) + h.coeff(0)) * z2 +
          f6 * (g.coeff(1) + h.coeff(1)) * z3 + z4;
      std::ostringstream os;
      os << "T1" << j + 1 << k + 1;
      tropes.push_back({form, {1, j + 1, k + 1}, os.str()});
    }
  return {nodes, tropes};
}

namespace {

bool subset_contains(const std::vector<int>& s, int x) {
  for (int v : s)
    if (v == x) return true;
  return false;
}

// Expected incidence from the (16,6) combinatorics.
bool expected_incident(const Node& n, const Trope& t) {
  if (t.subset.size() == 1) {
    int i = t.subset[0];
    if (n.i == 0) return true;  // p0 lies on every T_i
    return n.i == i || n.j == i;
  }
  // T_ijk: p0 is not on it; p_ab on it iff {a,b} inside or disjoint.
  if (n.i == 0) return false;
  bool a = subset_contains(t.subset, n.i);
  bool b = subset_contains(t.subset, n.j);
  return a == b;
}

// Node <-> trope duality: p0 <-> T1, p_1j <-> T_j, p_jk <-> T_1jk.
int dual_trope_of_node(const Node& n, const std::vector<Trope>& tropes) {
  for (size_t t = 0; t < tropes.size(); ++t) {
    const auto& s = tropes[t].subset;
    if (n.i == 0 && s.size() == 1 && s[0] == 1) return static_cast<int>(t);
    if (n.i == 1 && s.size() == 1 && s[0] == n.j) return static_cast<int>(t);
    if (n.i > 1 && s.size() == 3 && s[1] == n.i && s[2] == n.j)
      return static_cast<int>(t);
  }
  return -1;
}

// Substitute a rational point into a polynomial in z1..z4.
Rational eval_at(const MPoly& p, const std::array<Rational, 4>& pt) {
  return p.eval({pt[0], pt[1], pt[2], pt[3]});
}

// Restriction of K to the trope plane: eliminate one variable with a
// nonzero coefficient in the linear form and clear the denominator.
MPoly restrict_to_plane(const MPoly& k, const MPoly& form) {
  const auto& vars = form.vars();
  int pivot = -1;
  Rational pc;
  for (int v = static_cast<int>(vars.size()) - 1; v >= 0; --v) {
    MPoly::Exponents e(vars.size(), 0);
    e[v] = 1;
    Rational c = form.coeff(e);
    if (sgn(c) != 0) {
      pivot = v;
      pc = c;
      break;
    }
  }
  if (pivot < 0) throw std::logic_error("degenerate trope form");
  // z_pivot = -(form - pc z_pivot) / pc; substitute scaled by pc^deg.
  MPoly rest = form;
  {
    MPoly::Exponents e(vars.size(), 0);
    e[pivot] = 1;
    rest.add_term(e, -pc);
  }
  std::vector<RationalFunction> bind;
  MPoly den = MPoly::constant(pc, vars);
  for (size_t v = 0; v < vars.size(); ++v) {
    if (static_cast<int>(v) == pivot) {
      bind.push_back({-rest, den});
    } else {
      bind.push_back({MPoly::var(vars[v], vars), MPoly::constant(1, vars)});
    }
  }
  return substitute_rational(k, bind).num;
}

}  // namespace

bool KummerReport::ok() const {
  for (auto& c : checks)
    if (!c.passed) return false;
  return true;
}

KummerReport verify_configuration(const KummerQuartic& q,
                                  const std::vector<Node>& nodes,
                                  const std::vector<Trope>& tropes) {
  KummerReport rep;
  MPoly k = q.full();
  const auto& vars = KummerQuartic::zvars();

  // (a) nodes are singular points.
  {
    bool all = true;
    std::string detail;
    for (auto& n : nodes) {
      bool sing = sgn(eval_at(k, n.coords)) == 0;
      for (int v = 0; v < 4 && sing; ++v)
        sing = sgn(eval_at(k.partial(v), n.coords)) == 0;
      if (!sing) {
        all = false;
        detail += (detail.empty() ? "" : ", ") + n.label;
      }
    }
    rep.checks.push_back({"nodes_singular", all,
                          all ? "K and all partials vanish at all 16 nodes"
                              : "not singular at: " + detail});
  }

  // (b) restriction to each trope is a perfect square.
  {
    bool all = true;
    std::string detail;
    for (auto& t : tropes) {
      MPoly restricted = restrict_to_plane(k, t.form);
      auto root = mpoly_sqrt(restricted);
      if (!root) root = mpoly_sqrt(-restricted);
      if (!root) {
        all = false;
        detail += (detail.empty() ? "" : ", ") + t.label;
      }
    }
    rep.checks.push_back({"tropes_square", all,
                          all ? "restriction of K to each trope is a square"
                              : "not a square on: " + detail});
  }

  // (c) incidence.
  {
    rep.incidence.assign(nodes.size(), std::vector<int>(tropes.size(), 0));
    bool sums = true, pattern = true, duality = true;
    for (size_t ni = 0; ni < nodes.size(); ++ni)
      for (size_t ti = 0; ti < tropes.size(); ++ti) {
        bool on = sgn(eval_at(tropes[ti].form, nodes[ni].coords)) == 0;
        rep.incidence[ni][ti] = on ? 1 : 0;
        if (on != expected_incident(nodes[ni], tropes[ti])) pattern = false;
      }
    for (size_t ni = 0; ni < nodes.size(); ++ni) {
      int s = 0;
      for (size_t ti = 0; ti < tropes.size(); ++ti)
        s += rep.incidence[ni][ti];
      if (s != 6) sums = false;
    }
    for (size_t ti = 0; ti < tropes.size(); ++ti) {
      int s = 0;
      for (size_t ni = 0; ni < nodes.size(); ++ni)
        s += rep.incidence[ni][ti];
      if (s != 6) sums = false;
    }
    // Symmetry under duality: incidence(n, t) == incidence(dual t, dual n),
    // where the dual of a node is a trope and vice versa.
    std::vector<int> ndual(nodes.size());
    for (size_t ni = 0; ni < nodes.size(); ++ni)
      ndual[ni] = dual_trope_of_node(nodes[ni], tropes);
    for (size_t ni = 0; ni < nodes.size(); ++ni) {
      if (ndual[ni] < 0) {
        duality = false;
        break;
      }
      for (size_t ti = 0; ti < tropes.size(); ++ti) {
        // Find the node dual to trope ti.
        size_t nj = 0;
        while (nj < nodes.size() &&
               ndual[nj] != static_cast<int>(ti))
          ++nj;
        if (nj == nodes.size() ||
            rep.incidence[ni][ti] != rep.incidence[nj][ndual[ni]])
          duality = false;
      }
    }
    rep.checks.push_back({"incidence_sums", sums,
                          "all row and column sums equal 6"});
    rep.checks.push_back({"incidence_pattern", pattern,
                          "matches the (16,6) combinatorial rule"});
    rep.checks.push_back({"incidence_duality", duality,
                          "symmetric under node-trope duality"});
  }

  // (d) K1^2/4 - K0 K2 = c * T1 ... T6.
  {
    MPoly lhs = q.K1 * q.K1 / Rational(4) - q.K0 * q.K2;
    MPoly prod = MPoly::constant(1, vars);
    for (auto& t : tropes)
      if (t.subset.size() == 1) prod = prod * t.form;
    bool okc = false;
    Rational c(0);
    if (!prod.is_zero() && !lhs.is_zero()) {
      auto lt = prod.terms().rbegin();
      c = lhs.coeff(lt->first) / lt->second;
      okc = (lhs - prod * c).is_zero() && sgn(c) != 0;
    }
    rep.trope_product_scalar = c;
    std::ostringstream os;
    os << "scalar c = " << rat_str(c);
    rep.checks.push_back({"trope_product_identity", okc, os.str()});
  }

  // (e) (K2 z4 + K1/2)^2 - (K1^2/4 - K0 K2) = K2 K.
  {
    MPoly z4 = MPoly::var("z4", vars);
    MPoly sq = q.K2 * z4 + q.K1 / Rational(2);
    MPoly residual =
        sq * sq - (q.K1 * q.K1 / Rational(4) - q.K0 * q.K2) - q.K2 * k;
    rep.checks.push_back({"complete_square", residual.is_zero(),
                          "square completion reproduces K2 * K"});
  }

  return rep;
}

std::array<Rational, 4> projection_involution(
    const KummerQuartic& q, const std::array<Rational, 4>& point) {
  MPoly k = q.full();
  std::vector<Rational> pt(point.begin(), point.end());
  if (sgn(k.eval(pt)) != 0)
    throw std::invalid_argument("point does not lie on the quartic");
  Rational k2 = q.K2.eval(pt);
  if (sgn(k2) == 0)
    throw std::invalid_argument("point on branch locus of projection");
  Rational k1 = q.K1.eval(pt);
  return {point[0], point[1], point[2], -point[3] - k1 / k2};
}

}  // namespace k3
