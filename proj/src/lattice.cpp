#include "k3/lattice.hpp"

#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace k3 {

namespace {

GramLattice from_dynkin(int n, const std::vector<std::pair<int, int>>& edges,
                        const std::string& prefix) {
  GramLattice l;
  l.gram.assign(n, QVec(n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    l.gram[i][i] = 2;
    std::ostringstream os;
    os << prefix << i + 1;
    l.labels.push_back(os.str());
  }
  for (auto& [a, b] : edges) {
    l.gram[a][b] = -1;
    l.gram[b][a] = -1;
  }
  return l;
}

std::vector<std::pair<int, int>> chain_edges(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return e;
}

GramLattice diag_lattice(int n, const Rational& d, const std::string& prefix) {
  GramLattice l;
  l.gram.assign(n, QVec(n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    l.gram[i][i] = d;
    std::ostringstream os;
    os << prefix << i + 1;
    l.labels.push_back(os.str());
  }
  return l;
}

GramLattice nikulin_lattice() {
  GramLattice base = diag_lattice(8, Rational(-2), "v");
  QVec half(8, Rational(1, 2));
  return overlattice(base, {half}).lattice;
}

// Supports of the Reed-Muller R(1,4) codewords: the zero word, the all-ones
// word, and the 30 affine hyperplanes of F_2^4.
std::vector<std::vector<int>> rm14_supports() {
  std::vector<std::vector<int>> out;
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 2; ++b) {
      std::vector<int> sup;
      for (int x = 0; x < 16; ++x) {
        int dot = __builtin_popcount(a & x) & 1;
        if ((dot ^ b) == 1) sup.push_back(x);
      }
      out.push_back(sup);
    }
  return out;
}

GramLattice kummer_lattice() {
  GramLattice base = diag_lattice(16, Rational(-2), "E");
  std::vector<QVec> gens;
  for (auto& sup : rm14_supports()) {
    if (sup.empty()) continue;
    QVec g(16, Rational(0));
    for (int x : sup) g[x] = Rational(1, 2);
    gens.push_back(g);
  }
  return overlattice(base, gens).lattice;
}

// Index of E_ij (1 <= i < j <= 6) in the frame L, E0, E12, ..., E56.
int eidx(int i, int j) {
  int pos = 2;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b) {
      if (a == i && b == j) return pos;
      ++pos;
    }
  throw std::logic_error("bad E index");
}

GramLattice lambda_frame() {
  GramLattice l;
  l.gram.assign(17, QVec(17, Rational(0)));
  l.gram[0][0] = 4;
  l.labels.push_back("L");
  l.gram[1][1] = -2;
  l.labels.push_back("E0");
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) {
      int p = eidx(i, j);
      l.gram[p][p] = -2;
      std::ostringstream os;
      os << "E" << i << j;
      l.labels.push_back(os.str());
    }
  return l;
}

// The half-integral trope classes C0, C_1j, C_jk in the frame.
std::vector<QVec> lambda_glue() {
  std::vector<QVec> gens;
  auto base = [] { return QVec(17, Rational(0)); };
  {
    // C0 = (L - E0 - sum_k E_1k) / 2.
    QVec v = base();
    v[0] = Rational(1, 2);
    v[1] = Rational(-1, 2);
    for (int k = 2; k <= 6; ++k) v[eidx(1, k)] = Rational(-1, 2);
    gens.push_back(v);
  }
  for (int j = 2; j <= 6; ++j) {
    // C_1j = (L - E0 - sum_{k != j} E_jk) / 2.
    QVec v = base();
    v[0] = Rational(1, 2);
    v[1] = Rational(-1, 2);
    for (int k = 1; k <= 6; ++k) {
      if (k == j) continue;
      v[eidx(std::min(j, k), std::max(j, k))] = Rational(-1, 2);
    }
    gens.push_back(v);
  }
  for (int j = 2; j <= 6; ++j)
    for (int k = j + 1; k <= 6; ++k) {
      // C_jk = (L - E_1j - E_jk - E_1k - E_lm - E_mn - E_ln) / 2.
      QVec v = base();
      v[0] = Rational(1, 2);
      v[eidx(1, j)] = Rational(-1, 2);
      v[eidx(j, k)] = Rational(-1, 2);
      v[eidx(1, k)] = Rational(-1, 2);
      std::vector<int> comp;
      for (int x = 2; x <= 6; ++x)
        if (x != j && x != k) comp.push_back(x);
      v[eidx(comp[0], comp[1])] = Rational(-1, 2);
      v[eidx(comp[1], comp[2])] = Rational(-1, 2);
      v[eidx(comp[0], comp[2])] = Rational(-1, 2);
      gens.push_back(v);
    }
  return gens;
}

}  // namespace

GramLattice named_lattice(const std::string& name, int n) {
  if (name == "A") {
    if (n < 1) throw std::invalid_argument("A(n) needs n >= 1");
    return from_dynkin(n, chain_edges(n), "a");
  }
  if (name == "D") {
    if (n < 4) throw std::invalid_argument("D(n) needs n >= 4");
    auto e = chain_edges(n - 1);
    e.push_back({n - 1, n - 3});
    return from_dynkin(n, e, "d");
  }
  if (name == "E6") {
    auto e = chain_edges(5);
    e.push_back({5, 2});
    return from_dynkin(6, e, "e");
  }
  if (name == "E7") {
    auto e = chain_edges(6);
    e.push_back({6, 3});
    return from_dynkin(7, e, "e");
  }
  if (name == "E8") {
    auto e = chain_edges(7);
    e.push_back({7, 4});
    return from_dynkin(8, e, "e");
  }
  if (name == "U") {
    GramLattice l;
    l.gram = {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
    l.labels = {"u1", "u2"};
    return l;
  }
  if (name == "Nikulin") return nikulin_lattice();
  if (name == "Kummer") return kummer_lattice();
  if (name == "Lambda166")
    return overlattice(lambda_frame(), lambda_glue()).lattice;
  throw std::invalid_argument("unknown lattice name: " + name);
}

GramLattice scale_lattice(const GramLattice& l, const Rational& alpha) {
  GramLattice out = l;
  for (auto& row : out.gram)
    for (auto& x : row) x *= alpha;
  return out;
}

GramLattice direct_sum(const std::vector<GramLattice>& parts) {
  GramLattice out;
  int total = 0;
  for (auto& p : parts) total += p.rank();
  out.gram.assign(total, QVec(total, Rational(0)));
  int off = 0;
  for (auto& p : parts) {
    for (int i = 0; i < p.rank(); ++i) {
      for (int j = 0; j < p.rank(); ++j)
        out.gram[off + i][off + j] = p.gram[i][j];
      out.labels.push_back(p.labels[i]);
    }
    off += p.rank();
  }
  return out;
}

GramLattice scale_and_sum(const std::vector<GramLattice>& parts,
                          const std::vector<Rational>& scalars) {
  if (parts.size() != scalars.size())
    throw std::invalid_argument("scale_and_sum: size mismatch");
  std::vector<GramLattice> scaled;
  for (size_t i = 0; i < parts.size(); ++i)
    scaled.push_back(scale_lattice(parts[i], scalars[i]));
  return direct_sum(scaled);
}

std::pair<Rational, std::tuple<int, int, int>> disc_and_signature(
    const GramLattice& l) {
  Rational d = q_det(l.gram);
  return {abs(d), symmetric_signature(l.gram)};
}

long count_roots(const GramLattice& l) {
  int n = l.rank();
  auto [pos, neg, zero] = symmetric_signature(l.gram);
  if (zero > 0 || (pos > 0 && neg > 0))
    throw std::invalid_argument("root enumeration requires definite lattice");
  QMat g = l.gram;
  if (neg == n)
    for (auto& row : g)
      for (auto& x : row) x = -x;

  // Q(x) = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2.
  QVec d(n);
  QMat u(n, QVec(n, Rational(0)));
  {
    QMat a = g;
    for (int i = 0; i < n; ++i) {
      d[i] = a[i][i];
      if (sgn(d[i]) <= 0)
        throw std::logic_error("definite form with nonpositive pivot");
      for (int j = i + 1; j < n; ++j) u[i][j] = a[i][j] / d[i];
      for (int k = i + 1; k < n; ++k)
        for (int m = i + 1; m < n; ++m)
          a[k][m] -= a[i][k] * a[i][m] / d[i];
    }
  }

  long count = 0;
  std::vector<Integer> x(n, 0);
  std::function<void(int, const Rational&)> rec = [&](int i,
                                                      const Rational& used) {
    if (i < 0) {
      if (used == 2) ++count;
      return;
    }
    Rational rem = Rational(2) - used;
    if (sgn(rem) < 0) return;
    Rational c(0);
    for (int j = i + 1; j < n; ++j)
      if (x[j] != 0) c += u[i][j] * Rational(x[j]);
    double s = std::sqrt(mpq_get_d(rem.get_mpq_t()) /
                         mpq_get_d(d[i].get_mpq_t()));
    double cd = mpq_get_d(c.get_mpq_t());
    long lo = static_cast<long>(std::floor(-cd - s)) - 1;
    long hi = static_cast<long>(std::ceil(-cd + s)) + 1;
    for (long v = lo; v <= hi; ++v) {
      Rational off = Rational(v) + c;
      Rational t = d[i] * off * off;
      if (t <= rem) {
        x[i] = v;
        rec(i - 1, used + t);
        x[i] = 0;
      }
    }
  };
  rec(n - 1, Rational(0));
  return count;
}

OverlatticeResult overlattice(const GramLattice& base,
                              const std::vector<QVec>& generators) {
  int n = base.rank();
  // Validate pairings.
  for (size_t a = 0; a < generators.size(); ++a) {
    QVec gv = q_matvec(base.gram, generators[a]);
    for (int i = 0; i < n; ++i)
      if (!is_integer(gv[i])) {
        std::ostringstream os;
        os << "non-integral pairing of generator " << a + 1
           << " with basis vector "
           << (base.labels.empty() ? std::to_string(i + 1) : base.labels[i]);
        throw std::invalid_argument(os.str());
      }
    for (size_t b = 0; b <= a; ++b) {
      Rational p(0);
      for (int i = 0; i < n; ++i) p += generators[b][i] * gv[i];
      if (!is_integer(p)) {
        std::ostringstream os;
        os << "non-integral pairing of generators " << a + 1 << " and "
           << b + 1;
        throw std::invalid_argument(os.str());
      }
      if (a == b && base.even && !is_integer(p / 2)) {
        std::ostringstream os;
        os << "odd norm for generator " << a + 1 << " in an even lattice";
        throw std::invalid_argument(os.str());
      }
    }
  }

  // Common denominator, then HNF of { d I ; d gens }.
  Integer den(1);
  for (auto& gv : generators)
    for (auto& x : gv) {
      Integer d = x.get_den();
      den = den * d / gcd(den, d);
    }
  ZMat rows;
  for (int i = 0; i < n; ++i) {
    std::vector<Integer> r(n, Integer(0));
    r[i] = den;
    rows.push_back(r);
  }
  for (auto& gv : generators) {
    std::vector<Integer> r(n);
    for (int i = 0; i < n; ++i) {
      Rational s = gv[i] * Rational(den);
      r[i] = s.get_num();  // denominator is 1 by construction
    }
    rows.push_back(r);
  }
  ZMat h = hnf_row_basis(rows);
  if (static_cast<int>(h.size()) != n)
    throw std::logic_error("overlattice basis has wrong rank");
  QMat basis(n, QVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      basis[i][j] = Rational(h[i][j], den);
      basis[i][j].canonicalize();
    }
  QMat gram = q_mul(q_mul(basis, base.gram), q_transpose(basis));
  Integer deth = abs(z_det(h));
  Integer dpow(1);
  for (int i = 0; i < n; ++i) dpow *= den;
  if (dpow % deth != 0)
    throw std::logic_error("overlattice index is not integral");
  GramLattice out;
  out.gram = std::move(gram);
  out.even = base.even;
  for (int i = 0; i < n; ++i) {
    std::ostringstream os;
    os << "b" << i + 1;
    out.labels.push_back(os.str());
  }
  return {std::move(out), std::move(basis), dpow / deth};
}

bool in_overlattice(const QMat& basis, const QVec& v) {
  auto x = q_solve(q_transpose(basis), v);
  if (!x) return false;
  // Verify the solution reproduces v (q_solve zeroes free variables).
  QVec check = q_matvec(q_transpose(basis), *x);
  if (check != v) return false;
  for (auto& c : *x)
    if (!is_integer(c)) return false;
  return true;
}

namespace {

QVec frame_zero() { return QVec(17, Rational(0)); }

QVec cls_L() {
  QVec v = frame_zero();
  v[0] = 1;
  return v;
}

QVec cls_E0() {
  QVec v = frame_zero();
  v[1] = 1;
  return v;
}

QVec cls_E(int i, int j) {
  QVec v = frame_zero();
  v[eidx(i, j)] = 1;
  return v;
}

QVec add(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVec sub(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVec mul(const Rational& s, const QVec& a) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

}  // namespace

NarukiClasses naruki_classes() {
  NarukiClasses nc;
  nc.frame = lambda_frame();
  auto ol = overlattice(nc.frame, lambda_glue());
  nc.lambda_basis = ol.basis;
  const QMat& G = nc.frame.gram;
  auto dot = [&](const QVec& a, const QVec& b) { return q_dot(a, b, G); };

  auto& cls = nc.classes;
  cls["L"] = cls_L();
  cls["E0"] = cls_E0();
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) {
      std::ostringstream os;
      os << "E" << i << j;
      cls[os.str()] = cls_E(i, j);
    }
  // Trope classes.
  {
    auto glue = lambda_glue();
    cls["C0"] = glue[0];
    for (int j = 2; j <= 6; ++j) {
      std::ostringstream os;
      os << "C1" << j;
      cls[os.str()] = glue[j - 1];
    }
    int idx = 6;
    for (int j = 2; j <= 6; ++j)
      for (int k = j + 1; k <= 6; ++k) {
        std::ostringstream os;
        os << "C" << j << k;
        cls[os.str()] = glue[idx++];
      }
  }
  QVec LmE0 = sub(cls["L"], cls["E0"]);
  cls["alphaC23"] = add(cls["C23"], sub(cls["L"], mul(2, cls["E0"])));

  // e classes and the fiber class.
  cls["e1"] = sub(LmE0, add(cls_E(1, 2), cls_E(4, 6)));
  cls["e2"] = sub(mul(2, LmE0),
                  add(add(cls_E(1, 2), cls_E(1, 3)),
                      add(cls_E(2, 4), add(cls_E(4, 6), cls_E(5, 6)))));
  cls["e3"] = sub(sub(mul(3, LmE0), mul(2, cls_E(1, 2))),
                  add(add(cls_E(1, 3), add(cls_E(2, 4), cls_E(3, 6))),
                      add(cls_E(4, 5), add(cls_E(4, 6), cls_E(5, 6)))));
  cls["e4"] =
      sub(sub(mul(4, LmE0),
              mul(2, add(cls_E(1, 2), add(cls_E(1, 3), cls_E(4, 6))))),
          add(add(cls_E(2, 4), add(cls_E(2, 5), cls_E(3, 6))),
              add(cls_E(4, 5), cls_E(5, 6))));
  cls["e5"] =
      sub(sub(sub(mul(5, LmE0), mul(3, cls_E(1, 2))),
              mul(2, add(cls_E(1, 3), add(cls_E(4, 6), cls_E(5, 6))))),
          add(add(cls_E(2, 4), add(cls_E(2, 5), cls_E(3, 4))),
              add(cls_E(3, 6), cls_E(4, 5))));
  cls["e6"] = cls_E(3, 5);
  QVec F = sub(sub(sub(mul(5, LmE0), mul(3, cls_E(1, 2))),
                   mul(2, add(cls_E(1, 3), add(cls_E(4, 6), cls_E(5, 6))))),
               add(add(cls_E(2, 4), cls_E(2, 5)),
                   add(cls_E(3, 6), cls_E(4, 5))));
  cls["F"] = F;
  for (int i = 1; i <= 6; ++i) {
    std::ostringstream ei, fi;
    ei << "e" << i;
    fi << "f" << i;
    cls[fi.str()] = sub(F, cls[ei.str()]);
  }
  cls["O"] = cls["C14"];
  cls["T"] = cls["C15"];

  // Q1..Q24 in diagram order.
  std::vector<std::string> qnames = {
      "C23", "alphaC23", "E23", "C12", "E26", "C16", "E16", "C0",
      "E14", "E15",      "C14", "C15", "f6",  "e6",  "f1",  "e1",
      "f2",  "e2",       "f3",  "e3",  "f4",  "e4",  "f5",  "e5"};
  std::vector<QVec> Q;
  for (auto& nm : qnames) Q.push_back(cls[nm]);

  auto check = [&](const std::string& name, bool passed,
                   const std::string& detail) {
    nc.checks.push_back({name, passed, detail});
  };

  // Membership of every class in Lambda(16,6).
  {
    bool ok = true;
    std::string bad;
    for (auto& [name, v] : cls)
      if (!in_overlattice(nc.lambda_basis, v)) {
        ok = false;
        bad += (bad.empty() ? "" : ", ") + name;
      }
    check("classes_in_lattice", ok,
          ok ? "all classes lie in Lambda(16,6)" : "outside lattice: " + bad);
  }

  // (a) norms.
  {
    bool ok = true;
    std::string bad;
    for (size_t i = 0; i < Q.size(); ++i)
      if (dot(Q[i], Q[i]) != -2) {
        ok = false;
        bad += (bad.empty() ? "" : ", ") + qnames[i];
      }
    if (dot(F, F) != 0) {
      ok = false;
      bad += (bad.empty() ? "" : ", ") + std::string("F");
    }
    check("class_norms", ok,
          ok ? "all 24 classes have self-intersection -2 and F^2 = 0"
              : "wrong norm: " + bad);
  }

  // (b) diagram adjacency.
  {
    std::vector<std::vector<int>> expected(24, std::vector<int>(24, 0));
    auto set2 = [&](int a, int b, int v) {
      expected[a - 1][b - 1] = v;
      expected[b - 1][a - 1] = v;
    };
    for (int i = 1; i <= 24; ++i) expected[i - 1][i - 1] = -2;
    set2(1, 3, 1);
    set2(2, 3, 1);
    set2(3, 4, 1);
    set2(4, 5, 1);
    set2(5, 6, 1);
    set2(6, 7, 1);
    set2(7, 8, 1);
    set2(8, 9, 1);
    set2(8, 10, 1);
    set2(11, 9, 1);
    set2(12, 10, 1);
    for (int k = 13; k <= 23; k += 2) set2(11, k, 1);  // O meets the f's
    for (int k = 14; k <= 24; k += 2) set2(12, k, 1);  // T meets the e's
    for (int k = 13; k <= 23; k += 2) set2(k, k + 1, 2);
    bool ok = true;
    std::string bad;
    for (int i = 0; i < 24; ++i)
      for (int j = 0; j < 24; ++j) {
        Rational v = dot(Q[i], Q[j]);
        if (v != expected[i][j]) {
          ok = false;
          if (bad.size() < 200) {
            std::ostringstream os;
            os << qnames[i] << "." << qnames[j] << "=" << rat_str(v)
               << " (want " << expected[i][j] << ") ";
            bad += os.str();
          }
        }
      }
    check("diagram_adjacency", ok,
          ok ? "Gram matrix of Q1..Q24 matches the fibration diagram" : bad);
  }

  // (c) e_i + f_i = F; the displayed f1..f5 agree with F - e_i.
  {
    std::vector<QVec> displayed_f(6, frame_zero());
    displayed_f[3] = sub(LmE0, add(cls_E(1, 2), cls_E(5, 6)));  // f4
    displayed_f[2] = sub(mul(2, LmE0),
                         add(add(cls_E(1, 2), cls_E(1, 3)),
                             add(cls_E(2, 5), add(cls_E(4, 6), cls_E(5, 6)))));
    displayed_f[1] =
        sub(sub(mul(3, LmE0), mul(2, cls_E(1, 2))),
            add(add(cls_E(1, 3), add(cls_E(2, 5), cls_E(3, 6))),
                add(cls_E(4, 5), add(cls_E(4, 6), cls_E(5, 6)))));
    displayed_f[0] =
        sub(sub(mul(4, LmE0),
                mul(2, add(cls_E(1, 2), add(cls_E(1, 3), cls_E(5, 6))))),
            add(add(cls_E(2, 4), add(cls_E(2, 5), cls_E(3, 6))),
                add(cls_E(4, 5), cls_E(4, 6))));
    displayed_f[4] = cls_E(3, 4);  // f5
    bool ok = true;
    std::string detail = "e_i + f_i = F for all i";
    for (int i = 1; i <= 6; ++i) {
      std::ostringstream ei, fi;
      ei << "e" << i;
      fi << "f" << i;
      if (add(cls[ei.str()], cls[fi.str()]) != F) ok = false;
      if (i != 6 && cls[fi.str()] != displayed_f[i - 1]) {
        ok = false;
        detail = "displayed f" + std::to_string(i) + " disagrees with F - e" +
                 std::to_string(i);
      }
    }
    check("fiber_partition", ok, detail);
  }

  // (d) F as a weighted sum of diagram classes.
  {
    QVec F0 = add(add(Q[0], Q[1]), add(Q[8], Q[9]));
    for (int k = 2; k <= 7; ++k) F0 = add(F0, mul(2, Q[k]));
    check("fiber_class_agreement", F0 == F,
          "the two displayed expressions for F agree");
  }

  // (e) the E8 copy.
  {
    std::vector<std::string> e8names = {"C12", "E26", "C16", "E16",
                                        "C0",  "E14", "C14", "E15"};
    GramLattice e8 = named_lattice("E8");
    bool ok = true;
    for (int i = 0; i < 8 && ok; ++i)
      for (int j = 0; j < 8; ++j)
        if (dot(cls[e8names[i]], cls[e8names[j]]) != -e8.gram[i][j]) {
          ok = false;
          break;
        }
    check("e8_copy", ok,
          "classes C12, E26, C16, E16, C0, E14, C14, E15 span E8(-1)");
  }

  // (f) the orthogonal octet.
  {
    std::vector<std::string> octet = {"C23", "alphaC23", "e1", "e2",
                                      "e3",  "e4",       "e5", "E35"};
    std::vector<std::string> e8names = {"C12", "E26", "C16", "E16",
                                        "C0",  "E14", "C14", "E15"};
    bool ok = true;
    for (size_t i = 0; i < octet.size() && ok; ++i) {
      if (dot(cls[octet[i]], cls[octet[i]]) != -2) ok = false;
      for (size_t j = i + 1; j < octet.size() && ok; ++j)
        if (dot(cls[octet[i]], cls[octet[j]]) != 0) ok = false;
      for (auto& nm : e8names)
        if (dot(cls[octet[i]], cls[nm]) != 0) {
          ok = false;
          break;
        }
    }
    check("orthogonal_octet", ok,
          "eight orthogonal (-2)-classes orthogonal to the E8 copy");
  }

  // alpha is an order-2 isometry and sends C23 to the stated class.
  {
    QMat M(17, frame_zero());
    M[0][0] = 3;
    M[0][1] = -4;
    M[1][0] = 2;
    M[1][1] = -3;
    for (int i = 2; i < 17; ++i) M[i][i] = 1;
    auto apply = [&](const QVec& v) {
      QVec r = frame_zero();
      for (int i = 0; i < 17; ++i)
        if (sgn(v[i]) != 0) r = add(r, mul(v[i], M[i]));
      return r;
    };
    bool isometry = q_mul(q_mul(M, G), q_transpose(M)) == G;
    bool order2 = q_mul(M, M) == q_identity(17);
    bool image = apply(cls["C23"]) == cls["alphaC23"];
    check("alpha_involution", isometry && order2 && image,
          "alpha is an order-2 isometry with alpha(C23) = C23 + L - 2E0");
  }

  return nc;
}

}  // namespace k3
