#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "k3/lattice.hpp"

using namespace k3;

namespace {

void expect(const std::string& name, int n, int rank, const Rational& disc,
            std::tuple<int, int, int> sig, long roots) {
  GramLattice l = named_lattice(name, n);
  CAPTURE(name);
  CHECK(l.rank() == rank);
  auto [d, s] = disc_and_signature(l);
  CHECK(d == disc);
  CHECK(s == sig);
  CHECK(count_roots(l) == roots);
}

}  // namespace

TEST_CASE("root lattice table") {
  for (int n = 1; n <= 10; ++n)
    expect("A", n, n, Rational(n + 1), {n, 0, 0}, long(n) * (n + 1));
  for (int n = 4; n <= 10; ++n)
    expect("D", n, n, Rational(4), {n, 0, 0}, 2L * n * (n - 1));
  expect("E6", 0, 6, Rational(3), {6, 0, 0}, 72);
  expect("E7", 0, 7, Rational(2), {7, 0, 0}, 126);
  expect("E8", 0, 8, Rational(1), {8, 0, 0}, 240);
}

TEST_CASE("hyperbolic plane and rescalings") {
  GramLattice u = named_lattice("U");
  auto [du, su] = disc_and_signature(u);
  CHECK(du == 1);
  CHECK(su == std::tuple<int, int, int>{1, 1, 0});

  GramLattice umin = scale_lattice(u, -1);
  auto [dm, sm] = disc_and_signature(umin);
  CHECK(dm == 1);
  CHECK(sm == std::tuple<int, int, int>{1, 1, 0});

  GramLattice two{{{Rational(2)}}, {"v"}, true};
  CHECK(count_roots(two) == 2);
  GramLattice e8m = scale_lattice(named_lattice("E8"), -1);
  CHECK(count_roots(e8m) == 240);
  auto [d8, s8] = disc_and_signature(e8m);
  CHECK(d8 == 1);
  CHECK(s8 == std::tuple<int, int, int>{0, 8, 0});
}

TEST_CASE("K3 lattice shape") {
  GramLattice e8m = scale_lattice(named_lattice("E8"), -1);
  GramLattice u = named_lattice("U");
  GramLattice k3 = direct_sum({e8m, e8m, u, u, u});
  auto [d, s] = disc_and_signature(k3);
  CHECK(k3.rank() == 22);
  CHECK(d == 1);
  CHECK(s == std::tuple<int, int, int>{3, 19, 0});

  GramLattice t = direct_sum({u, scale_lattice(named_lattice("E8"), -1),
                              scale_lattice(named_lattice("E7"), -1)});
  auto [dt, st] = disc_and_signature(t);
  CHECK(t.rank() == 17);
  CHECK(dt == 2);
  CHECK(st == std::tuple<int, int, int>{1, 16, 0});
}

TEST_CASE("Nikulin lattice") {
  GramLattice n = named_lattice("Nikulin");
  auto [d, s] = disc_and_signature(n);
  CHECK(n.rank() == 8);
  CHECK(d == 64);
  CHECK(s == std::tuple<int, int, int>{0, 8, 0});
  CHECK(count_roots(n) == 16);
}

TEST_CASE("Kummer lattice") {
  GramLattice k = named_lattice("Kummer");
  auto [d, s] = disc_and_signature(k);
  CHECK(k.rank() == 16);
  CHECK(d == 64);
  CHECK(s == std::tuple<int, int, int>{0, 16, 0});
  // Exactly the 16 exceptional classes survive as roots (32 vectors).
  CHECK(count_roots(k) == 32);
}

TEST_CASE("Lambda(16,6)") {
  GramLattice l = named_lattice("Lambda166");
  auto [d, s] = disc_and_signature(l);
  CHECK(l.rank() == 17);
  CHECK(d == 64);
  CHECK(s == std::tuple<int, int, int>{1, 16, 0});
}

TEST_CASE("root count is a lattice invariant") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> pick(0, 5), val(-2, 2);
  GramLattice l = named_lattice("D", 6);
  for (int trial = 0; trial < 4; ++trial) {
    // Random unimodular change of basis from elementary row operations.
    QMat u = q_identity(6);
    for (int k = 0; k < 8; ++k) {
      int i = pick(rng), j = pick(rng);
      if (i == j) continue;
      Rational c(val(rng));
      for (int col = 0; col < 6; ++col) u[i][col] += c * u[j][col];
    }
    GramLattice m{q_mul(q_mul(u, l.gram), q_transpose(u)), l.labels, true};
    CHECK(count_roots(m) == count_roots(l));
    auto [dl, sl] = disc_and_signature(l);
    auto [dm, sm] = disc_and_signature(m);
    CHECK(dl == dm);
    CHECK(sl == sm);
  }
}

TEST_CASE("overlattice bookkeeping") {
  GramLattice d4 = named_lattice("D", 4);
  // Extending by a vector already in the lattice changes nothing.
  QVec inside = {Rational(1), Rational(1), Rational(0), Rational(0)};
  auto same = overlattice(d4, {inside});
  CHECK(same.index == 1);
  auto [d0, s0] = disc_and_signature(d4);
  auto [d1, s1] = disc_and_signature(same.lattice);
  CHECK(d0 == d1);

  // disc scales by index^2.
  GramLattice n = named_lattice("Nikulin");
  GramLattice base{QMat(8, QVec(8, Rational(0))), {}, true};
  for (int i = 0; i < 8; ++i) base.gram[i][i] = -2;
  QVec half(8, Rational(1, 2));
  auto ext = overlattice(base, {half});
  CHECK(ext.index == 2);
  auto [db, sb] = disc_and_signature(base);
  auto [de, se] = disc_and_signature(ext.lattice);
  CHECK(db == de * ext.index * ext.index);
  CHECK(de == 64);
  CHECK(in_overlattice(ext.basis, half));
  QVec bad(8, Rational(1, 2));
  bad[0] = Rational(1, 4);
  CHECK(!in_overlattice(ext.basis, bad));

  // Non-integral pairing with the base is rejected.
  QVec third(8, Rational(0));
  third[0] = Rational(1, 3);
  CHECK_THROWS(overlattice(base, {third}));
  // Odd norm in an even lattice is rejected.
  QVec oddv(8, Rational(0));
  oddv[0] = Rational(1, 2);
  CHECK_THROWS(overlattice(base, {oddv}));
  (void)n;
}

TEST_CASE("naruki classes") {
  auto nk = naruki_classes();
  CHECK(nk.frame.rank() == 17);
  CHECK(nk.classes.size() >= 24);
  for (auto& c : nk.checks) {
    INFO(c.name, ": ", c.detail);
    CHECK(c.passed);
  }
}
