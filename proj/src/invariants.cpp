#include "k3/invariants.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <random>
#include <stdexcept>

namespace k3 {

GenusTwoCurve GenusTwoCurve::from_sextic(UPoly f) {
  if (f.degree() != 5 && f.degree() != 6)
    throw std::invalid_argument("genus-two model needs degree 5 or 6");
  return GenusTwoCurve{std::move(f), std::nullopt};
}

GenusTwoCurve GenusTwoCurve::from_roots(const Rational& f6,
                                        std::vector<Rational> roots) {
  if (sgn(f6) == 0) throw std::invalid_argument("leading coefficient is zero");
  if (roots.size() != 6) throw std::invalid_argument("need six roots");
  UPoly f = UPoly::constant(f6, "x");
  for (auto& r : roots) f = f * (UPoly::x("x") - UPoly::constant(r, "x"));
  return GenusTwoCurve{std::move(f), std::move(roots)};
}

namespace {

// Roots of the binary sextic as projective pairs (alpha : beta), with the
// form equal to c * prod (beta_k x - alpha_k z). For six finite roots with
// beta = 1 this reduces to c = f6 and brackets theta_i - theta_j.
struct ProjRoot {
  Rational a, b;
};

Rational bracket(const ProjRoot& p, const ProjRoot& q) {
  return p.a * q.b - q.a * p.b;
}

IgusaClebsch ic_projective(const Rational& c,
                           const std::array<ProjRoot, 6>& r) {
  auto sq = [](const Rational& x) -> Rational { return x * x; };
  // Pairwise squared brackets.
  Rational d2[6][6];
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) d2[i][j] = sq(bracket(r[i], r[j]));

  // I2: the 15 ways to split {0..5} into three pairs.
  Rational i2(0);
  for (int a = 1; a < 6; ++a) {
    std::vector<int> rest1;
    for (int k = 1; k < 6; ++k)
      if (k != a) rest1.push_back(k);
    for (int bi = 1; bi < 4; ++bi) {
      int b = rest1[bi];
      std::vector<int> rest2;
      for (int k : rest1)
        if (k != rest1[0] && k != b) rest2.push_back(k);
      i2 += d2[0][a] * d2[rest1[0]][b] * d2[rest2[0]][rest2[1]];
    }
  }

  // Splits into two unordered triples, the first containing index 0.
  std::vector<std::pair<std::array<int, 3>, std::array<int, 3>>> splits;
  for (int a = 1; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) {
      std::array<int, 3> t{0, a, b}, u{};
      int k = 0;
      for (int x = 1; x < 6; ++x)
        if (x != a && x != b) u[k++] = x;
      splits.push_back({t, u});
    }
  auto delta = [&](const std::array<int, 3>& t) -> Rational {
    return d2[t[0]][t[1]] * d2[t[1]][t[2]] * d2[t[2]][t[0]];
  };

  Rational i4(0), i6(0);
  for (auto& [t, u] : splits) {
    Rational dt = delta(t) * delta(u);
    i4 += dt;
    std::array<int, 3> p = u;
    std::sort(p.begin(), p.end());
    do {
      i6 += dt * d2[t[0]][p[0]] * d2[t[1]][p[1]] * d2[t[2]][p[2]];
    } while (std::next_permutation(p.begin(), p.end()));
  }

  Rational i10(1);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) i10 *= d2[i][j];

  auto cpow = [&](unsigned n) {
    Rational p(1);
    for (unsigned k = 0; k < n; ++k) p *= c;
    return p;
  };
  return {cpow(2) * i2, cpow(4) * i4, cpow(6) * i6, cpow(10) * i10};
}

// ---- interpolated coefficient formulas ------------------------------------

using Exp7 = std::array<int, 7>;

// Monomials in f0..f6 of degree d and isobaric weight 3d.
std::vector<Exp7> monomial_basis(int d) {
  std::vector<Exp7> out;
  Exp7 e{};
  for (e[6] = 0; e[6] <= d; ++e[6])
    for (e[5] = 0; e[5] + e[6] <= d; ++e[5])
      for (e[4] = 0; e[4] + e[5] + e[6] <= d; ++e[4])
        for (e[3] = 0; e[3] + e[4] + e[5] + e[6] <= d; ++e[3])
          for (e[2] = 0; e[2] + e[3] + e[4] + e[5] + e[6] <= d; ++e[2])
            for (e[1] = 0; e[1] + e[2] + e[3] + e[4] + e[5] + e[6] <= d;
                 ++e[1]) {
              e[0] = d - e[1] - e[2] - e[3] - e[4] - e[5] - e[6];
              int w = 0;
              for (int i = 0; i < 7; ++i) w += i * e[i];
              if (w == 3 * d) out.push_back(e);
            }
  return out;
}

Integer eval_monomial(const Exp7& e, const std::array<Integer, 7>& f) {
  Integer v(1);
  for (int i = 0; i < 7; ++i)
    for (int k = 0; k < e[i]; ++k) v *= f[i];
  return v;
}

struct Sample {
  std::array<Integer, 7> coeffs;
  IgusaClebsch inv;
};

Sample make_sample(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> root_pick(-10, 10);
  std::uniform_int_distribution<int> lead_pick(1, 9);
  std::array<Rational, 6> roots;
  while (true) {
    bool ok = true;
    for (int i = 0; i < 6; ++i) roots[i] = root_pick(rng);
    for (int i = 0; i < 6 && ok; ++i)
      for (int j = i + 1; j < 6; ++j)
        if (roots[i] == roots[j]) {
          ok = false;
          break;
        }
    if (ok) break;
  }
  Rational f6(lead_pick(rng));
  UPoly f = UPoly::constant(f6, "x");
  for (auto& r : roots) f = f * (UPoly::x("x") - UPoly::constant(r, "x"));
  Sample s;
  for (int i = 0; i < 7; ++i) s.coeffs[i] = f.coeff(i).get_num();
  s.inv = ic_from_roots(f6, roots);
  return s;
}

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, p);
    a = mulmod_u64(a, a, p);
    e >>= 1;
  }
  return r;
}

uint64_t reduce_mod(const Integer& z, uint64_t p) {
  unsigned long r = mpz_fdiv_ui(z.get_mpz_t(), p);
  return static_cast<uint64_t>(r);
}

// Solve the overdetermined system A x = b mod p (rows >= cols); empty
// result if the rank is deficient or the system is inconsistent.
std::vector<uint64_t> solve_mod(std::vector<std::vector<uint64_t>> a,
                                std::vector<uint64_t> b, uint64_t p) {
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c < cols; ++c) {
    size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) return {};  // rank deficient
    std::swap(a[piv], a[r]);
    std::swap(b[piv], b[r]);
    uint64_t inv = powmod_u64(a[r][c], p - 2, p);
    for (size_t j = c; j < cols; ++j) a[r][j] = mulmod_u64(a[r][j], inv, p);
    b[r] = mulmod_u64(b[r], inv, p);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      uint64_t f = a[i][c];
      for (size_t j = c; j < cols; ++j) {
        uint64_t sub = mulmod_u64(f, a[r][j], p);
        a[i][j] = (a[i][j] >= sub) ? a[i][j] - sub : a[i][j] + p - sub;
      }
      uint64_t sub = mulmod_u64(f, b[r], p);
      b[i] = (b[i] >= sub) ? b[i] - sub : b[i] + p - sub;
    }
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (b[i] != 0) return {};  // inconsistent
  b.resize(cols);
  return b;
}

// n/d = x mod m with |n|, d bounded by sqrt(m/2); nullopt on failure.
std::optional<Rational> rational_reconstruct(const Integer& x,
                                             const Integer& m) {
  Integer bound;
  mpz_sqrt(bound.get_mpz_t(), Integer(m / 2).get_mpz_t());
  Integer r0 = m, r1 = x % m;
  if (r1 < 0) r1 += m;
  Integer t0 = 0, t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1, t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  Rational out(r1, t1);
  out.canonicalize();
  return out;
}

using Formula = std::vector<std::pair<Exp7, Rational>>;

Rational eval_formula(const Formula& formula, const std::array<Rational, 7>& f) {
  Rational acc(0);
  for (auto& [e, c] : formula) {
    Rational term = c;
    for (int i = 0; i < 7; ++i)
      for (int k = 0; k < e[i]; ++k) term *= f[i];
    acc += term;
  }
  return acc;
}

struct FormulaSet {
  Formula i2, i4, i6, i10;
};

const Rational& pick_invariant(const IgusaClebsch& v, int d) {
  switch (d) {
    case 2: return v.I2;
    case 4: return v.I4;
    case 6: return v.I6;
    default: return v.I10;
  }
}

Formula interpolate_degree(int d, const std::vector<Sample>& samples,
                           const std::vector<uint64_t>& primes) {
  auto basis = monomial_basis(d);
  size_t n = basis.size();
  size_t m = n + 30;
  if (samples.size() < m)
    throw std::logic_error("not enough interpolation samples");
  // Integer matrix rows (shared across primes).
  std::vector<std::vector<Integer>> rows(m, std::vector<Integer>(n));
  std::vector<Integer> rhs(m);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j)
      rows[i][j] = eval_monomial(basis[j], samples[i].coeffs);
    rhs[i] = pick_invariant(samples[i].inv, d).get_num();
  }
  std::vector<Integer> residues(n, Integer(0));
  Integer modulus(1);
  for (uint64_t p : primes) {
    std::vector<std::vector<uint64_t>> a(m, std::vector<uint64_t>(n));
    std::vector<uint64_t> b(m);
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = 0; j < n; ++j) a[i][j] = reduce_mod(rows[i][j], p);
      b[i] = reduce_mod(rhs[i], p);
    }
    auto x = solve_mod(std::move(a), std::move(b), p);
    if (x.empty())
      throw std::runtime_error("interpolation matrix singular mod prime");
    // CRT merge.
    Integer pz(static_cast<unsigned long>(p));
    for (size_t j = 0; j < n; ++j) {
      Integer xp(static_cast<unsigned long>(x[j]));
      if (modulus == 1) {
        residues[j] = xp;
      } else {
        Integer inv;
        mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
        Integer diff = (xp - residues[j] % pz) % pz;
        if (diff < 0) diff += pz;
        residues[j] += modulus * ((diff * inv) % pz);
      }
    }
    modulus *= pz;
  }
  Formula out;
  for (size_t j = 0; j < n; ++j) {
    auto c = rational_reconstruct(residues[j], modulus);
    if (!c) throw std::runtime_error("rational reconstruction failed");
    if (sgn(*c) != 0) out.push_back({basis[j], *c});
  }
  return out;
}

FormulaSet build_formulas() {
  std::mt19937_64 rng(0x1CEB00DAULL);
  std::vector<uint64_t> primes = {2305843009213693951ULL};  // 2^61 - 1
  {
    Integer p(primes[0]);
    for (int k = 0; k < 3; ++k) {
      mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
      primes.push_back(p.get_ui());
    }
  }
  size_t need = monomial_basis(10).size() + 40;
  for (int attempt = 0; attempt < 5; ++attempt) {
    std::vector<Sample> samples;
    for (size_t i = 0; i < need; ++i) samples.push_back(make_sample(rng));
    FormulaSet fs;
    try {
      fs.i2 = interpolate_degree(2, samples, primes);
      fs.i4 = interpolate_degree(4, samples, primes);
      fs.i6 = interpolate_degree(6, samples, primes);
      fs.i10 = interpolate_degree(10, samples, primes);
    } catch (const std::runtime_error&) {
      continue;  // resample
    }
    // Exact verification on fresh samples.
    bool ok = true;
    for (int k = 0; k < 12 && ok; ++k) {
      Sample s = make_sample(rng);
      std::array<Rational, 7> f;
      for (int i = 0; i < 7; ++i) f[i] = Rational(s.coeffs[i]);
      ok = eval_formula(fs.i2, f) == s.inv.I2 &&
           eval_formula(fs.i4, f) == s.inv.I4 &&
           eval_formula(fs.i6, f) == s.inv.I6 &&
           eval_formula(fs.i10, f) == s.inv.I10;
    }
    if (ok) return fs;
  }
  throw std::runtime_error("invariant interpolation did not stabilize");
}

const FormulaSet& cached_formulas() {
  static FormulaSet fs;
  static std::once_flag flag;
  std::call_once(flag, [] { fs = build_formulas(); });
  return fs;
}

}  // namespace

IgusaClebsch ic_from_roots(const Rational& f6,
                           const std::array<Rational, 6>& roots) {
  if (sgn(f6) == 0) throw std::invalid_argument("f6 must be nonzero");
  std::array<ProjRoot, 6> r;
  for (int i = 0; i < 6; ++i) r[i] = {roots[i], Rational(1)};
  return ic_projective(f6, r);
}

IgusaClebsch ic_from_coeffs(const UPoly& f) {
  if (f.degree() != 5 && f.degree() != 6)
    throw std::invalid_argument("ic_from_coeffs: degree must be 5 or 6");
  std::array<Rational, 7> c;
  for (int i = 0; i < 7; ++i) c[i] = f.coeff(i);
  const FormulaSet& fs = cached_formulas();
  return {eval_formula(fs.i2, c), eval_formula(fs.i4, c),
          eval_formula(fs.i6, c), eval_formula(fs.i10, c)};
}

bool ic_weighted_equal(const IgusaClebsch& a, const IgusaClebsch& b) {
  const int weights[4] = {2, 4, 6, 10};
  const Rational* av[4] = {&a.I2, &a.I4, &a.I6, &a.I10};
  const Rational* bv[4] = {&b.I2, &b.I4, &b.I6, &b.I10};
  for (int k = 0; k < 4; ++k)
    if ((sgn(*av[k]) == 0) != (sgn(*bv[k]) == 0)) return false;
  int d0 = -1;
  for (int k = 0; k < 4; ++k)
    if (sgn(*av[k]) != 0) {
      d0 = k;
      break;
    }
  if (d0 < 0) return true;  // all zero on both sides
  Rational ratio = *bv[d0] / *av[d0];
  auto r = rational_root(ratio, weights[d0]);
  if (!r) return false;
  // All weights are even, so the sign of r is irrelevant.
  for (int k = 0; k < 4; ++k) {
    Rational rp(1);
    for (int i = 0; i < weights[k]; ++i) rp *= *r;
    if (rp * *av[k] != *bv[k]) return false;
  }
  return true;
}

}  // namespace k3
