#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>
#include <vector>

#include "k3/elliptic.hpp"
#include "k3/invariants.hpp"
#include "k3/kummer.hpp"
#include "k3/lattice.hpp"
#include "k3/shioda_inose.hpp"

using json = nlohmann::ordered_json;
using namespace k3;

namespace {

std::vector<Rational> parse_list(const std::string& s) {
  std::vector<Rational> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(rat_parse(cur));
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(rat_parse(cur));
  return out;
}

json rational_json(const Rational& q) { return rat_str(q); }

json upoly_json(const UPoly& p) {
  json a = json::array();
  for (auto& c : p.coeffs()) a.push_back(rat_str(c));
  return a;
}

json ic_json(const IgusaClebsch& ic) {
  return {{"I2", rat_str(ic.I2)},
          {"I4", rat_str(ic.I4)},
          {"I6", rat_str(ic.I6)},
          {"I10", rat_str(ic.I10)}};
}

json checks_json(const std::vector<CheckResult>& cs) {
  json a = json::array();
  for (auto& c : cs)
    a.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return a;
}

json fibers_json(const std::vector<KodairaFiber>& fs) {
  json a = json::array();
  for (auto& f : fs) {
    json e = {{"type", f.type},
              {"place", f.place ? f.place->str() : "infinity"},
              {"points", f.point_count},
              {"components", f.m},
              {"euler", f.euler},
              {"lattice", f.lattice}};
    a.push_back(e);
  }
  return a;
}

struct CurveInput {
  std::string sextic, roots, ic;
  Rational lead = 1;
};

// Resolve --sextic / --roots into a curve; --ic callers handle separately.
GenusTwoCurve input_curve(const CurveInput& in) {
  if (!in.roots.empty()) {
    auto r = parse_list(in.roots);
    if (r.size() != 6)
      throw CLI::ValidationError("--roots needs six rational values");
    return GenusTwoCurve::from_roots(in.lead, r);
  }
  auto c = parse_list(in.sextic);
  if (c.size() != 7)
    throw CLI::ValidationError("--sextic needs seven values f0..f6");
  return GenusTwoCurve::from_sextic(UPoly(c, "x"));
}

IgusaClebsch input_ic(const CurveInput& in) {
  if (!in.ic.empty()) {
    auto v = parse_list(in.ic);
    if (v.size() != 4)
      throw CLI::ValidationError("--ic needs four values I2,I4,I6,I10");
    return {v[0], v[1], v[2], v[3]};
  }
  return ic_from_coeffs(input_curve(in).f);
}

int finish(const json& report, const std::string& out, bool passed) {
  std::string text = report.dump(2);
  if (!out.empty()) {
    std::ofstream f(out);
    f << text << "\n";
  }
  std::printf("%s\n", text.c_str());
  return passed ? 0 : 1;
}

json verify_report(const std::string& level, unsigned precision,
                   unsigned long seed, bool* all_ok) {
  json sections;
  bool ok = true;
  auto record = [&](const char* name, const std::vector<CheckResult>& cs) {
    sections[name] = checks_json(cs);
    ok = ok && all_passed(cs);
  };

  // Lattice data suite.
  {
    std::vector<CheckResult> cs;
    auto expect = [&](const std::string& name, const GramLattice& l,
                      const Rational& disc, int pos, int neg, long roots) {
      auto [d, sig] = disc_and_signature(l);
      auto [p, n, z] = sig;
      bool good = d == disc && p == pos && n == neg && z == 0;
      std::string detail = "disc " + rat_str(d) + ", signature (" +
                           std::to_string(p) + "," + std::to_string(n) + ")";
      if (roots >= 0) {
        long r = count_roots(l);
        good = good && r == roots;
        detail += ", roots " + std::to_string(r);
      }
      cs.push_back({name, good, detail});
    };
    expect("E8", named_lattice("E8"), 1, 8, 0, 240);
    expect("E7", named_lattice("E7"), 2, 7, 0, 126);
    expect("E6", named_lattice("E6"), 3, 6, 0, 72);
    for (int n = 4; n <= 10; ++n)
      expect("D" + std::to_string(n), named_lattice("D", n), 4, n, 0,
             2L * n * (n - 1));
    for (int n = 1; n <= 10; ++n)
      expect("A" + std::to_string(n), named_lattice("A", n), n + 1, n, 0,
             static_cast<long>(n) * (n + 1));
    expect("Nikulin", named_lattice("Nikulin"), 64, 0, 8, 16);
    expect("Kummer", named_lattice("Kummer"), 64, 0, 16, -1);
    expect("Lambda166", named_lattice("Lambda166"), 64, 1, 16, -1);
    expect("U+E8(-1)+E7(-1)",
           scale_and_sum({named_lattice("U"), named_lattice("E8"),
                          named_lattice("E7")},
                         {1, Rational(-1), Rational(-1)}),
           2, 1, 16, -1);
    expect("E8(-1)^2+U^3",
           scale_and_sum({named_lattice("E8"), named_lattice("E8"),
                          named_lattice("U"), named_lattice("U"),
                          named_lattice("U")},
                         {Rational(-1), Rational(-1), 1, 1, 1}),
           1, 3, 19, -1);
    record("lattice_suite", cs);
  }

  record("naruki_classes", naruki_classes().checks);
  record("quotient_identity_symbolic", quotient_identity_symbolic());

  GenusTwoCurve ref = GenusTwoCurve::from_roots(
      1, {Rational(0), Rational(1), Rational(2), Rational(3), Rational(4),
          Rational(5)});
  IgusaClebsch ic = ic_from_coeffs(ref.f);
  SurfacePair pair = surfaces_from_ic(ic);
  {
    std::vector<CheckResult> cs;
    bool q = verify_quotient_identity(pair);
    cs.push_back({"reference_curve", q,
                  "refibration + 2-isogeny reproduces the I5* model"});
    UPoly g = sextic_correspondence(ic);
    cs.push_back({"igusa_quartic", g.coeff(5) == 0 &&
                                       g.coeff(4) * g.coeff(4) ==
                                           4 * g.coeff(2),
                  "g5 = 0 and g4^2 = 4 g2"});
    record("quotient_identity", cs);
  }
  {
    KummerQuartic kq = build_kummer(ref);
    auto [nodes, tropes] = nodes_and_tropes(ref);
    record("kummer_configuration",
           verify_configuration(kq, nodes, tropes).checks);
  }

  if (level == "full" || level == "kummer") {
    record("nikulin_involution",
           nikulin_involution_check(pair, 100, precision < 60 ? 60 : precision,
                                    seed));
  }
  if (level == "kummer") {
    auto rep = kummer_side_verification(
        ref, 50, precision < 80 ? 80 : precision, seed + 1);
    json sec = {{"checks", checks_json(rep.checks)},
                {"pencil_dimension", rep.pencil_dimension},
                {"lambda_x", rat_str(rep.lambda_x)},
                {"lambda_y_squared", rat_str(rep.lambda_y2)},
                {"alpha", rat_str(rep.alpha)},
                {"beta", rat_str(rep.beta)},
                {"max_residual",
                 {{"value", rep.max_residual},
                  {"precision_digits", precision < 80 ? 80 : precision}}}};
    sections["kummer_side"] = sec;
    ok = ok && rep.ok();
  }
  *all_ok = ok;
  return sections;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Genus-2 to K3: Igusa-Clebsch invariants, Kummer quartics, elliptic "
      "fibrations and the associated lattice checks"};
  app.require_subcommand(1);

  CurveInput in;
  std::string out, level = "fast", name;
  int latn = 0;
  bool want_roots = false;
  unsigned precision = 60;
  unsigned long seed = 1;

  auto add_curve_opts = [&](CLI::App* cmd, bool with_ic) {
    cmd->add_option("--sextic", in.sextic,
                    "coefficients f0,f1,...,f6 (lowest degree first)");
    cmd->add_option("--roots", in.roots, "six rational roots");
    cmd->add_option("--lead", in.lead, "leading coefficient with --roots")
        ->default_str("1");
    if (with_ic)
      cmd->add_option("--ic", in.ic, "invariants I2,I4,I6,I10");
    cmd->add_option("--out", out, "write the JSON report to a file");
  };

  auto* inv = app.add_subcommand("invariants", "Igusa-Clebsch invariants");
  add_curve_opts(inv, false);

  auto* kum = app.add_subcommand(
      "kummer", "Kummer quartic with its (16,6) configuration checks");
  add_curve_opts(kum, false);

  auto* bld = app.add_subcommand(
      "build", "the E8+E7 surface and its I5* quotient from invariants");
  add_curve_opts(bld, true);

  auto* cls = app.add_subcommand("classify",
                                 "Kodaira fiber configurations of X and Y");
  add_curve_opts(cls, true);

  auto* lat = app.add_subcommand("lattice", "named lattice data");
  lat->add_option("--name", name, "A, D, E6, E7, E8, U, Nikulin, Kummer, "
                                  "Lambda166")
      ->required();
  lat->add_option("--n", latn, "rank parameter for A and D");
  lat->add_flag("--roots", want_roots, "count the (-2)- or 2-vectors");
  lat->add_option("--out", out, "write the JSON report to a file");

  auto* ver = app.add_subcommand("verify", "run the verification suite");
  ver->add_option("--level", level, "fast, full or kummer")
      ->check(CLI::IsMember({"fast", "full", "kummer"}));
  ver->add_option("--precision", precision, "working digits (>= 30)")
      ->check(CLI::Range(30u, 100000u));
  ver->add_option("--seed", seed, "sampling seed");
  ver->add_option("--out", out, "write the JSON report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*inv) {
      GenusTwoCurve c = input_curve(in);
      IgusaClebsch ic = ic_from_coeffs(c.f);
      json rep = {{"command", "invariants"},
                  {"sextic", upoly_json(c.f)},
                  {"exact", true},
                  {"invariants", ic_json(ic)}};
      if (c.roots) {
        std::array<Rational, 6> r;
        std::copy(c.roots->begin(), c.roots->end(), r.begin());
        IgusaClebsch byroots = ic_from_roots(c.f.lc(), r);
        rep["roots_agree"] = byroots.I2 == ic.I2 && byroots.I4 == ic.I4 &&
                             byroots.I6 == ic.I6 && byroots.I10 == ic.I10;
      }
      return finish(rep, out, true);
    }
    if (*kum) {
      GenusTwoCurve c = input_curve(in);
      KummerQuartic kq = build_kummer(c);
      auto [nodes, tropes] = nodes_and_tropes(c);
      KummerReport kr = verify_configuration(kq, nodes, tropes);
      json rep = {{"command", "kummer"},
                  {"exact", true},
                  {"quartic",
                   {{"K2", kq.K2.str()},
                    {"K1", kq.K1.str()},
                    {"K0", kq.K0.str()}}},
                  {"trope_product_scalar", rat_str(kr.trope_product_scalar)},
                  {"checks", checks_json(kr.checks)},
                  {"incidence", kr.incidence}};
      return finish(rep, out, kr.ok());
    }
    if (*bld || *cls) {
      IgusaClebsch ic = input_ic(in);
      SurfacePair pair = surfaces_from_ic(ic);
      auto fx = classify_all_fibers(pair.X);
      auto fy = classify_all_fibers(pair.Y);
      json rep = {{"command", *bld ? "build" : "classify"},
                  {"exact", true},
                  {"invariants", ic_json(ic)}};
      if (*bld) {
        rep["parameters"] = {{"a", rat_str(pair.params.a)},
                             {"a'", rat_str(pair.params.ap)},
                             {"b", rat_str(pair.params.b)},
                             {"b'", rat_str(pair.params.bp)},
                             {"b''", rat_str(pair.params.bpp)}};
        rep["X"] = {{"a2", upoly_json(pair.X.a2)},
                    {"a4", upoly_json(pair.X.a4)},
                    {"a6", upoly_json(pair.X.a6)}};
        rep["Y"] = {{"a2", upoly_json(pair.Y.a2)},
                    {"a4", upoly_json(pair.Y.a4)},
                    {"a6", upoly_json(pair.Y.a6)}};
        rep["g"] = upoly_json(sextic_correspondence(ic));
        rep["quotient_identity"] = verify_quotient_identity(pair);
      }
      auto [rhoX, discX] = shioda_tate(fx, 0);
      auto [rhoY, discY] = shioda_tate(fy, 0);
      rep["X_fibers"] = fibers_json(fx);
      rep["X_euler"] = euler_total(fx);
      rep["X_shioda_tate"] = {{"rho", rhoX},
                              {"trivial_disc", discX.get_str()}};
      rep["Y_fibers"] = fibers_json(fy);
      rep["Y_euler"] = euler_total(fy);
      rep["Y_shioda_tate"] = {{"rho", rhoY},
                              {"trivial_disc", discY.get_str()},
                              {"torsion_note",
                               "2-torsion section: divide by 2^2 for the "
                               "Neron-Severi discriminant"}};
      return finish(rep, out, true);
    }
    if (*lat) {
      GramLattice l = named_lattice(name, latn);
      auto [d, sig] = disc_and_signature(l);
      auto [p, n, z] = sig;
      json rep = {{"command", "lattice"},
                  {"name", name},
                  {"exact", true},
                  {"rank", l.rank()},
                  {"disc", rat_str(d)},
                  {"signature", {p, n, z}}};
      if (want_roots) rep["roots"] = count_roots(l);
      return finish(rep, out, true);
    }
    if (*ver) {
      bool ok = false;
      json sections = verify_report(level, precision, seed, &ok);
      json rep = {{"command", "verify"},
                  {"level", level},
                  {"precision", precision},
                  {"seed", seed},
                  {"passed", ok},
                  {"sections", sections}};
      return finish(rep, out, ok);
    }
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
