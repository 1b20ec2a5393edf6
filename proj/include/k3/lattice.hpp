#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "k3/linalg.hpp"
#include "k3/report.hpp"

namespace k3 {

struct GramLattice {
  QMat gram;
  std::vector<std::string> labels;
  bool even = true;

  int rank() const { return static_cast<int>(gram.size()); }
};

// Names: "A" (n >= 1), "D" (n >= 4), "E6", "E7", "E8", "U", "Nikulin",
// "Kummer", "Lambda166". The parameter n is used by A and D only.
GramLattice named_lattice(const std::string& name, int n = 0);

GramLattice scale_lattice(const GramLattice& l, const Rational& alpha);
GramLattice direct_sum(const std::vector<GramLattice>& parts);
GramLattice scale_and_sum(const std::vector<GramLattice>& parts,
                          const std::vector<Rational>& scalars);

// (|det|, (positive, negative, zero)).
std::pair<Rational, std::tuple<int, int, int>> disc_and_signature(
    const GramLattice& l);

// Number of vectors of norm 2 (positive definite) or -2 (negative
// definite); throws on indefinite or degenerate input.
long count_roots(const GramLattice& l);

struct OverlatticeResult {
  GramLattice lattice;
  QMat basis;     // rows: new basis in old coordinates
  Integer index;  // index of the base lattice in the overlattice
};

// Extend the base by rational glue vectors (old coordinates); pairings
// with the base and among the generators must be integral (and norms even
// when the base is flagged even).
OverlatticeResult overlattice(const GramLattice& base,
                              const std::vector<QVec>& generators);

// Membership of a rational vector (old coordinates) in the row lattice of
// an overlattice basis.
bool in_overlattice(const QMat& basis, const QVec& v);

// Divisor classes on the Kummer surface in the frame L, E0, E_ij (rank 17,
// diagonal form diag(4, -2, ..., -2)), with the checks described by the
// fibration diagram: D9 chain adjacency, section pairings, e_i + f_i = F,
// the E8 copy, and the orthogonal octet.
struct NarukiClasses {
  GramLattice frame;                   // diagonal ambient form
  QMat lambda_basis;                   // basis of Lambda(16,6) in the frame
  std::map<std::string, QVec> classes; // Q1..Q24, F, and named classes
  std::vector<CheckResult> checks;
};

NarukiClasses naruki_classes();

}  // namespace k3
