#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "k3/rational.hpp"

namespace k3 {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;
using ZMat = std::vector<std::vector<Integer>>;

QMat q_identity(int n);
QMat q_mul(const QMat& a, const QMat& b);
QMat q_transpose(const QMat& a);
QVec q_matvec(const QMat& a, const QVec& v);
Rational q_dot(const QVec& a, const QVec& b, const QMat& gram);

int q_rank(QMat a);
Rational q_det(QMat a);
// Solution of A x = b, nullopt if inconsistent (A need not be square).
std::optional<QVec> q_solve(QMat a, QVec b);
// Basis of the right null space of A.
std::vector<QVec> q_nullspace(QMat a);

// Inertia (positive, negative, zero) of a symmetric rational matrix,
// computed by exact symmetric congruence reduction.
std::tuple<int, int, int> symmetric_signature(QMat g);

// Row-style Hermite normal form of an integer matrix; returns the nonzero
// rows (a basis of the row lattice).
ZMat hnf_row_basis(ZMat m);
Integer z_det(ZMat a);

}  // namespace k3
