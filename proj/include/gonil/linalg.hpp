#pragma once

#include "gonil/matrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace gonil {

/// Reduced row-echelon form: only the nonzero rows are kept, pivots[i] is the
/// leading column of row i.
struct Echelon {
  MatrixQ reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination with the first-nonzero pivot rule.  The elimination
/// sweep below each pivot is OpenMP-parallel over rows for large inputs.
Echelon rref(const MatrixQ& a);

/// Single-threaded reference for rref(); identical output.
Echelon rref_reference(const MatrixQ& a);

std::size_t rank(const MatrixQ& a);

/// Canonical (reduced-echelon) basis of {x : A x = 0}, one basis vector per row.
MatrixQ kernel(const MatrixQ& a);

struct LinearSolution {
  VectorQ x;          // particular solution with every free variable set to 0
  MatrixQ kernel;     // canonical basis of ker(A), one vector per row
};

/// Solves A x = b exactly.  Returns std::nullopt when the system is
/// inconsistent.  Throws std::invalid_argument when A.rows() != b.size().
std::optional<LinearSolution> solve_linear(const MatrixQ& a, const VectorQ& b);

/// Counts of positive, negative and radical directions of a symmetric form.
struct SignatureTriple {
  std::size_t p = 0;
  std::size_t q = 0;
  std::size_t r = 0;

  std::size_t dim() const { return p + q + r; }
  friend bool operator==(const SignatureTriple&, const SignatureTriple&) = default;
};

std::string to_string(const SignatureTriple& s);

/// Result of Lagrange's congruence diagonalization: basis * G * basis^T is
/// diagonal with the given entries.  hyperbolic_pair holds the first pair of
/// null basis vectors (u, w) with <u,w> != 0 met during elimination, if any.
struct CongruenceDiagonalization {
  MatrixQ basis;
  VectorQ diagonal;
  std::optional<std::pair<VectorQ, VectorQ>> hyperbolic_pair;
};

CongruenceDiagonalization congruence_diagonalize(const MatrixQ& gram);

/// Sylvester signature via congruence_diagonalize.  Throws
/// std::invalid_argument on non-square or non-symmetric input.
SignatureTriple symmetric_signature(const MatrixQ& gram);

}  // namespace gonil
