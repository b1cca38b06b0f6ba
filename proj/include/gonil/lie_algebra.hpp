#pragma once

#include "gonil/subspace.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace gonil {

using SparseVector = std::map<std::size_t, Rational>;

/// Structure constants [e_i, e_j] = sum_k c^k_ij e_k, stored for i < j only.
/// No Jacobi guarantee; this is the raw candidate a LieAlgebra is built from.
class BracketTable {
 public:
  BracketTable() = default;
  explicit BracketTable(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }

  /// Sets [e_i, e_j]; i > j stores the negation under (j, i).  Zero
  /// coefficients are dropped and an all-zero value erases the entry.
  void set(std::size_t i, std::size_t j, const SparseVector& value);
  void set(std::size_t i, std::size_t j, std::size_t k, const Rational& coeff = 1);
  void erase(std::size_t i, std::size_t j);

  /// [e_i, e_j] as a dense vector (antisymmetry applied).
  VectorQ bracket(std::size_t i, std::size_t j) const;

  const std::map<std::pair<std::size_t, std::size_t>, SparseVector>& entries() const {
    return entries_;
  }

  friend bool operator==(const BracketTable&, const BracketTable&) = default;

 private:
  std::size_t dim_ = 0;
  std::map<std::pair<std::size_t, std::size_t>, SparseVector> entries_;
};

struct JacobiViolation {
  std::size_t i, j, k;
  VectorQ defect;  // [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]
};

/// Every triple i < j < k whose cyclic Jacobi sum is nonzero.
std::vector<JacobiViolation> jacobi_defect(const BracketTable& table);

/// A Lie algebra over Q given by structure constants; Jacobi is checked on
/// construction.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// Throws InputError if the table violates the Jacobi identity.
  explicit LieAlgebra(BracketTable table);

  static LieAlgebra abelian(std::size_t dim) { return LieAlgebra(BracketTable(dim)); }

  std::size_t dim() const { return table_.dim(); }
  const BracketTable& table() const { return table_; }

  const VectorQ& bracket_basis(std::size_t i, std::size_t j) const {
    return dense_[i * dim() + j];
  }
  VectorQ bracket(const VectorQ& x, const VectorQ& y) const;

  /// Matrix of ad(x): column c holds [x, e_c].
  MatrixQ ad(const VectorQ& x) const;
  MatrixQ ad_basis(std::size_t i) const;

  bool is_abelian() const { return table_.entries().empty(); }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.table_ == b.table_;
  }

 private:
  BracketTable table_;
  std::vector<VectorQ> dense_;
};

/// [V, W] = span of all brackets of basis vectors.
Subspace bracket_subspaces(const LieAlgebra& L, const Subspace& v, const Subspace& w);

/// n, [n,n], [n,[n,n]], ... until the chain stops shrinking.  The last term
/// is 0 iff L is nilpotent.
std::vector<Subspace> lower_central_series(const LieAlgebra& L);

/// n, [n,n], [[n,n],[n,n]], ... until the chain stops shrinking.
std::vector<Subspace> derived_series(const LieAlgebra& L);

/// Smallest s with n^s = 0 where n^1 = [n,n]; 1 for abelian algebras
/// (including dimension 0).  Throws InputError when L is not nilpotent.
std::size_t nilpotency_step(const LieAlgebra& L);

bool is_nilpotent(const LieAlgebra& L);

Subspace derived_algebra(const LieAlgebra& L);

Subspace centralizer(const LieAlgebra& L, const Subspace& v);
Subspace center(const LieAlgebra& L);
bool is_ideal(const LieAlgebra& L, const Subspace& v);

/// Flag F_1 < F_2 < ... < F_n with every operator mapping F_i into F_{i-1}
/// (F_0 = 0), and the basis listing the chosen vectors from the last one back
/// to the first, so every operator is strictly lower triangular in it.
struct EngelFlag {
  std::vector<Subspace> flag;
  MatrixQ basis;  // rows
};

/// Simultaneous strict triangularization of a family of nilpotent operators
/// by iterated common-kernel extraction.  Before the flag is built the span
/// of ops is closed under commutators; closure_depth bounds the number of
/// rounds (default: dim^2).  Throws VerificationError("no common kernel
/// vector") when an intermediate common kernel is trivial.
EngelFlag engel_flag(const std::vector<MatrixQ>& ops,
                     std::optional<std::size_t> closure_depth = std::nullopt);

}  // namespace gonil
