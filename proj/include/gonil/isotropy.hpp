#pragma once

#include "gonil/metric.hpp"

#include <vector>

namespace gonil {

/// A linear space of n x n operators, canonicalized as a subspace of the
/// n^2-dimensional space of row-major vectorized matrices.
class OperatorSpace {
 public:
  OperatorSpace() = default;
  OperatorSpace(std::size_t ambient_dim, Subspace coefficients);
  static OperatorSpace span(std::size_t ambient_dim, const std::vector<MatrixQ>& ops);

  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return coeffs_.dim(); }
  const Subspace& coefficients() const { return coeffs_; }
  const std::vector<MatrixQ>& basis() const { return basis_; }

  bool contains(const MatrixQ& op) const;
  bool contains(const OperatorSpace& other) const;
  /// Coordinates of op in basis(); op must lie in the space.
  VectorQ coordinates(const MatrixQ& op) const;
  /// sum_s c_s basis()[s]
  MatrixQ combine(const VectorQ& c) const;

  bool is_commutator_closed() const;

 private:
  std::size_t n_ = 0;
  Subspace coeffs_;
  std::vector<MatrixQ> basis_;
};

/// Linear equations on the n^2 entries of D (unknown D(r,c) at index r*n+c,
/// D e_c = sum_r D(r,c) e_r) expressing D[e_i,e_j] = [De_i,e_j] + [e_i,De_j]
/// for i < j.  Rows are assembled in parallel over the pairs (i, j) and
/// merged in (i, j, k) order; all-zero rows are dropped.
MatrixQ derivation_equations(const LieAlgebra& L);
/// Serial reference for derivation_equations(); identical output.
MatrixQ derivation_equations_reference(const LieAlgebra& L);

/// Equations D^T G + G D = 0 (upper triangle, including the diagonal).
MatrixQ skew_equations(const SymForm& form);

OperatorSpace derivation_space(const LieAlgebra& L);
OperatorSpace skew_space(const SymForm& form);

/// Skew-symmetric derivations: the isotropy algebra of (n, <,>).
OperatorSpace isotropy_algebra(const MetricLieAlgebra& m);

bool is_derivation(const LieAlgebra& L, const MatrixQ& op);
bool is_skew(const SymForm& form, const MatrixQ& op);

/// D V ⊆ V for every basis element D of h.
bool is_invariant(const OperatorSpace& h, const Subspace& v);
bool is_adh_invariant(const MetricLieAlgebra& m, const Subspace& v);

}  // namespace gonil
