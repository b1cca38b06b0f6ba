#pragma once

#include "gonil/linalg.hpp"

#include <vector>

namespace gonil {

/// A linear subspace of Q^n, stored as the nonzero rows of its reduced
/// row-echelon basis.  Two subspaces are equal iff their representations are.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim);

  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full(std::size_t ambient_dim);
  static Subspace span(const std::vector<VectorQ>& vectors, std::size_t ambient_dim);
  static Subspace row_space(const MatrixQ& rows);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const MatrixQ& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  VectorQ vector(std::size_t i) const { return basis_.row(i); }
  std::vector<VectorQ> vectors() const { return basis_.row_list(); }

  bool contains(const VectorQ& v) const;
  bool contains(const Subspace& other) const;

  /// Coefficients of v in the canonical basis; v must lie in the subspace.
  VectorQ coordinates(const VectorQ& v) const;

  /// Rows spanning the linear equations cutting out this subspace.
  MatrixQ annihilator() const;

  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  MatrixQ basis_;
  std::vector<std::size_t> pivots_;
};

std::string to_string(const Subspace& s);

}  // namespace gonil
