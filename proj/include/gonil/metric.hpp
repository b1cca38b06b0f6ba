#pragma once

#include "gonil/lie_algebra.hpp"

namespace gonil {

/// Symmetric bilinear form given by its Gram matrix.
class SymForm {
 public:
  SymForm() = default;
  /// Throws InputError unless gram is square and symmetric.
  explicit SymForm(MatrixQ gram);

  std::size_t dim() const { return gram_.rows(); }
  const MatrixQ& gram() const { return gram_; }

  Rational inner(const VectorQ& x, const VectorQ& y) const;
  SignatureTriple signature() const { return symmetric_signature(gram_); }
  bool is_nondegenerate() const { return signature().r == 0; }

  friend bool operator==(const SymForm&, const SymForm&) = default;

 private:
  MatrixQ gram_;
};

/// A nilpotent Lie algebra with a nondegenerate symmetric form.
class MetricLieAlgebra {
 public:
  MetricLieAlgebra() = default;
  /// Throws InputError on dimension mismatch, degenerate form or a
  /// non-nilpotent algebra.
  MetricLieAlgebra(LieAlgebra algebra, SymForm form);

  std::size_t dim() const { return algebra_.dim(); }
  const LieAlgebra& algebra() const { return algebra_; }
  const SymForm& form() const { return form_; }
  Rational inner(const VectorQ& x, const VectorQ& y) const { return form_.inner(x, y); }

  friend bool operator==(const MetricLieAlgebra&, const MetricLieAlgebra&) = default;

 private:
  LieAlgebra algebra_;
  SymForm form_;
};

/// {x : <x, v> = 0 for all v in V}.
Subspace orth_complement(const SymForm& form, const Subspace& v);
inline Subspace orth_complement(const MetricLieAlgebra& m, const Subspace& v) {
  return orth_complement(m.form(), v);
}

/// Gram matrix of the form in V's canonical basis.
SymForm restrict_form(const SymForm& form, const Subspace& v);

/// Kernel of the Gram matrix.
Subspace radical(const SymForm& form);

/// Radical of the restriction to V, in ambient coordinates.
Subspace restricted_radical(const SymForm& form, const Subspace& v);

/// Induced form on m1/eg, realized on the canonical complement
/// m1 ∩ {x : x_p = 0 for every pivot column p of eg}.
struct QuotientForm {
  SymForm form;
  MatrixQ complement;  // rows: basis of the complement, ambient coordinates
  MatrixQ projection;  // dim(complement) x n; maps x in m1 to complement coordinates
};

/// Throws InputError listing every failed precondition: eg ⊆ m1,
/// <eg, m1> = 0, dim m1 + dim eg = n.
QuotientForm quotient_form(const SymForm& form, const Subspace& m1, const Subspace& eg);

}  // namespace gonil
