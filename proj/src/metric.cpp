#include "gonil/metric.hpp"

#include "gonil/errors.hpp"

#include <string>

namespace gonil {

SymForm::SymForm(MatrixQ gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) throw InputError("form: Gram matrix is not square");
  if (!gram_.is_symmetric()) throw InputError("form: Gram matrix is not symmetric");
}

Rational SymForm::inner(const VectorQ& x, const VectorQ& y) const {
  return dot(x, gram_ * y);
}

MetricLieAlgebra::MetricLieAlgebra(LieAlgebra algebra, SymForm form)
    : algebra_(std::move(algebra)), form_(std::move(form)) {
  if (algebra_.dim() != form_.dim())
    throw InputError("metric Lie algebra: algebra has dimension " +
                     std::to_string(algebra_.dim()) + " but the form has dimension " +
                     std::to_string(form_.dim()));
  const auto sig = form_.signature();
  if (sig.r != 0)
    throw InputError("metric Lie algebra: form is degenerate, signature " + to_string(sig));
  if (!is_nilpotent(algebra_)) throw InputError("metric Lie algebra: algebra is not nilpotent");
}

Subspace orth_complement(const SymForm& form, const Subspace& v) {
  if (v.ambient_dim() != form.dim()) throw InputError("orth_complement: dimension mismatch");
  if (v.dim() == 0) return Subspace::full(form.dim());
  return Subspace::row_space(kernel(v.basis() * form.gram()));
}

SymForm restrict_form(const SymForm& form, const Subspace& v) {
  if (v.ambient_dim() != form.dim()) throw InputError("restrict_form: dimension mismatch");
  const MatrixQ& b = v.basis();
  return SymForm(b * form.gram() * b.transpose());
}

Subspace radical(const SymForm& form) { return Subspace::row_space(kernel(form.gram())); }

Subspace restricted_radical(const SymForm& form, const Subspace& v) {
  const SymForm r = restrict_form(form, v);
  const MatrixQ coords = kernel(r.gram());
  if (coords.rows() == 0) return Subspace(form.dim());
  return Subspace::row_space(coords * v.basis());
}

QuotientForm quotient_form(const SymForm& form, const Subspace& m1, const Subspace& eg) {
  const std::size_t n = form.dim();
  if (m1.ambient_dim() != n || eg.ambient_dim() != n)
    throw InputError("quotient_form: dimension mismatch");

  std::string problems;
  if (!m1.contains(eg)) problems += " eg is not contained in m1;";
  if (!(eg.basis() * form.gram() * m1.basis().transpose()).is_zero())
    problems += " <eg, m1> != 0;";
  if (m1.dim() + eg.dim() != n)
    problems += " dim m1 + dim eg = " + std::to_string(m1.dim() + eg.dim()) +
                " != " + std::to_string(n) + ";";
  if (!problems.empty()) throw InputError("quotient_form preconditions failed:" + problems);

  // x -> x - sum_j x[p_j] g_j clears the eg pivot columns.
  MatrixQ clear = MatrixQ::identity(n);
  for (std::size_t j = 0; j < eg.dim(); ++j) {
    const std::size_t p = eg.pivots()[j];
    for (std::size_t r = 0; r < n; ++r) clear(r, p) -= eg.basis()(j, r);
  }
  std::vector<VectorQ> reduced;
  for (std::size_t i = 0; i < m1.dim(); ++i) reduced.push_back(clear * m1.vector(i));
  const Subspace comp = Subspace::span(reduced, n);

  MatrixQ projection(comp.dim(), n);
  for (std::size_t i = 0; i < comp.dim(); ++i)
    for (std::size_t c = 0; c < n; ++c) projection(i, c) = clear(comp.pivots()[i], c);

  const MatrixQ& cb = comp.basis();
  return QuotientForm{SymForm(cb * form.gram() * cb.transpose()), cb, projection};
}

}  // namespace gonil
