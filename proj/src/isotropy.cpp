#include "gonil/isotropy.hpp"

#include "gonil/errors.hpp"

#include <stdexcept>

namespace gonil {

namespace {

std::vector<MatrixQ> unpack(std::size_t n, const Subspace& coeffs) {
  std::vector<MatrixQ> out;
  for (std::size_t i = 0; i < coeffs.dim(); ++i) out.push_back(unvectorize(coeffs.vector(i), n, n));
  return out;
}

// Equations contributed by the pair (i, j), one per output component k.
std::vector<VectorQ> derivation_block(const LieAlgebra& L, std::size_t i, std::size_t j) {
  const std::size_t n = L.dim();
  auto u = [n](std::size_t r, std::size_t c) { return r * n + c; };
  const VectorQ& cij = L.bracket_basis(i, j);
  std::vector<VectorQ> rows;
  for (std::size_t k = 0; k < n; ++k) {
    VectorQ row(n * n, Rational(0));
    for (std::size_t m = 0; m < n; ++m) {
      if (sgn(cij[m]) != 0) row[u(k, m)] += cij[m];
      const Rational& cmj = L.bracket_basis(m, j)[k];
      if (sgn(cmj) != 0) row[u(m, i)] -= cmj;
      const Rational& cim = L.bracket_basis(i, m)[k];
      if (sgn(cim) != 0) row[u(m, j)] -= cim;
    }
    if (!is_zero(row)) rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::pair<std::size_t, std::size_t>> index_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return pairs;
}

MatrixQ merge_blocks(std::size_t width, const std::vector<std::vector<VectorQ>>& blocks) {
  MatrixQ out(0, width);
  for (const auto& block : blocks)
    for (const auto& row : block) out.append_row(row);
  return out;
}

MatrixQ stack(const MatrixQ& a, const MatrixQ& b) {
  MatrixQ out = a;
  for (std::size_t r = 0; r < b.rows(); ++r) out.append_row(b.row(r));
  return out;
}

OperatorSpace solve_operator_space(std::size_t n, const MatrixQ& eqs) {
  if (eqs.rows() == 0) return OperatorSpace(n, Subspace::full(n * n));
  return OperatorSpace(n, Subspace::row_space(kernel(eqs)));
}

}  // namespace

OperatorSpace::OperatorSpace(std::size_t ambient_dim, Subspace coefficients)
    : n_(ambient_dim), coeffs_(std::move(coefficients)) {
  if (coeffs_.ambient_dim() != n_ * n_) throw InputError("OperatorSpace: coefficient size mismatch");
  basis_ = unpack(n_, coeffs_);
}

OperatorSpace OperatorSpace::span(std::size_t ambient_dim, const std::vector<MatrixQ>& ops) {
  std::vector<VectorQ> vs;
  for (const auto& op : ops) {
    if (op.rows() != ambient_dim || op.cols() != ambient_dim)
      throw InputError("OperatorSpace: operator shape mismatch");
    vs.push_back(vectorize(op));
  }
  return OperatorSpace(ambient_dim, Subspace::span(vs, ambient_dim * ambient_dim));
}

bool OperatorSpace::contains(const MatrixQ& op) const {
  if (op.rows() != n_ || op.cols() != n_) throw InputError("OperatorSpace: operator shape mismatch");
  return coeffs_.contains(vectorize(op));
}

bool OperatorSpace::contains(const OperatorSpace& other) const {
  return coeffs_.contains(other.coeffs_);
}

VectorQ OperatorSpace::coordinates(const MatrixQ& op) const {
  return coeffs_.coordinates(vectorize(op));
}

MatrixQ OperatorSpace::combine(const VectorQ& c) const {
  if (c.size() != dim()) throw InputError("OperatorSpace: coefficient count mismatch");
  MatrixQ out(n_, n_);
  for (std::size_t s = 0; s < c.size(); ++s)
    if (sgn(c[s]) != 0) out = out + c[s] * basis_[s];
  return out;
}

bool OperatorSpace::is_commutator_closed() const {
  for (std::size_t a = 0; a < basis_.size(); ++a)
    for (std::size_t b = a + 1; b < basis_.size(); ++b)
      if (!contains(commutator(basis_[a], basis_[b]))) return false;
  return true;
}

MatrixQ derivation_equations(const LieAlgebra& L) {
  const auto pairs = index_pairs(L.dim());
  std::vector<std::vector<VectorQ>> blocks(pairs.size());
  const auto count = static_cast<std::ptrdiff_t>(pairs.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t p = 0; p < count; ++p) {
    const auto [i, j] = pairs[static_cast<std::size_t>(p)];
    blocks[static_cast<std::size_t>(p)] = derivation_block(L, i, j);
  }
  return merge_blocks(L.dim() * L.dim(), blocks);
}

MatrixQ derivation_equations_reference(const LieAlgebra& L) {
  const auto pairs = index_pairs(L.dim());
  std::vector<std::vector<VectorQ>> blocks;
  for (const auto& [i, j] : pairs) blocks.push_back(derivation_block(L, i, j));
  return merge_blocks(L.dim() * L.dim(), blocks);
}

MatrixQ skew_equations(const SymForm& form) {
  const std::size_t n = form.dim();
  const MatrixQ& g = form.gram();
  MatrixQ out(0, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      // (D^T G + G D)_{ij} = sum_m D(m,i) G(m,j) + sum_m G(i,m) D(m,j)
      VectorQ row(n * n, Rational(0));
      for (std::size_t m = 0; m < n; ++m) {
        row[m * n + i] += g(m, j);
        row[m * n + j] += g(i, m);
      }
      if (!is_zero(row)) out.append_row(row);
    }
  return out;
}

OperatorSpace derivation_space(const LieAlgebra& L) {
  return solve_operator_space(L.dim(), derivation_equations(L));
}

OperatorSpace skew_space(const SymForm& form) {
  return solve_operator_space(form.dim(), skew_equations(form));
}

OperatorSpace isotropy_algebra(const MetricLieAlgebra& m) {
  OperatorSpace h = solve_operator_space(
      m.dim(), stack(derivation_equations(m.algebra()), skew_equations(m.form())));
  if (!h.is_commutator_closed())
    throw std::logic_error("isotropy algebra is not closed under commutators");
  return h;
}

bool is_derivation(const LieAlgebra& L, const MatrixQ& op) {
  const std::size_t n = L.dim();
  if (op.rows() != n || op.cols() != n) return false;
  std::vector<VectorQ> images;
  for (std::size_t c = 0; c < n; ++c) images.push_back(op.col(c));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const VectorQ lhs = op * L.bracket_basis(i, j);
      VectorQ rhs = L.bracket(images[i], unit_vector(n, j));
      const VectorQ t = L.bracket(unit_vector(n, i), images[j]);
      for (std::size_t k = 0; k < n; ++k) rhs[k] += t[k];
      if (lhs != rhs) return false;
    }
  return true;
}

bool is_skew(const SymForm& form, const MatrixQ& op) {
  if (op.rows() != form.dim() || op.cols() != form.dim()) return false;
  const MatrixQ gd = form.gram() * op;
  return (gd + gd.transpose()).is_zero();
}

bool is_invariant(const OperatorSpace& h, const Subspace& v) {
  if (v.ambient_dim() != h.ambient_dim()) throw InputError("is_invariant: dimension mismatch");
  for (const auto& d : h.basis())
    for (std::size_t i = 0; i < v.dim(); ++i)
      if (!v.contains(d * v.vector(i))) return false;
  return true;
}

bool is_adh_invariant(const MetricLieAlgebra& m, const Subspace& v) {
  return is_invariant(isotropy_algebra(m), v);
}

}  // namespace gonil
