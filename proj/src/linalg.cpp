#include "gonil/linalg.hpp"

#include <stdexcept>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gonil {

namespace {

// Below this many entries the thread start-up cost dominates.
constexpr std::size_t kParallelThreshold = 2048;

void eliminate_column(std::vector<VectorQ>& rows, std::size_t pivot_row,
                      const std::vector<std::size_t>& support, std::size_t col,
                      bool parallel) {
  const VectorQ& prow = rows[pivot_row];
  const auto n = static_cast<std::ptrdiff_t>(rows.size());
  auto sweep = [&](std::ptrdiff_t r) {
    if (static_cast<std::size_t>(r) == pivot_row) return;
    VectorQ& row = rows[static_cast<std::size_t>(r)];
    if (sgn(row[col]) == 0) return;
    const Rational factor = row[col];
    for (std::size_t j : support) row[j] -= factor * prow[j];
  };
#ifdef _OPENMP
  if (parallel && !omp_in_parallel()) {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t r = 0; r < n; ++r) sweep(r);
    return;
  }
#else
  (void)parallel;
#endif
  for (std::ptrdiff_t r = 0; r < n; ++r) sweep(r);
}

Echelon gauss_jordan(const MatrixQ& a, bool parallel) {
  std::vector<VectorQ> rows = a.row_list();
  const std::size_t ncols = a.cols();
  const bool big = a.rows() * a.cols() >= kParallelThreshold;
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;

  for (std::size_t c = 0; c < ncols && prow < rows.size(); ++c) {
    std::size_t sel = prow;
    while (sel < rows.size() && sgn(rows[sel][c]) == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[prow], rows[sel]);

    VectorQ& pr = rows[prow];
    const Rational inv = 1 / pr[c];
    std::vector<std::size_t> support;
    for (std::size_t j = c; j < ncols; ++j) {
      if (sgn(pr[j]) == 0) continue;
      pr[j] *= inv;
      support.push_back(j);
    }
    eliminate_column(rows, prow, support, c, parallel && big);
    pivots.push_back(c);
    ++prow;
  }

  rows.resize(prow);
  return Echelon{MatrixQ::from_rows(rows, ncols), std::move(pivots)};
}

MatrixQ kernel_from_echelon(const Echelon& e, std::size_t ncols) {
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;

  MatrixQ basis(0, ncols);
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    VectorQ v(ncols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    basis.append_row(v);
  }
  if (basis.rows() == 0) return basis;
  return rref(basis).reduced;
}

}  // namespace

Echelon rref(const MatrixQ& a) { return gauss_jordan(a, true); }

Echelon rref_reference(const MatrixQ& a) { return gauss_jordan(a, false); }

std::size_t rank(const MatrixQ& a) { return rref(a).rank(); }

MatrixQ kernel(const MatrixQ& a) { return kernel_from_echelon(rref(a), a.cols()); }

std::optional<LinearSolution> solve_linear(const MatrixQ& a, const VectorQ& b) {
  if (a.rows() != b.size())
    throw std::invalid_argument("solve_linear: dimension mismatch (A has " +
                                std::to_string(a.rows()) + " rows, b has " +
                                std::to_string(b.size()) + ")");
  const std::size_t n = a.cols();
  MatrixQ aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  Echelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;

  LinearSolution sol;
  sol.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) sol.x[e.pivots[i]] = e.reduced(i, n);

  // The left block of e is the echelon form of A itself.
  Echelon left;
  left.pivots = e.pivots;
  left.reduced = MatrixQ(e.reduced.rows(), n);
  for (std::size_t r = 0; r < e.reduced.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c) left.reduced(r, c) = e.reduced(r, c);
  sol.kernel = kernel_from_echelon(left, n);
  return sol;
}

std::string to_string(const SignatureTriple& s) {
  return "(" + std::to_string(s.p) + "," + std::to_string(s.q) + "," + std::to_string(s.r) +
         ")";
}

CongruenceDiagonalization congruence_diagonalize(const MatrixQ& gram) {
  if (gram.rows() != gram.cols())
    throw std::invalid_argument("symmetric form must be square");
  if (!gram.is_symmetric()) throw std::invalid_argument("form is not symmetric");

  const std::size_t n = gram.rows();
  MatrixQ w = gram;
  MatrixQ p = MatrixQ::identity(n);
  CongruenceDiagonalization out;

  auto swap_basis = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(w(i, c), w(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(w(r, i), w(r, j));
    for (std::size_t c = 0; c < n; ++c) std::swap(p(i, c), p(j, c));
  };
  // e_i <- e_i + s * e_j
  auto add_basis = [&](std::size_t i, std::size_t j, const Rational& s) {
    for (std::size_t c = 0; c < n; ++c) w(i, c) += s * w(j, c);
    for (std::size_t r = 0; r < n; ++r) w(r, i) += s * w(r, j);
    for (std::size_t c = 0; c < n; ++c) p(i, c) += s * p(j, c);
  };

  std::size_t k = 0;
  while (k < n) {
    std::size_t piv = k;
    while (piv < n && sgn(w(piv, piv)) == 0) ++piv;
    if (piv == n) {
      bool found = false;
      for (std::size_t i = k; i < n && !found; ++i)
        for (std::size_t j = i + 1; j < n && !found; ++j)
          if (sgn(w(i, j)) != 0) {
            if (!out.hyperbolic_pair) out.hyperbolic_pair = std::make_pair(p.row(i), p.row(j));
            add_basis(i, j, Rational(1));
            piv = i;
            found = true;
          }
      if (!found) break;
    }
    swap_basis(k, piv);
    for (std::size_t j = k + 1; j < n; ++j) {
      if (sgn(w(j, k)) == 0) continue;
      add_basis(j, k, -w(j, k) / w(k, k));
    }
    ++k;
  }

  out.diagonal.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) out.diagonal[i] = w(i, i);
  out.basis = std::move(p);
  return out;
}

SignatureTriple symmetric_signature(const MatrixQ& gram) {
  const auto d = congruence_diagonalize(gram);
  SignatureTriple s;
  for (const auto& x : d.diagonal) {
    if (sgn(x) > 0)
      ++s.p;
    else if (sgn(x) < 0)
      ++s.q;
    else
      ++s.r;
  }
  return s;
}

}  // namespace gonil
