#include "gonil/catalog.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace gonil;

namespace {

// Matrix of D -> (D[e_i,e_j] - [D e_i,e_j] - [e_i,D e_j])_{i<j}, built by
// evaluating on every elementary matrix.
MatrixQ brute_derivation_map(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<VectorQ> columns;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      MatrixQ d(n, n);
      d(r, c) = 1;
      VectorQ col;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          const VectorQ lhs = d * L.bracket_basis(i, j);
          const VectorQ a = L.bracket(d.col(i), unit_vector(n, j));
          const VectorQ b = L.bracket(unit_vector(n, i), d.col(j));
          for (std::size_t k = 0; k < n; ++k) col.push_back(lhs[k] - a[k] - b[k]);
        }
      columns.push_back(col);
    }
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  MatrixQ out(rows, n * n);
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) out(r, c) = columns[c][r];
  return out;
}

Subspace brute_derivations(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  const MatrixQ m = brute_derivation_map(L);
  if (m.rows() == 0) return Subspace::full(n * n);
  return Subspace::row_space(kernel(m));
}

// {X : [X, V1] ⊆ V2}
Subspace transporter(const LieAlgebra& L, const Subspace& v1, const Subspace& v2) {
  const std::size_t n = L.dim();
  const MatrixQ ann = v2.annihilator();
  MatrixQ eqs(0, n);
  for (const auto& v : v1.vectors()) {
    const MatrixQ rows = ann * L.ad(v);  // ad(v) X = [v, X] = -[X, v]
    for (std::size_t r = 0; r < rows.rows(); ++r) eqs.append_row(rows.row(r));
  }
  if (eqs.rows() == 0) return Subspace::full(n);
  return Subspace::row_space(kernel(eqs));
}

}  // namespace

TEST_CASE("derivation spaces of small algebras") {
  CHECK(derivation_space(LieAlgebra::abelian(3)).dim() == 9);
  const LieAlgebra h3 = build_example("heis3").algebra.algebra();
  CHECK(derivation_space(h3).dim() == 6);
  CHECK(derivation_space(h3).coefficients() == brute_derivations(h3));
}

TEST_CASE("derivation equations match the brute-force map on every catalog example") {
  for (const auto& name : catalog_names()) {
    const LieAlgebra L = build_example(name).algebra.algebra();
    CHECK(derivation_space(L).coefficients() == brute_derivations(L));
    CHECK(derivation_equations(L) == derivation_equations_reference(L));
  }
}

TEST_CASE("skew and isotropy spaces") {
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(skew_space(SymForm(MatrixQ::identity(n))).dim() == n * (n - 1) / 2);
    const MetricLieAlgebra ab(LieAlgebra::abelian(n), SymForm(MatrixQ::identity(n)));
    CHECK(isotropy_algebra(ab).dim() == n * (n - 1) / 2);
  }
}

TEST_CASE("isotropy algebra properties on the catalog") {
  for (const auto& name : catalog_names()) {
    const MetricLieAlgebra m = build_example(name).algebra;
    const OperatorSpace h = isotropy_algebra(m);
    CHECK(h.is_commutator_closed());
    for (const auto& d : h.basis()) {
      CHECK((d.transpose() * m.form().gram() + m.form().gram() * d).is_zero());
      CHECK(is_derivation(m.algebra(), d));
    }
    for (const auto& s : lower_central_series(m.algebra())) CHECK(is_invariant(h, s));
    CHECK(is_adh_invariant(m, derived_algebra(m.algebra())));
  }
}

TEST_CASE("the 12-dimensional example: isotropy map and invariant subspaces") {
  const MetricLieAlgebra m = build_example("paper_2_3").algebra;
  const OperatorSpace h = isotropy_algebra(m);
  for (const auto& a : paper_isotropy_table()) CHECK(h.contains(a));
  const Subspace v = orth_complement(m, derived_algebra(m.algebra()));
  CHECK(is_adh_invariant(m, v));
  CHECK_FALSE(is_adh_invariant(m, Subspace::span({unit_vector(12, 0)}, 12)));
}

TEST_CASE("invariance calculus on random invariant subspaces") {
  std::mt19937_64 rng(4);
  for (const auto& name : {"paper_2_3", "de5", "de7_lorentz"}) {
    const MetricLieAlgebra m = build_example(name).algebra;
    const LieAlgebra& L = m.algebra();
    const OperatorSpace h = isotropy_algebra(m);
    std::vector<Subspace> pool = lower_central_series(L);
    pool.push_back(center(L));
    pool.push_back(orth_complement(m, derived_algebra(L)));
    pool.push_back(centralizer(L, derived_algebra(L)));
    for (const auto& s : pool) REQUIRE(is_invariant(h, s));
    for (int trial = 0; trial < 25; ++trial) {
      const Subspace& v1 = pool[oracle::draw(rng, 0, pool.size() - 1)];
      const Subspace& v2 = pool[oracle::draw(rng, 0, pool.size() - 1)];
      const std::vector<Subspace> derived{orth_complement(m, v1), v1 + v2, v1.intersect(v2),
                                          bracket_subspaces(L, v1, v2), transporter(L, v1, v2)};
      for (const auto& s : derived) CHECK(is_invariant(h, s));
      pool.push_back(derived[oracle::draw(rng, 0, derived.size() - 1)]);
    }
  }
}

TEST_CASE("operator space membership and coordinates") {
  const OperatorSpace s = skew_space(SymForm(MatrixQ::identity(3)));
  const MatrixQ x{{0, 2, -1}, {-2, 0, 3}, {1, -3, 0}};
  REQUIRE(s.contains(x));
  CHECK(s.combine(s.coordinates(x)) == x);
  CHECK_FALSE(s.contains(MatrixQ::identity(3)));
}
