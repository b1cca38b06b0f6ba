#include "gonil/catalog.hpp"
#include "gonil/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace gonil;

TEST_CASE("metric Lie algebra validation") {
  CHECK_THROWS_AS(SymForm(MatrixQ{{1, 2}, {0, 1}}), InputError);
  CHECK_THROWS_AS(MetricLieAlgebra(LieAlgebra::abelian(2), SymForm(MatrixQ{{1, 0}, {0, 0}})),
                  InputError);
  CHECK_THROWS_AS(MetricLieAlgebra(LieAlgebra::abelian(3), SymForm(MatrixQ::identity(2))),
                  InputError);
}

TEST_CASE("orthogonal complement") {
  const MetricLieAlgebra m = build_example("paper_2_3").algebra;
  CHECK(orth_complement(m, Subspace::zero(12)) == Subspace::full(12));
  const Subspace nprime = derived_algebra(m.algebra());
  std::vector<VectorQ> fs;
  for (std::size_t i = 0; i < 8; ++i) fs.push_back(unit_vector(12, i));
  CHECK(orth_complement(m, nprime) == Subspace::span(fs, 12));
  CHECK_THROWS_AS(orth_complement(m.form(), Subspace::full(3)), InputError);
}

TEST_CASE("double complement on random nondegenerate forms") {
  std::mt19937_64 rng(8);
  int tested = 0;
  while (tested < 25) {
    const std::size_t n = oracle::draw(rng, 2, 6);
    const MatrixQ g = oracle::random_symmetric(rng, n);
    if (rank(g) != n) continue;
    ++tested;
    const SymForm form(g);
    const std::size_t k = oracle::draw(rng, 0, n);
    const Subspace v = Subspace::row_space(oracle::random_matrix(rng, k, n, 2));
    const Subspace w = orth_complement(form, v);
    CHECK(v.dim() + w.dim() == n);
    CHECK(orth_complement(form, w) == v);
    for (const auto& x : v.vectors())
      for (const auto& y : w.vectors()) CHECK(is_zero(form.inner(x, y)));
  }
}

TEST_CASE("restriction and radical") {
  const MetricLieAlgebra p = build_example("paper_2_3").algebra;
  CHECK(restrict_form(p.form(), derived_algebra(p.algebra())).signature() == SignatureTriple{3, 1, 0});
  const MetricLieAlgebra de5 = build_example("de5").algebra;
  const Subspace d = derived_algebra(de5.algebra());
  // n' = span(e2, e): Gram [[1,0],[0,0]]
  CHECK(restrict_form(de5.form(), d).gram() == MatrixQ{{1, 0}, {0, 0}});
  CHECK(restrict_form(de5.form(), d).signature() == SignatureTriple{1, 0, 1});
  CHECK(restricted_radical(de5.form(), d) == Subspace::span({unit_vector(5, 4)}, 5));
  CHECK(radical(SymForm(MatrixQ(3, 3))).dim() == 3);
}

TEST_CASE("quotient form") {
  const SymForm id(MatrixQ::identity(3));
  const QuotientForm trivial = quotient_form(id, Subspace::full(3), Subspace::zero(3));
  CHECK(trivial.form == id);

  const MetricLieAlgebra de5 = build_example("de5").algebra;
  std::vector<VectorQ> m1v;
  for (std::size_t i = 1; i < 5; ++i) m1v.push_back(unit_vector(5, i));
  const Subspace m1 = Subspace::span(m1v, 5), eg = Subspace::span({unit_vector(5, 4)}, 5);
  const QuotientForm q = quotient_form(de5.form(), m1, eg);
  CHECK(q.form.gram() == MatrixQ::identity(3));
  CHECK(q.complement == MatrixQ{{0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}});

  const Subspace outside = Subspace::span({unit_vector(5, 0)}, 5);
  CHECK_THROWS_AS(quotient_form(de5.form(), m1, outside), InputError);
  try {
    quotient_form(de5.form(), Subspace::span({unit_vector(5, 1)}, 5), outside);
    FAIL("expected an error");
  } catch (const InputError& err) {
    const std::string msg = err.what();
    CHECK(msg.find("not contained") != std::string::npos);
    CHECK(msg.find("dim m1 + dim eg") != std::string::npos);
  }
}

TEST_CASE("quotient form is nondegenerate whenever its preconditions hold") {
  // eg a null line, m1 = eg^⊥, on random hyperbolic-containing forms
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t k = oracle::draw(rng, 1, 4);
    MatrixQ g(k + 2, k + 2);
    g(0, k + 1) = g(k + 1, 0) = 1;
    for (std::size_t i = 1; i <= k; ++i) g(i, i) = oracle::draw(rng, 0, 1) ? 1 : -1;
    const MatrixQ p = oracle::random_invertible(rng, k + 2);
    const SymForm form(p.transpose() * g * p);
    // the null vector e_{k+1} in new coordinates is p^{-1} e_{k+1}
    const auto sol = solve_linear(p, unit_vector(k + 2, k + 1));
    REQUIRE(sol);
    const Subspace eg = Subspace::span({sol->x}, k + 2);
    const Subspace m1 = orth_complement(form, eg);
    const QuotientForm q = quotient_form(form, m1, eg);
    CHECK(q.form.signature().r == 0);
    CHECK(q.form.dim() == k);
  }
}
