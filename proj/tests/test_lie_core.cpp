#include "gonil/catalog.hpp"
#include "gonil/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace gonil;

namespace {

LieAlgebra heis3() {
  BracketTable t(3);
  t.set(0, 1, 2);
  return LieAlgebra(t);
}

LieAlgebra filiform4() {
  BracketTable t(4);
  t.set(0, 1, 2);
  t.set(0, 2, 3);
  return LieAlgebra(t);
}

std::vector<std::size_t> dims(const std::vector<Subspace>& chain) {
  std::vector<std::size_t> out;
  for (const auto& s : chain) out.push_back(s.dim());
  return out;
}

// Operator in the basis given by the rows of b: column j holds the
// coordinates of op b_j.
MatrixQ in_basis(const MatrixQ& op, const MatrixQ& b) {
  const MatrixQ p = b.transpose();
  MatrixQ out(b.rows(), b.rows());
  for (std::size_t j = 0; j < b.rows(); ++j) {
    const auto sol = solve_linear(p, op * b.row(j));
    REQUIRE(sol);
    for (std::size_t i = 0; i < b.rows(); ++i) out(i, j) = sol->x[i];
  }
  return out;
}

bool strictly_lower(const MatrixQ& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      if (!is_zero(a(i, j))) return false;
  return true;
}

}  // namespace

TEST_CASE("Jacobi defect") {
  CHECK(jacobi_defect(BracketTable(5)).empty());
  CHECK(jacobi_defect(build_example("paper_2_3").algebra.algebra().table()).empty());

  BracketTable t(3);
  t.set(0, 1, 0);  // [e1,e2] = e1
  t.set(0, 2, 1);  // [e1,e3] = e2
  t.set(1, 2, 0);  // perturbation [e2,e3] = e1
  const auto v = jacobi_defect(t);
  REQUIRE(v.size() == 1);
  // [e1,[e2,e3]] + [e2,[e3,e1]] + [e3,[e1,e2]] = [e1,e1] + [e2,-e2] + [e3,e1] = -e2
  CHECK(v[0].defect == VectorQ{0, -1, 0});
  CHECK_THROWS_AS(LieAlgebra{t}, InputError);
}

TEST_CASE("bracket table antisymmetry is structural") {
  BracketTable t(3);
  t.set(2, 0, 1, 3);  // [e3,e1] = 3 e2
  CHECK(t.bracket(0, 2) == VectorQ{0, -3, 0});
  CHECK(t.bracket(2, 0) == VectorQ{0, 3, 0});
  CHECK_THROWS_AS(t.set(1, 1, 0), InputError);
  CHECK_THROWS_AS(t.set(0, 3, 0), InputError);
}

TEST_CASE("lower central series and step") {
  CHECK(dims(lower_central_series(LieAlgebra::abelian(4))) == std::vector<std::size_t>{4, 0});
  CHECK(nilpotency_step(LieAlgebra::abelian(4)) == 1);
  CHECK(dims(lower_central_series(heis3())) == std::vector<std::size_t>{3, 1, 0});
  CHECK(nilpotency_step(heis3()) == 2);
  CHECK(nilpotency_step(filiform4()) == 3);
  const LieAlgebra p = build_example("paper_2_3").algebra.algebra();
  CHECK(dims(lower_central_series(p)) == std::vector<std::size_t>{12, 4, 3, 1, 0});
  CHECK(nilpotency_step(p) == 4);
  CHECK(dims(derived_series(p)) == std::vector<std::size_t>{12, 4, 0});

  BracketTable t(2);
  t.set(0, 1, 1);  // [e1,e2] = e2
  const LieAlgebra solvable(t);
  CHECK_FALSE(is_nilpotent(solvable));
  CHECK_THROWS_AS(nilpotency_step(solvable), InputError);
}

TEST_CASE("series terms are ideals") {
  for (const auto& name : {"paper_2_3", "filiform4", "de5", "de7_lorentz"}) {
    const LieAlgebra L = build_example(name).algebra.algebra();
    const Subspace full = Subspace::full(L.dim());
    for (const auto& s : lower_central_series(L)) CHECK(s.contains(bracket_subspaces(L, full, s)));
    for (const auto& s : derived_series(L)) CHECK(is_ideal(L, s));
  }
}

TEST_CASE("center and centralizer") {
  CHECK(center(LieAlgebra::abelian(3)).dim() == 3);
  const LieAlgebra p = build_example("paper_2_3").algebra.algebra();
  const Subspace z = center(p);
  CHECK(z.dim() == 7);
  CHECK(z.contains(unit_vector(12, 11)));
  CHECK(z == centralizer(p, Subspace::full(12)));
  CHECK_THROWS_AS(centralizer(p, Subspace::full(3)), InputError);

  // brute force: x is central iff [x, e_c] = 0 for every c
  for (const auto& x : z.vectors())
    for (std::size_t c = 0; c < 12; ++c) CHECK(is_zero(p.bracket(x, unit_vector(12, c))));
}

TEST_CASE("centralizer is antitone") {
  std::mt19937_64 rng(17);
  const LieAlgebra p = build_example("paper_2_3").algebra.algebra();
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<VectorQ> small, extra;
    for (int i = 0; i < 2; ++i) {
      VectorQ v(12);
      for (auto& x : v) x = oracle::draw(rng, -1, 1);
      small.push_back(v);
    }
    VectorQ w(12);
    for (auto& x : w) x = oracle::draw(rng, -1, 1);
    extra = small;
    extra.push_back(w);
    const Subspace v1 = Subspace::span(small, 12), v2 = Subspace::span(extra, 12);
    CHECK(centralizer(p, v1).contains(centralizer(p, v2)));
  }
}

TEST_CASE("Engel flag of a Jordan block is the reversed standard basis") {
  MatrixQ n(4, 4);
  for (std::size_t k = 0; k + 1 < 4; ++k) n(k, k + 1) = 1;  // e_{k+1} -> e_k
  const EngelFlag fl = engel_flag({n});
  MatrixQ reversed(4, 4);
  for (std::size_t i = 0; i < 4; ++i) reversed(i, 3 - i) = 1;
  CHECK(fl.basis == reversed);
  CHECK(strictly_lower(in_basis(n, fl.basis)));
}

TEST_CASE("Engel flag of ad f1, ad f2 on the derived algebra") {
  // coordinates e1..e4; [f1,e1]=e2, [f1,e2]=-e4, [f2,e1]=e3, [f2,e3]=-e4
  MatrixQ a1(4, 4), a2(4, 4);
  a1(1, 0) = 1;
  a1(3, 1) = -1;
  a2(2, 0) = 1;
  a2(3, 2) = -1;
  const EngelFlag fl = engel_flag({a1, a2});
  CHECK(fl.flag.front().contains(unit_vector(4, 3)));
  CHECK(strictly_lower(in_basis(a1, fl.basis)));
  CHECK(strictly_lower(in_basis(a2, fl.basis)));
}

TEST_CASE("Engel flag fails without a common kernel") {
  CHECK_THROWS_WITH_AS(engel_flag({MatrixQ::identity(2)}), "no common kernel vector",
                       VerificationError);
}
