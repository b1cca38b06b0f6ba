#pragma once

#include "gonil/isotropy.hpp"

#include <optional>
#include <vector>

namespace gonil {

/// Nilpotent part of an Iwasawa decomposition of so(m-q, q), q in {1, 2}, in
/// the basis where the form is
///   q = 1:  [[0,0,1],[0,I,0],[1,0,0]]
///   q = 2:  [[0_2,0,I_2],[0,I,0],[I_2,0,0_2]].
struct IwasawaFamily {
  int q = 1;
  std::size_t m = 0;
  MatrixQ gram;
  /// q = 1: u_1..u_{m-2}.  q = 2: alpha, u_1..u_{m-4}, v_1..v_{m-4}, beta.
  std::vector<MatrixQ> generators;
};

MatrixQ iwasawa_reference_gram(int q, std::size_t m);

/// Throws InputError for q outside {1, 2} or m below 3 (q = 1) or 4 (q = 2).
IwasawaFamily iwasawa_nilpotent_basis(int q, std::size_t m);

/// General element of the q = 2 family.
MatrixQ iwasawa_element(std::size_t m, const Rational& alpha, const VectorQ& u, const VectorQ& v,
                        const Rational& beta);

/// Rank test against the span of the generators.  Throws InputError on a
/// shape mismatch.
bool membership_in_family(const IwasawaFamily& family, const MatrixQ& x);
bool membership_in_span(std::size_t m, const std::vector<MatrixQ>& generators, const MatrixQ& x);

bool is_abelian_family(const std::vector<MatrixQ>& generators);

/// Parameters of the one-dimensional summand of the second family.
struct AbelianParams {
  Rational u1 = 0;
  Rational v1 = 1;
};

/// The three maximal abelian subalgebras of the q = 2 family:
///   1: {v = 0}
///   2: R X(u1, v1) ⊕ {w, beta}, v1 != 0, m >= 5
///   3: the polarization {u, beta} of the Heisenberg subalgebra {alpha = 0}
/// Every returned list is checked abelian and inside the family.
std::vector<MatrixQ> maximal_abelian_family(int which, std::size_t m,
                                            const AbelianParams& params = {});

}  // namespace gonil
