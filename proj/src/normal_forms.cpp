#include "gonil/normal_forms.hpp"

#include "gonil/errors.hpp"

#include <stdexcept>
#include <string>

namespace gonil {

namespace {

void require_size(int q, std::size_t m) {
  if (q != 1 && q != 2) throw InputError("normal forms: q must be 1 or 2");
  const std::size_t min = q == 1 ? 3 : 4;
  if (m < min)
    throw InputError("normal forms: q = " + std::to_string(q) + " needs m >= " +
                     std::to_string(min) + ", got " + std::to_string(m));
}

MatrixQ q1_element(std::size_t m, std::size_t k) {
  // u = unit vector k in the middle block
  MatrixQ x(m, m);
  x(1 + k, 0) = 1;
  x(m - 1, 1 + k) = -1;
  return x;
}

}  // namespace

MatrixQ iwasawa_reference_gram(int q, std::size_t m) {
  require_size(q, m);
  const std::size_t s = static_cast<std::size_t>(q);
  MatrixQ g(m, m);
  for (std::size_t i = 0; i < s; ++i) {
    g(i, m - s + i) = 1;
    g(m - s + i, i) = 1;
  }
  for (std::size_t i = s; i < m - s; ++i) g(i, i) = 1;
  return g;
}

MatrixQ iwasawa_element(std::size_t m, const Rational& alpha, const VectorQ& u, const VectorQ& v,
                        const Rational& beta) {
  require_size(2, m);
  const std::size_t k = m - 4;
  if (u.size() != k || v.size() != k)
    throw InputError("iwasawa_element: u and v must have " + std::to_string(k) + " entries");
  MatrixQ x(m, m);
  x(1, 0) = alpha;
  x(m - 2, m - 1) = -alpha;
  for (std::size_t i = 0; i < k; ++i) {
    x(2 + i, 0) = u[i];
    x(2 + i, 1) = v[i];
    x(m - 2, 2 + i) = -u[i];
    x(m - 1, 2 + i) = -v[i];
  }
  x(m - 2, 1) = beta;
  x(m - 1, 0) = -beta;
  return x;
}

IwasawaFamily iwasawa_nilpotent_basis(int q, std::size_t m) {
  require_size(q, m);
  IwasawaFamily fam;
  fam.q = q;
  fam.m = m;
  fam.gram = iwasawa_reference_gram(q, m);
  if (q == 1) {
    for (std::size_t k = 0; k + 2 < m; ++k) fam.generators.push_back(q1_element(m, k));
    return fam;
  }
  const std::size_t k = m - 4;
  const VectorQ zero(k, Rational(0));
  fam.generators.push_back(iwasawa_element(m, 1, zero, zero, 0));
  for (std::size_t i = 0; i < k; ++i) fam.generators.push_back(iwasawa_element(m, 0, unit_vector(k, i), zero, 0));
  for (std::size_t i = 0; i < k; ++i) fam.generators.push_back(iwasawa_element(m, 0, zero, unit_vector(k, i), 0));
  fam.generators.push_back(iwasawa_element(m, 0, zero, zero, 1));
  return fam;
}

bool membership_in_span(std::size_t m, const std::vector<MatrixQ>& generators, const MatrixQ& x) {
  if (x.rows() != m || x.cols() != m)
    throw InputError("membership: expected a " + std::to_string(m) + "x" + std::to_string(m) +
                     " matrix");
  return OperatorSpace::span(m, generators).contains(x);
}

bool membership_in_family(const IwasawaFamily& family, const MatrixQ& x) {
  return membership_in_span(family.m, family.generators, x);
}

bool is_abelian_family(const std::vector<MatrixQ>& generators) {
  for (std::size_t a = 0; a < generators.size(); ++a)
    for (std::size_t b = a + 1; b < generators.size(); ++b)
      if (!commutator(generators[a], generators[b]).is_zero()) return false;
  return true;
}

std::vector<MatrixQ> maximal_abelian_family(int which, std::size_t m, const AbelianParams& params) {
  require_size(2, m);
  const std::size_t k = m - 4;
  const VectorQ zero(k, Rational(0));
  std::vector<MatrixQ> out;
  switch (which) {
    case 1:
      out.push_back(iwasawa_element(m, 1, zero, zero, 0));
      for (std::size_t i = 0; i < k; ++i) out.push_back(iwasawa_element(m, 0, unit_vector(k, i), zero, 0));
      out.push_back(iwasawa_element(m, 0, zero, zero, 1));
      break;
    case 2: {
      if (m < 5) throw InputError("maximal_abelian_family: family 2 needs m >= 5");
      if (is_zero(params.v1)) throw InputError("maximal_abelian_family: family 2 needs v1 != 0");
      VectorQ u = zero, v = zero;
      u[0] = params.u1;
      v[0] = params.v1;
      out.push_back(iwasawa_element(m, 1, u, v, 0));
      for (std::size_t i = 1; i < k; ++i) out.push_back(iwasawa_element(m, 0, unit_vector(k, i), zero, 0));
      out.push_back(iwasawa_element(m, 0, zero, zero, 1));
      break;
    }
    case 3:
      for (std::size_t i = 0; i < k; ++i) out.push_back(iwasawa_element(m, 0, unit_vector(k, i), zero, 0));
      out.push_back(iwasawa_element(m, 0, zero, zero, 1));
      break;
    default:
      throw InputError("maximal_abelian_family: which must be 1, 2 or 3");
  }
  const IwasawaFamily fam = iwasawa_nilpotent_basis(2, m);
  if (!is_abelian_family(out)) throw std::logic_error("maximal abelian family is not abelian");
  for (const auto& x : out)
    if (!membership_in_family(fam, x)) throw std::logic_error("maximal abelian family leaves u");
  return out;
}

}  // namespace gonil
