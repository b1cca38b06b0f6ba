#include "gonil/double_ext.hpp"

#include "gonil/errors.hpp"

#include <algorithm>
#include <sstream>

namespace gonil {

std::string to_string(DegeneracyTag tag) {
  switch (tag) {
    case DegeneracyTag::Nondegenerate: return "Nondegenerate";
    case DegeneracyTag::Deg1Semidefinite: return "Deg1Semidefinite";
    case DegeneracyTag::Deg2Semidefinite: return "Deg2Semidefinite";
    case DegeneracyTag::Deg1Index1: return "Deg1Index1";
    case DegeneracyTag::Other: return "Other";
  }
  return "Other";
}

DegeneracyTag degeneracy_tag(const SignatureTriple& s) {
  const bool semidefinite = s.p == 0 || s.q == 0;
  if (s.r == 0) return DegeneracyTag::Nondegenerate;
  if (s.r == 1 && semidefinite) return DegeneracyTag::Deg1Semidefinite;
  if (s.r == 2 && semidefinite) return DegeneracyTag::Deg2Semidefinite;
  if (s.r == 1 && std::min(s.p, s.q) == 1) return DegeneracyTag::Deg1Index1;
  return DegeneracyTag::Other;
}

DegeneracyCase classify_degeneracy(const MetricLieAlgebra& m) {
  const Subspace nprime = derived_algebra(m.algebra());
  const SignatureTriple sig = restrict_form(m.form(), nprime).signature();
  return DegeneracyCase{degeneracy_tag(sig), sig};
}

namespace {

// f1, f2 with <f_i, f_j> = 0 and <f_i, e_j> = δ_ij, where e1, e2 span the
// radical o and s = o^⊥.  Starts from the unit vectors at the non-pivot
// columns of s, in increasing column order.
std::array<VectorQ, 2> dual_null_pair(const SymForm& form, const Subspace& s, const VectorQ& e1,
                                      const VectorQ& e2) {
  const std::size_t n = form.dim();
  std::vector<VectorQ> c;
  std::size_t next = 0;
  for (std::size_t col = 0; col < n && c.size() < 2; ++col) {
    if (next < s.pivots().size() && s.pivots()[next] == col) {
      ++next;
      continue;
    }
    c.push_back(unit_vector(n, col));
  }
  const std::array<const VectorQ*, 2> e{&e1, &e2};
  MatrixQ pairing(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) pairing(i, j) = form.inner(c[i], *e[j]);
  const Rational det = pairing(0, 0) * pairing(1, 1) - pairing(0, 1) * pairing(1, 0);
  if (is_zero(det)) throw std::logic_error("complement of s does not pair with the radical");
  const MatrixQ inv{{pairing(1, 1) / det, -pairing(0, 1) / det},
                    {-pairing(1, 0) / det, pairing(0, 0) / det}};

  std::array<VectorQ, 2> g;
  for (std::size_t i = 0; i < 2; ++i) {
    g[i] = VectorQ(n, Rational(0));
    for (std::size_t k = 0; k < 2; ++k)
      for (std::size_t x = 0; x < n; ++x) g[i][x] += inv(i, k) * c[k][x];
  }
  const Rational t11 = -form.inner(g[0], g[0]) / 2;
  const Rational t12 = -form.inner(g[0], g[1]);
  const Rational t22 = -form.inner(g[1], g[1]) / 2;
  std::array<VectorQ, 2> f = g;
  for (std::size_t x = 0; x < n; ++x) {
    f[0][x] += t11 * e1[x] + t12 * e2[x];
    f[1][x] += t22 * e2[x];
  }
  return f;
}

void evaluate_flags(const MetricLieAlgebra& m, const Subspace& nprime, ReductionWitness& w) {
  const OperatorSpace h = isotropy_algebra(m);
  w.flags.inclusion = nprime.contains(w.eg) && w.m1.contains(nprime);
  w.flags.invariance = is_invariant(h, w.eg) && is_invariant(h, w.m1);
  w.eg_orthogonal_to_m1 = (w.eg.basis() * m.form().gram() * w.m1.basis().transpose()).is_zero();
  w.eg_central_in_m1 = bracket_subspaces(m.algebra(), w.eg, w.m1).dim() == 0;
  w.flags.orthogonal_and_central = w.eg_orthogonal_to_m1 && w.eg_central_in_m1;
  w.flags.dimension = w.m1.dim() + w.eg.dim() == m.dim();
}

}  // namespace

ReductionWitness build_reduction_witness(const MetricLieAlgebra& m) {
  const std::size_t n = m.dim();
  ReductionWitness w;
  w.degeneracy = classify_degeneracy(m);
  switch (w.degeneracy.tag) {
    case DegeneracyTag::Nondegenerate:
      throw InputError("reduction: the form restricted to the derived algebra is nondegenerate, "
                       "signature " + to_string(w.degeneracy.signature_of_restriction));
    case DegeneracyTag::Other:
      throw InputError("reduction: unsupported degeneracy " +
                       to_string(w.degeneracy.signature_of_restriction) +
                       " on the derived algebra; the reduction covers signature (n-2,2) only");
    default:
      break;
  }

  const Subspace nprime = derived_algebra(m.algebra());
  const Subspace v = orth_complement(m, nprime);
  const Subspace o = nprime.intersect(v);
  const Subspace s = nprime + v;

  if (w.degeneracy.tag != DegeneracyTag::Deg2Semidefinite) {
    w.eg = o;
    w.m1 = s;
  } else if (bracket_subspaces(m.algebra(), o, s).dim() == 0) {
    w.eg = o;
    w.m1 = s;
  } else {
    // First flag vector of the ad(s) action on o: the common kernel.
    const Subspace fixed = o.intersect(centralizer(m.algebra(), s));
    if (fixed.dim() == 0) {
      w.eg = Subspace(n);
      w.m1 = s;
      evaluate_flags(m, nprime, w);
      return w;
    }
    const VectorQ e2 = fixed.vector(0);
    VectorQ e1;
    for (const auto& x : o.vectors())
      if (!Subspace::span({e2}, n).contains(x)) {
        e1 = x;
        break;
      }
    const auto f = dual_null_pair(m.form(), s, e1, e2);
    w.engel_vectors = std::array<VectorQ, 4>{e1, e2, f[0], f[1]};
    w.eg = Subspace::span({e2}, n);
    w.m1 = orth_complement(m, w.eg);
  }
  evaluate_flags(m, nprime, w);
  return w;
}

ReductionWitness reduction_witness(const MetricLieAlgebra& m) {
  ReductionWitness w = build_reduction_witness(m);
  if (w.flags.all()) return w;
  if (!w.eg_central_in_m1)
    throw ReductionError("witness check failed: [eg, m1] != 0; input is not G-GO", w);
  std::string failed;
  if (!w.flags.inclusion) failed += " (i) eg in n' in m1;";
  if (!w.flags.invariance) failed += " (ii) isotropy invariance;";
  if (!w.eg_orthogonal_to_m1) failed += " (iii) <eg, m1> = 0;";
  if (!w.flags.dimension) failed += " (iv) dim m1 + dim eg = n;";
  if (w.eg.dim() == 0) failed += " no common kernel vector for the radical;";
  throw ReductionError("witness check failed:" + failed, w);
}

QuotientResult reduce(const MetricLieAlgebra& m) {
  ReductionWitness w = reduction_witness(m);
  const QuotientForm q = quotient_form(m.form(), w.m1, w.eg);
  const std::size_t k = q.complement.rows();
  BracketTable table(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const VectorQ coords =
          q.projection * m.algebra().bracket(q.complement.row(i), q.complement.row(j));
      SparseVector sv;
      for (std::size_t c = 0; c < k; ++c)
        if (!is_zero(coords[c])) sv[c] = coords[c];
      if (!sv.empty()) table.set(i, j, sv);
    }
  return QuotientResult{MetricLieAlgebra(LieAlgebra(std::move(table)), q.form), q.complement,
                        q.projection, std::move(w)};
}

namespace {

void check_shapes(std::size_t n0, const ExtensionData& data) {
  if (data.d.rows() != n0 || data.d.cols() != n0)
    throw InputError("extension data: D must be " + std::to_string(n0) + "x" + std::to_string(n0));
  if (data.phi.size() != n0)
    throw InputError("extension data: phi must have " + std::to_string(n0) + " entries");
  if (data.omega.rows() != n0 || data.omega.cols() != n0)
    throw InputError("extension data: omega must be " + std::to_string(n0) + "x" +
                     std::to_string(n0));
  if (!(data.omega + data.omega.transpose()).is_zero())
    throw InputError("extension data: omega is not antisymmetric");
}

Rational omega_of(const MatrixQ& omega, const VectorQ& x, const VectorQ& y) {
  return dot(x, omega * y);
}

}  // namespace

std::vector<std::string> extension_data_violations(const MetricLieAlgebra& m0,
                                                   const ExtensionData& data) {
  const std::size_t n0 = m0.dim();
  check_shapes(n0, data);
  const LieAlgebra& L = m0.algebra();
  std::vector<std::string> out;
  if (!is_derivation(L, data.d)) out.push_back("D is not a derivation of m0");
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = i + 1; j < n0; ++j) {
      const VectorQ xi = unit_vector(n0, i), xj = unit_vector(n0, j);
      const Rational lhs = dot(data.phi, L.bracket_basis(i, j));
      const Rational rhs =
          omega_of(data.omega, data.d * xi, xj) + omega_of(data.omega, xi, data.d * xj);
      if (lhs != rhs)
        out.push_back("phi([x" + std::to_string(i) + ",x" + std::to_string(j) + "]) = " +
                      to_string(lhs) + " but omega(Dx,y) + omega(x,Dy) = " + to_string(rhs));
    }
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = i + 1; j < n0; ++j)
      for (std::size_t k = j + 1; k < n0; ++k) {
        const VectorQ xi = unit_vector(n0, i), xj = unit_vector(n0, j), xk = unit_vector(n0, k);
        const Rational cyc = omega_of(data.omega, xi, L.bracket_basis(j, k)) +
                             omega_of(data.omega, xj, L.bracket_basis(k, i)) +
                             omega_of(data.omega, xk, L.bracket_basis(i, j));
        if (!is_zero(cyc))
          out.push_back("cyclic omega sum at (" + std::to_string(i) + "," + std::to_string(j) +
                        "," + std::to_string(k) + ") = " + to_string(cyc));
      }
  return out;
}

MetricLieAlgebra extend2(const MetricLieAlgebra& m0, const ExtensionData& data) {
  const auto violations = extension_data_violations(m0, data);
  if (!violations.empty()) {
    std::string msg = "extension data violates the Jacobi conditions:";
    for (const auto& v : violations) msg += " " + v + ";";
    throw InputError(msg);
  }
  const std::size_t n0 = m0.dim();
  const std::size_t n = n0 + 2;
  const std::size_t f = 0, e = n - 1;

  BracketTable table(n);
  for (std::size_t c = 0; c < n0; ++c) {
    SparseVector sv;
    for (std::size_t r = 0; r < n0; ++r)
      if (!is_zero(data.d(r, c))) sv[r + 1] = data.d(r, c);
    if (!is_zero(data.phi[c])) sv[e] = data.phi[c];
    if (!sv.empty()) table.set(f, c + 1, sv);
  }
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = i + 1; j < n0; ++j) {
      SparseVector sv;
      const VectorQ& b = m0.algebra().bracket_basis(i, j);
      for (std::size_t k = 0; k < n0; ++k)
        if (!is_zero(b[k])) sv[k + 1] = b[k];
      if (!is_zero(data.omega(i, j))) sv[e] = data.omega(i, j);
      if (!sv.empty()) table.set(i + 1, j + 1, sv);
    }

  MatrixQ gram(n, n);
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n0; ++j) gram(i + 1, j + 1) = m0.form().gram()(i, j);
  gram(f, e) = 1;
  gram(e, f) = 1;
  gram(f, f) = data.mu;
  return MetricLieAlgebra(LieAlgebra(std::move(table)), SymForm(std::move(gram)));
}

std::string to_text(const ReductionWitness& w) {
  auto flag = [](bool b) { return b ? "PASS" : "FAIL"; };
  std::ostringstream out;
  out << "CASE: " << to_string(w.degeneracy.tag) << "\n";
  out << "RESTRICTED_SIGNATURE: " << to_string(w.degeneracy.signature_of_restriction) << "\n";
  out << "EG: " << to_string(w.eg) << "\n";
  out << "M1: " << to_string(w.m1) << "\n";
  out << "FLAG_I: " << flag(w.flags.inclusion) << "\n";
  out << "FLAG_II: " << flag(w.flags.invariance) << "\n";
  out << "FLAG_III: " << flag(w.flags.orthogonal_and_central) << "\n";
  out << "FLAG_IV: " << flag(w.flags.dimension) << "\n";
  if (w.engel_vectors) {
    const auto& v = *w.engel_vectors;
    out << "E1: " << to_string(v[0]) << "\n";
    out << "E2: " << to_string(v[1]) << "\n";
    out << "F1: " << to_string(v[2]) << "\n";
    out << "F2: " << to_string(v[3]) << "\n";
  }
  return out.str();
}

}  // namespace gonil
