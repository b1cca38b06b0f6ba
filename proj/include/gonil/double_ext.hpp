#pragma once

#include "gonil/errors.hpp"
#include "gonil/isotropy.hpp"

#include <array>
#include <optional>
#include <string>

namespace gonil {

enum class DegeneracyTag { Nondegenerate, Deg1Semidefinite, Deg2Semidefinite, Deg1Index1, Other };

std::string to_string(DegeneracyTag tag);

/// Type of the form restricted to the derived algebra n'.
struct DegeneracyCase {
  DegeneracyTag tag = DegeneracyTag::Nondegenerate;
  SignatureTriple signature_of_restriction;
};

DegeneracyTag degeneracy_tag(const SignatureTriple& s);
DegeneracyCase classify_degeneracy(const MetricLieAlgebra& m);

/// Hypotheses of the quotient construction for the pair (eg, m1):
///   (i)   eg ⊆ n' ⊆ m1
///   (ii)  eg and m1 are invariant under the isotropy algebra
///   (iii) <eg, m1> = 0 and [eg, m1] = 0
///   (iv)  dim m1 + dim eg = dim n
struct WitnessFlags {
  bool inclusion = false;
  bool invariance = false;
  bool orthogonal_and_central = false;
  bool dimension = false;

  bool all() const { return inclusion && invariance && orthogonal_and_central && dimension; }
};

struct ReductionWitness {
  Subspace eg;
  Subspace m1;
  DegeneracyCase degeneracy;
  WitnessFlags flags;
  bool eg_orthogonal_to_m1 = false;  // first half of (iii)
  bool eg_central_in_m1 = false;     // second half of (iii)
  /// Degeneracy-2 case with [o, s] != 0 only: the Engel basis (e1, e2) of the
  /// radical o with [s, e2] = 0, and f1, f2 with <f_i,f_j> = 0, <f_i,e_j> = δ_ij.
  std::optional<std::array<VectorQ, 4>> engel_vectors;
};

/// Thrown by reduction_witness/reduce when a hypothesis fails; carries the
/// witness so each flag can be inspected.
class ReductionError : public VerificationError {
 public:
  ReductionError(const std::string& what, ReductionWitness witness)
      : VerificationError(what), witness_(std::move(witness)) {}
  const ReductionWitness& witness() const { return witness_; }

 private:
  ReductionWitness witness_;
};

/// Builds (eg, m1) for the three degenerate cases and evaluates every flag
/// without throwing on flag failures.  Throws InputError when the case is
/// Nondegenerate or Other.
ReductionWitness build_reduction_witness(const MetricLieAlgebra& m);

/// build_reduction_witness, then throws ReductionError unless all four flags
/// hold.  A failed [eg, m1] = 0 is reported as "input is not G-GO".
ReductionWitness reduction_witness(const MetricLieAlgebra& m);

struct QuotientResult {
  MetricLieAlgebra m0;
  MatrixQ complement;  // rows: basis of the chosen complement of eg in m1
  MatrixQ projection;  // maps x in m1 to coordinates on the complement
  ReductionWitness witness;
};

/// m0 = m1/eg with the induced bracket and form, realized on the canonical
/// complement of eg in m1.
QuotientResult reduce(const MetricLieAlgebra& m);

/// Data of a 2-dimensional double extension n = Rf ⊕ m0 ⊕ Re:
///   [f, x] = D x + phi(x) e,  [x, y] = [x, y]_0 + omega(x, y) e,  e central,
///   <e, f> = 1, <f, f> = mu, <e, e> = 0, e and f orthogonal to m0.
struct ExtensionData {
  MatrixQ d;      // operator on m0 (column c = D e_c)
  VectorQ phi;    // linear functional on m0
  MatrixQ omega;  // antisymmetric bilinear form on m0
  Rational mu;
};

/// Every violated Jacobi condition of the extension, as human-readable lines.
std::vector<std::string> extension_data_violations(const MetricLieAlgebra& m0,
                                                   const ExtensionData& data);

/// Builds the extension with basis order (f, m0 basis..., e).  Throws
/// InputError when the data violate the Jacobi conditions or the result is not
/// nilpotent.
MetricLieAlgebra extend2(const MetricLieAlgebra& m0, const ExtensionData& data);

std::string to_text(const ReductionWitness& w);

}  // namespace gonil
