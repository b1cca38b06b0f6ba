#pragma once

#include "gonil/isotropy.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gonil {

/// Witness of the geodesic-orbit equation at one tangent vector T:
/// <[T + A, e_b], T> = k <T, e_b> for every basis vector e_b, where
/// A = sum_s a_coeffs[s] * h.basis()[s].
struct GOCertificate {
  VectorQ t;
  VectorQ a_coeffs;
  Rational k;
};

/// Solves for (A, k) at T.  Returns std::nullopt when no A in h and k work,
/// which proves (n, <,>) is not G-GO for G = N ⋊ exp(h).
///
/// Throws InputError when T = 0 or when some basis element of h is not a
/// skew-symmetric derivation.  Every returned certificate is re-verified, and
/// k = 0 is asserted whenever <T,T> != 0.
std::optional<GOCertificate> go_certificate_at(const MetricLieAlgebra& m, const OperatorSpace& h,
                                               const VectorQ& t);

/// Exact re-check of a certificate.
bool verify_certificate(const MetricLieAlgebra& m, const OperatorSpace& h,
                        const GOCertificate& cert);

struct AuditPoint {
  std::size_t index = 0;
  VectorQ t;
  bool null_probe = false;  // the extra null vector from the form's hyperbolic pair
  std::optional<GOCertificate> certificate;
};

struct GOAuditReport {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::int64_t bound = 0;
  std::vector<AuditPoint> points;
  std::vector<VectorQ> failures;

  /// "REFUTED" when an exact counterexample was found, "CONSISTENT" otherwise.
  std::string verdict() const { return failures.empty() ? "CONSISTENT" : "REFUTED"; }
};

/// Integer sample vectors with entries in [-bound, bound], drawn from a
/// mt19937_64 stream seeded with `seed`; zero vectors are redrawn.
std::vector<VectorQ> audit_sample_vectors(std::size_t dim, std::size_t samples,
                                          std::uint64_t seed, std::int64_t bound);

/// Runs go_certificate_at on `samples` random vectors plus, when the form has
/// one, the null vector of the first hyperbolic pair found by
/// congruence_diagonalize.  Points are evaluated concurrently; the report is
/// ordered by sample index.
GOAuditReport go_random_audit(const MetricLieAlgebra& m, const OperatorSpace& h,
                              std::size_t samples, std::uint64_t seed, std::int64_t bound);
/// Serial reference for go_random_audit(); identical report.
GOAuditReport go_random_audit_reference(const MetricLieAlgebra& m, const OperatorSpace& h,
                                        std::size_t samples, std::uint64_t seed,
                                        std::int64_t bound);

/// A linear map L: n -> h (dim(h) x n coefficient matrix) with
/// <[e_a + L e_a, e_c], e_b> + <[e_b + L e_b, e_c], e_a> = 0 for all a <= b, c.
/// Existence is sufficient for G-GO (with k = 0) but not necessary.
struct LinearGOCertificate {
  MatrixQ l;

  VectorQ a_coeffs(const VectorQ& t) const { return l * t; }
};

/// The linear system for L: unknown L(s, a) at index s*n + a.
struct LinearGOSystem {
  MatrixQ a;
  VectorQ b;
};

LinearGOSystem linear_go_system(const MetricLieAlgebra& m, const OperatorSpace& h);

/// Residual A*vec(L) - b of a candidate L; all zero iff L is a certificate.
VectorQ linear_go_residual(const MetricLieAlgebra& m, const OperatorSpace& h, const MatrixQ& l);

std::optional<LinearGOCertificate> linear_go_certificate(const MetricLieAlgebra& m,
                                                         const OperatorSpace& h);

/// <[e_a, x_i], x_j> + <[e_a, x_j], x_i> != 0 for ambient e_a and the
/// canonical basis x_* of the derived algebra.
struct NecessaryViolation {
  std::size_t a, i, j;
  Rational first;   // <[e_a, x_i], x_j>
  Rational second;  // <[e_a, x_j], x_i>
};

struct NecessaryConditionReport {
  bool applicable = false;
  std::string notice;
  Subspace derived;
  SignatureTriple derived_signature;
  std::vector<NecessaryViolation> violations;

  bool passed() const { return violations.empty(); }
};

/// Checks <[T, X], X> = 0 for all T in n and X in n' in polarized form.  Skipped
/// (applicable = false) when the form restricted to n' is degenerate.
NecessaryConditionReport necessary_condition_check(const MetricLieAlgebra& m);

std::string to_text(const GOCertificate& cert);
std::string to_text(const GOAuditReport& report);
std::string to_text(const LinearGOCertificate& cert);
std::string to_text(const NecessaryConditionReport& report);

}  // namespace gonil
