#include "gonil/go_engine.hpp"

#include "gonil/errors.hpp"

#include <exception>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

namespace gonil {

namespace {

void require_isotropy_subalgebra(const MetricLieAlgebra& m, const OperatorSpace& h) {
  if (h.ambient_dim() != m.dim()) throw InputError("operator space dimension mismatch");
  for (const auto& d : h.basis())
    if (!is_derivation(m.algebra(), d) || !is_skew(m.form(), d))
      throw InputError("H is not inside the isotropy algebra");
}

// Assumes h has been validated.
std::optional<GOCertificate> solve_at(const MetricLieAlgebra& m, const OperatorSpace& h,
                                      const VectorQ& t) {
  const std::size_t n = m.dim();
  const std::size_t hd = h.dim();
  const VectorQ gt = m.form().gram() * t;  // <T, .> as a covector
  const MatrixQ adt = m.algebra().ad(t);

  // Unknowns (a_1..a_h, k); one equation per basis vector e_b:
  //   sum_s a_s <D_s e_b, T> - k <T, e_b> = -<[T, e_b], T>
  MatrixQ a(n, hd + 1);
  VectorQ b(n);
  std::vector<VectorQ> dt;  // D_s^T G T
  for (const auto& d : h.basis()) dt.push_back(d.transpose() * gt);
  const VectorQ adt_t = adt.transpose() * gt;
  for (std::size_t e = 0; e < n; ++e) {
    for (std::size_t s = 0; s < hd; ++s) a(e, s) = dt[s][e];
    a(e, hd) = -gt[e];
    b[e] = -adt_t[e];
  }
  const auto sol = solve_linear(a, b);
  if (!sol) return std::nullopt;

  GOCertificate cert;
  cert.t = t;
  cert.a_coeffs.assign(sol->x.begin(), sol->x.begin() + static_cast<std::ptrdiff_t>(hd));
  cert.k = sol->x[hd];
  return cert;
}

std::optional<GOCertificate> checked_solve(const MetricLieAlgebra& m, const OperatorSpace& h,
                                           const VectorQ& t) {
  if (t.size() != m.dim()) throw InputError("tangent vector has wrong dimension");
  if (is_zero(t)) throw InputError("tangent vector must be nonzero");
  auto cert = solve_at(m, h, t);
  if (!cert) return cert;
  if (sgn(m.inner(t, t)) != 0 && sgn(cert->k) != 0)
    throw std::logic_error("nonzero k at a non-null vector");
  if (!verify_certificate(m, h, *cert)) throw std::logic_error("certificate failed re-verification");
  return cert;
}

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t range) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % range);
  std::uint64_t u;
  do {
    u = rng();
  } while (u >= limit);
  return u % range;
}

GOAuditReport prepare_audit(const MetricLieAlgebra& m, const OperatorSpace& h,
                            std::size_t samples, std::uint64_t seed, std::int64_t bound) {
  if (samples < 1) throw InputError("audit needs at least one sample");
  require_isotropy_subalgebra(m, h);
  GOAuditReport report;
  report.samples = samples;
  report.seed = seed;
  report.bound = bound;
  const auto vectors = audit_sample_vectors(m.dim(), samples, seed, bound);
  for (std::size_t i = 0; i < vectors.size(); ++i) report.points.push_back({i, vectors[i], false, {}});
  const auto diag = congruence_diagonalize(m.form().gram());
  if (diag.hyperbolic_pair)
    report.points.push_back({vectors.size(), diag.hyperbolic_pair->first, true, {}});
  return report;
}

void collect_failures(GOAuditReport& report) {
  for (const auto& p : report.points)
    if (!p.certificate) report.failures.push_back(p.t);
}

}  // namespace

std::optional<GOCertificate> go_certificate_at(const MetricLieAlgebra& m, const OperatorSpace& h,
                                               const VectorQ& t) {
  require_isotropy_subalgebra(m, h);
  return checked_solve(m, h, t);
}

bool verify_certificate(const MetricLieAlgebra& m, const OperatorSpace& h,
                        const GOCertificate& cert) {
  const std::size_t n = m.dim();
  if (cert.t.size() != n || cert.a_coeffs.size() != h.dim()) return false;
  const MatrixQ a = h.combine(cert.a_coeffs);
  for (std::size_t e = 0; e < n; ++e) {
    const VectorQ eb = unit_vector(n, e);
    VectorQ lhs = m.algebra().bracket(cert.t, eb);
    const VectorQ ae = a.col(e);
    for (std::size_t i = 0; i < n; ++i) lhs[i] += ae[i];
    if (m.inner(lhs, cert.t) != cert.k * m.inner(cert.t, eb)) return false;
  }
  return true;
}

std::vector<VectorQ> audit_sample_vectors(std::size_t dim, std::size_t samples,
                                          std::uint64_t seed, std::int64_t bound) {
  if (bound < 1) throw InputError("audit bound must be at least 1");
  if (dim == 0) throw InputError("audit needs a positive-dimensional algebra");
  std::mt19937_64 rng(seed);
  const auto range = static_cast<std::uint64_t>(2 * bound + 1);
  std::vector<VectorQ> out;
  out.reserve(samples);
  while (out.size() < samples) {
    VectorQ v(dim);
    for (auto& x : v) x = static_cast<long>(static_cast<std::int64_t>(draw_below(rng, range)) - bound);
    if (!is_zero(v)) out.push_back(std::move(v));
  }
  return out;
}

GOAuditReport go_random_audit(const MetricLieAlgebra& m, const OperatorSpace& h,
                              std::size_t samples, std::uint64_t seed, std::int64_t bound) {
  GOAuditReport report = prepare_audit(m, h, samples, seed, bound);
  const auto count = static_cast<std::ptrdiff_t>(report.points.size());
  std::vector<std::exception_ptr> errors(report.points.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      report.points[idx].certificate = checked_solve(m, h, report.points[idx].t);
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  collect_failures(report);
  return report;
}

GOAuditReport go_random_audit_reference(const MetricLieAlgebra& m, const OperatorSpace& h,
                                        std::size_t samples, std::uint64_t seed,
                                        std::int64_t bound) {
  GOAuditReport report = prepare_audit(m, h, samples, seed, bound);
  for (auto& p : report.points) p.certificate = checked_solve(m, h, p.t);
  collect_failures(report);
  return report;
}

LinearGOSystem linear_go_system(const MetricLieAlgebra& m, const OperatorSpace& h) {
  if (h.ambient_dim() != m.dim()) throw InputError("operator space dimension mismatch");
  const std::size_t n = m.dim();
  const std::size_t hd = h.dim();
  const MatrixQ& g = m.form().gram();
  std::vector<MatrixQ> gd;  // (G D_s)(b, c) = <D_s e_c, e_b>
  for (const auto& d : h.basis()) gd.push_back(g * d);
  // gb[a*n + c] = G [e_a, e_c], so gb[...][b] = <[e_a, e_c], e_b>
  std::vector<VectorQ> gb(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) gb[a * n + c] = g * m.algebra().bracket_basis(a, c);

  LinearGOSystem sys{MatrixQ(0, hd * n), {}};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        VectorQ row(hd * n, Rational(0));
        for (std::size_t s = 0; s < hd; ++s) {
          row[s * n + a] += gd[s](b, c);
          row[s * n + b] += gd[s](a, c);
        }
        Rational rhs = -gb[a * n + c][b] - gb[b * n + c][a];
        if (is_zero(row) && sgn(rhs) == 0) continue;
        sys.a.append_row(row);
        sys.b.push_back(std::move(rhs));
      }
  return sys;
}

VectorQ linear_go_residual(const MetricLieAlgebra& m, const OperatorSpace& h, const MatrixQ& l) {
  if (l.rows() != h.dim() || l.cols() != m.dim())
    throw InputError("linear certificate has wrong shape");
  const LinearGOSystem sys = linear_go_system(m, h);
  VectorQ r = sys.a * vectorize(l);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= sys.b[i];
  return r;
}

std::optional<LinearGOCertificate> linear_go_certificate(const MetricLieAlgebra& m,
                                                         const OperatorSpace& h) {
  require_isotropy_subalgebra(m, h);
  const LinearGOSystem sys = linear_go_system(m, h);
  LinearGOCertificate cert;
  if (sys.a.rows() == 0) {
    cert.l = MatrixQ(h.dim(), m.dim());
    return cert;
  }
  const auto sol = solve_linear(sys.a, sys.b);
  if (!sol) return std::nullopt;
  cert.l = unvectorize(sol->x, h.dim(), m.dim());
  if (!is_zero(linear_go_residual(m, h, cert.l)))
    throw std::logic_error("linear certificate failed re-verification");
  return cert;
}

NecessaryConditionReport necessary_condition_check(const MetricLieAlgebra& m) {
  NecessaryConditionReport rep;
  rep.derived = derived_algebra(m.algebra());
  rep.derived_signature = restrict_form(m.form(), rep.derived).signature();
  if (rep.derived_signature.r != 0) {
    rep.notice = "skipped: the form restricted to the derived algebra is degenerate";
    return rep;
  }
  rep.applicable = true;
  const std::size_t n = m.dim();
  const auto xs = rep.derived.vectors();
  for (std::size_t a = 0; a < n; ++a) {
    const MatrixQ ada = m.algebra().ad_basis(a);
    std::vector<VectorQ> images;
    for (const auto& x : xs) images.push_back(ada * x);
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = i; j < xs.size(); ++j) {
        Rational first = m.inner(images[i], xs[j]);
        Rational second = m.inner(images[j], xs[i]);
        if (sgn(first + second) != 0) rep.violations.push_back({a, i, j, first, second});
      }
  }
  return rep;
}

std::string to_text(const GOCertificate& cert) {
  std::ostringstream os;
  os << "T: " << to_string(cert.t) << "\n";
  os << "A_COEFFS: " << to_string(cert.a_coeffs) << "\n";
  os << "K: " << to_string(cert.k) << "\n";
  return os.str();
}

std::string to_text(const GOAuditReport& report) {
  std::ostringstream os;
  os << "VERDICT: " << report.verdict() << "\n";
  os << "SEED: " << report.seed << "\n";
  os << "BOUND: " << report.bound << "\n";
  os << "SAMPLES: " << report.samples << "\n";
  const bool probe = !report.points.empty() && report.points.back().null_probe;
  os << "NULL_PROBE: " << (probe ? to_string(report.points.back().t) : std::string("none"))
     << "\n";
  os << "FAILURES: " << report.failures.size() << "\n";
  for (const auto& f : report.failures) os << "FAILURE: " << to_string(f) << "\n";
  for (const auto& p : report.points) {
    os << "POINT: " << p.index << " T=" << to_string(p.t);
    if (p.certificate)
      os << " A=" << to_string(p.certificate->a_coeffs) << " K=" << to_string(p.certificate->k);
    else
      os << " INFEASIBLE";
    os << "\n";
  }
  os << "NOTE: " << (report.failures.empty()
                         ? "CONSISTENT means no counterexample among the sampled vectors; it is "
                           "not a proof of the GO property"
                         : "REFUTED: an infeasible vector is an exact counterexample")
     << "\n";
  return os.str();
}

std::string to_text(const LinearGOCertificate& cert) {
  std::ostringstream os;
  os << "LINEAR_GO: FEASIBLE\n";
  os << "L: " << to_string(cert.l) << "\n";
  os << "NOTE: a linear certificate is sufficient for the GO property with k = 0; its absence "
        "does not refute GO\n";
  return os.str();
}

std::string to_text(const NecessaryConditionReport& report) {
  std::ostringstream os;
  os << "DERIVED_DIM: " << report.derived.dim() << "\n";
  os << "DERIVED_SIGNATURE: " << to_string(report.derived_signature) << "\n";
  if (!report.applicable) {
    os << "NECESSARY_CONDITIONS: SKIPPED\nNOTICE: " << report.notice << "\n";
    return os.str();
  }
  os << "NECESSARY_CONDITIONS: " << (report.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& v : report.violations)
    os << "VIOLATION: a=" << v.a << " i=" << v.i << " j=" << v.j
       << " first=" << to_string(v.first) << " second=" << to_string(v.second) << "\n";
  return os.str();
}

}  // namespace gonil
