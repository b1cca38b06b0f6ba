#include "gonil/catalog.hpp"

#include "gonil/errors.hpp"
#include "gonil/go_engine.hpp"

#include <sstream>
#include <stdexcept>

namespace gonil {

namespace {

constexpr std::size_t kF = 0;  // f1..f8 at 0..7
constexpr std::size_t kE = 7;  // e1..e4 at 8..11

std::size_t f(std::size_t i) { return kF + i - 1; }
std::size_t e(std::size_t i) { return kE + i; }

MatrixQ diagonal(const std::vector<int>& d) {
  MatrixQ g(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) g(i, i) = d[i];
  return g;
}

MetricLieAlgebra paper_algebra(PaperPerturbation p) {
  BracketTable t(12);
  t.set(f(1), e(1), e(2));
  t.set(f(2), e(1), e(3));
  t.set(f(1), e(2), e(4), -1);
  t.set(f(2), e(3), e(4), -1);
  t.set(f(1), f(2), e(1));
  t.set(f(1), f(6), e(2));
  t.set(f(2), f(6), e(3));
  if (p != PaperPerturbation::DropF1F4) t.set(f(1), f(4), e(4));
  t.set(f(2), f(5), e(4));

  MatrixQ g(12, 12);
  auto pair = [&g](std::size_t a, std::size_t b) {
    g(a, b) = 1;
    g(b, a) = 1;
  };
  pair(f(1), f(7));
  pair(f(2), f(8));
  pair(f(3), f(6));
  g(f(4), f(4)) = p == PaperPerturbation::F4Norm2 ? 2 : 1;
  g(f(5), f(5)) = 1;
  pair(e(1), e(4));
  g(e(2), e(2)) = 1;
  g(e(3), e(3)) = 1;
  return MetricLieAlgebra(LieAlgebra(std::move(t)), SymForm(std::move(g)));
}

// One entry of A as a linear form in the coordinates of T.
struct TableEntry {
  std::size_t row, col;
  std::vector<std::pair<std::size_t, int>> terms;  // (coordinate index, coefficient)
};

std::vector<TableEntry> isotropy_table_entries() {
  // y_j is the coordinate of f_j, x_i the coordinate of e_i.
  auto y = [](std::size_t j) { return f(j); };
  auto x = [](std::size_t i) { return e(i); };
  return {
      // block on span(f1..f8)
      {f(3), f(1), {{x(2), 1}, {y(4), 1}}},
      {f(3), f(2), {{x(3), 1}, {y(5), 1}}},
      {f(3), f(4), {{y(1), -1}}},
      {f(3), f(5), {{y(2), -1}}},
      {f(4), f(1), {{x(1), 1}, {y(6), -1}}},
      {f(4), f(6), {{y(1), 1}}},
      {f(5), f(2), {{x(1), 1}, {y(6), -1}}},
      {f(5), f(6), {{y(2), 1}}},
      {f(6), f(1), {{y(2), 1}}},
      {f(6), f(2), {{y(1), -1}}},
      {f(7), f(2), {{y(3), 1}, {x(4), -1}}},
      {f(7), f(3), {{y(2), -1}}},
      {f(7), f(4), {{y(6), 1}, {x(1), -1}}},
      {f(7), f(6), {{x(2), -1}, {y(4), -1}}},
      {f(8), f(1), {{x(4), 1}, {y(3), -1}}},
      {f(8), f(3), {{y(1), 1}}},
      {f(8), f(5), {{y(6), 1}, {x(1), -1}}},
      {f(8), f(6), {{x(3), -1}, {y(5), -1}}},
      // block on span(e1..e4)
      {e(2), e(1), {{y(1), -1}}},
      {e(3), e(1), {{y(2), -1}}},
      {e(4), e(2), {{y(1), 1}}},
      {e(4), e(3), {{y(2), 1}}},
  };
}

std::string dims_text(const std::vector<Subspace>& chain) {
  std::string s = "(";
  for (std::size_t i = 0; i < chain.size(); ++i) s += (i ? "," : "") + std::to_string(chain[i].dim());
  return s + ")";
}

MetricLieAlgebra abelian_euclidean(std::size_t n) {
  return MetricLieAlgebra(LieAlgebra::abelian(n), SymForm(MatrixQ::identity(n)));
}

ExtensionData shift_data(std::size_t n0) {
  ExtensionData d{MatrixQ(n0, n0), VectorQ(n0, Rational(0)), MatrixQ(n0, n0), Rational(0)};
  d.d(1, 0) = 1;       // D e1 = e2
  d.omega(0, 1) = 1;   // omega(e1, e2) = 1
  d.omega(1, 0) = -1;
  return d;
}

std::vector<std::string> extension_names(std::size_t n0) {
  std::vector<std::string> names{"f"};
  for (std::size_t i = 1; i <= n0; ++i) names.push_back("e" + std::to_string(i));
  names.push_back("e");
  return names;
}

std::vector<std::string> indexed_names(const std::string& stem, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
  return names;
}

NamedExample make_example(const std::string& name) {
  NamedExample ex;
  ex.name = name;
  if (name == "paper_2_3") {
    ex.algebra = paper_algebra(PaperPerturbation::None);
    ex.basis_names = indexed_names("f", 8);
    for (const auto& s : indexed_names("e", 4)) ex.basis_names.push_back(s);
    ex.expected = {{"dim", "12", "published"},
                   {"derived_dim", "4", "published"},
                   {"signature", "(8,4,0)", "published"},
                   {"restricted_signature", "(3,1,0)", "published"},
                   {"complement_signature", "(5,3,0)", "published"},
                   {"step", "4", "published"},
                   {"lcs_dims", "(12,4,3,1,0)", "hand"},
                   {"center_dim", "7", "hand"},
                   {"degeneracy", "Nondegenerate", "published"}};
    ex.note = "span(f1,f2,e1..e4) is isomorphic to L_{6,21}(1); no isomorphism check is made";
    return ex;
  }
  if (name == "abelian_n" || name.rfind("abelian_", 0) == 0) {
    std::size_t n = 4;
    if (name != "abelian_n") {
      const std::string digits = name.substr(8);
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
          digits.size() > 4)
        throw InputError("unknown catalog example '" + name + "'");
      n = std::stoul(digits);
      if (n == 0) throw InputError("catalog: abelian_<n> needs n >= 1");
    }
    ex.algebra = abelian_euclidean(n);
    ex.basis_names = indexed_names("e", n);
    ex.expected = {{"dim", std::to_string(n), "trivial"},
                   {"signature", "(" + std::to_string(n) + ",0,0)", "trivial"},
                   {"step", "1", "trivial"},
                   {"center_dim", std::to_string(n), "trivial"},
                   {"degeneracy", "Nondegenerate", "trivial"}};
    return ex;
  }
  if (name == "heis3") {
    BracketTable t(3);
    t.set(0, 1, 2);
    ex.algebra = MetricLieAlgebra(LieAlgebra(t), SymForm(MatrixQ::identity(3)));
    ex.basis_names = indexed_names("e", 3);
    ex.expected = {{"dim", "3", "trivial"},
                   {"lcs_dims", "(3,1,0)", "trivial"},
                   {"step", "2", "trivial"},
                   {"center_dim", "1", "trivial"},
                   {"signature", "(3,0,0)", "trivial"}};
    return ex;
  }
  if (name == "filiform4") {
    BracketTable t(4);
    t.set(0, 1, 2);
    t.set(0, 2, 3);
    ex.algebra = MetricLieAlgebra(LieAlgebra(t), SymForm(MatrixQ::identity(4)));
    ex.basis_names = indexed_names("e", 4);
    ex.expected = {{"dim", "4", "trivial"},
                   {"lcs_dims", "(4,2,1,0)", "hand"},
                   {"step", "3", "hand"},
                   {"center_dim", "1", "hand"},
                   {"signature", "(4,0,0)", "trivial"}};
    return ex;
  }
  if (name == "de5") {
    ExtensionSource src{abelian_euclidean(3), shift_data(3)};
    ex.algebra = extend2(src.m0, src.data);
    ex.source = std::move(src);
    ex.basis_names = extension_names(3);
    ex.expected = {{"dim", "5", "hand"},
                   {"signature", "(4,1,0)", "hand"},
                   {"step", "3", "hand"},
                   {"lcs_dims", "(5,2,1,0)", "hand"},
                   {"center_dim", "2", "hand"},
                   {"degeneracy", "Deg1Semidefinite", "hand"},
                   {"restricted_signature", "(1,0,1)", "hand"}};
    return ex;
  }
  if (name == "de7_lorentz") {
    ExtensionSource src{
        MetricLieAlgebra(LieAlgebra::abelian(5), SymForm(diagonal({1, 1, 1, 1, -1}))),
        shift_data(5)};
    ex.algebra = extend2(src.m0, src.data);
    ex.source = std::move(src);
    ex.basis_names = extension_names(5);
    ex.expected = {{"dim", "7", "hand"},
                   {"signature", "(5,2,0)", "hand"},
                   {"step", "3", "hand"},
                   {"lcs_dims", "(7,2,1,0)", "hand"},
                   {"center_dim", "4", "hand"},
                   {"degeneracy", "Deg1Semidefinite", "hand"},
                   {"restricted_signature", "(1,0,1)", "hand"}};
    return ex;
  }
  throw InputError("unknown catalog example '" + name + "'");
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"paper_2_3", "abelian_n", "heis3", "filiform4", "de5", "de7_lorentz"};
}

std::string compute_invariant(const MetricLieAlgebra& m, const std::string& key) {
  const LieAlgebra& L = m.algebra();
  if (key == "dim") return std::to_string(m.dim());
  if (key == "signature") return to_string(m.form().signature());
  if (key == "step") return std::to_string(nilpotency_step(L));
  if (key == "lcs_dims") return dims_text(lower_central_series(L));
  if (key == "derived_dim") return std::to_string(derived_algebra(L).dim());
  if (key == "center_dim") return std::to_string(center(L).dim());
  if (key == "degeneracy") return to_string(classify_degeneracy(m).tag);
  if (key == "restricted_signature")
    return to_string(restrict_form(m.form(), derived_algebra(L)).signature());
  if (key == "complement_signature")
    return to_string(restrict_form(m.form(), orth_complement(m, derived_algebra(L))).signature());
  throw InputError("unknown invariant '" + key + "'");
}

std::vector<std::string> expected_mismatches(const NamedExample& ex) {
  std::vector<std::string> out;
  for (const auto& ev : ex.expected) {
    const std::string got = compute_invariant(ex.algebra, ev.key);
    if (got != ev.value) out.push_back(ev.key + ": expected " + ev.value + ", computed " + got);
  }
  return out;
}

NamedExample build_example(const std::string& name) {
  NamedExample ex = make_example(name);
  const auto bad = expected_mismatches(ex);
  if (!bad.empty()) {
    std::string msg = "catalog example '" + name + "' failed re-verification:";
    for (const auto& b : bad) msg += " " + b + ";";
    throw std::logic_error(msg);
  }
  return ex;
}

std::vector<MatrixQ> paper_isotropy_table() {
  std::vector<MatrixQ> out(12, MatrixQ(12, 12));
  for (const auto& entry : isotropy_table_entries())
    for (const auto& [coord, coeff] : entry.terms) out[coord](entry.row, entry.col) += coeff;
  return out;
}

MatrixQ paper_isotropy_operator(const VectorQ& t) {
  if (t.size() != 12) throw InputError("paper_isotropy_operator: expected 12 coordinates");
  const auto table = paper_isotropy_table();
  MatrixQ a(12, 12);
  for (std::size_t i = 0; i < 12; ++i)
    if (!is_zero(t[i])) a = a + t[i] * table[i];
  return a;
}

bool VerificationReport::passed() const {
  for (const auto& item : items)
    if (!item.passed) return false;
  return true;
}

const CheckItem* VerificationReport::find(const std::string& name) const {
  for (const auto& item : items)
    if (item.name == name) return &item;
  return nullptr;
}

VerificationReport verify_paper_example(PaperPerturbation perturbation) {
  VerificationReport rep;
  auto add = [&rep](const std::string& name, bool ok, const std::string& detail = "") {
    rep.items.push_back(CheckItem{name, ok, detail});
  };

  MetricLieAlgebra m;
  try {
    m = paper_algebra(perturbation);
    add("jacobi", true);
  } catch (const InputError& err) {
    add("jacobi", false, err.what());
    return rep;
  }
  const LieAlgebra& L = m.algebra();
  const std::size_t n = m.dim();

  auto expect = [&](const std::string& item, const std::string& key, const std::string& want) {
    const std::string got = compute_invariant(m, key);
    add(item, got == want, got);
  };
  expect("dim", "dim", "12");
  expect("derived_dim", "derived_dim", "4");
  expect("signature", "signature", "(8,4,0)");
  expect("derived_signature", "restricted_signature", "(3,1,0)");
  expect("complement_signature", "complement_signature", "(5,3,0)");
  expect("step", "step", "4");
  expect("lcs_dims", "lcs_dims", "(12,4,3,1,0)");

  const Subspace nprime = derived_algebra(L);
  const Subspace v = orth_complement(m, nprime);
  add("derived_abelian", bracket_subspaces(L, nprime, nprime).dim() == 0);
  {
    std::vector<VectorQ> fs;
    for (std::size_t i = 1; i <= 8; ++i) fs.push_back(unit_vector(n, f(i)));
    add("complement_is_span_f", v == Subspace::span(fs, n), "dim " + std::to_string(v.dim()));
  }

  const auto table = paper_isotropy_table();
  const OperatorSpace h = isotropy_algebra(m);
  {
    std::string bad_der, bad_skew, bad_mem;
    for (std::size_t a = 0; a < n; ++a) {
      if (!is_derivation(L, table[a])) bad_der += " T=" + std::to_string(a);
      if (!is_skew(m.form(), table[a])) bad_skew += " T=" + std::to_string(a);
      if (!h.contains(table[a])) bad_mem += " T=" + std::to_string(a);
    }
    add("isotropy_map_derivation", bad_der.empty(), bad_der.empty() ? "12 of 12" : "failed at" + bad_der);
    add("isotropy_map_skew", bad_skew.empty(), bad_skew.empty() ? "12 of 12" : "failed at" + bad_skew);
    add("isotropy_map_in_h", bad_mem.empty(),
        "dim h = " + std::to_string(h.dim()) + (bad_mem.empty() ? "" : ", outside at" + bad_mem));
  }
  {
    // Q(T) = <A(T)T' + [T,T'], T> is quadratic in T; it vanishes identically
    // iff B(e_a,e_b;T') + B(e_b,e_a;T') = 0 for a <= b, with
    // B(S,U;T') = <A(S)T' + [S,T'], U>.
    const MatrixQ& g = m.form().gram();
    auto B = [&](std::size_t s, std::size_t u, std::size_t c) {
      VectorQ w = table[s].col(c);
      const VectorQ& br = L.bracket_basis(s, c);
      for (std::size_t k = 0; k < n; ++k) w[k] += br[k];
      return dot(g.row(u), w);
    };
    std::size_t checks = 0, failures = 0;
    std::string first;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          ++checks;
          const Rational val = B(a, b, c) + B(b, a, c);
          if (!is_zero(val)) {
            if (failures++ == 0)
              first = " first at (a,b,T')=(" + std::to_string(a) + "," + std::to_string(b) + "," +
                      std::to_string(c) + ") value " + to_string(val);
          }
        }
    add("go_polarization", failures == 0,
        std::to_string(checks - failures) + " of " + std::to_string(checks) + " zero" + first);
  }
  {
    std::vector<VectorQ> i1{unit_vector(n, f(1)), unit_vector(n, f(2))};
    for (std::size_t i = 1; i <= 4; ++i) i1.push_back(unit_vector(n, e(i)));
    auto combo = [n](std::size_t a, std::size_t b, int sb) {
      VectorQ x = unit_vector(n, a);
      x[b] += sb;
      return x;
    };
    const std::vector<VectorQ> i2{unit_vector(n, f(3)), combo(f(4), e(2), 1), combo(f(5), e(3), 1),
                                  combo(f(6), e(1), -1), unit_vector(n, f(7)), unit_vector(n, f(8))};
    const Subspace s1 = Subspace::span(i1, n), s2 = Subspace::span(i2, n);
    add("ideal_1", s1.dim() == 6 && is_ideal(L, s1));
    add("ideal_2", s2.dim() == 6 && is_ideal(L, s2));
    add("ideals_direct_sum", s1.intersect(s2).dim() == 0 && (s1 + s2).dim() == n);
    add("ideals_commute", bracket_subspaces(L, s1, s2).dim() == 0);
    add("ideal_2_abelian", bracket_subspaces(L, s2, s2).dim() == 0);
    const Subspace z = center(L);
    add("center", z.dim() == 7 && z.contains(s2) && z.contains(unit_vector(n, e(4))),
        "dim " + std::to_string(z.dim()));
  }
  add("derived_adh_invariant", is_invariant(h, nprime));
  add("complement_adh_invariant", is_invariant(h, v));
  {
    const auto cert = linear_go_certificate(m, h);
    add("linear_go_feasible", cert.has_value());
    bool in_h = true;
    MatrixQ lp(h.dim(), n);
    for (std::size_t a = 0; a < n && in_h; ++a) {
      if (!h.contains(table[a])) {
        in_h = false;
        break;
      }
      const VectorQ c = h.coordinates(table[a]);
      for (std::size_t s = 0; s < h.dim(); ++s) lp(s, a) = c[s];
    }
    add("linear_go_table_residual", in_h && is_zero(linear_go_residual(m, h, lp)),
        in_h ? "" : "table leaves h");
  }
  {
    const auto nec = necessary_condition_check(m);
    add("necessary_conditions", nec.applicable && nec.passed(),
        std::to_string(nec.violations.size()) + " violations");
  }
  return rep;
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  for (const auto& item : report.items) {
    out << "CHECK " << item.name << ": " << (item.passed ? "PASS" : "FAIL");
    if (!item.detail.empty()) out << " " << item.detail;
    out << "\n";
  }
  out << "VERDICT: " << (report.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace gonil
