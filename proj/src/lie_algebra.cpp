#include "gonil/lie_algebra.hpp"

#include "gonil/errors.hpp"

#include <string>

namespace gonil {

namespace {

void check_index(std::size_t dim, std::size_t i) {
  if (i >= dim)
    throw InputError("basis index " + std::to_string(i) + " out of range for dimension " +
                     std::to_string(dim));
}

void add_scaled(VectorQ& acc, const Rational& s, const VectorQ& v) {
  if (sgn(s) == 0) return;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (sgn(v[k]) != 0) acc[k] += s * v[k];
}

// Bracket of two dense vectors through a dense basis-bracket lookup.
template <typename BasisBracket>
VectorQ bracket_dense(std::size_t n, const VectorQ& x, const VectorQ& y, BasisBracket&& bb) {
  VectorQ out(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || sgn(y[j]) == 0) continue;
      add_scaled(out, x[i] * y[j], bb(i, j));
    }
  }
  return out;
}

}  // namespace

void BracketTable::set(std::size_t i, std::size_t j, const SparseVector& value) {
  check_index(dim_, i);
  check_index(dim_, j);
  if (i == j) throw InputError("bracket [e_i, e_i] must vanish (i = " + std::to_string(i) + ")");
  const bool flip = i > j;
  SparseVector stored;
  for (const auto& [k, c] : value) {
    check_index(dim_, k);
    if (sgn(c) != 0) stored[k] = flip ? Rational(-c) : c;
  }
  const auto key = flip ? std::make_pair(j, i) : std::make_pair(i, j);
  if (stored.empty())
    entries_.erase(key);
  else
    entries_[key] = std::move(stored);
}

void BracketTable::set(std::size_t i, std::size_t j, std::size_t k, const Rational& coeff) {
  set(i, j, SparseVector{{k, coeff}});
}

void BracketTable::erase(std::size_t i, std::size_t j) {
  entries_.erase(i < j ? std::make_pair(i, j) : std::make_pair(j, i));
}

VectorQ BracketTable::bracket(std::size_t i, std::size_t j) const {
  VectorQ out(dim_, Rational(0));
  if (i == j) return out;
  const bool flip = i > j;
  const auto it = entries_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
  if (it == entries_.end()) return out;
  for (const auto& [k, c] : it->second) out[k] = flip ? Rational(-c) : c;
  return out;
}

std::vector<JacobiViolation> jacobi_defect(const BracketTable& table) {
  const std::size_t n = table.dim();
  std::vector<VectorQ> dense(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) dense[i * n + j] = table.bracket(i, j);
  auto bb = [&](std::size_t a, std::size_t b) -> const VectorQ& { return dense[a * n + b]; };

  std::vector<JacobiViolation> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        VectorQ d = bracket_dense(n, unit_vector(n, i), bb(j, k), bb);
        const VectorQ t2 = bracket_dense(n, unit_vector(n, j), bb(k, i), bb);
        const VectorQ t3 = bracket_dense(n, unit_vector(n, k), bb(i, j), bb);
        for (std::size_t m = 0; m < n; ++m) d[m] += t2[m] + t3[m];
        if (!is_zero(d)) out.push_back({i, j, k, std::move(d)});
      }
  return out;
}

LieAlgebra::LieAlgebra(BracketTable table) : table_(std::move(table)) {
  const auto violations = jacobi_defect(table_);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw InputError("Jacobi identity fails at (" + std::to_string(v.i) + "," +
                     std::to_string(v.j) + "," + std::to_string(v.k) + "): defect " +
                     to_string(v.defect) + " (" + std::to_string(violations.size()) +
                     " violating triple(s))");
  }
  const std::size_t n = dim();
  dense_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) dense_[i * n + j] = table_.bracket(i, j);
}

VectorQ LieAlgebra::bracket(const VectorQ& x, const VectorQ& y) const {
  if (x.size() != dim() || y.size() != dim())
    throw InputError("bracket: dimension mismatch");
  return bracket_dense(dim(), x, y,
                       [this](std::size_t i, std::size_t j) -> const VectorQ& {
                         return bracket_basis(i, j);
                       });
}

MatrixQ LieAlgebra::ad(const VectorQ& x) const {
  const std::size_t n = dim();
  MatrixQ m(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    VectorQ col(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
      if (sgn(x[i]) != 0) add_scaled(col, x[i], bracket_basis(i, c));
    for (std::size_t r = 0; r < n; ++r) m(r, c) = col[r];
  }
  return m;
}

MatrixQ LieAlgebra::ad_basis(std::size_t i) const { return ad(unit_vector(dim(), i)); }

Subspace bracket_subspaces(const LieAlgebra& L, const Subspace& v, const Subspace& w) {
  if (v.ambient_dim() != L.dim() || w.ambient_dim() != L.dim())
    throw InputError("bracket_subspaces: dimension mismatch");
  std::vector<VectorQ> gens;
  for (std::size_t a = 0; a < v.dim(); ++a) {
    const VectorQ x = v.vector(a);
    for (std::size_t b = 0; b < w.dim(); ++b) {
      VectorQ z = L.bracket(x, w.vector(b));
      if (!is_zero(z)) gens.push_back(std::move(z));
    }
  }
  return Subspace::span(gens, L.dim());
}

std::vector<Subspace> lower_central_series(const LieAlgebra& L) {
  const Subspace whole = Subspace::full(L.dim());
  std::vector<Subspace> chain{whole};
  while (chain.back().dim() > 0) {
    Subspace next = bracket_subspaces(L, whole, chain.back());
    if (next.dim() == chain.back().dim()) break;
    chain.push_back(std::move(next));
  }
  return chain;
}

std::vector<Subspace> derived_series(const LieAlgebra& L) {
  std::vector<Subspace> chain{Subspace::full(L.dim())};
  while (chain.back().dim() > 0) {
    Subspace next = bracket_subspaces(L, chain.back(), chain.back());
    if (next.dim() == chain.back().dim()) break;
    chain.push_back(std::move(next));
  }
  return chain;
}

bool is_nilpotent(const LieAlgebra& L) { return lower_central_series(L).back().dim() == 0; }

std::size_t nilpotency_step(const LieAlgebra& L) {
  const auto chain = lower_central_series(L);
  if (chain.back().dim() != 0)
    throw InputError("algebra is not nilpotent: lower central series stabilizes at dimension " +
                     std::to_string(chain.back().dim()));
  // chain = (n, n^1, ..., n^s = 0)
  return chain.size() <= 2 ? 1 : chain.size() - 1;
}

Subspace derived_algebra(const LieAlgebra& L) {
  const Subspace whole = Subspace::full(L.dim());
  return bracket_subspaces(L, whole, whole);
}

Subspace centralizer(const LieAlgebra& L, const Subspace& v) {
  if (v.ambient_dim() != L.dim()) throw InputError("centralizer: dimension mismatch");
  if (v.dim() == 0) return Subspace::full(L.dim());
  MatrixQ eqs(0, L.dim());
  for (std::size_t a = 0; a < v.dim(); ++a) {
    // [x, v] = -ad(v) x
    const MatrixQ adv = L.ad(v.vector(a));
    for (std::size_t r = 0; r < adv.rows(); ++r) eqs.append_row(adv.row(r));
  }
  return Subspace::row_space(kernel(eqs));
}

Subspace center(const LieAlgebra& L) { return centralizer(L, Subspace::full(L.dim())); }

bool is_ideal(const LieAlgebra& L, const Subspace& v) {
  return v.contains(bracket_subspaces(L, Subspace::full(L.dim()), v));
}

EngelFlag engel_flag(const std::vector<MatrixQ>& ops, std::optional<std::size_t> closure_depth) {
  if (ops.empty()) throw InputError("engel_flag: empty operator family");
  const std::size_t n = ops.front().rows();
  for (const auto& op : ops)
    if (op.rows() != n || op.cols() != n) throw InputError("engel_flag: operator shape mismatch");

  // Commutator closure of span(ops).
  Subspace span(n * n);
  {
    std::vector<VectorQ> vs;
    for (const auto& op : ops) vs.push_back(vectorize(op));
    span = Subspace::span(vs, n * n);
  }
  const std::size_t depth = closure_depth.value_or(n * n);
  bool closed = false;
  for (std::size_t round = 0; round < depth && !closed; ++round) {
    std::vector<VectorQ> gens = span.vectors();
    const std::size_t before = span.dim();
    for (std::size_t a = 0; a < before; ++a)
      for (std::size_t b = a + 1; b < before; ++b) {
        VectorQ c = vectorize(commutator(unvectorize(gens[a], n, n), unvectorize(gens[b], n, n)));
        if (!is_zero(c) && !span.contains(c)) gens.push_back(std::move(c));
      }
    span = Subspace::span(gens, n * n);
    closed = span.dim() == before;
  }
  if (!closed)
    throw VerificationError("engel_flag: commutator closure did not stabilize within depth " +
                            std::to_string(depth));

  std::vector<MatrixQ> family;
  for (const auto& v : span.vectors()) family.push_back(unvectorize(v, n, n));

  EngelFlag out;
  Subspace current(n);
  std::vector<VectorQ> chosen;
  while (current.dim() < n) {
    // W = {x : op x in current for every op}
    const MatrixQ ann = current.annihilator();
    MatrixQ eqs(0, n);
    for (const auto& op : family) {
      const MatrixQ rows = ann * op;
      for (std::size_t r = 0; r < rows.rows(); ++r) eqs.append_row(rows.row(r));
    }
    const Subspace w = eqs.rows() == 0 ? Subspace::full(n) : Subspace::row_space(kernel(eqs));
    std::optional<VectorQ> pick;
    for (std::size_t i = 0; i < w.dim() && !pick; ++i)
      if (!current.contains(w.vector(i))) pick = w.vector(i);
    if (!pick) throw VerificationError("no common kernel vector");
    chosen.push_back(*pick);
    current = current + Subspace::span({*pick}, n);
    out.flag.push_back(current);
  }
  out.basis = MatrixQ(0, n);
  for (auto it = chosen.rbegin(); it != chosen.rend(); ++it) out.basis.append_row(*it);
  return out;
}

}  // namespace gonil
