#include "gonil/subspace.hpp"

#include "gonil/errors.hpp"

namespace gonil {

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::full(std::size_t ambient_dim) {
  return row_space(MatrixQ::identity(ambient_dim));
}

Subspace Subspace::span(const std::vector<VectorQ>& vectors, std::size_t ambient_dim) {
  return row_space(MatrixQ::from_rows(vectors, ambient_dim));
}

Subspace Subspace::row_space(const MatrixQ& rows) {
  Subspace s(rows.cols());
  if (rows.rows() == 0) return s;
  Echelon e = rref(rows);
  s.basis_ = std::move(e.reduced);
  s.pivots_ = std::move(e.pivots);
  return s;
}

bool Subspace::contains(const VectorQ& v) const {
  if (v.size() != ambient_) throw InputError("subspace membership: dimension mismatch");
  // Reduce v by the echelon rows; what is left must vanish.
  VectorQ rest = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Rational c = rest[pivots_[i]];
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (sgn(basis_(i, j)) != 0) rest[j] -= c * basis_(i, j);
  }
  return is_zero(rest);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw InputError("subspace inclusion: dimension mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.vector(i))) return false;
  return true;
}

VectorQ Subspace::coordinates(const VectorQ& v) const {
  if (!contains(v)) throw InputError("coordinates: vector not in subspace");
  VectorQ c(dim());
  for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

MatrixQ Subspace::annihilator() const {
  if (dim() == 0) return MatrixQ::identity(ambient_);
  return kernel(basis_);
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw InputError("subspace sum: dimension mismatch");
  MatrixQ rows = basis_;
  for (std::size_t i = 0; i < other.dim(); ++i) rows.append_row(other.vector(i));
  return row_space(rows);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw InputError("subspace intersection: dimension mismatch");
  MatrixQ eqs = annihilator();
  const MatrixQ more = other.annihilator();
  for (std::size_t i = 0; i < more.rows(); ++i) eqs.append_row(more.row(i));
  if (eqs.rows() == 0) return full(ambient_);
  return row_space(kernel(eqs));
}

std::string to_string(const Subspace& s) {
  std::string out = "span{";
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (i) out += ", ";
    out += to_string(s.vector(i));
  }
  return out + "}";
}

}  // namespace gonil
