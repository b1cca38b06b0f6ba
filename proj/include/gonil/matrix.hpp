#pragma once

#include "gonil/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace gonil {

/// Dense row-major matrix of exact rationals.
class MatrixQ {
 public:
  MatrixQ() = default;
  MatrixQ(std::size_t rows, std::size_t cols);
  MatrixQ(std::initializer_list<std::initializer_list<Rational>> rows);

  static MatrixQ identity(std::size_t n);
  static MatrixQ from_rows(const std::vector<VectorQ>& rows, std::size_t cols);
  static MatrixQ column(const VectorQ& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  VectorQ row(std::size_t r) const;
  VectorQ col(std::size_t c) const;
  std::vector<VectorQ> row_list() const;
  void append_row(const VectorQ& v);

  const std::vector<Rational>& entries() const { return data_; }

  MatrixQ transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;

  friend bool operator==(const MatrixQ& a, const MatrixQ& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

MatrixQ operator*(const MatrixQ& a, const MatrixQ& b);
MatrixQ operator+(const MatrixQ& a, const MatrixQ& b);
MatrixQ operator-(const MatrixQ& a, const MatrixQ& b);
MatrixQ operator*(const Rational& s, const MatrixQ& a);
VectorQ operator*(const MatrixQ& a, const VectorQ& v);

/// a*b - b*a
MatrixQ commutator(const MatrixQ& a, const MatrixQ& b);

/// Row-major flattening, used to treat operators as vectors.
VectorQ vectorize(const MatrixQ& a);
MatrixQ unvectorize(const VectorQ& v, std::size_t rows, std::size_t cols);

std::string to_string(const MatrixQ& a);

}  // namespace gonil
