#pragma once

#include <vector>

#include "field.hpp"

namespace fp {

/// Dense matrix over the coefficient field; all arithmetic exact.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Scalar(0)) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Scalar& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  size_t rank(const Field& k) const;
  bool is_zero(const Field& k) const;
  Matrix multiply(const Matrix& o, const Field& k) const;

 private:
  size_t rows_, cols_;
  std::vector<Scalar> a_;
};

}  // namespace fp
