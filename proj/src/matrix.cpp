#include "matrix.hpp"

namespace fp {

size_t Matrix::rank(const Field& k) const {
  Matrix m(*this);
  size_t rank = 0;
  for (size_t col = 0; col < m.cols_ && rank < m.rows_; ++col) {
    size_t pivot = rank;
    while (pivot < m.rows_ && k.is_zero(m.at(pivot, col))) ++pivot;
    if (pivot == m.rows_) continue;
    if (pivot != rank)
      for (size_t j = col; j < m.cols_; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    Scalar inv = k.inverse(m.at(rank, col));
    for (size_t j = col; j < m.cols_; ++j) m.at(rank, j) = k.mul(m.at(rank, j), inv);
    for (size_t i = rank + 1; i < m.rows_; ++i) {
      if (k.is_zero(m.at(i, col))) continue;
      Scalar f = m.at(i, col);
      for (size_t j = col; j < m.cols_; ++j)
        m.at(i, j) = k.sub(m.at(i, j), k.mul(f, m.at(rank, j)));
    }
    ++rank;
  }
  return rank;
}

bool Matrix::is_zero(const Field& k) const {
  for (const auto& v : a_)
    if (!k.is_zero(v)) return false;
  return true;
}

Matrix Matrix::multiply(const Matrix& o, const Field& k) const {
  Matrix r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t l = 0; l < cols_; ++l) {
      if (k.is_zero(at(i, l))) continue;
      for (size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) = k.add(r.at(i, j), k.mul(at(i, l), o.at(l, j)));
    }
  return r;
}

}  // namespace fp
