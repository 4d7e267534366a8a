#include "knotcert/intmat.hpp"

#include <stdexcept>

namespace knotcert {

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMat operator+(const IntMat& x, const IntMat& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw std::invalid_argument("matrix addition: shape mismatch");
  IntMat r(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) r.at(i, j) = x.at(i, j) + y.at(i, j);
  return r;
}

IntMat operator-(const IntMat& x, const IntMat& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw std::invalid_argument("matrix subtraction: shape mismatch");
  IntMat r(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) r.at(i, j) = x.at(i, j) - y.at(i, j);
  return r;
}

IntMat operator*(const IntMat& x, const IntMat& y) {
  if (x.cols() != y.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  IntMat r(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t k = 0; k < x.cols(); ++k) {
      if (x.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return r;
}

Integer det_bareiss(IntMat m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Integer(1);
  Integer prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m.at(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return Integer(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer value = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), prev.get_mpz_t());
        m.at(i, j) = value;
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  Integer det = m.at(n - 1, n - 1);
  return sign < 0 ? Integer(-det) : det;
}

}  // namespace knotcert
