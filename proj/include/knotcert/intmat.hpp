#pragma once

#include <cstddef>
#include <vector>

#include "knotcert/rational.hpp"

namespace knotcert {

/// Dense matrix of exact integers.  Small helper used for Sylvester matrices,
/// Seifert pairings and integer determinant work; not a general linear algebra
/// library.
class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Integer(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Integer& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntMat transpose() const;

  friend bool operator==(const IntMat& x, const IntMat& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Integer> a_;
};

IntMat operator+(const IntMat& x, const IntMat& y);
IntMat operator-(const IntMat& x, const IntMat& y);
IntMat operator*(const IntMat& x, const IntMat& y);

// Fraction-free (Bareiss) determinant of a square matrix.  Exact; the empty
// matrix has determinant 1.
Integer det_bareiss(IntMat m);

}  // namespace knotcert
